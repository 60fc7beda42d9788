#pragma once

#include <stdexcept>
#include <string>

namespace latreg {

/// Shapes or dimensions of the inputs do not fit together.
class DimensionError : public std::invalid_argument {
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// The input is geometrically degenerate (affinely dependent, point on a hyperplane, ...).
class DegeneracyError : public std::domain_error {
public:
    explicit DegeneracyError(const std::string& what) : std::domain_error(what) {}
};

/// A parameter is outside its allowed range.
class ArgumentError : public std::invalid_argument {
public:
    explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace latreg
