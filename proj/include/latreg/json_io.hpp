#pragma once

// JSON encoding of polytopes, affine maps and catalog entries. Integers that do
// not fit in 64 bits are written as decimal strings; both forms are accepted on input.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "latreg/catalog.hpp"
#include "latreg/symmetry.hpp"

namespace latreg {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& x);
Json to_json(const Rational& x);
Json to_json(const IntVector& v);
Json to_json(const Polytope& p);
Json to_json(const AffineMap& f);
Json to_json(const CatalogEntry& e);
Json to_json(const std::vector<CatalogEntry>& entries);

/// Throws ArgumentError on malformed input and DimensionError on length mismatches.
Integer integer_from_json(const Json& j);
Polytope polytope_from_json(const Json& j);

Polytope read_polytope(std::istream& in);
Polytope read_polytope_file(const std::string& path);

}  // namespace latreg
