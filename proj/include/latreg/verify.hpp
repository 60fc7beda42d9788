#pragma once

// Bounded-dimension check of the classification theorem over the catalog, and the
// exhaustive classification of small lattice polygons.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "latreg/json_io.hpp"

namespace latreg {

struct EntryResult {
    Family family;
    std::size_t dim = 0;
    unsigned variant = 0;
    std::string schlafli;
    bool regular = false;
    bool elementary = false;
    Integer volume;
    Integer expected_volume;
    std::size_t flag_count = 0;
    std::size_t expected_flag_count = 0;
    std::size_t group_order = 0;
    bool group_laws = false;  ///< only checked when requested (closure, inverses, free action)
    bool passed = false;
};

struct PairResult {
    std::size_t first = 0;   ///< indices into VerifyReport::entries
    std::size_t second = 0;
    bool congruent = false;
};

struct DimensionPairs {
    std::size_t dim = 0;
    std::vector<PairResult> pairs;
};

struct ControlResult {
    std::string name;
    std::string expectation;
    bool passed = false;
};

struct StageTime {
    std::string stage;
    double seconds = 0;
};

struct VerifyReport {
    std::size_t max_dim = 0;
    std::vector<EntryResult> entries;
    std::vector<DimensionPairs> congruence;
    std::vector<ControlResult> controls;
    std::vector<StageTime> timings;
    bool passed = false;
};

struct VerifyOptions {
    std::size_t jobs = 1;
    bool check_group_laws = false;
};

/// Throws ArgumentError unless 1 <= max_dim <= 6.
VerifyReport run_verify_theorem(std::size_t max_dim, const VerifyOptions& options = {});

/// Wall times are left out unless asked for, so that reports are reproducible byte for byte.
Json to_json(const VerifyReport& r, bool with_timings = false);

struct CongruenceClass {
    Polytope representative;
    std::size_t members = 0;  ///< translation classes that fell into this congruence class
    /// Catalog 2-D entries congruent to the representative, as "family/variant".
    std::vector<std::string> catalog_matches;
};

struct ClassifyReport {
    long radius = 0;
    std::size_t examined = 0;         ///< translation classes of primitive-edge convex polygons
    std::size_t passing = 0;          ///< of those, elementary and lattice-regular
    std::size_t regular_pentagons = 0;
    std::vector<CongruenceClass> classes;
    bool passed = false;              ///< six classes, one per catalog polygon, no pentagons
};

/// Enumerates convex lattice polygons with vertices in [-radius, radius]^2 whose edges
/// are primitive (an elementary polygon with unequal edge lengths cannot be regular,
/// and equal edge lengths force length 1). Throws ArgumentError for radius < 2.
ClassifyReport run_classify_2d(long radius);

Json to_json(const ClassifyReport& r);

}  // namespace latreg
