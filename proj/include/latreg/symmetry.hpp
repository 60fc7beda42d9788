#pragma once

// Lattice symmetries and lattice congruence. Everything rests on one fact: an
// affine map of a k-polytope is pinned down by where it sends a flag, because the
// vertex centroids of the faces of a flag are k+1 affinely independent points.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "latreg/polytope.hpp"

namespace latreg {

/// Precomputed data for mapping one fixed flag of a full-dimensional polytope.
class FlagMapper {
public:
    FlagMapper(const Polytope& p, const FaceLattice& lattice, const Flag& base);

    /// The affine map sending the base flag's centroid chain to g's, if it is
    /// lattice-affine and carries p's vertex set onto q's.
    std::optional<AffineMap> map_to(const Polytope& q, const FaceLattice& q_lattice, const Flag& g) const;

private:
    const Polytope& p_;
    RatVector anchor0_;
    RatMatrix anchor_inverse_;
};

/// flag_map for full-dimensional p and q of equal dimension.
std::optional<AffineMap> flag_map(const Polytope& p, const Flag& f, const Polytope& q, const Flag& g);
std::optional<AffineMap> flag_map(const Polytope& p, const FaceLattice& p_lattice, const Flag& f,
                                  const Polytope& q, const FaceLattice& q_lattice, const Flag& g);

struct SymmetryGroup {
    /// Lattice-affine maps of the ambient space preserving the polytope, one per
    /// flag in flag_orbit (same order).
    std::vector<AffineMap> elements;
    /// Vertex permutation of each element: vertex i goes to permutations[e][i].
    std::vector<std::vector<std::size_t>> permutations;
    Flag base_flag;
    /// Indices into flags(p) of the flags reached from base_flag.
    std::vector<std::size_t> flag_orbit;
    std::size_t flag_count = 0;

    std::size_t order() const noexcept { return elements.size(); }
    bool is_flag_transitive() const noexcept { return elements.size() == flag_count; }
};

/// All lattice symmetries. Lower-dimensional inputs are handled in a lattice chart
/// of the affine hull and the maps are extended to the ambient lattice.
SymmetryGroup symmetry_group(const Polytope& p);
SymmetryGroup symmetry_group(const Polytope& p, const FaceLattice& lattice);

struct GroupLawReport {
    bool has_identity = false;
    bool closed = false;
    bool has_inverses = false;
    bool acts_freely = false;        ///< no non-identity element fixes a flag
    bool elements_consistent = false;  ///< each matrix realizes its vertex permutation
    bool ok() const { return has_identity && closed && has_inverses && acts_freely && elements_consistent; }
};

/// Exhaustive check of the group axioms and of the free action on flags.
GroupLawReport verify_group_laws(const Polytope& p, const SymmetryGroup& group);

struct RegularityResult {
    bool regular = false;
    std::size_t flag_count = 0;
    /// When not regular: base flag and the first flag it cannot be mapped onto.
    std::optional<std::pair<Flag, Flag>> witness;
};

RegularityResult is_lattice_regular(const Polytope& p);
RegularityResult is_lattice_regular(const Polytope& p, const FaceLattice& lattice);

/// Invariants of lattice congruence, used as a cheap necessary test.
struct Signature {
    std::size_t dim = 0;
    std::size_t vertex_count = 0;
    Integer lattice_volume;
    std::vector<std::size_t> f_vector;
    std::vector<Integer> edge_lengths;  ///< sorted multiset
    std::size_t interior_points = 0;    ///< relative interior

    friend bool operator==(const Signature&, const Signature&) = default;
};

Signature invariant_signature(const Polytope& p);
Signature invariant_signature(const Polytope& p, const FaceLattice& lattice);

/// A lattice-affine map of the ambient lattice taking p onto q, if one exists.
std::optional<AffineMap> are_congruent(const Polytope& p, const Polytope& q);

/// Image of a polytope under an affine map that sends lattice points to lattice points.
Polytope apply(const AffineMap& map, const Polytope& p);

}  // namespace latreg
