#pragma once

// Randomized invariance checks shared by the property tests and the acceptance gate.
// Each returns how many cases ran and how many failed, with a note on the first failure.

#include <random>
#include <string>

#include "latreg/catalog.hpp"
#include "latreg/symmetry.hpp"
#include "oracles.hpp"

namespace props {

using namespace latreg;

struct Tally {
    std::size_t cases = 0;   ///< random instances (or catalog groups) examined
    std::size_t checks = 0;  ///< individual assertions across all cases
    std::size_t failures = 0;
    std::string first_failure;

    void record(bool ok, const std::string& what) {
        ++checks;
        if (!ok && failures++ == 0) first_failure = what;
    }
};

inline Polytope random_image(const Polytope& p, std::mt19937_64& rng) {
    const std::size_t n = p.ambient_dim();
    const IntMatrix u = oracle::random_unimodular(n, rng);
    std::uniform_int_distribution<long> shift(-4, 4);
    IntVector b(n);
    for (auto& x : b) x = shift(rng);
    return Polytope::from_vertices(oracle::transform(p.vertices(), u, b), n);
}

/// Catalog entries plus the non-regular controls, each with its expected regularity.
inline std::vector<std::pair<Polytope, bool>> conjugation_samples(std::size_t max_dim) {
    std::vector<std::pair<Polytope, bool>> out;
    for (const auto& e : all_entries(max_dim)) out.push_back({e.polytope, e.expected_regular});
    out.push_back({build(Family::simplex, 3, 3).polytope, false});
    out.push_back({Polytope::from_vertices({{0, 0}, {1, 0}, {0, 2}}, 2), false});
    out.push_back({second_family_simplex(3, 2, {0, 0, 2}), false});
    return out;
}

/// Volume, regularity, elementarity, signature and congruence class survive a random
/// lattice-affine change of coordinates.
inline Tally conjugation_invariance(std::size_t cases, std::size_t max_dim, std::uint64_t seed) {
    Tally t;
    std::mt19937_64 rng(seed);
    const auto samples = conjugation_samples(max_dim);
    const auto entries = all_entries(max_dim);
    for (std::size_t c = 0; c < cases; ++c) {
        const auto& [p, regular] = samples[c % samples.size()];
        const Polytope q = random_image(p, rng);
        ++t.cases;
        const std::string tag = "case " + std::to_string(c);
        t.record(lattice_volume(q) == lattice_volume(p), tag + ": volume");
        t.record(is_lattice_regular(q).regular == regular, tag + ": regularity");
        t.record(is_elementary(q) == is_elementary(p), tag + ": elementarity");
        t.record(invariant_signature(q) == invariant_signature(p), tag + ": signature");
        const auto witness = are_congruent(p, q);
        t.record(witness && is_lattice_affine(*witness) && apply(*witness, p) == q, tag + ": witness");
        // q falls in the same catalog class as p and in no other.
        for (const auto& e : entries) {
            if (e.dim != q.dim() || e.polytope.ambient_dim() != q.ambient_dim()) continue;
            const bool same = e.polytope == p;
            t.record(are_congruent(e.polytope, q).has_value() == same, tag + ": class vs " + e.schlafli);
        }
    }
    return t;
}

/// Symmetric and transitive on random triples p, f(p), g(f(p)).
inline Tally congruence_equivalence(std::size_t cases, std::uint64_t seed) {
    Tally t;
    std::mt19937_64 rng(seed);
    const auto entries = all_entries(3);
    for (std::size_t c = 0; c < cases; ++c) {
        const Polytope& p = entries[c % entries.size()].polytope;
        const Polytope q = random_image(p, rng);
        const Polytope r = random_image(q, rng);
        ++t.cases;
        const auto pq = are_congruent(p, q), qp = are_congruent(q, p), qr = are_congruent(q, r);
        const bool ok = pq && qp && qr && apply(compose(*qr, *pq), p) == r && apply(*qp, q) == p;
        t.record(ok, "triple " + std::to_string(c));
    }
    return t;
}

/// Exhaustive group laws and free flag action for every catalog group up to dimension max_dim.
inline Tally group_laws(std::size_t max_dim, std::size_t max_order) {
    Tally t;
    for (const auto& e : all_entries(max_dim)) {
        if (e.expected.flag_count > max_order) continue;
        const SymmetryGroup g = symmetry_group(e.polytope);
        const GroupLawReport r = verify_group_laws(e.polytope, g);
        ++t.cases;
        t.record(r.ok() && g.order() == e.expected.flag_count, e.schlafli);
    }
    return t;
}

/// gcd criterion for elementarity against the definition (image of a t-multiple under
/// a small lattice-affine map) on random polygons, some built as t-multiples, t in {2,3}.
inline Tally elementarity_definition(std::size_t cases, std::uint64_t seed) {
    Tally t;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coord(-3, 3), scale(1, 3), count(3, 6);
    while (t.cases < cases) {
        std::vector<IntVector> pts;
        const long m = count(rng);
        for (long i = 0; i < m; ++i) pts.push_back({coord(rng), coord(rng)});
        const Polytope base = Polytope::from_vertices(pts, 2);
        if (base.dim() != 2) continue;
        const long factor = scale(rng);
        const Polytope p = random_image(multiple(base, factor), rng);
        long span = 0;
        for (const auto& v : p.vertices())
            for (std::size_t k = 0; k < 2; ++k) {
                const Integer d = abs(v[k] - p.vertex(0)[k]);
                if (d > span) span = d.convert_to<long>();
            }
        ++t.cases;
        const bool by_definition = !oracle::is_image_of_multiple_2d(p.vertices(), std::max(span, 3L));
        t.record(is_elementary(p) == by_definition, "polygon " + std::to_string(t.cases));
        if (factor > 1) t.record(!is_elementary(p), "multiple " + std::to_string(t.cases));
    }
    return t;
}

}  // namespace props
