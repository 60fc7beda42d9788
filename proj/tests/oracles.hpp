#pragma once

// Slow, direct reference computations used to cross-check the library. Nothing
// here calls into the library's geometry; only the number types are shared.

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "latreg/exactalg.hpp"

namespace oracle {

using latreg::Integer;
using latreg::IntMatrix;
using latreg::IntVector;
using latreg::Rational;
using latreg::RatVector;
using Set = std::vector<std::size_t>;

/// Permutation expansion of a square matrix given as rows.
template <class T>
T leibniz_det(const std::vector<std::vector<T>>& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    T total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        T term = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n && term != 0; ++i) term *= m[i][perm[i]];
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Rank by plain fraction elimination.
inline std::size_t rank_of(std::vector<RatVector> rows) {
    std::size_t r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Rational f = rows[i][c] / rows[r][c];
            for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
        }
        ++r;
    }
    return r;
}

inline std::size_t affine_dim(const std::vector<IntVector>& pts, const Set& s) {
    std::vector<RatVector> diffs;
    for (std::size_t i = 1; i < s.size(); ++i) {
        RatVector d;
        for (std::size_t k = 0; k < pts[s[i]].size(); ++k) d.push_back(Rational(pts[s[i]][k] - pts[s[0]][k]));
        diffs.push_back(std::move(d));
    }
    return rank_of(diffs);
}

struct FacetPlane {
    Set vertices;
    IntVector normal;  ///< normal · x >= offset on the polytope, with equality on the facet
    Integer offset;
};

/// Facets of a full-dimensional polytope: every n-subset of points spanning a
/// hyperplane with all points on one side.
inline std::vector<FacetPlane> facets_by_subsets(const std::vector<IntVector>& pts) {
    const std::size_t n = pts[0].size();
    const std::size_t m = pts.size();
    std::map<Set, FacetPlane> found;
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(n), true);
    do {
        Set s;
        for (std::size_t i = 0; i < m; ++i)
            if (pick[i]) s.push_back(i);
        // Normal from the cofactors of the (n-1) x n difference matrix.
        IntVector normal(n);
        for (std::size_t c = 0; c < n; ++c) {
            std::vector<std::vector<Integer>> minor;
            for (std::size_t i = 1; i < n; ++i) {
                std::vector<Integer> row;
                for (std::size_t k = 0; k < n; ++k)
                    if (k != c) row.push_back(pts[s[i]][k] - pts[s[0]][k]);
                minor.push_back(std::move(row));
            }
            const Integer d = n == 1 ? Integer(1) : leibniz_det(minor);
            normal[c] = c % 2 ? Integer(-d) : d;
        }
        if (std::all_of(normal.begin(), normal.end(), [](const Integer& x) { return x == 0; })) continue;
        auto value = [&](const IntVector& x) {
            Integer v = 0;
            for (std::size_t k = 0; k < n; ++k) v += normal[k] * x[k];
            return v;
        };
        const Integer base = value(pts[s[0]]);
        bool pos = false, neg = false;
        Set tight;
        for (std::size_t i = 0; i < m; ++i) {
            const Integer v = value(pts[i]) - base;
            if (v > 0) pos = true;
            if (v < 0) neg = true;
            if (v == 0) tight.push_back(i);
        }
        if (pos && neg) continue;
        if (neg)
            for (auto& x : normal) x = -x;
        found.emplace(tight, FacetPlane{tight, normal, neg ? Integer(-base) : base});
    } while (std::prev_permutation(pick.begin(), pick.end()));
    std::vector<FacetPlane> out;
    for (auto& [k, v] : found) out.push_back(std::move(v));
    return out;
}

/// All nonempty faces graded by affine dimension, as closure of the facets under intersection.
inline std::vector<std::vector<Set>> faces_by_intersection(const std::vector<IntVector>& pts,
                                                           const std::vector<FacetPlane>& facets) {
    const std::size_t n = pts[0].size();
    Set all(pts.size());
    std::iota(all.begin(), all.end(), 0);
    std::set<Set> faces{all};
    std::vector<Set> frontier{all};
    while (!frontier.empty()) {
        std::vector<Set> next;
        for (const auto& f : frontier)
            for (const auto& g : facets) {
                Set x;
                std::set_intersection(f.begin(), f.end(), g.vertices.begin(), g.vertices.end(), std::back_inserter(x));
                if (!x.empty() && faces.insert(x).second) next.push_back(x);
            }
        frontier = std::move(next);
    }
    std::vector<std::vector<Set>> graded(n + 1);
    for (const auto& f : faces) graded[affine_dim(pts, f)].push_back(f);
    return graded;
}

inline std::vector<std::size_t> f_vector(const std::vector<std::vector<Set>>& graded) {
    std::vector<std::size_t> f;
    for (std::size_t d = 0; d + 1 < graded.size(); ++d) f.push_back(graded[d].size());
    return f;
}

inline bool subset(const Set& a, const Set& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

/// Visits every maximal chain (one face per dimension) of a graded face list.
inline void for_each_chain(const std::vector<std::vector<Set>>& graded,
                           const std::function<void(const std::vector<const Set*>&)>& visit) {
    std::vector<const Set*> chain;
    std::function<void(std::size_t)> down = [&](std::size_t d) {
        if (d == 0) {
            visit(chain);
            return;
        }
        for (const auto& f : graded[d - 1]) {
            if (!subset(f, *chain.back())) continue;
            chain.push_back(&f);
            down(d - 1);
            chain.pop_back();
        }
    };
    chain.push_back(&graded.back()[0]);
    down(graded.size() - 1);
}

inline std::size_t chain_count(const std::vector<std::vector<Set>>& graded) {
    std::size_t c = 0;
    for_each_chain(graded, [&](const auto&) { ++c; });
    return c;
}

/// n! times the Euclidean volume, summed over the barycentric subdivision.
inline Integer barycentric_volume(const std::vector<IntVector>& pts, const std::vector<std::vector<Set>>& graded) {
    const std::size_t n = pts[0].size();
    auto centre = [&](const Set& s) {
        RatVector c(n);
        for (std::size_t i : s)
            for (std::size_t k = 0; k < n; ++k) c[k] += Rational(pts[i][k]);
        for (auto& x : c) x /= static_cast<long>(s.size());
        return c;
    };
    Rational total = 0;
    for_each_chain(graded, [&](const std::vector<const Set*>& chain) {
        std::vector<RatVector> cs;
        for (const Set* f : chain) cs.push_back(centre(*f));
        std::vector<std::vector<Rational>> m;
        for (std::size_t i = 1; i < cs.size(); ++i) {
            std::vector<Rational> row(n);
            for (std::size_t k = 0; k < n; ++k) row[k] = cs[i][k] - cs[0][k];
            m.push_back(std::move(row));
        }
        total += abs(leibniz_det(m));
    });
    if (denominator(total) != 1) throw std::logic_error("barycentric volume not integral");
    return numerator(total);
}

/// Twice the area of the convex hull of planar points (monotone chain + shoelace).
inline long long twice_area(std::vector<std::pair<long long, long long>> p) {
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    auto cross = [](auto o, auto a, auto b) {
        return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
    };
    std::vector<std::pair<long long, long long>> h(2 * p.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
        h[k++] = p[i];
    }
    for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
        h[k++] = p[i];
    }
    h.resize(k > 0 ? k - 1 : 0);
    long long s = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const auto& a = h[i];
        const auto& b = h[(i + 1) % h.size()];
        s += a.first * b.second - a.second * b.first;
    }
    return s < 0 ? -s : s;
}

/// Lattice points strictly inside, by bounding box and the oracle's facet planes.
inline std::vector<IntVector> interior_points(const std::vector<IntVector>& pts) {
    const std::size_t n = pts[0].size();
    const auto facets = facets_by_subsets(pts);
    IntVector lo = pts[0], hi = pts[0];
    for (const auto& p : pts)
        for (std::size_t k = 0; k < n; ++k) {
            lo[k] = std::min(lo[k], p[k]);
            hi[k] = std::max(hi[k], p[k]);
        }
    std::vector<IntVector> out;
    IntVector x = lo;
    while (true) {
        bool inside = true;
        for (const auto& f : facets) {
            Integer v = 0;
            for (std::size_t k = 0; k < n; ++k) v += f.normal[k] * x[k];
            if (v <= f.offset) {
                inside = false;
                break;
            }
        }
        if (inside) out.push_back(x);
        std::size_t k = 0;
        while (k < n && x[k] == hi[k]) x[k] = lo[k], ++k;
        if (k == n) break;
        ++x[k];
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// All 2x2 integer matrices with entries in [-bound, bound] and determinant ±1.
inline std::vector<std::array<long, 4>> small_unimodular_2d(long bound) {
    std::vector<std::array<long, 4>> out;
    for (long a = -bound; a <= bound; ++a)
        for (long b = -bound; b <= bound; ++b)
            for (long c = -bound; c <= bound; ++c)
                for (long d = -bound; d <= bound; ++d)
                    if (a * d - b * c == 1 || a * d - b * c == -1) out.push_back({a, b, c, d});
    return out;
}

/// Definition of non-elementary in the plane: some small unimodular map A and integer
/// t > 1 with A(p - p_0) = t q for an integer point set q.
inline bool is_image_of_multiple_2d(const std::vector<IntVector>& pts, long max_t) {
    static const auto maps = small_unimodular_2d(3);
    for (long t = 2; t <= max_t; ++t)
        for (const auto& a : maps) {
            bool ok = true;
            for (const auto& v : pts) {
                const Integer dx = v[0] - pts[0][0], dy = v[1] - pts[0][1];
                const Integer x = a[0] * dx + a[1] * dy, y = a[2] * dx + a[3] * dy;
                if (x % t != 0 || y % t != 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) return true;
        }
    return false;
}

/// Random unimodular matrix with entries bounded by `bound`, built from elementary
/// row operations, swaps and sign changes that keep the bound.
inline IntMatrix random_unimodular(std::size_t n, std::mt19937_64& rng, long bound = 3, int steps = 12) {
    IntMatrix m = IntMatrix::identity(n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> op(0, 3);
    for (int s = 0; s < steps; ++s) {
        const std::size_t i = pick(rng), j = pick(rng);
        IntMatrix next = m;
        switch (op(rng)) {
            case 0:
            case 1: {
                if (i == j) continue;
                const int sign = op(rng) % 2 ? 1 : -1;
                for (std::size_t k = 0; k < n; ++k) next(i, k) += sign * m(j, k);
                break;
            }
            case 2:
                for (std::size_t k = 0; k < n; ++k) std::swap(next(i, k), next(j, k));
                break;
            default:
                for (std::size_t k = 0; k < n; ++k) next(i, k) = -next(i, k);
        }
        const bool bounded = std::all_of(next.entries().begin(), next.entries().end(),
                                         [&](const Integer& x) { return abs(x) <= bound; });
        if (bounded) m = next;
    }
    return m;
}

inline std::vector<IntVector> transform(const std::vector<IntVector>& pts, const IntMatrix& a, const IntVector& shift) {
    std::vector<IntVector> out;
    for (const auto& p : pts) {
        IntVector y = a * p;
        for (std::size_t k = 0; k < y.size(); ++k) y[k] += shift[k];
        out.push_back(std::move(y));
    }
    return out;
}

}  // namespace oracle
