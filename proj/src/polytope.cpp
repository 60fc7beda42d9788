#include "latreg/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include <boost/dynamic_bitset.hpp>

namespace latreg {

namespace {

using Bits = boost::dynamic_bitset<>;

Integer dot(const IntVector& a, const IntVector& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IntVector subtract(const IntVector& a, const IntVector& b) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

/// Affine chart of a point list; see LatticeChart. `points` must be nonempty with
/// at least two distinct points.
struct ChartData {
    std::size_t dim = 0;
    IntVector origin;
    IntMatrix basis{{0}};
    IntMatrix coordinates{{0}};
    bool identity = false;
};

ChartData make_chart(const std::vector<IntVector>& points, std::size_t n) {
    ChartData c;
    std::vector<IntVector> diffs;
    for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(subtract(points[i], points[0]));
    const IntMatrix m = IntMatrix::from_columns(diffs);  // n x (count-1)
    const std::size_t r = rank(m);
    c.dim = r;
    if (r == n) {
        c.origin = IntVector(n);
        c.basis = IntMatrix::identity(n);
        c.coordinates = IntMatrix::identity(n);
        c.identity = true;
        return c;
    }
    if (r == 0) return c;
    const SmithForm f = snf(m);
    const IntMatrix u_inv = unimodular_inverse(f.u);
    IntMatrix b0(n, r);
    IntMatrix l0(r, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            b0(i, j) = u_inv(i, j);
            l0(j, i) = f.u(j, i);
        }
    // Canonical basis of the same lattice: column HNF.
    const HermiteForm h = hnf(b0);
    c.origin = points[0];
    c.basis = h.h;
    c.coordinates = unimodular_inverse(h.u) * l0;
    return c;
}

IntVector chart_local(const ChartData& c, const IntVector& x) {
    if (c.identity) return x;
    return c.coordinates * subtract(x, c.origin);
}

struct Ray {
    IntVector x;
    Bits zero;
};

/// Facets of the convex hull of full-dimensional points in Z^k, by the double
/// description method on the homogenized cone {(c, h) : c + h·p_i >= 0}.
std::vector<Ray> facet_rays(const std::vector<IntVector>& pts, std::size_t k) {
    const std::size_t m = pts.size();
    const std::size_t d = k + 1;
    std::vector<IntVector> rows(m, IntVector(d));
    for (std::size_t i = 0; i < m; ++i) {
        rows[i][0] = 1;
        for (std::size_t j = 0; j < k; ++j) rows[i][j + 1] = pts[i][j];
    }

    // Greedy choice of d linearly independent rows.
    std::vector<std::size_t> chosen;
    std::vector<RatVector> echelon;
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0; i < m && chosen.size() < d; ++i) {
        RatVector v = to_rational(rows[i]);
        for (std::size_t e = 0; e < echelon.size(); ++e) {
            const std::size_t pc = pivots[e];
            if (v[pc] == 0) continue;
            Rational f = v[pc] / echelon[e][pc];
            for (std::size_t j = 0; j < d; ++j) v[j] -= f * echelon[e][j];
        }
        auto nz = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
        if (nz == v.end()) continue;
        pivots.push_back(static_cast<std::size_t>(nz - v.begin()));
        echelon.push_back(std::move(v));
        chosen.push_back(i);
    }
    if (chosen.size() != d) throw DegeneracyError("facet enumeration: points are not full-dimensional");

    std::vector<IntVector> base_rows;
    for (auto i : chosen) base_rows.push_back(rows[i]);
    const RatMatrix a0 = to_rational(IntMatrix::from_rows(base_rows));
    const Rational det0 = det(a0);
    const RatMatrix inv0 = inverse(a0);

    Bits processed(m);
    for (auto i : chosen) processed.set(i);

    std::vector<Ray> rays;
    for (std::size_t j = 0; j < d; ++j) {
        RatVector col(d);
        for (std::size_t i = 0; i < d; ++i) col[i] = inv0(i, j) * (det0 < 0 ? Rational(-det0) : det0);
        Ray r{primitive(to_integer(col)), Bits(m)};
        for (std::size_t l = 0; l < d; ++l)
            if (l != j) r.zero.set(chosen[l]);
        rays.push_back(std::move(r));
    }

    for (std::size_t i = 0; i < m; ++i) {
        if (processed.test(i)) continue;
        processed.set(i);
        std::vector<Integer> value(rays.size());
        std::vector<std::size_t> pos, neg, zer;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            value[r] = dot(rows[i], rays[r].x);
            if (value[r] > 0)
                pos.push_back(r);
            else if (value[r] < 0)
                neg.push_back(r);
            else
                zer.push_back(r);
        }
        std::vector<Ray> next;
        next.reserve(pos.size() + zer.size());
        for (auto r : pos) next.push_back(rays[r]);
        for (auto r : zer) {
            next.push_back(rays[r]);
            next.back().zero.set(i);
        }
        for (auto p : pos) {
            for (auto q : neg) {
                Bits common = rays[p].zero & rays[q].zero;
                if (d >= 2 && common.count() + 2 < d) continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
                    if (r == p || r == q) continue;
                    if (common.is_subset_of(rays[r].zero)) adjacent = false;
                }
                if (!adjacent) continue;
                IntVector x(d);
                for (std::size_t j = 0; j < d; ++j) x[j] = value[p] * rays[q].x[j] - value[q] * rays[p].x[j];
                common.set(i);
                next.push_back(Ray{primitive(x), std::move(common)});
            }
        }
        rays = std::move(next);
    }
    return rays;
}

Bits to_bits(const VertexSet& s, std::size_t n) {
    Bits b(n);
    for (auto i : s) b.set(i);
    return b;
}

VertexSet to_set(const Bits& b) {
    VertexSet s;
    for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) s.push_back(i);
    return s;
}

/// Facets of the hull of distinct points (in the points' own order), expressed in
/// ambient coordinates, together with their tight point sets.
struct HullFacets {
    ChartData chart;
    std::vector<Halfspace> inequalities;
    std::vector<Bits> tight;
};

HullFacets hull_facets(const std::vector<IntVector>& points, std::size_t n) {
    HullFacets out;
    out.chart = make_chart(points, n);
    const std::size_t k = out.chart.dim;
    if (k == 0) return out;
    std::vector<IntVector> local;
    local.reserve(points.size());
    for (const auto& p : points) local.push_back(chart_local(out.chart, p));
    for (auto& ray : facet_rays(local, k)) {
        IntVector h(ray.x.begin() + 1, ray.x.end());
        Halfspace hs;
        if (out.chart.identity) {
            hs.offset = ray.x[0];
            hs.normal = std::move(h);
        } else {
            // c + h·L(x - o) = (c - (hL)·o) + (hL)·x
            IntVector amb = out.chart.coordinates.transposed() * h;
            hs.offset = ray.x[0] - dot(amb, out.chart.origin);
            hs.normal = std::move(amb);
        }
        out.inequalities.push_back(std::move(hs));
        out.tight.push_back(std::move(ray.zero));
    }
    return out;
}

}  // namespace

std::size_t Polytope::find_vertex(const IntVector& point) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), point);
    if (it == vertices_.end() || *it != point) return vertices_.size();
    return static_cast<std::size_t>(it - vertices_.begin());
}

Polytope Polytope::from_vertices(const std::vector<IntVector>& points, std::size_t ambient_dim) {
    if (points.empty()) throw ArgumentError("from_vertices: empty point list");
    if (ambient_dim == 0) throw DimensionError("from_vertices: ambient dimension must be positive");
    for (const auto& p : points)
        if (p.size() != ambient_dim) throw DimensionError("from_vertices: point length differs from ambient dimension");

    std::vector<IntVector> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() == 1) return Polytope(ambient_dim, 0, std::move(pts));

    const HullFacets hull = hull_facets(pts, ambient_dim);
    const std::size_t k = hull.chart.dim;
    std::vector<IntVector> extreme;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        // A point is a vertex iff the normals of the facets through it have rank k.
        std::vector<IntVector> normals;
        for (std::size_t f = 0; f < hull.tight.size(); ++f)
            if (hull.tight[f].test(i)) normals.push_back(hull.inequalities[f].normal);
        if (normals.size() < k) continue;
        if (rank(IntMatrix::from_rows(normals)) == k) extreme.push_back(pts[i]);
    }
    return Polytope(ambient_dim, k, std::move(extreme));
}

IntVector LatticeChart::to_local(const IntVector& ambient_point) const {
    if (identity) return ambient_point;
    return coordinates * subtract(ambient_point, origin);
}

IntVector LatticeChart::to_ambient(const IntVector& local_point) const {
    if (identity) return local_point;
    IntVector x = basis * local_point;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += origin[i];
    return x;
}

LatticeChart hull_coords(const Polytope& p) {
    if (p.dim() == 0) throw DimensionError("hull_coords: a single point has no lattice chart");
    const ChartData c = make_chart(p.vertices(), p.ambient_dim());
    std::vector<IntVector> local;
    for (const auto& v : p.vertices()) local.push_back(chart_local(c, v));
    Polytope q = Polytope::from_vertices(local, c.dim);
    std::vector<std::size_t> index(p.vertex_count());
    for (std::size_t i = 0; i < local.size(); ++i) index[i] = q.find_vertex(local[i]);
    return LatticeChart{std::move(q), c.origin, c.basis, c.coordinates, std::move(index), c.identity};
}

std::vector<std::size_t> FaceLattice::f_vector() const {
    std::vector<std::size_t> f;
    for (std::size_t d = 0; d < dim; ++d) f.push_back(faces[d].size());
    return f;
}

std::size_t FaceLattice::find_face(std::size_t d, const VertexSet& vertices) const {
    const auto& list = faces.at(d);
    auto it = std::lower_bound(list.begin(), list.end(), vertices);
    if (it == list.end() || *it != vertices) return list.size();
    return static_cast<std::size_t>(it - list.begin());
}

FaceLattice face_lattice(const Polytope& p) {
    FaceLattice lat;
    const std::size_t k = p.dim();
    const std::size_t nv = p.vertex_count();
    lat.dim = k;
    lat.faces.resize(k + 1);
    lat.boundary.resize(k + 1);
    if (k == 0) {
        lat.faces[0] = {{0}};
        lat.boundary[0] = {{}};
        return lat;
    }

    HullFacets hull = hull_facets(p.vertices(), p.ambient_dim());
    // Sort facets by vertex set so that facet_inequalities lines up with faces[k-1].
    std::vector<std::size_t> order(hull.tight.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<VertexSet> facet_sets;
    for (const auto& t : hull.tight) facet_sets.push_back(to_set(t));
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return facet_sets[a] < facet_sets[b]; });

    std::vector<Bits> facets;
    for (auto i : order) {
        lat.faces[k - 1].push_back(facet_sets[i]);
        lat.facet_inequalities.push_back(hull.inequalities[i]);
        facets.push_back(hull.tight[i]);
    }
    VertexSet all(nv);
    std::iota(all.begin(), all.end(), 0);
    lat.faces[k] = {all};
    lat.boundary[k] = {std::vector<std::size_t>(facets.size())};
    std::iota(lat.boundary[k][0].begin(), lat.boundary[k][0].end(), 0);

    for (std::size_t d = k - 1; d >= 1; --d) {
        std::vector<std::vector<Bits>> sub(lat.faces[d].size());
        std::set<VertexSet> next;
        for (std::size_t j = 0; j < lat.faces[d].size(); ++j) {
            const Bits face = to_bits(lat.faces[d][j], nv);
            std::vector<Bits> candidates;
            for (const auto& g : facets) {
                Bits c = face & g;
                if (c.none() || c == face) continue;
                if (std::find(candidates.begin(), candidates.end(), c) == candidates.end()) candidates.push_back(std::move(c));
            }
            for (std::size_t a = 0; a < candidates.size(); ++a) {
                bool maximal = true;
                for (std::size_t b = 0; b < candidates.size() && maximal; ++b)
                    if (a != b && candidates[a].is_proper_subset_of(candidates[b])) maximal = false;
                if (maximal) {
                    sub[j].push_back(candidates[a]);
                    next.insert(to_set(candidates[a]));
                }
            }
        }
        lat.faces[d - 1].assign(next.begin(), next.end());
        lat.boundary[d].resize(lat.faces[d].size());
        for (std::size_t j = 0; j < sub.size(); ++j) {
            for (const auto& b : sub[j]) lat.boundary[d][j].push_back(lat.find_face(d - 1, to_set(b)));
            std::sort(lat.boundary[d][j].begin(), lat.boundary[d][j].end());
        }
    }
    lat.boundary[0].assign(lat.faces[0].size(), {});
    return lat;
}

std::vector<Flag> flags(const FaceLattice& lattice) {
    const std::size_t k = lattice.dim;
    std::vector<Flag> out;
    Flag current{std::vector<std::size_t>(k + 1)};
    current.faces[k] = 0;
    // Depth-first descent from the improper face.
    auto descend = [&](auto&& self, std::size_t d) -> void {
        if (d == 0) {
            out.push_back(current);
            return;
        }
        for (auto b : lattice.boundary[d][current.faces[d]]) {
            current.faces[d - 1] = b;
            self(self, d - 1);
        }
    };
    descend(descend, k);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Flag> flags(const Polytope& p) { return flags(face_lattice(p)); }

Integer lattice_volume(const Polytope& p) { return lattice_volume(p, face_lattice(p)); }

Integer lattice_volume(const Polytope& p, const FaceLattice& lattice) {
    const std::size_t k = lattice.dim;
    if (k == 0) return 1;
    const LatticeChart chart = hull_coords(p);
    std::vector<IntVector> local;
    for (const auto& v : p.vertices()) local.push_back(chart.to_local(v));

    // Pulling triangulation: each face is coned from its smallest vertex over the
    // triangulations of its facets that avoid that vertex.
    std::vector<std::map<std::size_t, std::vector<VertexSet>>> memo(k + 1);
    auto triangulate = [&](auto&& self, std::size_t d, std::size_t j) -> const std::vector<VertexSet>& {
        auto found = memo[d].find(j);
        if (found != memo[d].end()) return found->second;
        std::vector<VertexSet> simplices;
        const VertexSet& face = lattice.faces[d][j];
        if (d == 0) {
            simplices.push_back(face);
        } else {
            const std::size_t apex = face.front();
            for (auto b : lattice.boundary[d][j]) {
                const VertexSet& g = lattice.faces[d - 1][b];
                if (std::binary_search(g.begin(), g.end(), apex)) continue;
                for (const auto& s : self(self, d - 1, b)) {
                    VertexSet t = s;
                    t.push_back(apex);
                    simplices.push_back(std::move(t));
                }
            }
        }
        return memo[d].emplace(j, std::move(simplices)).first->second;
    };

    Integer total = 0;
    for (const auto& s : triangulate(triangulate, k, 0)) {
        IntMatrix m(k, k);
        const IntVector& base = local[s[0]];
        for (std::size_t c = 1; c <= k; ++c)
            for (std::size_t r = 0; r < k; ++r) m(r, c - 1) = local[s[c]][r] - base[r];
        Integer v = det(m);
        total += v < 0 ? Integer(-v) : v;
    }
    return total;
}

Integer lattice_length(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw DimensionError("lattice_length: length mismatch");
    return gcd_of(subtract(a, b));
}

Integer lattice_distance(const IntVector& point, const Polytope& facet) {
    const std::size_t n = facet.ambient_dim();
    if (point.size() != n) throw DimensionError("lattice_distance: point length differs from ambient dimension");
    if (facet.dim() + 1 != n) throw DimensionError("lattice_distance: facet must have codimension one");
    IntVector normal(n);
    IntVector origin = facet.vertex(0);
    if (n == 1) {
        normal[0] = 1;
    } else {
        const LatticeChart chart = hull_coords(facet);
        origin = chart.origin;
        // Generalized cross product of the n-1 basis columns.
        for (std::size_t i = 0; i < n; ++i) {
            IntMatrix minor(n - 1, n - 1);
            for (std::size_t r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0; c + 1 < n; ++c) minor(rr, c) = chart.basis(r, c);
                ++rr;
            }
            normal[i] = (i % 2 == 0 ? 1 : -1) * det(minor);
        }
        normal = primitive(normal);
    }
    Integer value = dot(normal, subtract(point, origin));
    if (value == 0) throw DegeneracyError("lattice_distance: point lies on the facet hyperplane");
    return value < 0 ? Integer(-value) : value;
}

Polytope multiple(const Polytope& p, const Integer& t) {
    if (t < 1) throw ArgumentError("multiple: factor must be a positive integer");
    std::vector<IntVector> v = p.vertices();
    for (auto& x : v)
        for (auto& c : x) c *= t;
    return Polytope::from_vertices(v, p.ambient_dim());
}

bool is_elementary(const Polytope& p) {
    if (p.vertex_count() == 1) return true;
    Integer g = 0;
    for (std::size_t i = 1; i < p.vertex_count(); ++i) g = boost::multiprecision::gcd(g, gcd_of(subtract(p.vertex(i), p.vertex(0))));
    return g == 1;
}

std::vector<IntVector> interior_lattice_points(const Polytope& p) { return interior_lattice_points(p, face_lattice(p)); }

std::vector<IntVector> interior_lattice_points(const Polytope& p, const FaceLattice& lattice) {
    if (!p.is_full_dimensional()) throw DimensionError("interior_lattice_points: polytope is not full-dimensional");
    const std::size_t n = p.ambient_dim();
    IntVector lo = p.vertex(0), hi = p.vertex(0);
    for (const auto& v : p.vertices())
        for (std::size_t i = 0; i < n; ++i) {
            if (v[i] < lo[i]) lo[i] = v[i];
            if (v[i] > hi[i]) hi[i] = v[i];
        }
    std::vector<IntVector> inside;
    IntVector x = lo;
    for (;;) {
        bool strict = std::all_of(lattice.facet_inequalities.begin(), lattice.facet_inequalities.end(),
                                  [&](const Halfspace& h) { return h.offset + dot(h.normal, x) > 0; });
        if (strict) inside.push_back(x);
        std::size_t i = 0;
        while (i < n && x[i] == hi[i]) {
            x[i] = lo[i];
            ++i;
        }
        if (i == n) break;
        x[i] += 1;
    }
    std::sort(inside.begin(), inside.end());
    return inside;
}

IntVector supporting_functional(const Polytope& p, const FaceLattice& lattice, std::size_t d, std::size_t j) {
    IntVector phi(p.ambient_dim());
    if (d == lattice.dim) return phi;
    const VertexSet& face = lattice.faces.at(d).at(j);
    for (std::size_t g = 0; g < lattice.faces[lattice.dim - 1].size(); ++g) {
        const VertexSet& facet = lattice.faces[lattice.dim - 1][g];
        if (!std::includes(facet.begin(), facet.end(), face.begin(), face.end())) continue;
        const IntVector& h = lattice.facet_inequalities[g].normal;
        for (std::size_t i = 0; i < phi.size(); ++i) phi[i] -= h[i];
    }
    return phi;
}

RatVector centroid(const Polytope& p, const VertexSet& face) {
    RatVector c(p.ambient_dim());
    for (auto i : face)
        for (std::size_t j = 0; j < c.size(); ++j) c[j] += p.vertex(i)[j];
    for (auto& x : c) x /= static_cast<long>(face.size());
    return c;
}

}  // namespace latreg
