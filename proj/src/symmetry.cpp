#include "latreg/symmetry.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace latreg {

namespace {

bool is_unit(const Integer& x) { return x == 1 || x == -1; }

/// Unimodular n x n matrix whose first k columns are the chart basis.
IntMatrix completion(const LatticeChart& chart, std::size_t n) {
    const std::size_t k = chart.basis.cols();
    const SmithForm f = snf(chart.basis);
    const IntMatrix u_inv = unimodular_inverse(f.u);
    const IntMatrix v_inv = unimodular_inverse(f.v);
    IntMatrix block = IntMatrix::identity(n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) block(i, j) = v_inv(i, j);
    return u_inv * block;
}

struct AmbientFrame {
    IntVector origin;
    IntMatrix frame;      // completion
    IntMatrix frame_inv;  // its inverse
};

AmbientFrame ambient_frame(const LatticeChart& chart, std::size_t n) {
    AmbientFrame a{chart.origin, completion(chart, n), IntMatrix::identity(n)};
    a.frame_inv = unimodular_inverse(a.frame);
    return a;
}

/// Lifts a map between chart coordinates to the ambient lattice:
/// x ↦ o_to + E_to · (A ⊕ I) · E_from^{-1} (x - o_from) + E_to · (s, 0).
AffineMap lift(const AffineMap& local, const AmbientFrame& from, const AmbientFrame& to) {
    const std::size_t n = from.origin.size();
    const std::size_t k = local.dim();
    RatMatrix block = RatMatrix::identity(n);
    RatVector shift(n);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) block(i, j) = local.linear()(i, j);
        shift[i] = local.translation()[i];
    }
    const RatMatrix linear = to_rational(to.frame) * block * to_rational(from.frame_inv);
    RatVector t = to_rational(to.frame) * shift;
    const RatVector lo = linear * to_rational(from.origin);
    for (std::size_t i = 0; i < n; ++i) t[i] += Rational(to.origin[i]) - lo[i];
    return AffineMap(linear, t);
}

std::vector<std::size_t> vertex_permutation(const AffineMap& map, const Polytope& p, const Polytope& q) {
    std::vector<std::size_t> perm(p.vertex_count());
    for (std::size_t i = 0; i < p.vertex_count(); ++i) perm[i] = q.find_vertex(to_integer(map(p.vertex(i))));
    return perm;
}

SymmetryGroup trivial_group(const Polytope& p) {
    SymmetryGroup g;
    g.elements.push_back(AffineMap::identity(p.ambient_dim()));
    g.permutations.push_back({0});
    g.base_flag = Flag{{0}};
    g.flag_orbit = {0};
    g.flag_count = 1;
    return g;
}

SymmetryGroup full_dimensional_group(const Polytope& p, const FaceLattice& lattice) {
    SymmetryGroup g;
    const std::vector<Flag> all = flags(lattice);
    g.flag_count = all.size();
    g.base_flag = all.front();
    const FlagMapper mapper(p, lattice, g.base_flag);
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (auto m = mapper.map_to(p, lattice, all[i])) {
            g.permutations.push_back(vertex_permutation(*m, p, p));
            g.elements.push_back(std::move(*m));
            g.flag_orbit.push_back(i);
        }
    }
    return g;
}

}  // namespace

FlagMapper::FlagMapper(const Polytope& p, const FaceLattice& lattice, const Flag& base)
    : p_(p), anchor_inverse_(RatMatrix::identity(std::max<std::size_t>(lattice.dim, 1))) {
    if (!p.is_full_dimensional()) throw DimensionError("flag map: polytope must be full-dimensional");
    const std::size_t k = lattice.dim;
    if (base.faces.size() != k + 1) throw DimensionError("flag map: flag length does not match dimension");
    anchor0_ = centroid(p, lattice.faces[0][base.faces[0]]);
    RatMatrix c(k, k);
    for (std::size_t d = 1; d <= k; ++d) {
        const RatVector a = centroid(p, lattice.faces[d][base.faces[d]]);
        for (std::size_t i = 0; i < k; ++i) c(i, d - 1) = a[i] - anchor0_[i];
    }
    anchor_inverse_ = inverse(c);
}

std::optional<AffineMap> FlagMapper::map_to(const Polytope& q, const FaceLattice& q_lattice, const Flag& g) const {
    const std::size_t k = anchor0_.size();
    if (!q.is_full_dimensional() || q.ambient_dim() != k || g.faces.size() != k + 1)
        throw DimensionError("flag map: target dimension mismatch");
    if (q.vertex_count() != p_.vertex_count()) return std::nullopt;

    const RatVector d0 = centroid(q, q_lattice.faces[0][g.faces[0]]);
    RatMatrix dm(k, k);
    for (std::size_t d = 1; d <= k; ++d) {
        const RatVector b = centroid(q, q_lattice.faces[d][g.faces[d]]);
        for (std::size_t i = 0; i < k; ++i) dm(i, d - 1) = b[i] - d0[i];
    }
    const RatMatrix linear = dm * anchor_inverse_;
    if (!is_integral(linear)) return std::nullopt;
    RatVector t = linear * anchor0_;
    for (std::size_t i = 0; i < k; ++i) t[i] = d0[i] - t[i];
    if (!is_integral(t)) return std::nullopt;

    const IntMatrix a = to_integer(linear);
    if (!is_unit(det(a))) return std::nullopt;
    const IntVector shift = to_integer(t);
    for (const auto& v : p_.vertices()) {
        IntVector image = a * v;
        for (std::size_t i = 0; i < k; ++i) image[i] += shift[i];
        if (q.find_vertex(image) == q.vertex_count()) return std::nullopt;
    }
    return AffineMap(linear, std::move(t));
}

std::optional<AffineMap> flag_map(const Polytope& p, const Flag& f, const Polytope& q, const Flag& g) {
    return flag_map(p, face_lattice(p), f, q, face_lattice(q), g);
}

std::optional<AffineMap> flag_map(const Polytope& p, const FaceLattice& p_lattice, const Flag& f,
                                  const Polytope& q, const FaceLattice& q_lattice, const Flag& g) {
    if (p.dim() != q.dim() || p.ambient_dim() != q.ambient_dim())
        throw DimensionError("flag_map: polytopes differ in dimension");
    return FlagMapper(p, p_lattice, f).map_to(q, q_lattice, g);
}

SymmetryGroup symmetry_group(const Polytope& p) { return symmetry_group(p, face_lattice(p)); }

SymmetryGroup symmetry_group(const Polytope& p, const FaceLattice& lattice) {
    if (p.dim() == 0) return trivial_group(p);
    if (p.is_full_dimensional()) return full_dimensional_group(p, lattice);

    const LatticeChart chart = hull_coords(p);
    const FaceLattice local_lattice = face_lattice(chart.local);
    SymmetryGroup local = full_dimensional_group(chart.local, local_lattice);
    const AmbientFrame frame = ambient_frame(chart, p.ambient_dim());

    // Flags of p correspond to flags of the chart image through local_index.
    const std::vector<Flag> p_flags = flags(lattice);
    const std::vector<Flag> local_flags = flags(local_lattice);
    auto translate_flag = [&](const Flag& f) {
        Flag out{std::vector<std::size_t>(f.faces.size())};
        for (std::size_t d = 0; d < f.faces.size(); ++d) {
            VertexSet s;
            for (auto v : lattice.faces[d][f.faces[d]]) s.push_back(chart.local_index[v]);
            std::sort(s.begin(), s.end());
            out.faces[d] = local_lattice.find_face(d, s);
        }
        return out;
    };
    std::map<Flag, std::size_t> p_flag_index;
    for (std::size_t i = 0; i < p_flags.size(); ++i) p_flag_index.emplace(translate_flag(p_flags[i]), i);

    SymmetryGroup g;
    g.flag_count = p_flags.size();
    for (std::size_t e = 0; e < local.elements.size(); ++e) {
        AffineMap m = lift(local.elements[e], frame, frame);
        g.permutations.push_back(vertex_permutation(m, p, p));
        g.elements.push_back(std::move(m));
        g.flag_orbit.push_back(p_flag_index.at(local_flags[local.flag_orbit[e]]));
    }
    g.base_flag = p_flags[g.flag_orbit.front()];
    return g;
}

GroupLawReport verify_group_laws(const Polytope& p, const SymmetryGroup& group) {
    GroupLawReport r;
    const std::size_t nv = p.vertex_count();
    const FaceLattice lattice = face_lattice(p);

    std::vector<std::size_t> id(nv);
    for (std::size_t i = 0; i < nv; ++i) id[i] = i;

    r.elements_consistent = group.elements.size() == group.permutations.size();
    for (std::size_t e = 0; e < group.elements.size() && r.elements_consistent; ++e) {
        const AffineMap& m = group.elements[e];
        if (!is_lattice_affine(m)) r.elements_consistent = false;
        for (std::size_t i = 0; i < nv && r.elements_consistent; ++i) {
            const std::size_t j = group.permutations[e][i];
            if (j >= nv || to_integer(m(p.vertex(i))) != p.vertex(j)) r.elements_consistent = false;
        }
    }

    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t e = 0; e < group.permutations.size(); ++e) index.emplace(group.permutations[e], e);
    auto id_it = index.find(id);
    r.has_identity = id_it != index.end() && group.elements[id_it->second] == AffineMap::identity(p.ambient_dim());

    r.closed = true;
    std::vector<std::size_t> prod(nv);
    for (const auto& a : group.permutations) {
        for (const auto& b : group.permutations) {
            for (std::size_t i = 0; i < nv; ++i) prod[i] = a[b[i]];
            if (!index.count(prod)) {
                r.closed = false;
                break;
            }
        }
        if (!r.closed) break;
    }

    r.has_inverses = true;
    std::vector<std::size_t> inv(nv);
    for (const auto& a : group.permutations) {
        for (std::size_t i = 0; i < nv; ++i) inv[a[i]] = i;
        if (!index.count(inv)) r.has_inverses = false;
    }

    // Induced permutation of faces in every dimension, then flags.
    const std::vector<Flag> all = flags(lattice);
    std::set<Flag> flag_set(all.begin(), all.end());
    r.acts_freely = true;
    for (std::size_t e = 0; e < group.permutations.size() && r.acts_freely; ++e) {
        const auto& perm = group.permutations[e];
        if (perm == id) continue;
        std::vector<std::vector<std::size_t>> face_image(lattice.dim + 1);
        for (std::size_t d = 0; d <= lattice.dim; ++d)
            for (const auto& face : lattice.faces[d]) {
                VertexSet s;
                for (auto v : face) s.push_back(perm[v]);
                std::sort(s.begin(), s.end());
                face_image[d].push_back(lattice.find_face(d, s));
            }
        for (const auto& f : all) {
            Flag image{std::vector<std::size_t>(f.faces.size())};
            for (std::size_t d = 0; d < f.faces.size(); ++d) image.faces[d] = face_image[d][f.faces[d]];
            if (image == f || !flag_set.count(image)) {
                r.acts_freely = false;
                break;
            }
        }
    }
    return r;
}

RegularityResult is_lattice_regular(const Polytope& p) { return is_lattice_regular(p, face_lattice(p)); }

RegularityResult is_lattice_regular(const Polytope& p, const FaceLattice& lattice) {
    RegularityResult r;
    if (p.dim() == 0) {
        r.regular = true;
        r.flag_count = 1;
        return r;
    }
    if (!p.is_full_dimensional()) {
        const LatticeChart chart = hull_coords(p);
        return is_lattice_regular(chart.local);
    }
    const std::vector<Flag> all = flags(lattice);
    r.flag_count = all.size();
    const FlagMapper mapper(p, lattice, all.front());
    for (const auto& g : all) {
        if (!mapper.map_to(p, lattice, g)) {
            r.witness = std::make_pair(all.front(), g);
            return r;
        }
    }
    r.regular = true;
    return r;
}

Signature invariant_signature(const Polytope& p) { return invariant_signature(p, face_lattice(p)); }

Signature invariant_signature(const Polytope& p, const FaceLattice& lattice) {
    Signature s;
    s.dim = p.dim();
    s.vertex_count = p.vertex_count();
    s.lattice_volume = lattice_volume(p, lattice);
    s.f_vector = lattice.f_vector();
    if (lattice.dim >= 1) {
        for (const auto& e : lattice.faces[1]) s.edge_lengths.push_back(lattice_length(p.vertex(e[0]), p.vertex(e[1])));
        std::sort(s.edge_lengths.begin(), s.edge_lengths.end());
    }
    if (p.dim() == 0) {
        s.interior_points = 1;
    } else if (p.is_full_dimensional()) {
        s.interior_points = interior_lattice_points(p, lattice).size();
    } else {
        s.interior_points = interior_lattice_points(hull_coords(p).local).size();
    }
    return s;
}

std::optional<AffineMap> are_congruent(const Polytope& p, const Polytope& q) {
    if (p.ambient_dim() != q.ambient_dim() || p.dim() != q.dim() || p.vertex_count() != q.vertex_count())
        return std::nullopt;
    const std::size_t n = p.ambient_dim();
    if (p.dim() == 0) {
        RatVector t(n);
        for (std::size_t i = 0; i < n; ++i) t[i] = Rational(q.vertex(0)[i] - p.vertex(0)[i]);
        return AffineMap(RatMatrix::identity(n), t);
    }
    const FaceLattice p_lattice = face_lattice(p);
    const FaceLattice q_lattice = face_lattice(q);
    if (!(invariant_signature(p, p_lattice) == invariant_signature(q, q_lattice))) return std::nullopt;

    if (p.is_full_dimensional()) {
        const FlagMapper mapper(p, p_lattice, flags(p_lattice).front());
        for (const auto& g : flags(q_lattice))
            if (auto m = mapper.map_to(q, q_lattice, g)) return m;
        return std::nullopt;
    }

    const LatticeChart pc = hull_coords(p);
    const LatticeChart qc = hull_coords(q);
    const FaceLattice pl = face_lattice(pc.local);
    const FaceLattice ql = face_lattice(qc.local);
    const FlagMapper mapper(pc.local, pl, flags(pl).front());
    for (const auto& g : flags(ql)) {
        if (auto m = mapper.map_to(qc.local, ql, g)) return lift(*m, ambient_frame(pc, n), ambient_frame(qc, n));
    }
    return std::nullopt;
}

Polytope apply(const AffineMap& map, const Polytope& p) {
    if (map.dim() != p.ambient_dim()) throw DimensionError("apply: dimension mismatch");
    std::vector<IntVector> image;
    image.reserve(p.vertex_count());
    for (const auto& v : p.vertices()) image.push_back(to_integer(map(v)));
    return Polytope::from_vertices(image, p.ambient_dim());
}

}  // namespace latreg
