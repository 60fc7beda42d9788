#include "latreg/catalog.hpp"

#include <algorithm>
#include <sstream>

namespace latreg {

namespace {

IntVector unit(std::size_t n, std::size_t i) {
    IntVector e(n);
    e[i] = 1;
    return e;
}

IntVector add(const IntVector& a, const IntVector& b) {
    IntVector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

IntVector scaled(const IntVector& a, long t) {
    IntVector r = a;
    for (auto& x : r) x *= t;
    return r;
}

Integer factorial(std::size_t n) {
    Integer f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
    return f;
}

std::size_t factorial_count(std::size_t n) {
    std::size_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::string symbol(const std::vector<int>& entries, unsigned variant, bool with_variant) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < entries.size(); ++i) os << (i ? "," : "") << entries[i];
    os << "}^L";
    if (with_variant) os << '_' << variant;
    return os.str();
}

/// All 2^n sums base + Σ_{i∈S} generators[i].
std::vector<IntVector> parallelepiped_vertices(const CubeFrame& frame) {
    const std::size_t n = frame.generators.size();
    std::vector<IntVector> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        IntVector v = frame.base;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) v = add(v, frame.generators[i]);
        out.push_back(std::move(v));
    }
    return out;
}

CubeFrame cube_frame(std::size_t n, unsigned variant) {
    CubeFrame f{IntVector(n), {}};
    for (std::size_t i = 0; i < n; ++i) f.generators.push_back(unit(n, i));
    if (variant == 2) {
        IntVector last(n, 1);
        last[n - 1] = 2;
        f.generators[n - 1] = last;
    } else if (variant == 3) {
        for (std::size_t i = 1; i < n; ++i) f.generators[i] = add(unit(n, 0), scaled(unit(n, i), 2));
    }
    return f;
}

std::vector<IntVector> cross_vertices(std::size_t n, unsigned variant) {
    std::vector<IntVector> v;
    if (variant == 1 || variant == 2) {
        for (std::size_t i = 0; i < n; ++i) {
            IntVector axis = unit(n, i);
            if (variant == 2 && i == n - 1) {
                axis = IntVector(n, 1);
                axis[n - 1] = 2;
            }
            v.push_back(axis);
            v.push_back(scaled(axis, -1));
        }
    } else {
        // O, O - e_1, O - e_1 - e_i and O + e_i for i >= 2; all diagonals meet at -e_1/2.
        v.push_back(IntVector(n));
        v.push_back(scaled(unit(n, 0), -1));
        for (std::size_t i = 1; i < n; ++i) {
            v.push_back(scaled(add(unit(n, 0), unit(n, i)), -1));
            v.push_back(unit(n, i));
        }
    }
    return v;
}

std::vector<IntVector> hexagon_vertices(unsigned variant) {
    const std::vector<IntVector> axes = variant == 1
        ? std::vector<IntVector>{{1, 0}, {0, 1}, {1, -1}}
        : std::vector<IntVector>{{2, 1}, {1, 2}, {1, -1}};
    std::vector<IntVector> v;
    for (const auto& a : axes) {
        v.push_back(a);
        v.push_back(scaled(a, -1));
    }
    return v;
}

std::vector<IntVector> cell24_axes(unsigned variant) {
    if (variant == 1) return {{0, 1, 1, 1}, {1, 1, 0, 1}, {1, 0, 1, 1}, {0, 0, 0, 1}};
    return {{1, 1, 1, 1}, {1, -1, 1, 1}, {1, 1, -1, 1}, {1, 1, 1, -1}};
}

ExpectedInvariants expected_for(Family family, std::size_t n, unsigned variant) {
    ExpectedInvariants e;
    switch (family) {
        case Family::segment:
            e.lattice_volume = 1;
            e.flag_count = 2;
            e.f_vector = {2};
            break;
        case Family::simplex:
            e.lattice_volume = variant;
            e.flag_count = factorial_count(n + 1);
            for (std::size_t d = 0; d < n; ++d) e.f_vector.push_back(binomial(n + 1, d + 1));
            break;
        case Family::cube:
            e.lattice_volume = factorial(n);
            if (variant == 2) e.lattice_volume *= 2;
            if (variant == 3) e.lattice_volume <<= static_cast<unsigned>(n - 1);
            e.flag_count = (std::size_t{1} << n) * factorial_count(n);
            for (std::size_t d = 0; d < n; ++d) e.f_vector.push_back((std::size_t{1} << (n - d)) * binomial(n, d));
            break;
        case Family::cross:
            // 2^n |det| of the half-diagonals: det 1, 2 and 1/2 respectively.
            e.lattice_volume = Integer(1) << static_cast<unsigned>(n);
            if (variant == 2) e.lattice_volume *= 2;
            if (variant == 3) e.lattice_volume /= 2;
            e.flag_count = (std::size_t{1} << n) * factorial_count(n);
            for (std::size_t d = 0; d < n; ++d) e.f_vector.push_back((std::size_t{1} << (d + 1)) * binomial(n, d + 1));
            break;
        case Family::hexagon:
            e.lattice_volume = variant == 1 ? 6 : 18;
            e.flag_count = 12;
            e.f_vector = {6, 6};
            break;
        case Family::cell24:
            // Twice the spanning cube, whose volume is 2·4! or 2^3·4!.
            e.lattice_volume = variant == 1 ? 96 : 384;
            e.flag_count = 1152;
            e.f_vector = {24, 96, 96, 24};
            break;
    }
    return e;
}

}  // namespace

std::string to_string(Family f) {
    switch (f) {
        case Family::segment: return "segment";
        case Family::simplex: return "simplex";
        case Family::cube: return "cube";
        case Family::cross: return "cross";
        case Family::hexagon: return "hexagon";
        case Family::cell24: return "cell24";
    }
    return "unknown";
}

Family family_from_string(const std::string& name) {
    for (Family f : {Family::segment, Family::simplex, Family::cube, Family::cross, Family::hexagon, Family::cell24})
        if (to_string(f) == name) return f;
    throw ArgumentError("unknown family: " + name);
}

std::vector<unsigned> divisors(unsigned m) {
    std::vector<unsigned> d;
    for (unsigned i = 1; i <= m; ++i)
        if (m % i == 0) d.push_back(i);
    return d;
}

std::vector<IntVector> cell24_listed_vertices(unsigned variant) {
    if (variant != 1 && variant != 2) throw ArgumentError("cell24 variant must be 1 or 2");
    const std::vector<IntVector> axes = cell24_axes(variant);
    std::vector<IntVector> v;
    for (const auto& a : axes) {
        v.push_back(scaled(a, 2));
        v.push_back(scaled(a, -2));
    }
    for (unsigned mask = 0; mask < 16; ++mask) {
        IntVector x(4);
        for (unsigned i = 0; i < 4; ++i) x = add(x, scaled(axes[i], (mask >> i) & 1 ? -1 : 1));
        v.push_back(std::move(x));
    }
    return v;
}

CatalogEntry build(Family family, std::size_t n, unsigned variant) {
    auto fail = [&](const std::string& why) {
        return ArgumentError("build(" + to_string(family) + ", n=" + std::to_string(n) + ", variant=" +
                             std::to_string(variant) + "): " + why);
    };
    std::vector<IntVector> points;
    std::optional<CubeFrame> frame;
    std::string schlafli;
    bool regular = true;

    switch (family) {
        case Family::segment:
            if (n != 1 || variant != 1) throw fail("the segment exists only as n=1, variant 1");
            points = {{0}, {1}};
            schlafli = "{}^L";
            break;
        case Family::simplex: {
            if (n < 2) throw fail("simplices need n >= 2");
            if (variant < 1) throw fail("p must be positive");
            points.push_back(IntVector(n));
            for (std::size_t i = 0; i + 1 < n; ++i) points.push_back(unit(n, i));
            IntVector apex(n, variant - 1);
            apex[n - 1] = variant;
            points.push_back(apex);
            regular = (n + 1) % variant == 0;
            schlafli = symbol(std::vector<int>(n - 1, 3), variant, true);
            break;
        }
        case Family::cube: {
            if (variant < 1 || variant > 3) throw fail("cube variant must be 1, 2 or 3");
            if (n < 2 || (variant == 3 && n < 3)) throw fail("dimension too small for this cube");
            frame = cube_frame(n, variant);
            points = parallelepiped_vertices(*frame);
            std::vector<int> s{4};
            s.resize(n - 1, 3);
            schlafli = symbol(s, variant, true);
            break;
        }
        case Family::cross: {
            if (variant < 1 || variant > 3) throw fail("cross variant must be 1, 2 or 3");
            if (n < 3) throw fail("cross-polytopes need n >= 3");
            points = cross_vertices(n, variant);
            std::vector<int> s(n - 2, 3);
            s.push_back(4);
            schlafli = symbol(s, variant, true);
            break;
        }
        case Family::hexagon:
            if (n != 2 || (variant != 1 && variant != 2)) throw fail("hexagons are 2-dimensional, variant 1 or 2");
            points = hexagon_vertices(variant);
            schlafli = symbol({6}, variant, true);
            break;
        case Family::cell24: {
            if (n != 4 || (variant != 1 && variant != 2)) throw fail("24-cells are 4-dimensional, variant 1 or 2");
            // Elementary representative: (listed + s) / 2 with s the sum of the four axes.
            IntVector s(4);
            for (const auto& a : cell24_axes(variant)) s = add(s, a);
            for (const auto& v : cell24_listed_vertices(variant)) {
                IntVector x = add(v, s);
                for (auto& c : x) c /= 2;
                points.push_back(std::move(x));
            }
            schlafli = symbol({3, 4, 3}, variant, true);
            break;
        }
    }
    CatalogEntry e{family, n, variant, Polytope::from_vertices(points, n), expected_for(family, n, variant),
                   regular, schlafli, frame};
    return e;
}

std::vector<CatalogEntry> all_entries(std::size_t max_dim) {
    if (max_dim < 1) throw ArgumentError("all_entries: max_dim must be at least 1");
    std::vector<CatalogEntry> out;
    out.push_back(build(Family::segment, 1, 1));
    for (std::size_t n = 2; n <= max_dim; ++n) {
        for (unsigned p : divisors(static_cast<unsigned>(n + 1))) out.push_back(build(Family::simplex, n, p));
        if (n == 2) {
            for (unsigned v : {1u, 2u}) out.push_back(build(Family::cube, 2, v));
            for (unsigned v : {1u, 2u}) out.push_back(build(Family::hexagon, 2, v));
            continue;
        }
        for (unsigned v : {1u, 2u, 3u}) out.push_back(build(Family::cross, n, v));
        if (n == 4)
            for (unsigned v : {1u, 2u}) out.push_back(build(Family::cell24, 4, v));
        for (unsigned v : {1u, 2u, 3u}) out.push_back(build(Family::cube, n, v));
    }
    return out;
}

Polytope octa_cube(const Polytope& octahedron) {
    const std::size_t n = octahedron.ambient_dim();
    if (!octahedron.is_full_dimensional() || octahedron.vertex_count() != 2 * n)
        throw ArgumentError("octa_cube: not a generalized octahedron (need 2n vertices spanning n dimensions)");
    IntVector twice_centre(n);
    for (const auto& v : octahedron.vertices()) twice_centre = add(twice_centre, v);
    for (auto& c : twice_centre) {
        if (c % static_cast<long>(n) != 0)
            throw ArgumentError("octa_cube: not a generalized octahedron (diagonal midpoints differ)");
        c /= static_cast<long>(n);
    }
    std::vector<IntVector> half_axes;
    std::vector<bool> used(octahedron.vertex_count(), false);
    for (std::size_t i = 0; i < octahedron.vertex_count(); ++i) {
        if (used[i]) continue;
        IntVector partner = scaled(octahedron.vertex(i), -1);
        partner = add(partner, twice_centre);
        const std::size_t j = octahedron.find_vertex(partner);
        if (j == octahedron.vertex_count() || j == i || used[j])
            throw ArgumentError("octa_cube: not a generalized octahedron (vertex without antipode)");
        used[i] = used[j] = true;
        half_axes.push_back(octahedron.vertex(i));
    }
    for (const auto& c : twice_centre)
        if (c % 2 != 0) throw ArgumentError("octa_cube: centre is not a lattice point; use multiple(p, 2) first");
    IntVector centre = twice_centre;
    for (auto& c : centre) c /= 2;
    std::vector<IntVector> axes;
    for (const auto& v : half_axes) {
        IntVector a = v;
        for (std::size_t i = 0; i < n; ++i) a[i] -= centre[i];
        axes.push_back(std::move(a));
    }
    std::vector<IntVector> corners;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        IntVector x = centre;
        for (std::size_t i = 0; i < n; ++i) x = add(x, scaled(axes[i], (mask >> i) & 1 ? -1 : 1));
        corners.push_back(std::move(x));
    }
    return Polytope::from_vertices(corners, n);
}

std::optional<Polytope> derive_cell24(const CatalogEntry& cube) {
    if (cube.family != Family::cube || !cube.cube_frame) throw ArgumentError("derive_cell24: entry is not a cube");
    if (cube.dim != 4) throw DimensionError("derive_cell24: cube must be 4-dimensional");
    const CubeFrame& frame = *cube.cube_frame;
    IntVector sum(4);
    for (const auto& g : frame.generators) sum = add(sum, g);
    for (const auto& c : sum)
        if (c % 2 != 0) return std::nullopt;
    IntVector centre = frame.base;
    for (std::size_t i = 0; i < 4; ++i) centre[i] += sum[i] / 2;
    std::vector<IntVector> points = parallelepiped_vertices(frame);
    for (const auto& g : frame.generators) {
        points.push_back(add(centre, g));
        points.push_back(add(centre, scaled(g, -1)));
    }
    return Polytope::from_vertices(points, 4);
}

Polytope second_family_simplex(std::size_t n, const Integer& p, const IntVector& a) {
    if (n < 3 || a.size() != n) throw DimensionError("second_family_simplex: need n >= 3 and a of length n");
    std::vector<IntVector> points{IntVector(n)};
    for (std::size_t i = 0; i + 2 < n; ++i) points.push_back(unit(n, i));
    IntVector v(n, p - 1);
    v[n - 2] = p;
    v[n - 1] = 0;
    points.push_back(v);
    points.push_back(a);
    return Polytope::from_vertices(points, n);
}

}  // namespace latreg
