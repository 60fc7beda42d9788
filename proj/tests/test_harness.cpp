#include <doctest.h>

#include <set>

#include "latreg/verify.hpp"
#include "oracles.hpp"

using namespace latreg;

namespace {

using P = std::pair<long long, long long>;

long long cross(const P& o, const P& a, const P& b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

/// Vertices of the convex hull of a sorted point list, counterclockwise from the first.
std::vector<P> hull(const std::vector<P>& p) {
    std::vector<P> h(2 * p.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
        h[k++] = p[i];
    }
    for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
        h[k++] = p[i];
    }
    h.resize(k - 1);
    return h;
}

/// Translation classes of point sets in strictly convex position (at least 3 points)
/// inside the grid whose hull edges are primitive, by growing subsets in index order.
std::set<std::vector<P>> convex_subsets(long radius) {
    std::vector<P> grid;
    for (long x = -radius; x <= radius; ++x)
        for (long y = -radius; y <= radius; ++y) grid.push_back({x, y});
    std::set<std::vector<P>> out;
    std::vector<P> chosen;
    std::function<void(std::size_t)> grow = [&](std::size_t from) {
        for (std::size_t i = from; i < grid.size(); ++i) {
            chosen.push_back(grid[i]);
            bool convex = chosen.size() < 3 || hull(chosen).size() == chosen.size();
            if (convex) {
                if (chosen.size() >= 3) {
                    const auto h = hull(chosen);
                    bool primitive = true;
                    for (std::size_t j = 0; j < h.size(); ++j) {
                        const auto& a = h[j];
                        const auto& b = h[(j + 1) % h.size()];
                        if (std::gcd(b.first - a.first, b.second - a.second) != 1) primitive = false;
                    }
                    if (primitive) {
                        std::vector<P> shape;
                        for (const auto& v : chosen) shape.push_back({v.first - chosen[0].first, v.second - chosen[0].second});
                        out.insert(shape);
                    }
                }
                grow(i + 1);
            }
            chosen.pop_back();
        }
    };
    grow(0);
    return out;
}

}  // namespace

TEST_CASE("verify-theorem in dimension 2") {
    const VerifyReport r = run_verify_theorem(2);
    CHECK(r.passed);
    CHECK(r.entries.size() == 7);
    REQUIRE(r.congruence.size() == 1);
    CHECK(r.congruence[0].dim == 2);
    CHECK(r.congruence[0].pairs.size() == 15);
    for (const auto& p : r.congruence[0].pairs) CHECK_FALSE(p.congruent);
    for (const auto& c : r.controls) CHECK(c.passed);
}

TEST_CASE("verify-theorem in dimension 4") {
    const VerifyReport r = run_verify_theorem(4, {2, false});
    CHECK(r.passed);
    CHECK(r.entries.size() == 26);
    for (const auto& e : r.entries) {
        CAPTURE(e.schlafli);
        CHECK(e.passed);
        if (e.family == Family::cell24) CHECK(e.group_order == 1152);
    }
    CHECK(r.controls.size() == 8);
}

TEST_CASE("verify-theorem argument range") {
    CHECK_THROWS_AS(run_verify_theorem(0), ArgumentError);
    CHECK_THROWS_AS(run_verify_theorem(7), ArgumentError);
}

TEST_CASE("verify-theorem reports are byte-identical across runs and worker counts") {
    const std::string one = to_json(run_verify_theorem(4, {1, false})).dump();
    CHECK(to_json(run_verify_theorem(4, {1, false})).dump() == one);
    CHECK(to_json(run_verify_theorem(4, {3, false})).dump() == one);
    CHECK(to_json(run_verify_theorem(4, {8, true})).dump() == one);
    CHECK(one.find("timings") == std::string::npos);
    CHECK(to_json(run_verify_theorem(2), true).dump().find("timings_seconds") != std::string::npos);
}

TEST_CASE("classify-2d finds the six catalog polygons") {
    for (long radius : {2L, 3L}) {
        const ClassifyReport r = run_classify_2d(radius);
        CAPTURE(radius);
        CHECK(r.passed);
        CHECK(r.classes.size() == 6);
        CHECK(r.regular_pentagons == 0);
        std::set<std::string> matches;
        for (const auto& c : r.classes) {
            CHECK(c.catalog_matches.size() == 1);
            matches.insert(c.catalog_matches.front());
            CHECK(is_elementary(c.representative));
            CHECK(is_lattice_regular(c.representative).regular);
        }
        CHECK(matches.size() == 6);
        for (std::size_t i = 0; i < r.classes.size(); ++i)
            for (std::size_t j = i + 1; j < r.classes.size(); ++j)
                CHECK_FALSE(are_congruent(r.classes[i].representative, r.classes[j].representative));
    }
    CHECK_THROWS_AS(run_classify_2d(1), ArgumentError);
}

TEST_CASE("classify-2d enumeration matches subset search") {
    const auto shapes = convex_subsets(2);
    const ClassifyReport r = run_classify_2d(2);
    CHECK(r.examined == shapes.size());
    // Full regularity test on every shape, without the classifier's corner pre-filter.
    std::size_t passing = 0;
    for (const auto& s : shapes) {
        std::vector<IntVector> pts;
        for (const auto& v : s) pts.push_back({v.first, v.second});
        const Polytope p = Polytope::from_vertices(pts, 2);
        if (is_elementary(p) && is_lattice_regular(p).regular) ++passing;
    }
    CHECK(r.passing == passing);
}
