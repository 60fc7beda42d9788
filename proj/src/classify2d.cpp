#include <algorithm>
#include <numeric>
#include <set>

#include "latreg/verify.hpp"

namespace latreg {

namespace {

struct Point {
    long x, y;
    auto operator<=>(const Point&) const = default;
};

long cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool primitive_step(const Point& a, const Point& b) {
    return std::gcd(b.x - a.x, b.y - a.y) == 1;
}

/// Grows counterclockwise convex chains from the lexicographically smallest vertex.
/// Every vertex stays strictly left of every edge, so each polygon appears once,
/// as the translation class of its vertex sequence.
class PolygonEnumerator {
public:
    explicit PolygonEnumerator(long radius) {
        for (long x = -radius; x <= radius; ++x)
            for (long y = -radius; y <= radius; ++y) grid_.push_back({x, y});
    }

    std::set<std::vector<Point>> run() {
        for (const Point& start : grid_) {
            path_ = {start};
            extend();
        }
        return std::move(found_);
    }

private:
    bool strictly_left_of_path(const Point& w) const {
        for (std::size_t i = 0; i + 1 < path_.size(); ++i)
            if (cross(path_[i], path_[i + 1], w) <= 0) return false;
        return true;
    }

    bool path_left_of(const Point& a, const Point& b) const {
        for (const Point& v : path_)
            if (v != a && v != b && cross(a, b, v) <= 0) return false;
        return true;
    }

    void extend() {
        const Point first = path_.front();
        const Point cur = path_.back();
        if (path_.size() >= 3 && primitive_step(cur, first) && path_left_of(cur, first)) {
            std::vector<Point> shape;
            for (const Point& v : path_) shape.push_back({v.x - first.x, v.y - first.y});
            found_.insert(std::move(shape));
        }
        for (const Point& w : grid_) {
            if (!(first < w) || !primitive_step(cur, w)) continue;
            if (std::find(path_.begin(), path_.end(), w) != path_.end()) continue;
            if (!strictly_left_of_path(w) || !path_left_of(cur, w)) continue;
            path_.push_back(w);
            extend();
            path_.pop_back();
        }
    }

    std::vector<Point> grid_;
    std::vector<Point> path_;
    std::set<std::vector<Point>> found_;
};

/// det(incoming edge, outgoing edge) at each corner is invariant under lattice-affine
/// maps, so a polygon whose symmetries reach every vertex has equal corner determinants.
bool equal_corners(const std::vector<Point>& shape) {
    const std::size_t k = shape.size();
    long first = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const long c = cross(shape[i], shape[(i + 1) % k], shape[(i + 2) % k]);
        if (i == 0)
            first = c;
        else if (c != first)
            return false;
    }
    return true;
}

}  // namespace

ClassifyReport run_classify_2d(long radius) {
    if (radius < 2) throw ArgumentError("radius must be at least 2");
    ClassifyReport report;
    report.radius = radius;

    const auto shapes = PolygonEnumerator(radius).run();
    report.examined = shapes.size();
    for (const auto& shape : shapes) {
        if (!equal_corners(shape)) continue;
        std::vector<IntVector> points;
        for (const Point& v : shape) points.push_back({v.x, v.y});
        const Polytope p = Polytope::from_vertices(points, 2);
        if (!is_elementary(p) || !is_lattice_regular(p).regular) continue;
        ++report.passing;
        if (p.vertex_count() == 5) ++report.regular_pentagons;
        auto known = std::find_if(report.classes.begin(), report.classes.end(), [&](const CongruenceClass& c) {
            return are_congruent(c.representative, p).has_value();
        });
        if (known != report.classes.end())
            ++known->members;
        else
            report.classes.push_back({p, 1, {}});
    }

    std::vector<CatalogEntry> polygons;
    for (auto& e : all_entries(2))
        if (e.dim == 2) polygons.push_back(std::move(e));
    std::set<std::size_t> matched;
    bool one_each = true;
    for (auto& c : report.classes) {
        for (std::size_t k = 0; k < polygons.size(); ++k) {
            if (!are_congruent(c.representative, polygons[k].polytope)) continue;
            c.catalog_matches.push_back(to_string(polygons[k].family) + "/" + std::to_string(polygons[k].variant));
            matched.insert(k);
        }
        one_each = one_each && c.catalog_matches.size() == 1;
    }
    report.passed = one_each && report.classes.size() == polygons.size() && matched.size() == polygons.size() &&
                    report.regular_pentagons == 0;
    return report;
}

Json to_json(const ClassifyReport& r) {
    Json j;
    j["radius"] = r.radius;
    j["examined"] = r.examined;
    j["passing"] = r.passing;
    j["regular_pentagons"] = r.regular_pentagons;
    Json classes = Json::array();
    for (const auto& c : r.classes) {
        Json x;
        x["representative"] = to_json(c.representative);
        x["members"] = c.members;
        x["catalog_matches"] = c.catalog_matches;
        classes.push_back(std::move(x));
    }
    j["classes"] = std::move(classes);
    j["passed"] = r.passed;
    return j;
}

}  // namespace latreg
