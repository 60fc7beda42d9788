#include "latreg/json_io.hpp"

#include <fstream>
#include <istream>
#include <limits>

namespace latreg {

Json to_json(const Integer& x) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return Json(x.convert_to<long long>());
    return Json(x.str());
}

Json to_json(const Rational& x) {
    if (denominator(x) == 1) return to_json(Integer(numerator(x)));
    return Json(x.str());
}

Json to_json(const IntVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

Json to_json(const Polytope& p) {
    Json vertices = Json::array();
    for (const auto& v : p.vertices()) vertices.push_back(to_json(v));
    Json j;
    j["ambient_dim"] = p.ambient_dim();
    j["vertices"] = std::move(vertices);
    return j;
}

Json to_json(const AffineMap& f) {
    Json linear = Json::array();
    for (std::size_t i = 0; i < f.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < f.dim(); ++k) row.push_back(to_json(f.linear()(i, k)));
        linear.push_back(std::move(row));
    }
    Json translation = Json::array();
    for (const auto& x : f.translation()) translation.push_back(to_json(x));
    Json j;
    j["linear"] = std::move(linear);
    j["translation"] = std::move(translation);
    return j;
}

Json to_json(const CatalogEntry& e) {
    Json j;
    j["family"] = to_string(e.family);
    j["dim"] = e.dim;
    j["variant"] = e.variant;
    j["schlafli"] = e.schlafli;
    j["polytope"] = to_json(e.polytope);
    j["expected"] = {{"lattice_volume", to_json(e.expected.lattice_volume)}, {"flag_count", e.expected.flag_count}};
    return j;
}

Json to_json(const std::vector<CatalogEntry>& entries) {
    Json a = Json::array();
    for (const auto& e : entries) a.push_back(to_json(e));
    return a;
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Integer(j.get<unsigned long long>());
        return Integer(j.get<long long>());
    }
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
            throw ArgumentError("not an integer: \"" + s + "\"");
        return Integer(s[0] == '+' ? s.substr(1) : s);
    }
    throw ArgumentError("expected an integer, got " + j.dump());
}

Polytope polytope_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("ambient_dim") || !j.contains("vertices"))
        throw ArgumentError("polytope JSON needs \"ambient_dim\" and \"vertices\"");
    const Json& dim = j["ambient_dim"];
    if (!dim.is_number_integer() || dim.get<long long>() < 1)
        throw DimensionError("ambient_dim must be a positive integer");
    const auto n = static_cast<std::size_t>(dim.get<long long>());
    const Json& vs = j["vertices"];
    if (!vs.is_array()) throw ArgumentError("\"vertices\" must be an array");
    std::vector<IntVector> points;
    for (const auto& v : vs) {
        if (!v.is_array()) throw ArgumentError("each vertex must be an array of integers");
        IntVector x;
        for (const auto& c : v) x.push_back(integer_from_json(c));
        points.push_back(std::move(x));
    }
    return Polytope::from_vertices(points, n);
}

Polytope read_polytope(std::istream& in) {
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ArgumentError(std::string("invalid JSON: ") + e.what());
    }
    return polytope_from_json(j);
}

Polytope read_polytope_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_polytope(in);
}

}  // namespace latreg
