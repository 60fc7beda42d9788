#include <doctest.h>

#include <sstream>

#include "latreg/json_io.hpp"

using namespace latreg;

TEST_CASE("polytope round trip") {
    const Polytope p = build(Family::cross, 3, 3).polytope;
    const Json j = to_json(p);
    CHECK(j["ambient_dim"] == 3);
    CHECK(j["vertices"].size() == 6);
    CHECK(polytope_from_json(j) == p);
}

TEST_CASE("input order does not matter and output is canonical") {
    std::istringstream in(R"({"vertices": [[1,1],[0,0],[1,0],[0,1]], "ambient_dim": 2})");
    const Polytope p = read_polytope(in);
    CHECK(to_json(p).dump() == R"({"ambient_dim":2,"vertices":[[0,0],[0,1],[1,0],[1,1]]})");
}

TEST_CASE("large integers are strings") {
    const Integer big = Integer(1) << 80;
    CHECK(to_json(big).is_string());
    CHECK(integer_from_json(to_json(big)) == big);
    CHECK(to_json(Integer(-5)) == -5);
    CHECK(integer_from_json(Json("-12")) == -12);
    const Polytope p = Polytope::from_vertices({{0}, {big}}, 1);
    CHECK(polytope_from_json(to_json(p)) == p);
}

TEST_CASE("malformed input") {
    CHECK_THROWS_AS(polytope_from_json(Json::parse(R"({"vertices": [[0]]})")), ArgumentError);
    CHECK_THROWS_AS(polytope_from_json(Json::parse(R"({"ambient_dim": 0, "vertices": [[0]]})")), DimensionError);
    CHECK_THROWS_AS(polytope_from_json(Json::parse(R"({"ambient_dim": 2, "vertices": [[0, 1, 2]]})")), DimensionError);
    CHECK_THROWS_AS(polytope_from_json(Json::parse(R"({"ambient_dim": 1, "vertices": [[0.5]]})")), ArgumentError);
    CHECK_THROWS_AS(polytope_from_json(Json::parse(R"({"ambient_dim": 1, "vertices": [["1x"]]})")), ArgumentError);
    CHECK_THROWS_AS(polytope_from_json(Json::parse(R"({"ambient_dim": 1, "vertices": []})")), ArgumentError);
    std::istringstream bad("{not json");
    CHECK_THROWS_AS(read_polytope(bad), ArgumentError);
}

TEST_CASE("affine map and catalog export") {
    const AffineMap f(RatMatrix{{1, 1}, {0, 1}}, {3, -2});
    CHECK(to_json(f).dump() == R"({"linear":[[1,1],[0,1]],"translation":[3,-2]})");
    const Json e = to_json(build(Family::simplex, 3, 2));
    CHECK(e["family"] == "simplex");
    CHECK(e["dim"] == 3);
    CHECK(e["variant"] == 2);
    CHECK(e["schlafli"] == "{3,3}^L_2");
    CHECK(e["expected"]["lattice_volume"] == 2);
    CHECK(e["expected"]["flag_count"] == 24);
    CHECK(polytope_from_json(e["polytope"]) == build(Family::simplex, 3, 2).polytope);
}
