#pragma once

// Constructors for the lattice-regular families: the unit segment, the simplices
// {3^(n-1)}_p, three cube types, three cross-polytope types, two hexagons and two
// 24-cells, plus the cube/cross-polytope and cube/24-cell constructions.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "latreg/polytope.hpp"

namespace latreg {

enum class Family { segment, simplex, cube, cross, hexagon, cell24 };

std::string to_string(Family f);
/// Inverse of to_string; throws ArgumentError on unknown names.
Family family_from_string(const std::string& name);

/// Base point and edge generators of a lattice parallelepiped.
struct CubeFrame {
    IntVector base;
    std::vector<IntVector> generators;
};

struct ExpectedInvariants {
    Integer lattice_volume;
    std::size_t flag_count = 0;
    std::vector<std::size_t> f_vector;
};

struct CatalogEntry {
    Family family;
    std::size_t dim;
    /// p for simplices, 1..3 for cubes and crosses, 1..2 for hexagons and 24-cells.
    unsigned variant;
    Polytope polytope;
    ExpectedInvariants expected;
    /// False only for simplices whose p does not divide n+1.
    bool expected_regular = true;
    std::string schlafli;
    std::optional<CubeFrame> cube_frame;
};

/// Throws ArgumentError for parameters outside the family's range.
CatalogEntry build(Family family, std::size_t n, unsigned variant);

/// Every family member of dimension 1..max_dim, ordered by dimension, then
/// simplices, cross-polytopes, 24-cells, cubes (polygons: triangles, squares, hexagons).
std::vector<CatalogEntry> all_entries(std::size_t max_dim);

/// Positive divisors of m in increasing order.
std::vector<unsigned> divisors(unsigned m);

/// The 24 vertices as printed in the classification (centred at the origin). These
/// are all even, i.e. a translate of the 2-multiple of build(cell24, 4, variant).
std::vector<IntVector> cell24_listed_vertices(unsigned variant);

/// Parallelepiped spanned by a generalized octahedron: A ± (V_1 - A) ± ... ± (V_n - A).
/// The common midpoint A of the diagonals must be a lattice point.
Polytope octa_cube(const Polytope& octahedron);

/// Cube vertices plus O + (v_1+v_2+v_3+v_4)/2 ± v_i, when those 8 points are lattice points.
std::optional<Polytope> derive_cell24(const CatalogEntry& cube);

/// Vertices O, e_1, ..., e_{n-2}, (p-1)(e_1+...+e_{n-2}) + p e_{n-1}, a.
Polytope second_family_simplex(std::size_t n, const Integer& p, const IntVector& a);

}  // namespace latreg
