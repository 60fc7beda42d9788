#pragma once

// Lattice polytopes given by their vertices, with the exact face lattice and
// the lattice-normalized measures (volume, length, distance).

#include <compare>
#include <cstddef>
#include <vector>

#include "latreg/exactalg.hpp"

namespace latreg {

/// Sorted list of vertex indices into Polytope::vertices().
using VertexSet = std::vector<std::size_t>;

class Polytope {
public:
    /// Canonicalizes the input: duplicates and non-extreme points are removed,
    /// the remaining vertices are sorted lexicographically.
    static Polytope from_vertices(const std::vector<IntVector>& points, std::size_t ambient_dim);

    std::size_t ambient_dim() const noexcept { return ambient_dim_; }
    /// Dimension of the affine hull.
    std::size_t dim() const noexcept { return dim_; }
    bool is_full_dimensional() const noexcept { return dim_ == ambient_dim_; }

    const std::vector<IntVector>& vertices() const noexcept { return vertices_; }
    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    const IntVector& vertex(std::size_t i) const { return vertices_[i]; }

    /// Index of `point` among the vertices, or vertex_count() when absent.
    std::size_t find_vertex(const IntVector& point) const;

    friend bool operator==(const Polytope& a, const Polytope& b) {
        return a.ambient_dim_ == b.ambient_dim_ && a.vertices_ == b.vertices_;
    }

private:
    Polytope(std::size_t ambient_dim, std::size_t dim, std::vector<IntVector> vertices)
        : ambient_dim_(ambient_dim), dim_(dim), vertices_(std::move(vertices)) {}

    std::size_t ambient_dim_;
    std::size_t dim_;
    std::vector<IntVector> vertices_;
};

/// Facet inequality `offset + normal · x >= 0`, tight exactly on the facet.
struct Halfspace {
    Integer offset;
    IntVector normal;
};

/// Graded face lattice. faces[d] lists the d-dimensional faces; faces[dim] is the
/// single improper face. boundary[d][j] lists the indices in faces[d-1] of the facets
/// of faces[d][j] (empty for d = 0).
struct FaceLattice {
    std::size_t dim = 0;
    std::vector<std::vector<VertexSet>> faces;
    std::vector<std::vector<std::vector<std::size_t>>> boundary;
    /// Facet inequalities in ambient coordinates, parallel to faces[dim-1]; for
    /// lower-dimensional polytopes these hold with equality along the affine hull.
    std::vector<Halfspace> facet_inequalities;

    /// f_0 ... f_{dim-1}.
    std::vector<std::size_t> f_vector() const;
    /// Index of a face with exactly this vertex set in faces[d], or faces[d].size().
    std::size_t find_face(std::size_t d, const VertexSet& vertices) const;
};

/// One face index per dimension 0..k, strictly nested.
struct Flag {
    std::vector<std::size_t> faces;

    friend bool operator==(const Flag&, const Flag&) = default;
    friend auto operator<=>(const Flag&, const Flag&) = default;
};

/// Coordinates of a polytope in a basis of the lattice of its affine hull.
struct LatticeChart {
    Polytope local;            ///< full-dimensional in dimension k
    IntVector origin;          ///< ambient point mapped to the local origin
    IntMatrix basis;           ///< ambient_dim x k; columns generate aff(p) ∩ Z^n - origin
    IntMatrix coordinates;     ///< k x ambient_dim integer left inverse of basis
    std::vector<std::size_t> local_index;  ///< vertex i of p is vertex local_index[i] of local
    bool identity = false;     ///< p was already full-dimensional; local == p

    IntVector to_local(const IntVector& ambient_point) const;
    IntVector to_ambient(const IntVector& local_point) const;
};

/// Rewrites p in a lattice basis of its affine hull. Full-dimensional inputs come back unchanged.
/// Zero-dimensional inputs have no chart; that case throws DimensionError.
LatticeChart hull_coords(const Polytope& p);

FaceLattice face_lattice(const Polytope& p);

/// All maximal chains, sorted lexicographically by (face_0, face_1, ..., face_k).
std::vector<Flag> flags(const FaceLattice& lattice);
std::vector<Flag> flags(const Polytope& p);

/// k! times the volume measured against the lattice of the affine hull.
Integer lattice_volume(const Polytope& p);
Integer lattice_volume(const Polytope& p, const FaceLattice& lattice);

/// Lattice length of the segment between two lattice points.
Integer lattice_length(const IntVector& a, const IntVector& b);

/// Lattice distance from a lattice point to the affine hull of a codimension-one polytope.
Integer lattice_distance(const IntVector& point, const Polytope& facet);

/// Scales vertex coordinates by t >= 1.
Polytope multiple(const Polytope& p, const Integer& t);

/// gcd of all vertex differences equals 1 (a single point is elementary).
bool is_elementary(const Polytope& p);

/// Lattice points strictly inside a full-dimensional polytope.
std::vector<IntVector> interior_lattice_points(const Polytope& p);
std::vector<IntVector> interior_lattice_points(const Polytope& p, const FaceLattice& lattice);

/// An integer functional whose maximum over p is attained exactly on faces[d][j].
IntVector supporting_functional(const Polytope& p, const FaceLattice& lattice, std::size_t d, std::size_t j);

/// Arithmetic mean of the listed vertices.
RatVector centroid(const Polytope& p, const VertexSet& face);

}  // namespace latreg
