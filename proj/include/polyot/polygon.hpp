#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstddef>
#include <vector>

#include "polyot/errors.hpp"

namespace polyot {

using Vec2 = Eigen::Vector2d;

// One vertex per row; column 0 is x (rightward), column 1 is y (downward).
// Coordinates are normalized image coordinates, nominally in [0, 1]^2.
using VertexMatrix = Eigen::Matrix<double, Eigen::Dynamic, 2>;

enum class DuplicatePolicy { kCollapse, kKeep };

// Closed polygon given as an ordered vertex list. Exactly-equal consecutive
// vertices (including the wrap-around pair) are collapsed on construction
// unless DuplicatePolicy::kKeep is requested; optimizer internals use kKeep
// so that the vertex count never changes mid-run. A polygon may hold one or
// two vertices — loss functions operate on vertex sets — but area and
// rasterization require at least three. Polygons may be self-intersecting.
class Polygon {
 public:
  Polygon() = default;
  explicit Polygon(VertexMatrix vertices,
                   DuplicatePolicy policy = DuplicatePolicy::kCollapse);

  static Polygon from_pairs(const std::vector<std::array<double, 2>>& points,
                            DuplicatePolicy policy = DuplicatePolicy::kCollapse);

  Eigen::Index size() const { return vertices_.rows(); }
  const VertexMatrix& vertices() const { return vertices_; }
  Vec2 vertex(Eigen::Index i) const { return vertices_.row(i).transpose(); }

  friend bool operator==(const Polygon& lhs, const Polygon& rhs) {
    return lhs.vertices_.rows() == rhs.vertices_.rows() &&
           lhs.vertices_ == rhs.vertices_;
  }

 private:
  VertexMatrix vertices_;
};

// Bijection on {0, .., n-1}; validated on construction.
class VertexPermutation {
 public:
  explicit VertexPermutation(std::vector<Eigen::Index> mapping);

  static VertexPermutation identity(Eigen::Index n);

  VertexPermutation inverse() const;

  Eigen::Index size() const { return static_cast<Eigen::Index>(mapping_.size()); }
  Eigen::Index operator[](Eigen::Index i) const { return mapping_[static_cast<std::size_t>(i)]; }

 private:
  std::vector<Eigen::Index> mapping_;
};

// Signed shoelace area. Positive for counter-clockwise traversal in a y-up
// frame; in this library's y-down image coordinates that corresponds to
// clockwise traversal on screen. Throws DegeneratePolygonError below three
// vertices.
double signed_area(const Polygon& p);

// Length of the closed boundary.
double perimeter(const Polygon& p);

// n points spaced uniformly by arc length along the closed boundary,
// starting at the first vertex. Every output point lies on a boundary
// segment of p. Throws DegeneratePolygonError for a zero-perimeter input.
Polygon resample(const Polygon& p, Eigen::Index n);

// Cyclic rotation of the vertex list by k (any sign); the vertex set is
// unchanged.
Polygon rotate_vertices(const Polygon& p, std::ptrdiff_t k);

// Vertex list reordered so that output vertex i is input vertex sigma[i].
// Throws InvalidPermutationError if sigma's length differs from p's size.
Polygon apply_permutation(const Polygon& p, const VertexPermutation& sigma);

Polygon reversed(const Polygon& p);

Polygon translated(const Polygon& p, const Vec2& offset);

}  // namespace polyot
