// Full-dimensional lattice polytopes, their lattice point configurations and
// lattice-normalized volumes.
#pragma once

#include "toric/exact.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace toric {

using Point = IntVector;

/// {x : <x, normal> + offset = 0}; the polytope lies on the side where it is >= 0.
struct Facet {
  IntVector normal;  // primitive, inward
  std::int64_t offset = 0;

  std::int64_t evaluate(std::span<const std::int64_t> x) const;
  friend bool operator==(const Facet&, const Facet&) = default;
  friend auto operator<=>(const Facet&, const Facet&) = default;
};

class LatticePolytope {
 public:
  /// H-description and extreme points from an integer point list. Throws
  /// std::invalid_argument when the points do not span their ambient space.
  static LatticePolytope from_vertices(std::span<const Point> points);

  std::size_t dim() const { return dim_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }

  bool contains(std::span<const std::int64_t> x) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Point> vertices_;  // lexicographic
  std::vector<Facet> facets_;    // sorted
};

inline LatticePolytope facets_from_vertices(std::span<const Point> points) {
  return LatticePolytope::from_vertices(points);
}

/// The lattice points A = {w_0, ..., w_N} in lexicographic order.
class PointConfiguration {
 public:
  explicit PointConfiguration(std::vector<Point> points);

  std::size_t size() const { return points_.size(); }
  std::size_t dim() const { return points_.empty() ? 0 : points_.front().size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }

  /// Index of `p`, or size() when absent.
  std::size_t index_of(const Point& p) const;

 private:
  std::vector<Point> points_;
  std::map<Point, std::size_t> index_;
};

PointConfiguration lattice_points(const LatticePolytope& q);

/// Vertex indices into a configuration, sorted ascending, with the cached
/// lattice-normalized volume of their convex hull.
struct Simplex {
  std::vector<std::size_t> vertices;
  std::int64_t volume = 0;

  /// Throws std::invalid_argument when the points are affinely dependent.
  static Simplex make(std::vector<std::size_t> vertices, const PointConfiguration& a);

  std::size_t dim() const { return vertices.size() - 1; }
  bool contains_vertex(std::size_t i) const;

  friend bool operator==(const Simplex& x, const Simplex& y) { return x.vertices == y.vertices; }
  friend auto operator<=>(const Simplex& x, const Simplex& y) { return x.vertices <=> y.vertices; }
};

/// Lattice volume in the affine hull of the points: |det| for a full
/// simplex, the lattice index of the edge vectors in general, 1 for a point.
std::int64_t normalized_volume(std::span<const Point> vertices);
std::int64_t normalized_volume(const std::vector<std::size_t>& vertices,
                               const PointConfiguration& a);

/// n! times the Euclidean volume.
std::int64_t volume(const LatticePolytope& q);
/// Sum over facets of the lattice-normalized facet volumes.
std::int64_t boundary_volume(const LatticePolytope& q);
/// Lattice-normalized (n-1)-volume of one facet of q.
std::int64_t facet_volume(const LatticePolytope& q, const Facet& f);

/// True iff every vertex of the (n-1)-simplex lies on one common facet of q.
/// Throws std::invalid_argument for a simplex of any other dimension.
bool is_massive(const Simplex& s, const LatticePolytope& q, const PointConfiguration& a);

struct VertexCone {
  Point vertex;
  std::vector<IntVector> edge_directions;  // primitive
  std::int64_t determinant = 0;            // 0 unless exactly n edges
  bool smooth = false;
};

struct DelzantReport {
  bool delzant = false;
  std::vector<VertexCone> vertices;
};

DelzantReport is_delzant(const LatticePolytope& q);

}  // namespace toric
