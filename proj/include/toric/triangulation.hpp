// Triangulations of (Q, A): placing seeds, lower-hull subdivisions induced by
// liftings, regularity certificates, bistellar flips and flip-graph
// enumeration of the regular triangulations.
#pragma once

#include "toric/exact.hpp"
#include "toric/lattice_polytope.hpp"
#include "toric/lp.hpp"

#include <chrono>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace toric {

using Cell = std::vector<std::size_t>;

/// Shared (n-1)-face of two maximal simplices, with the opposite vertices.
struct Wall {
  Cell face;
  std::size_t apex_left = 0;
  std::size_t apex_right = 0;
};

class Triangulation {
 public:
  Triangulation() = default;
  /// Simplices are sorted into canonical order.
  Triangulation(std::vector<Simplex> simplices, std::size_t num_points);

  const std::vector<Simplex>& simplices() const { return simplices_; }
  std::size_t num_points() const { return num_points_; }
  std::size_t dim() const { return simplices_.empty() ? 0 : simplices_.front().dim(); }

  /// Sigma_T(0) as point indices, ascending.
  std::vector<std::size_t> used_points() const;
  bool uses(std::size_t point) const;
  /// Sigma_T(k): all k-dimensional faces, sorted, without repetition.
  std::vector<Cell> faces(std::size_t k) const;
  std::vector<Wall> interior_walls() const;
  std::int64_t total_volume() const;

  /// Lexicographically sorted list of sorted index tuples.
  std::vector<Cell> key() const;

  friend bool operator==(const Triangulation& x, const Triangulation& y) {
    return x.simplices_ == y.simplices_;
  }
  friend auto operator<=>(const Triangulation& x, const Triangulation& y) {
    return x.simplices_ <=> y.simplices_;
  }

 private:
  std::vector<Simplex> simplices_;
  std::size_t num_points_ = 0;
};

/// Builds a triangulation from index tuples; volumes are computed from `a`.
Triangulation make_triangulation(const std::vector<Cell>& cells, const PointConfiguration& a);

/// Placing triangulation for an insertion order (a permutation of a subset
/// of the indices of `a`). Without an order, lexicographic.
Triangulation placing_triangulation(const PointConfiguration& a,
                                    std::span<const std::size_t> order);
Triangulation placing_triangulation(const PointConfiguration& a);

/// Integer heights, one per point of A, normalized so the maximum is 0.
struct Lifting {
  std::vector<Integer> heights;

  static Lifting normalized(std::vector<Integer> heights);
  static Lifting normalized(std::span<const std::int64_t> heights);
  friend bool operator==(const Lifting&, const Lifting&) = default;
};

/// Projection of the lower faces of conv{(w_k, lambda_k)}. A cell lists every
/// point whose lifted copy lies on the face; `affine[c]` holds (a_1..a_n, b)
/// with a.x + b equal to the face's height function.
struct Subdivision {
  std::vector<Cell> cells;
  std::vector<RationalVector> affine;
  bool is_triangulation = false;
};

Subdivision lower_hull_subdivision(const PointConfiguration& a, std::span<const Integer> heights);
inline Subdivision lower_hull_subdivision(const PointConfiguration& a, const Lifting& lambda) {
  return lower_hull_subdivision(a, lambda.heights);
}

/// Barycentric coordinates of `x` in a full-dimensional simplex, or nullopt
/// when x lies outside it.
std::optional<RationalVector> barycentric(const PointConfiguration& a, const Cell& simplex,
                                          std::span<const std::int64_t> x);

/// Strict linear system in the heights whose solutions form the open cone
/// C(T): strict convexity across every interior wall, and every unused point
/// lifted strictly above the interpolated height.
LinearSystem cone_system(const Triangulation& t, const PointConfiguration& a);

struct RegularityCertificate {
  bool regular = false;
  Lifting witness;                        // when regular
  LinearSystem system{0};                 // the cone system that was solved
  std::vector<std::size_t> infeasible;    // rows of an irreducible infeasible subset
};

RegularityCertificate is_regular(const Triangulation& t, const PointConfiguration& a);

/// Minimal affinely dependent subset, split by the signs of its dependence.
struct Circuit {
  Cell positive;
  Cell negative;

  Circuit reversed() const { return {negative, positive}; }
  Cell support() const;
  friend bool operator==(const Circuit&, const Circuit&) = default;
};

/// Every circuit of A once, in one orientation.
std::vector<Circuit> circuits(const PointConfiguration& a);

struct Flip {
  Circuit circuit;  // the cells {Z \ {i} : i in positive} are replaced
  Triangulation result;
};

std::vector<Flip> flips(const Triangulation& t, const PointConfiguration& a,
                        std::span<const Circuit> all_circuits);
std::vector<Flip> flips(const Triangulation& t, const PointConfiguration& a);

/// Flip of `t` across an oriented circuit, when supported.
std::optional<Triangulation> flip(const Triangulation& t, const PointConfiguration& a,
                                  const Circuit& circuit);

struct EnumerationOptions {
  std::size_t max_triangulations = 1'000'000;
  std::optional<std::chrono::duration<double>> time_budget;
  std::vector<std::size_t> seed_order;  // empty: lexicographic placing
};

struct RegularTriangulation {
  Triangulation triangulation;
  Lifting witness;
};

class IncompleteEnumeration : public std::runtime_error {
 public:
  IncompleteEnumeration(const std::string& what, std::size_t found)
      : std::runtime_error(what), found_(found) {}
  std::size_t found() const { return found_; }

 private:
  std::size_t found_;
};

/// Breadth-first search of the flip graph restricted to regular
/// triangulations, seeded by a placing triangulation. Output sorted by
/// canonical form. Throws IncompleteEnumeration when a cap is exceeded.
std::vector<RegularTriangulation> enumerate_regular(const LatticePolytope& q,
                                                    const PointConfiguration& a,
                                                    const EnumerationOptions& options = {});

}  // namespace toric
