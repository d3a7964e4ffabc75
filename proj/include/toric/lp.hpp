// Exact feasibility of mixed strict/non-strict linear systems over Q.
#pragma once

#include "toric/exact.hpp"

#include <optional>
#include <vector>

namespace toric {

enum class Relation { less_equal, less, equal };

struct Constraint {
  RationalVector coeffs;
  Relation relation = Relation::less_equal;
  Rational rhs;
};

class LinearSystem {
 public:
  explicit LinearSystem(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

  void add(RationalVector coeffs, Relation relation, Rational rhs);
  // a.x >= b and a.x > b, stored negated.
  void add_greater_equal(RationalVector coeffs, Rational rhs);
  void add_greater(RationalVector coeffs, Rational rhs);

  /// True iff `x` satisfies every constraint exactly, strict ones strictly.
  bool satisfied_by(const RationalVector& x) const;

 private:
  std::size_t dim_;
  std::vector<Constraint> constraints_;
};

/// Returns a rational point satisfying every constraint (strict ones strictly),
/// or nullopt when none exists.
///
/// Strict rows a.x < b become a.x + t <= b for one shared slack t in [0, 1];
/// t is maximized with an exact two-phase simplex (Bland's rule) and the system
/// is feasible iff the optimum is positive. Single-variable rows -c*x_j <= 0
/// with c > 0 are taken as sign bounds instead of rows.
std::optional<RationalVector> feasible_strict(const LinearSystem& sys);

/// Deletion filter: indices of an irreducible infeasible subset of an
/// infeasible system. Returns an empty vector when `sys` is feasible.
std::vector<std::size_t> infeasible_subsystem(const LinearSystem& sys);

}  // namespace toric
