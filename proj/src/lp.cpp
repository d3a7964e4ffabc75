#include "toric/lp.hpp"

#include <stdexcept>
#include <utility>

namespace toric {

void LinearSystem::add(RationalVector coeffs, Relation relation, Rational rhs) {
  if (coeffs.size() != dim_)
    throw std::invalid_argument("constraint dimension does not match the system");
  constraints_.push_back({std::move(coeffs), relation, std::move(rhs)});
}

void LinearSystem::add_greater_equal(RationalVector coeffs, Rational rhs) {
  for (auto& c : coeffs) c = -c;
  add(std::move(coeffs), Relation::less_equal, -rhs);
}

void LinearSystem::add_greater(RationalVector coeffs, Rational rhs) {
  for (auto& c : coeffs) c = -c;
  add(std::move(coeffs), Relation::less, -rhs);
}

bool LinearSystem::satisfied_by(const RationalVector& x) const {
  if (x.size() != dim_) return false;
  for (const auto& con : constraints_) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < dim_; ++j) lhs += con.coeffs[j] * x[j];
    switch (con.relation) {
      case Relation::less_equal:
        if (!(lhs <= con.rhs)) return false;
        break;
      case Relation::less:
        if (!(lhs < con.rhs)) return false;
        break;
      case Relation::equal:
        if (lhs != con.rhs) return false;
        break;
    }
  }
  return true;
}

namespace {

// Dense tableau for: minimize c.x subject to A x = b, x >= 0, b >= 0.
class Simplex {
 public:
  Simplex(std::vector<RationalVector> a, RationalVector b)
      : a_(std::move(a)), b_(std::move(b)) {}

  // Phase 1 with one artificial per row. Returns false when infeasible.
  bool find_feasible_basis() {
    const std::size_t m = a_.size();
    num_real_ = a_.empty() ? 0 : a_.front().size();
    for (std::size_t i = 0; i < m; ++i) {
      a_[i].resize(num_real_ + m);
      a_[i][num_real_ + i] = 1;
    }
    basis_.resize(m);
    for (std::size_t i = 0; i < m; ++i) basis_[i] = num_real_ + i;

    RationalVector cost(num_real_ + m);
    for (std::size_t i = 0; i < m; ++i) cost[num_real_ + i] = 1;
    optimize(cost, num_real_ + m);

    Rational infeasibility = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (basis_[i] >= num_real_) infeasibility += b_[i];
    if (infeasibility > 0) return false;

    // Drive zero-level artificials out; rows with no real entry are redundant.
    for (std::size_t i = 0; i < a_.size();) {
      if (basis_[i] < num_real_) {
        ++i;
        continue;
      }
      std::size_t col = num_real_;
      for (std::size_t j = 0; j < num_real_; ++j)
        if (a_[i][j] != 0) {
          col = j;
          break;
        }
      if (col == num_real_) {
        a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(i));
        b_.erase(b_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        continue;
      }
      pivot(i, col);
      ++i;
    }
    for (auto& row : a_) row.resize(num_real_);
    return true;
  }

  // Phase 2 over the real columns; the caller guarantees boundedness.
  void minimize(const RationalVector& cost) { optimize(cost, num_real_); }

  RationalVector solution() const {
    RationalVector x(num_real_);
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i] < num_real_) x[basis_[i]] = b_[i];
    return x;
  }

 private:
  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = 1 / a_[row][col];
    for (auto& x : a_[row]) x *= inv;
    b_[row] *= inv;
    for (std::size_t r = 0; r < a_.size(); ++r) {
      if (r == row || a_[r][col] == 0) continue;
      const Rational f = a_[r][col];
      for (std::size_t j = 0; j < a_[r].size(); ++j)
        if (a_[row][j] != 0) a_[r][j] -= f * a_[row][j];
      b_[r] -= f * b_[row];
    }
    basis_[row] = col;
  }

  // Bland's rule; columns >= `width` are never entered.
  void optimize(const RationalVector& cost, std::size_t width) {
    std::vector<bool> in_basis(a_.empty() ? width : a_.front().size(), false);
    while (true) {
      std::fill(in_basis.begin(), in_basis.end(), false);
      for (auto j : basis_) in_basis[j] = true;
      std::size_t entering = width;
      for (std::size_t j = 0; j < width && entering == width; ++j) {
        if (in_basis[j]) continue;
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < a_.size(); ++i)
          if (a_[i][j] != 0) reduced -= cost[basis_[i]] * a_[i][j];
        if (reduced < 0) entering = j;
      }
      if (entering == width) return;
      std::size_t leaving = a_.size();
      Rational best_ratio;
      for (std::size_t i = 0; i < a_.size(); ++i) {
        if (a_[i][entering] <= 0) continue;
        Rational ratio = b_[i] / a_[i][entering];
        if (leaving == a_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving == a_.size()) throw std::logic_error("simplex: unbounded objective");
      pivot(leaving, entering);
    }
  }

  std::vector<RationalVector> a_;
  RationalVector b_;
  std::vector<std::size_t> basis_;
  std::size_t num_real_ = 0;
};

// A row of the form -c*x_j <= 0 with c > 0.
std::optional<std::size_t> sign_bound(const Constraint& con) {
  if (con.relation != Relation::less_equal || con.rhs != 0) return std::nullopt;
  std::optional<std::size_t> var;
  for (std::size_t j = 0; j < con.coeffs.size(); ++j) {
    if (con.coeffs[j] == 0) continue;
    if (var || con.coeffs[j] > 0) return std::nullopt;
    var = j;
  }
  return var;
}

}  // namespace

std::optional<RationalVector> feasible_strict(const LinearSystem& sys) {
  const std::size_t d = sys.dim();
  std::vector<bool> nonnegative(d, false);
  std::vector<const Constraint*> rows;
  for (const auto& con : sys.constraints()) {
    if (auto var = sign_bound(con)) {
      nonnegative[*var] = true;
      continue;
    }
    rows.push_back(&con);
  }

  // Column layout: x_j (or x_j+, x_j-), then t, then one slack per inequality row.
  std::vector<std::size_t> pos_col(d), neg_col(d, SIZE_MAX);
  std::size_t cols = 0;
  for (std::size_t j = 0; j < d; ++j) {
    pos_col[j] = cols++;
    if (!nonnegative[j]) neg_col[j] = cols++;
  }
  const std::size_t t_col = cols++;
  std::size_t slack_count = 1;  // t <= 1
  for (const auto* con : rows)
    if (con->relation != Relation::equal) ++slack_count;
  const std::size_t first_slack = cols;
  cols += slack_count;

  std::vector<RationalVector> a;
  RationalVector b;
  std::size_t slack = first_slack;
  auto push_row = [&](RationalVector row, Rational rhs) {
    if (rhs < 0) {
      for (auto& x : row) x = -x;
      rhs = -rhs;
    }
    a.push_back(std::move(row));
    b.push_back(std::move(rhs));
  };
  for (const auto* con : rows) {
    RationalVector row(cols);
    for (std::size_t j = 0; j < d; ++j) {
      row[pos_col[j]] = con->coeffs[j];
      if (neg_col[j] != SIZE_MAX) row[neg_col[j]] = -con->coeffs[j];
    }
    if (con->relation == Relation::less) row[t_col] = 1;
    if (con->relation != Relation::equal) row[slack++] = 1;
    push_row(std::move(row), con->rhs);
  }
  {
    RationalVector row(cols);
    row[t_col] = 1;
    row[slack++] = 1;
    push_row(std::move(row), 1);
  }

  Simplex lp(std::move(a), std::move(b));
  if (!lp.find_feasible_basis()) return std::nullopt;
  RationalVector cost(cols);
  cost[t_col] = -1;
  lp.minimize(cost);
  const RationalVector y = lp.solution();
  if (y[t_col] <= 0) return std::nullopt;

  RationalVector x(d);
  for (std::size_t j = 0; j < d; ++j) {
    x[j] = y[pos_col[j]];
    if (neg_col[j] != SIZE_MAX) x[j] -= y[neg_col[j]];
  }
  if (!sys.satisfied_by(x)) throw std::logic_error("feasible_strict: witness check failed");
  return x;
}

std::vector<std::size_t> infeasible_subsystem(const LinearSystem& sys) {
  if (feasible_strict(sys)) return {};
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < sys.constraints().size(); ++i) kept.push_back(i);
  for (std::size_t pos = 0; pos < kept.size();) {
    LinearSystem trial(sys.dim());
    for (std::size_t k = 0; k < kept.size(); ++k) {
      if (k == pos) continue;
      const auto& con = sys.constraints()[kept[k]];
      trial.add(con.coeffs, con.relation, con.rhs);
    }
    if (!feasible_strict(trial)) {
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(pos));
    } else {
      ++pos;
    }
  }
  return kept;
}

}  // namespace toric
