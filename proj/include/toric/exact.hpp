// Exact arithmetic primitives: GMP-backed integers and rationals, dense
// integer matrices, fraction-free determinants and lattice indices.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

using Integer = mpz_class;
using Rational = mpq_class;  // kept canonical: lowest terms, positive denominator

using IntVector = std::vector<std::int64_t>;
using RationalVector = std::vector<Rational>;

/// Builds num/den in lowest terms. Throws std::invalid_argument on den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Always "p/q", including integers ("3/1"), so the wire format is uniform.
std::string to_string(const Rational& q);
/// Accepts "p/q" or a bare integer "p".
Rational parse_rational(std::string_view text);

/// Narrowing with an overflow check; throws std::overflow_error.
std::int64_t to_int64(const Integer& z);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

  static IntMatrix from_rows(std::span<const IntVector> rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

/// Bareiss fraction-free elimination. A 0x0 matrix has determinant 1.
Integer det(const IntMatrix& m);

/// Index of the lattice spanned by `vectors` inside its saturation, i.e. the
/// gcd of the maximal minors. Throws std::invalid_argument when the vectors
/// are linearly dependent. The empty family has index 1.
Integer lattice_index(std::span<const IntVector> vectors);

/// Rank over Q of the rows.
std::size_t rank(std::span<const RationalVector> rows);
std::size_t rank(std::span<const IntVector> rows);

/// Basis of the right kernel {x : M x = 0} of a rational matrix given by rows
/// with `cols` columns.
std::vector<RationalVector> kernel(std::span<const RationalVector> rows, std::size_t cols);

/// Scales a rational vector by the lcm of its denominators.
std::vector<Integer> clear_denominators(std::span<const Rational> v);

RationalVector to_rational(std::span<const std::int64_t> v);

}  // namespace toric
