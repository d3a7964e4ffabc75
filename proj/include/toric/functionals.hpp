// Piecewise-linear functions on Q and their exact functionals: integrals over
// Q and its boundary, the toric Aubin functional L, Donaldson's functional F,
// the toric Chow/Hurwitz degrees and the pairing with vectors indexed by A.
#pragma once

#include "toric/char_vectors.hpp"
#include "toric/exact.hpp"
#include "toric/lattice_polytope.hpp"
#include "toric/triangulation.hpp"

#include <optional>
#include <span>

namespace toric {

struct PLFunction {
  std::vector<Cell> cells;                     // carrier subdivision
  std::optional<Triangulation> triangulation;  // set iff every cell is a simplex
  RationalVector values;                       // g(w_k) for every point of A

  bool simplicial() const { return triangulation.has_value(); }
};

/// The T-piecewise-linear function taking `vertex_values[k]` at each used
/// point w_k. Entries at unused points are ignored and replaced by the
/// interpolated value.
PLFunction pl_on_triangulation(const Triangulation& t, const PointConfiguration& a,
                               RationalVector vertex_values);

/// g_lambda, the lower envelope of the lifted points. Requires max lambda = 0.
/// When the lower hull is not simplicial the function is carried on the
/// coarser subdivision and `triangulation` is empty.
PLFunction pl_from_lifting(const PointConfiguration& a, const Lifting& lambda);

/// Value at `x` using the affine interpolation on simplex `simplex_index` of
/// the carrier triangulation. Throws if x is outside that simplex.
Rational evaluate_on_simplex(const PLFunction& g, const PointConfiguration& a,
                             std::size_t simplex_index, std::span<const Rational> x);

/// Lebesgue integral over Q, via per-simplex vertex averages.
Rational integral_Q(const PLFunction& g);

/// Integral over the boundary against the lattice measure nu
/// (dx = +-dnu ^ dh for h = <x, u> + c with u primitive).
Rational integral_boundary(const PLFunction& g, const LatticePolytope& q,
                           const PointConfiguration& a);

/// L(g) = integral of g over Q.
Rational aubin_L(const PLFunction& g);

/// F(g) = int_{dQ} g dnu - n * Vol(dQ) / Vol(Q) * int_Q g dx.
Rational donaldson_F(const PLFunction& g, const LatticePolytope& q, const PointConfiguration& a);

/// (x, g) = sum_k x_k g(w_k). Throws std::invalid_argument on length mismatch.
Rational pairing(std::span<const std::int64_t> x, std::span<const Rational> g);
Rational pairing(std::span<const Rational> x, std::span<const Rational> g);
Integer pairing(std::span<const std::int64_t> x, std::span<const Integer> lambda);
inline Rational pairing(const CharVector& x, const PLFunction& g) {
  return pairing(x.entries, g.values);
}

struct Degrees {
  std::int64_t chow = 0;     // Vol(Q)
  std::int64_t hurwitz = 0;  // (n+1) Vol(Q) - Vol(dQ)
};

Degrees degrees(const LatticePolytope& q);

std::int64_t factorial(std::size_t n);

}  // namespace toric
