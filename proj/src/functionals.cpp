#include "toric/functionals.hpp"

#include <algorithm>
#include <stdexcept>

namespace toric {

std::int64_t factorial(std::size_t n) {
  std::int64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<std::int64_t>(i);
  return f;
}

PLFunction pl_on_triangulation(const Triangulation& t, const PointConfiguration& a,
                               RationalVector vertex_values) {
  if (vertex_values.size() != a.size())
    throw std::invalid_argument("PL values must have one entry per point of A");
  PLFunction g;
  g.cells = t.key();
  g.values = std::move(vertex_values);
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (t.uses(k)) continue;
    bool placed = false;
    for (const auto& s : t.simplices()) {
      auto beta = barycentric(a, s.vertices, a[k]);
      if (!beta) continue;
      Rational v = 0;
      for (std::size_t i = 0; i < s.vertices.size(); ++i) v += (*beta)[i] * g.values[s.vertices[i]];
      g.values[k] = v;
      placed = true;
      break;
    }
    if (!placed) throw std::invalid_argument("point of A not covered by the triangulation");
  }
  g.triangulation = t;
  return g;
}

PLFunction pl_from_lifting(const PointConfiguration& a, const Lifting& lambda) {
  if (lambda.heights.size() != a.size())
    throw std::invalid_argument("lifting length does not match the point configuration");
  if (!lambda.heights.empty() &&
      *std::max_element(lambda.heights.begin(), lambda.heights.end()) != 0)
    throw std::invalid_argument("lifting must be normalized to max height 0");
  Subdivision sub = lower_hull_subdivision(a, lambda);
  const std::size_t n = a.dim();

  // A convex PL function is the maximum of its affine pieces.
  PLFunction g;
  g.values.resize(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    std::optional<Rational> best;
    for (const auto& aff : sub.affine) {
      Rational v = aff[n];
      for (std::size_t c = 0; c < n; ++c) v += aff[c] * static_cast<long>(a[k][c]);
      if (!best || v > *best) best = v;
    }
    g.values[k] = *best;
  }
  g.cells = sub.cells;
  if (sub.is_triangulation) g.triangulation = make_triangulation(sub.cells, a);
  return g;
}

Rational evaluate_on_simplex(const PLFunction& g, const PointConfiguration& a,
                             std::size_t simplex_index, std::span<const Rational> x) {
  if (!g.simplicial()) throw std::invalid_argument("evaluation needs a simplicial carrier");
  const auto& s = g.triangulation->simplices().at(simplex_index);
  const std::size_t n = a.dim();
  // Barycentric coordinates from the homogenized system (w_i, 1) beta = (x, 1).
  std::vector<RationalVector> rows(n + 1, RationalVector(n + 2));
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t c = 0; c < n; ++c) rows[c][i] = static_cast<long>(a[s.vertices[i]][c]);
    rows[n][i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) rows[c][n + 1] = -x[c];
  rows[n][n + 1] = -1;
  auto ker = kernel(rows, n + 2);
  if (ker.size() != 1 || ker.front()[n + 1] == 0)
    throw std::logic_error("evaluate_on_simplex: degenerate simplex");
  const Rational scale = 1 / ker.front()[n + 1];
  Rational v = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    const Rational beta = ker.front()[i] * scale;
    if (beta < 0) throw std::invalid_argument("point lies outside the simplex");
    v += beta * g.values[s.vertices[i]];
  }
  return v;
}

Rational integral_Q(const PLFunction& g) {
  if (!g.simplicial()) throw std::invalid_argument("integral_Q needs a simplicial carrier");
  const auto n = g.triangulation->dim();
  Rational total = 0;
  for (const auto& s : g.triangulation->simplices()) {
    Rational sum = 0;
    for (auto i : s.vertices) sum += g.values[i];
    total += sum * static_cast<long>(s.volume);
  }
  return total / static_cast<long>(factorial(n + 1));
}

Rational integral_boundary(const PLFunction& g, const LatticePolytope& q,
                           const PointConfiguration& a) {
  if (!g.simplicial()) throw std::invalid_argument("integral_boundary needs a simplicial carrier");
  Rational total = 0;
  for (const auto& tau : massive_faces(*g.triangulation, q, a)) {
    Rational sum = 0;
    for (auto i : tau.vertices) sum += g.values[i];
    total += sum * static_cast<long>(tau.volume);
  }
  return total / static_cast<long>(factorial(q.dim()));
}

Rational aubin_L(const PLFunction& g) { return integral_Q(g); }

Rational donaldson_F(const PLFunction& g, const LatticePolytope& q, const PointConfiguration& a) {
  const auto n = static_cast<long>(q.dim());
  const Rational ratio =
      make_rational(static_cast<long>(boundary_volume(q)), static_cast<long>(volume(q)));
  return integral_boundary(g, q, a) - n * ratio * integral_Q(g);
}

Rational pairing(std::span<const std::int64_t> x, std::span<const Rational> g) {
  if (x.size() != g.size()) throw std::invalid_argument("pairing: length mismatch");
  Rational s = 0;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k] != 0) s += g[k] * static_cast<long>(x[k]);
  return s;
}

Rational pairing(std::span<const Rational> x, std::span<const Rational> g) {
  if (x.size() != g.size()) throw std::invalid_argument("pairing: length mismatch");
  Rational s = 0;
  for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * g[k];
  return s;
}

Integer pairing(std::span<const std::int64_t> x, std::span<const Integer> lambda) {
  if (x.size() != lambda.size()) throw std::invalid_argument("pairing: length mismatch");
  Integer s = 0;
  for (std::size_t k = 0; k < x.size(); ++k) s += lambda[k] * static_cast<long>(x[k]);
  return s;
}

Degrees degrees(const LatticePolytope& q) {
  const std::int64_t vol = volume(q);
  return {vol, static_cast<std::int64_t>(q.dim() + 1) * vol - boundary_volume(q)};
}

}  // namespace toric
