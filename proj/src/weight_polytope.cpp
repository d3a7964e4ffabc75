#include "toric/weight_polytope.hpp"

#include "toric/lp.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace toric {

std::string_view to_string(WeightKind kind) {
  return kind == WeightKind::chow ? "chow" : "hurwitz";
}

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::inapplicable:
      return "inapplicable";
  }
  return "unknown";
}

namespace {

// Is x a convex combination of the given points?
bool in_hull(std::span<const IntVector* const> points, std::span<const std::int64_t> x) {
  if (points.empty()) return false;
  const std::size_t m = points.size();
  LinearSystem sys(m);
  for (std::size_t j = 0; j < m; ++j) {
    RationalVector row(m);
    row[j] = -1;
    sys.add(std::move(row), Relation::less_equal, 0);
  }
  sys.add(RationalVector(m, Rational(1)), Relation::equal, 1);
  for (std::size_t c = 0; c < x.size(); ++c) {
    RationalVector row(m);
    for (std::size_t j = 0; j < m; ++j) row[j] = static_cast<long>((*points[j])[c]);
    sys.add(std::move(row), Relation::equal, static_cast<long>(x[c]));
  }
  return feasible_strict(sys).has_value();
}

std::string cells_to_string(const std::vector<Cell>& cells) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < cells.size(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cells[i].size(); ++j) os << (j ? "," : "") << cells[i][j];
    os << ']';
  }
  os << ']';
  return os.str();
}

std::string values_to_string(std::span<const Rational> values) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << to_string(values[i]);
  os << ')';
  return os.str();
}

CharVector characteristic(WeightKind kind, const Triangulation& t, const LatticePolytope& q,
                          const PointConfiguration& a) {
  return kind == WeightKind::chow ? gkz_vector(t) : hurwitz_vector(t, q, a);
}

SupportReport verify_support(const ToricData& data, const Lifting& lambda, WeightKind kind) {
  SupportReport report;
  const Subdivision sub = lower_hull_subdivision(data.points, lambda);
  if (!sub.is_triangulation) {
    report.status = CheckStatus::inapplicable;
    report.detail = "lower hull is not simplicial";
    return report;
  }
  report.induced = make_triangulation(sub.cells, data.points);
  const CharVector v = characteristic(kind, *report.induced, data.polytope, data.points);
  report.triangulation_value = pairing(v.entries, lambda.heights);
  const WeightPolytope& p = kind == WeightKind::chow ? data.chow : data.hurwitz;
  SupportResult sr = support_min(p, lambda.heights);
  report.polytope_min = sr.value;
  report.argmin = std::move(sr.argmin);
  report.status =
      report.polytope_min == report.triangulation_value ? CheckStatus::pass : CheckStatus::fail;
  report.detail = std::string(to_string(kind)) + " min " + report.polytope_min.get_str() +
                  ", T_lambda value " + report.triangulation_value.get_str();
  return report;
}

}  // namespace

WeightPolytope build(WeightKind kind, const LatticePolytope& q, const PointConfiguration& a,
                     std::span<const RegularTriangulation> regular) {
  std::map<IntVector, std::vector<std::size_t>> grouped;
  for (std::size_t id = 0; id < regular.size(); ++id)
    grouped[characteristic(kind, regular[id].triangulation, q, a).entries].push_back(id);

  WeightPolytope p;
  p.kind = kind;
  p.ambient_dim = a.size();
  for (auto& [v, ids] : grouped) p.generators.push_back({v, std::move(ids)});

  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    std::vector<const IntVector*> others;
    for (std::size_t j = 0; j < p.generators.size(); ++j)
      if (j != i) others.push_back(&p.generators[j].vector);
    if (!in_hull(others, p.generators[i].vector)) p.vertices.push_back(p.generators[i].vector);
  }

  std::vector<IntVector> diffs;
  for (std::size_t i = 1; i < p.generators.size(); ++i) {
    IntVector d(p.ambient_dim);
    for (std::size_t c = 0; c < d.size(); ++c)
      d[c] = p.generators[i].vector[c] - p.generators[0].vector[c];
    diffs.push_back(std::move(d));
  }
  p.affine_dim = rank(std::span<const IntVector>(diffs));
  return p;
}

bool contains(const WeightPolytope& p, std::span<const std::int64_t> x) {
  std::vector<const IntVector*> pts;
  for (const auto& g : p.generators) pts.push_back(&g.vector);
  return in_hull(pts, x);
}

SupportResult support_min(const WeightPolytope& p, std::span<const Integer> lambda) {
  SupportResult r;
  bool first = true;
  for (const auto& v : p.vertices) {
    Integer s = pairing(v, lambda);
    if (first || s < r.value) {
      r.value = s;
      r.argmin.clear();
      first = false;
    }
    if (s == r.value) r.argmin.push_back(v);
  }
  return r;
}

ToricData ToricData::compute(LatticePolytope q, const EnumerationOptions& options) {
  PointConfiguration a = lattice_points(q);
  auto regular = enumerate_regular(q, a, options);
  WeightPolytope chow = build(WeightKind::chow, q, a, regular);
  WeightPolytope hurwitz = build(WeightKind::hurwitz, q, a, regular);
  Degrees deg = toric::degrees(q);
  return ToricData{std::move(q),       std::move(a),    deg, std::move(regular),
                   std::move(chow),    std::move(hurwitz)};
}

SupportReport verify_chow_support(const ToricData& data, const Lifting& lambda) {
  return verify_support(data, lambda, WeightKind::chow);
}

SupportReport verify_hurwitz_support(const ToricData& data, const Lifting& lambda) {
  return verify_support(data, lambda, WeightKind::hurwitz);
}

IdentitySides identity_sides(const ToricData& data, const Triangulation& t, const PLFunction& g) {
  if (!g.simplicial() || !(*g.triangulation == t))
    throw std::invalid_argument("identity check needs g piecewise linear on T");
  const auto& q = data.polytope;
  const auto& a = data.points;
  const std::size_t n = q.dim();
  const CharVector eta = gkz_vector(t);
  const CharVector bdry = boundary_vector(t, q, a);
  const CharVector xi = hurwitz_vector(t, q, a);

  IdentitySides s;
  s.gkz_pairing = pairing(eta, g);
  s.gkz_integral = integral_Q(g) * static_cast<long>(factorial(n + 1));
  s.boundary_pairing = pairing(bdry, g);
  s.boundary_integral = integral_boundary(g, q, a) * static_cast<long>(factorial(n));
  s.f_scaled = donaldson_F(g, q, a) * static_cast<long>(factorial(n + 1)) *
               static_cast<long>(data.degrees.chow);
  IntVector combo(eta.entries.size());
  const auto nn = static_cast<std::int64_t>(n);
  for (std::size_t k = 0; k < combo.size(); ++k)
    combo[k] = nn * data.degrees.hurwitz * eta.entries[k] -
               (nn + 1) * data.degrees.chow * xi.entries[k];
  s.hurwitz_pairing = pairing(combo, g.values);
  return s;
}

VerificationReport verify_identities(const ToricData& data, std::size_t trials,
                                     std::uint64_t seed) {
  VerificationReport report;
  const auto& q = data.polytope;
  const auto& a = data.points;
  const std::size_t n = q.dim();
  const auto nn = static_cast<std::int64_t>(n);
  const std::int64_t vol = data.degrees.chow;
  const std::int64_t bvol = boundary_volume(q);
  SeededRng rng(seed);

  // Affine test functions: the constant 1 and each coordinate.
  std::vector<RationalVector> affine(n + 1, RationalVector(a.size()));
  for (std::size_t k = 0; k < a.size(); ++k) {
    affine[0][k] = 1;
    for (std::size_t c = 0; c < n; ++c) affine[c + 1][k] = static_cast<long>(a[k][c]);
  }
  std::vector<Rational> eta_affine, xi_affine;

  auto expect = [&](bool ok, const std::string& what) {
    ++report.checks;
    if (!ok) report.failures.push_back(what);
  };

  for (std::size_t id = 0; id < data.regular.size(); ++id) {
    const Triangulation& t = data.regular[id].triangulation;
    const std::string tag = "T" + std::to_string(id) + "=" + cells_to_string(t.key());
    const CharVector eta = gkz_vector(t);
    const CharVector bdry = boundary_vector(t, q, a);
    const CharVector xi = hurwitz_vector(t, q, a);
    expect(t.total_volume() == vol, tag + ": simplex volumes do not sum to Vol(Q)");
    expect(eta.sum() == (nn + 1) * vol, tag + ": sum of GKZ entries != (n+1) Vol(Q)");
    expect(bdry.sum() == nn * bvol, tag + ": sum of boundary entries != n Vol(dQ)");
    expect(xi.sum() == nn * data.degrees.hurwitz, tag + ": sum of Hurwitz entries != n degHu");

    for (std::size_t f = 0; f <= n; ++f) {
      const Rational pe = pairing(std::span<const std::int64_t>(eta.entries), affine[f]);
      const Rational px = pairing(std::span<const std::int64_t>(xi.entries), affine[f]);
      if (id == 0) {
        eta_affine.push_back(pe);
        xi_affine.push_back(px);
        continue;
      }
      expect(pe == eta_affine[f], tag + ": GKZ pairing with affine function " +
                                      std::to_string(f) + " depends on T");
      expect(px == xi_affine[f], tag + ": Hurwitz pairing with affine function " +
                                     std::to_string(f) + " depends on T");
    }

    for (std::size_t trial = 0; trial < trials; ++trial) {
      RationalVector values(a.size());
      for (auto& v : values)
        v = make_rational(rng.uniform(-20, 20), rng.uniform(1, 12));
      const PLFunction g = pl_on_triangulation(t, a, std::move(values));
      const IdentitySides s = identity_sides(data, t, g);
      const std::string where = tag + " g=" + values_to_string(g.values);
      expect(s.gkz_pairing == s.gkz_integral,
             where + ": (eta,g)=" + to_string(s.gkz_pairing) +
                 " but (n+1)! int_Q g=" + to_string(s.gkz_integral));
      expect(s.boundary_pairing == s.boundary_integral,
             where + ": (eta_bdry,g)=" + to_string(s.boundary_pairing) +
                 " but n! int_dQ g=" + to_string(s.boundary_integral));
      expect(s.f_scaled == s.hurwitz_pairing,
             where + ": (n+1)! Vol F(g)=" + to_string(s.f_scaled) +
                 " but Hurwitz pairing=" + to_string(s.hurwitz_pairing));
    }
  }
  return report;
}

SupportSweep verify_support_random(const ToricData& data, std::size_t count, std::uint64_t seed,
                                   std::int64_t range) {
  SupportSweep sweep;
  SeededRng rng(seed);
  const std::size_t max_attempts = 50 * count;
  while (sweep.applicable < count && sweep.attempts < max_attempts) {
    ++sweep.attempts;
    std::vector<std::int64_t> h(data.points.size());
    for (auto& x : h) x = rng.uniform(-range, 0);
    const Lifting lambda = Lifting::normalized(h);
    const SupportReport chow = verify_chow_support(data, lambda);
    if (chow.status == CheckStatus::inapplicable) continue;
    ++sweep.applicable;
    const SupportReport hu = verify_hurwitz_support(data, lambda);
    std::ostringstream tag;
    tag << "lambda=(";
    for (std::size_t k = 0; k < lambda.heights.size(); ++k)
      tag << (k ? "," : "") << lambda.heights[k].get_str();
    tag << ")";
    ++sweep.report.checks;
    if (chow.status != CheckStatus::pass)
      sweep.report.failures.push_back(tag.str() + ": " + chow.detail);
    ++sweep.report.checks;
    if (hu.status != CheckStatus::pass)
      sweep.report.failures.push_back(tag.str() + ": " + hu.detail);
    ++sweep.report.checks;
    const bool enumerated = std::ranges::binary_search(data.regular, *chow.induced, {},
                                                       &RegularTriangulation::triangulation);
    if (!enumerated)
      sweep.report.failures.push_back(tag.str() + ": T_lambda missing from the enumeration");
  }
  if (sweep.applicable < count)
    sweep.report.failures.push_back("only " + std::to_string(sweep.applicable) +
                                    " simplicial liftings in " +
                                    std::to_string(sweep.attempts) + " draws");
  return sweep;
}

}  // namespace toric
