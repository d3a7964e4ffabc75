#include "toric/triangulation.hpp"

#include "placing.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace toric {

namespace {

Cell without(const Cell& c, std::size_t drop_value) {
  Cell out;
  out.reserve(c.size());
  for (auto v : c)
    if (v != drop_value) out.push_back(v);
  return out;
}

bool is_subset(const Cell& small, const Cell& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    f(static_cast<const std::vector<std::size_t>&>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// (n+1) x (n+1) matrix with rows (w_i, 1) for the given cell.
IntMatrix homogenized(const PointConfiguration& a, const Cell& cell) {
  const std::size_t n = a.dim();
  IntMatrix m(cell.size(), n + 1);
  for (std::size_t r = 0; r < cell.size(); ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = static_cast<long>(a[cell[r]][c]);
    m(r, n) = 1;
  }
  return m;
}

// Affine dependence coefficients on `points` (kernel of the homogenized
// columns), when it is one-dimensional.
std::optional<RationalVector> unique_dependence(const PointConfiguration& a, const Cell& points) {
  const std::size_t n = a.dim();
  std::vector<RationalVector> rows(n + 1, RationalVector(points.size()));
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (std::size_t c = 0; c < n; ++c) rows[c][j] = static_cast<long>(a[points[j]][c]);
    rows[n][j] = 1;
  }
  auto ker = kernel(rows, points.size());
  if (ker.size() != 1) return std::nullopt;
  return ker.front();
}

}  // namespace

Triangulation::Triangulation(std::vector<Simplex> simplices, std::size_t num_points)
    : simplices_(std::move(simplices)), num_points_(num_points) {
  std::sort(simplices_.begin(), simplices_.end());
}

std::vector<std::size_t> Triangulation::used_points() const {
  std::set<std::size_t> used;
  for (const auto& s : simplices_) used.insert(s.vertices.begin(), s.vertices.end());
  return {used.begin(), used.end()};
}

bool Triangulation::uses(std::size_t point) const {
  return std::any_of(simplices_.begin(), simplices_.end(),
                     [&](const Simplex& s) { return s.contains_vertex(point); });
}

std::vector<Cell> Triangulation::faces(std::size_t k) const {
  std::set<Cell> out;
  for (const auto& s : simplices_) {
    for_each_subset(s.vertices.size(), k + 1, [&](const std::vector<std::size_t>& idx) {
      Cell f;
      for (auto i : idx) f.push_back(s.vertices[i]);
      out.insert(std::move(f));
    });
  }
  return {out.begin(), out.end()};
}

std::vector<Wall> Triangulation::interior_walls() const {
  std::map<Cell, std::vector<std::size_t>> apexes;
  for (const auto& s : simplices_)
    for (auto v : s.vertices) apexes[without(s.vertices, v)].push_back(v);
  std::vector<Wall> walls;
  for (auto& [face, ap] : apexes)
    if (ap.size() == 2) walls.push_back({face, ap[0], ap[1]});
  return walls;
}

std::int64_t Triangulation::total_volume() const {
  std::int64_t v = 0;
  for (const auto& s : simplices_) v += s.volume;
  return v;
}

std::vector<Cell> Triangulation::key() const {
  std::vector<Cell> k;
  k.reserve(simplices_.size());
  for (const auto& s : simplices_) k.push_back(s.vertices);
  return k;
}

Triangulation make_triangulation(const std::vector<Cell>& cells, const PointConfiguration& a) {
  std::vector<Simplex> simplices;
  simplices.reserve(cells.size());
  for (const auto& c : cells) {
    for (auto i : c)
      if (i >= a.size()) throw std::invalid_argument("simplex vertex index out of range");
    simplices.push_back(Simplex::make(c, a));
  }
  return Triangulation(std::move(simplices), a.size());
}

Triangulation placing_triangulation(const PointConfiguration& a,
                                    std::span<const std::size_t> order) {
  return make_triangulation(detail::placing_simplices(a.points(), order), a);
}

Triangulation placing_triangulation(const PointConfiguration& a) {
  std::vector<std::size_t> order(a.size());
  std::iota(order.begin(), order.end(), 0);
  return placing_triangulation(a, order);
}

Lifting Lifting::normalized(std::vector<Integer> heights) {
  if (!heights.empty()) {
    const Integer top = *std::max_element(heights.begin(), heights.end());
    for (auto& h : heights) h -= top;
  }
  return Lifting{std::move(heights)};
}

Lifting Lifting::normalized(std::span<const std::int64_t> heights) {
  std::vector<Integer> h;
  h.reserve(heights.size());
  for (auto x : heights) h.emplace_back(static_cast<long>(x));
  return normalized(std::move(h));
}

Subdivision lower_hull_subdivision(const PointConfiguration& a, std::span<const Integer> heights) {
  if (heights.size() != a.size())
    throw std::invalid_argument("lifting length does not match the point configuration");
  const std::size_t n = a.dim();
  std::map<Cell, RationalVector> cells;

  for_each_subset(a.size(), n + 1, [&](const std::vector<std::size_t>& subset) {
    const Cell cell(subset.begin(), subset.end());
    for (const auto& [known, aff] : cells)
      if (is_subset(cell, known)) return;
    const IntMatrix m = homogenized(a, cell);
    const Integer d = det(m);
    if (d == 0) return;
    // Cramer: coefficient j of (a_1..a_n, b) solves m * coef = heights|cell.
    std::vector<Integer> num(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
      IntMatrix mj = m;
      for (std::size_t r = 0; r <= n; ++r) mj(r, j) = heights[cell[r]];
      num[j] = det(mj);
    }
    Cell face;
    for (std::size_t k = 0; k < a.size(); ++k) {
      // d * h(w_k)
      Integer value = num[n];
      for (std::size_t c = 0; c < n; ++c) value += num[c] * static_cast<long>(a[k][c]);
      const Integer gap = heights[k] * d - value;  // sign(d) * (lambda_k - h(w_k))
      const int s = sgn(gap) * sgn(d);
      if (s < 0) return;
      if (s == 0) face.push_back(k);
    }
    RationalVector aff(n + 1);
    for (std::size_t j = 0; j <= n; ++j) aff[j] = make_rational(num[j], d);
    cells.emplace(std::move(face), std::move(aff));
  });

  Subdivision out;
  out.is_triangulation = true;
  for (auto& [cell, aff] : cells) {
    out.is_triangulation = out.is_triangulation && cell.size() == n + 1;
    out.cells.push_back(cell);
    out.affine.push_back(aff);
  }
  return out;
}

std::optional<RationalVector> barycentric(const PointConfiguration& a, const Cell& simplex,
                                          std::span<const std::int64_t> x) {
  const std::size_t n = a.dim();
  // Solve sum_i beta_i (w_i, 1) = (x, 1) by Cramer on the transposed system.
  IntMatrix m(n + 1, n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t c = 0; c < n; ++c) m(c, i) = static_cast<long>(a[simplex[i]][c]);
    m(n, i) = 1;
  }
  const Integer d = det(m);
  if (d == 0) throw std::invalid_argument("barycentric: degenerate simplex");
  RationalVector beta(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    IntMatrix mi = m;
    for (std::size_t c = 0; c < n; ++c) mi(c, i) = static_cast<long>(x[c]);
    mi(n, i) = 1;
    beta[i] = make_rational(det(mi), d);
    if (beta[i] < 0) return std::nullopt;
  }
  return beta;
}

LinearSystem cone_system(const Triangulation& t, const PointConfiguration& a) {
  const std::size_t dim = a.size();
  LinearSystem sys(dim);
  for (const auto& wall : t.interior_walls()) {
    Cell pts = wall.face;
    pts.push_back(wall.apex_left);
    pts.push_back(wall.apex_right);
    std::sort(pts.begin(), pts.end());
    auto dep = unique_dependence(a, pts);
    if (!dep) throw std::logic_error("cone_system: wall is not a circuit of full rank");
    const auto apex_pos = static_cast<std::size_t>(
        std::find(pts.begin(), pts.end(), wall.apex_left) - pts.begin());
    const Rational scale = (*dep)[apex_pos] > 0 ? Rational(1) : Rational(-1);
    RationalVector row(dim);
    for (std::size_t j = 0; j < pts.size(); ++j) row[pts[j]] = scale * (*dep)[j];
    sys.add_greater(std::move(row), 0);
  }
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (t.uses(k)) continue;
    bool placed = false;
    for (const auto& s : t.simplices()) {
      auto beta = barycentric(a, s.vertices, a[k]);
      if (!beta) continue;
      RationalVector row(dim);
      row[k] = 1;
      for (std::size_t i = 0; i < s.vertices.size(); ++i) row[s.vertices[i]] -= (*beta)[i];
      sys.add_greater(std::move(row), 0);
      placed = true;
      break;
    }
    if (!placed) throw std::invalid_argument("cone_system: point not covered by the triangulation");
  }
  return sys;
}

namespace {

std::optional<Lifting> regular_witness(const LinearSystem& sys) {
  auto x = feasible_strict(sys);
  if (!x) return std::nullopt;
  return Lifting::normalized(clear_denominators(*x));
}

}  // namespace

RegularityCertificate is_regular(const Triangulation& t, const PointConfiguration& a) {
  RegularityCertificate cert;
  cert.system = cone_system(t, a);
  if (auto w = regular_witness(cert.system)) {
    cert.regular = true;
    cert.witness = std::move(*w);
  } else {
    cert.infeasible = infeasible_subsystem(cert.system);
  }
  return cert;
}

Cell Circuit::support() const {
  Cell z;
  std::merge(positive.begin(), positive.end(), negative.begin(), negative.end(),
             std::back_inserter(z));
  return z;
}

std::vector<Circuit> circuits(const PointConfiguration& a) {
  const std::size_t n = a.dim();
  std::vector<Circuit> out;
  for (std::size_t size = 2; size <= n + 2 && size <= a.size(); ++size) {
    for_each_subset(a.size(), size, [&](const std::vector<std::size_t>& subset) {
      const Cell z(subset.begin(), subset.end());
      auto dep = unique_dependence(a, z);
      if (!dep) return;
      Circuit c;
      for (std::size_t j = 0; j < z.size(); ++j) {
        if ((*dep)[j] > 0) c.positive.push_back(z[j]);
        else if ((*dep)[j] < 0) c.negative.push_back(z[j]);
        else return;  // not minimal
      }
      if (c.positive.front() > c.negative.front()) c = c.reversed();
      out.push_back(std::move(c));
    });
  }
  return out;
}

std::optional<Triangulation> flip(const Triangulation& t, const PointConfiguration& a,
                                  const Circuit& circuit) {
  const Cell z = circuit.support();
  std::optional<std::set<Cell>> link;
  std::set<Cell> removed;
  for (auto i : circuit.positive) {
    const Cell tau = without(z, i);
    std::set<Cell> li;
    for (const auto& s : t.simplices()) {
      if (!is_subset(tau, s.vertices)) continue;
      Cell rho;
      std::set_difference(s.vertices.begin(), s.vertices.end(), z.begin(), z.end(),
                          std::back_inserter(rho));
      li.insert(std::move(rho));
      removed.insert(s.vertices);
    }
    if (li.empty()) return std::nullopt;
    if (!link) link = std::move(li);
    else if (*link != li) return std::nullopt;
  }

  std::vector<Simplex> next;
  for (const auto& s : t.simplices())
    if (!removed.contains(s.vertices)) next.push_back(s);
  for (auto j : circuit.negative) {
    const Cell tau = without(z, j);
    for (const auto& rho : *link) {
      Cell s;
      std::merge(tau.begin(), tau.end(), rho.begin(), rho.end(), std::back_inserter(s));
      next.push_back(Simplex::make(std::move(s), a));
    }
  }
  Triangulation result(std::move(next), t.num_points());
  if (result.total_volume() != t.total_volume())
    throw std::logic_error("flip changed the covered volume");
  return result;
}

std::vector<Flip> flips(const Triangulation& t, const PointConfiguration& a,
                        std::span<const Circuit> all_circuits) {
  std::vector<Flip> out;
  for (const auto& c : all_circuits) {
    for (const auto& oriented : {c, c.reversed()}) {
      if (auto r = flip(t, a, oriented)) out.push_back({oriented, std::move(*r)});
    }
  }
  return out;
}

std::vector<Flip> flips(const Triangulation& t, const PointConfiguration& a) {
  const auto cs = circuits(a);
  return flips(t, a, cs);
}

std::vector<RegularTriangulation> enumerate_regular(const LatticePolytope& q,
                                                    const PointConfiguration& a,
                                                    const EnumerationOptions& options) {
  if (q.dim() != a.dim())
    throw std::invalid_argument("point configuration and polytope dimensions differ");
  const auto start = std::chrono::steady_clock::now();
  auto check_budget = [&](std::size_t found) {
    if (options.time_budget &&
        std::chrono::steady_clock::now() - start > *options.time_budget)
      throw IncompleteEnumeration("incomplete enumeration: time budget exhausted", found);
  };

  std::vector<std::size_t> order = options.seed_order;
  if (order.empty()) {
    order.resize(a.size());
    std::iota(order.begin(), order.end(), 0);
  }
  const auto cs = circuits(a);

  std::vector<RegularTriangulation> found;
  std::map<std::vector<Cell>, bool> seen;  // key -> regular
  std::vector<std::size_t> frontier;       // indices into `found`

  Triangulation seed = placing_triangulation(a, order);
  auto seed_witness = regular_witness(cone_system(seed, a));
  if (!seed_witness) throw std::logic_error("placing triangulation failed its regularity check");
  seen.emplace(seed.key(), true);
  found.push_back({std::move(seed), std::move(*seed_witness)});
  frontier.push_back(0);

  for (std::size_t head = 0; head < frontier.size(); ++head) {
    check_budget(found.size());
    const Triangulation current = found[frontier[head]].triangulation;
    for (auto& f : flips(current, a, cs)) {
      auto key = f.result.key();
      if (seen.contains(key)) continue;
      auto witness = regular_witness(cone_system(f.result, a));
      seen.emplace(std::move(key), witness.has_value());
      if (!witness) continue;
      if (found.size() + 1 > options.max_triangulations)
        throw IncompleteEnumeration("incomplete enumeration: more than " +
                                        std::to_string(options.max_triangulations) +
                                        " regular triangulations",
                                    found.size());
      found.push_back({std::move(f.result), std::move(*witness)});
      frontier.push_back(found.size() - 1);
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
    return x.triangulation < y.triangulation;
  });
  return found;
}

}  // namespace toric
