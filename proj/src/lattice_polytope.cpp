#include "toric/lattice_polytope.hpp"

#include "placing.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace toric {

namespace {

std::int64_t gcd_of(std::span<const std::int64_t> v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  return g;
}

// Normal of the hyperplane through n affinely independent points in Z^n
// (generalized cross product of the edge vectors), or empty if dependent.
IntVector hyperplane_normal(std::span<const Point> pts) {
  const std::size_t n = pts.front().size();
  std::vector<IntVector> edges;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    IntVector e(n);
    for (std::size_t c = 0; c < n; ++c) e[c] = pts[i][c] - pts[0][c];
    edges.push_back(std::move(e));
  }
  IntVector normal(n);
  bool nonzero = false;
  for (std::size_t drop = 0; drop < n; ++drop) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 0; r + 1 < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c)
        if (c != drop) minor(r, cc++) = static_cast<long>(edges[r][c]);
    }
    const Integer m = det(minor);
    normal[drop] = to_int64((drop % 2 == 0) ? m : Integer(-m));
    nonzero = nonzero || normal[drop] != 0;
  }
  if (!nonzero) return {};
  const std::int64_t g = gcd_of(normal);
  for (auto& x : normal) x /= g;
  return normal;
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

// Unimodular V with first row u, for primitive u. Then (V x)_0 = <u, x> and
// the remaining coordinates are lattice coordinates on {<u, x> = const}.
IntMatrix unimodular_with_first_row(const IntVector& u) {
  const std::size_t n = u.size();
  std::vector<Integer> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<long>(u[i]);
  IntMatrix v = IntMatrix::identity(n);  // inverse of the column-operation matrix
  while (true) {
    std::size_t piv = n;
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (w[i] == 0) continue;
      ++nonzero;
      if (piv == n || abs(w[i]) < abs(w[piv])) piv = i;
    }
    if (piv == n) throw std::invalid_argument("zero facet normal");
    if (nonzero == 1) {
      if (piv != 0) {
        std::swap(w[0], w[piv]);
        for (std::size_t c = 0; c < n; ++c) std::swap(v(0, c), v(piv, c));
      }
      if (w[0] == -1) {
        w[0] = 1;
        for (std::size_t c = 0; c < n; ++c) v(0, c) = -v(0, c);
      }
      if (w[0] != 1) throw std::invalid_argument("facet normal is not primitive");
      return v;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (j == piv || w[j] == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), w[j].get_mpz_t(), w[piv].get_mpz_t());
      w[j] -= q * w[piv];
      // column j -= q * column piv, so row piv of the inverse += q * row j
      for (std::size_t c = 0; c < n; ++c) v(piv, c) += q * v(j, c);
    }
  }
}

}  // namespace

std::int64_t Facet::evaluate(std::span<const std::int64_t> x) const {
  std::int64_t s = offset;
  for (std::size_t i = 0; i < normal.size(); ++i) s += normal[i] * x[i];
  return s;
}

LatticePolytope LatticePolytope::from_vertices(std::span<const Point> input) {
  if (input.empty()) throw std::invalid_argument("polytope needs at least one point");
  const std::size_t n = input.front().size();
  if (n == 0) throw std::invalid_argument("polytope points must have positive dimension");
  for (const auto& p : input)
    if (p.size() != n) throw std::invalid_argument("points have inconsistent dimensions");

  std::vector<Point> pts(input.begin(), input.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::vector<IntVector> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    IntVector d(n);
    for (std::size_t c = 0; c < n; ++c) d[c] = pts[i][c] - pts[0][c];
    diffs.push_back(std::move(d));
  }
  const std::size_t affine_rank = rank(std::span<const IntVector>(diffs));
  if (affine_rank != n)
    throw std::invalid_argument("degenerate polytope: points span an affine space of dimension " +
                                std::to_string(affine_rank) + " in Z^" + std::to_string(n));

  std::set<Facet> facets;
  for_each_subset(pts.size(), n, [&](const std::vector<std::size_t>& subset) {
    std::vector<Point> chosen;
    for (auto i : subset) chosen.push_back(pts[i]);
    IntVector normal = hyperplane_normal(chosen);
    if (normal.empty()) return;
    Facet f{normal, 0};
    f.offset = -f.evaluate(chosen.front());
    bool pos = false, neg = false;
    for (const auto& p : pts) {
      const auto v = f.evaluate(p);
      pos = pos || v > 0;
      neg = neg || v < 0;
    }
    if (pos && neg) return;
    if (neg) {
      for (auto& x : f.normal) x = -x;
      f.offset = -f.offset;
    }
    facets.insert(std::move(f));
  });

  LatticePolytope q;
  q.dim_ = n;
  q.facets_.assign(facets.begin(), facets.end());
  for (const auto& p : pts) {
    std::vector<IntVector> tight;
    for (const auto& f : q.facets_)
      if (f.evaluate(p) == 0) tight.push_back(f.normal);
    if (rank(std::span<const IntVector>(tight)) == n) q.vertices_.push_back(p);
  }
  return q;
}

bool LatticePolytope::contains(std::span<const std::int64_t> x) const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Facet& f) { return f.evaluate(x) >= 0; });
}

PointConfiguration::PointConfiguration(std::vector<Point> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  for (std::size_t i = 0; i < points_.size(); ++i) index_.emplace(points_[i], i);
}

std::size_t PointConfiguration::index_of(const Point& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? points_.size() : it->second;
}

PointConfiguration lattice_points(const LatticePolytope& q) {
  const std::size_t n = q.dim();
  Point lo = q.vertices().front(), hi = q.vertices().front();
  for (const auto& v : q.vertices())
    for (std::size_t c = 0; c < n; ++c) {
      lo[c] = std::min(lo[c], v[c]);
      hi[c] = std::max(hi[c], v[c]);
    }
  std::vector<Point> pts;
  Point x = lo;
  while (true) {
    if (q.contains(x)) pts.push_back(x);
    std::size_t c = n;
    while (c > 0) {
      --c;
      if (x[c] < hi[c]) {
        ++x[c];
        break;
      }
      x[c] = lo[c];
      if (c == 0) return PointConfiguration(std::move(pts));
    }
  }
}

Simplex Simplex::make(std::vector<std::size_t> vertices, const PointConfiguration& a) {
  std::sort(vertices.begin(), vertices.end());
  Simplex s{std::move(vertices), 0};
  s.volume = normalized_volume(s.vertices, a);
  return s;
}

bool Simplex::contains_vertex(std::size_t i) const {
  return std::binary_search(vertices.begin(), vertices.end(), i);
}

std::int64_t normalized_volume(std::span<const Point> vertices) {
  if (vertices.empty()) throw std::invalid_argument("empty simplex");
  std::vector<IntVector> edges;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    IntVector e(vertices[0].size());
    for (std::size_t c = 0; c < e.size(); ++c) e[c] = vertices[i][c] - vertices[0][c];
    edges.push_back(std::move(e));
  }
  try {
    return to_int64(lattice_index(edges));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("simplex vertices are affinely dependent");
  }
}

std::int64_t normalized_volume(const std::vector<std::size_t>& vertices,
                               const PointConfiguration& a) {
  std::vector<Point> pts;
  pts.reserve(vertices.size());
  for (auto i : vertices) pts.push_back(a[i]);
  return normalized_volume(pts);
}

std::int64_t volume(const LatticePolytope& q) {
  const auto& v = q.vertices();
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::int64_t total = 0;
  for (const auto& s : detail::placing_simplices(v, order)) {
    std::vector<Point> pts;
    for (auto i : s) pts.push_back(v[i]);
    total += normalized_volume(pts);
  }
  return total;
}

std::int64_t facet_volume(const LatticePolytope& q, const Facet& f) {
  const std::size_t n = q.dim();
  if (n == 1) return 1;
  const IntMatrix basis = unimodular_with_first_row(f.normal);
  std::vector<IntVector> projected;
  for (const auto& v : q.vertices()) {
    if (f.evaluate(v) != 0) continue;
    IntVector y(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      Integer s = 0;
      for (std::size_t c = 0; c < n; ++c) s += basis(r, c) * static_cast<long>(v[c]);
      y[r - 1] = to_int64(s);
    }
    projected.push_back(std::move(y));
  }
  std::vector<std::size_t> order(projected.size());
  std::iota(order.begin(), order.end(), 0);
  std::int64_t total = 0;
  for (const auto& s : detail::placing_simplices(projected, order)) {
    std::vector<Point> pts;
    for (auto i : s) pts.push_back(projected[i]);
    total += normalized_volume(pts);
  }
  return total;
}

std::int64_t boundary_volume(const LatticePolytope& q) {
  std::int64_t total = 0;
  for (const auto& f : q.facets()) total += facet_volume(q, f);
  return total;
}

bool is_massive(const Simplex& s, const LatticePolytope& q, const PointConfiguration& a) {
  if (s.vertices.size() != q.dim())
    throw std::invalid_argument("is_massive expects an (n-1)-simplex");
  return std::any_of(q.facets().begin(), q.facets().end(), [&](const Facet& f) {
    return std::all_of(s.vertices.begin(), s.vertices.end(),
                       [&](std::size_t i) { return f.evaluate(a[i]) == 0; });
  });
}

DelzantReport is_delzant(const LatticePolytope& q) {
  const std::size_t n = q.dim();
  const auto& verts = q.vertices();
  std::vector<std::vector<std::size_t>> tight(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t f = 0; f < q.facets().size(); ++f)
      if (q.facets()[f].evaluate(verts[i]) == 0) tight[i].push_back(f);

  DelzantReport report;
  report.delzant = true;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    VertexCone cone{verts[i], {}, 0, false};
    for (std::size_t j = 0; j < verts.size(); ++j) {
      if (j == i) continue;
      std::vector<IntVector> common;
      for (auto f : tight[i])
        if (std::binary_search(tight[j].begin(), tight[j].end(), f))
          common.push_back(q.facets()[f].normal);
      if (rank(std::span<const IntVector>(common)) + 1 != n) continue;
      IntVector dir(n);
      for (std::size_t c = 0; c < n; ++c) dir[c] = verts[j][c] - verts[i][c];
      const std::int64_t g = gcd_of(dir);
      for (auto& x : dir) x /= g;
      cone.edge_directions.push_back(std::move(dir));
    }
    if (cone.edge_directions.size() == n) {
      cone.determinant = to_int64(det(IntMatrix::from_rows(cone.edge_directions)));
      cone.smooth = cone.determinant == 1 || cone.determinant == -1;
    }
    report.delzant = report.delzant && cone.smooth;
    report.vertices.push_back(std::move(cone));
  }
  return report;
}

}  // namespace toric
