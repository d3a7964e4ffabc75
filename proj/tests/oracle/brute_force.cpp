#include "brute_force.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace toric::oracle {

namespace {

using Q = mpq_class;
using QMatrix = std::vector<std::vector<Q>>;

// Reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m, std::size_t cols) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Q inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Q f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

// Null space of the homogenized columns (w_i, 1) for i in `pts`.
std::vector<std::vector<Q>> dependencies(const PointConfiguration& a, const Cell& pts) {
  const std::size_t n = a.dim(), k = pts.size();
  QMatrix m(n + 1, std::vector<Q>(k));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t c = 0; c < n; ++c) m[c][j] = static_cast<long>(a[pts[j]][c]);
    m[n][j] = 1;
  }
  const auto piv = rref(m, k);
  std::vector<bool> is_piv(k, false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<std::vector<Q>> out;
  for (std::size_t f = 0; f < k; ++f) {
    if (is_piv[f]) continue;
    std::vector<Q> v(k);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
    out.push_back(std::move(v));
  }
  return out;
}

void subsets(std::size_t n, std::size_t k, const std::function<void(const Cell&)>& f) {
  Cell cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      f(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

// Barycentric coordinates of rational x w.r.t. a full simplex.
std::vector<Q> bary(const PointConfiguration& a, const Cell& s, const std::vector<Q>& x) {
  const std::size_t n = a.dim();
  QMatrix m(n + 1, std::vector<Q>(n + 2));
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t c = 0; c < n; ++c) m[c][i] = static_cast<long>(a[s[i]][c]);
    m[n][i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) m[c][n + 1] = x[c];
  m[n][n + 1] = 1;
  rref(m, n + 2);
  std::vector<Q> b(n + 1);
  for (std::size_t i = 0; i <= n; ++i) b[i] = m[i][n + 1];
  return b;
}

// Side of the hyperplane through face f (n points) on which x lies.
int side(const PointConfiguration& a, const Cell& f, const std::vector<Q>& x) {
  const std::size_t n = a.dim();
  QMatrix m(n, std::vector<Q>(n));
  for (std::size_t r = 0; r + 1 < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m[r][c] = static_cast<long>(a[f[r + 1]][c] - a[f[0]][c]);
  for (std::size_t c = 0; c < n; ++c) m[n - 1][c] = x[c] - static_cast<long>(a[f[0]][c]);
  // Determinant by elimination.
  Q d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Q f2 = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f2 * m[c][j];
    }
  }
  return sgn(d);
}

std::vector<Q> to_q(const Point& p) {
  std::vector<Q> x;
  for (auto v : p) x.emplace_back(static_cast<long>(v));
  return x;
}

}  // namespace

std::vector<SignedCircuit> all_circuits(const PointConfiguration& a) {
  std::vector<SignedCircuit> out;
  for (std::size_t k = 2; k <= a.dim() + 2; ++k) {
    subsets(a.size(), k, [&](const Cell& z) {
      const auto deps = dependencies(a, z);
      if (deps.size() != 1) return;
      SignedCircuit c;
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (deps[0][j] == 0) return;
        (deps[0][j] > 0 ? c.positive : c.negative).push_back(z[j]);
      }
      out.push_back(c);
      out.push_back({c.negative, c.positive});
    });
  }
  return out;
}

bool intersect_properly(const Cell& s1, const Cell& s2, const std::vector<SignedCircuit>& circuits) {
  for (const auto& c : circuits) {
    if (std::includes(s1.begin(), s1.end(), c.positive.begin(), c.positive.end()) &&
        std::includes(s2.begin(), s2.end(), c.negative.begin(), c.negative.end()))
      return false;
  }
  return true;
}

bool is_triangulation(const CellSet& cells, const LatticePolytope& q, const PointConfiguration& a) {
  const auto circuits = all_circuits(a);
  std::int64_t vol = 0;
  for (const auto& c : cells) {
    if (c.size() != a.dim() + 1) return false;
    if (dependencies(a, c).size() != 0) return false;
    vol += normalized_volume(c, a);
  }
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = i + 1; j < cells.size(); ++j)
      if (!intersect_properly(cells[i], cells[j], circuits)) return false;
  return vol == volume(q);
}

std::set<CellSet> all_triangulations(const LatticePolytope& q, const PointConfiguration& a) {
  const std::size_t n = a.dim();
  const auto circuits = all_circuits(a);

  std::vector<Cell> simplices;
  subsets(a.size(), n + 1, [&](const Cell& s) {
    if (dependencies(a, s).empty()) simplices.push_back(s);
  });
  const std::size_t m = simplices.size();
  std::vector<std::vector<char>> compatible(m, std::vector<char>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      compatible[i][j] = compatible[j][i] =
          intersect_properly(simplices[i], simplices[j], circuits) &&
          intersect_properly(simplices[j], simplices[i], circuits);

  // A point off every hyperplane spanned by A: each triangulation has exactly
  // one simplex containing it.
  std::vector<Q> x0 = to_q(a[simplices.front()[0]]);
  for (std::size_t c = 0; c < n; ++c) {
    Q s = 0;
    for (auto i : simplices.front()) s += static_cast<long>(a[i][c]);
    x0[c] = s / static_cast<long>(n + 1);
  }
  for (long attempt = 1;; ++attempt) {
    bool generic = true;
    subsets(a.size(), n, [&](const Cell& f) {
      if (generic && dependencies(a, f).empty() && side(a, f, x0) == 0) generic = false;
    });
    if (generic) break;
    for (std::size_t c = 0; c < n; ++c) x0[c] += Q(1, 97 * attempt * static_cast<long>(c + 3) * static_cast<long>(c + 3));
  }

  auto on_boundary = [&](const Cell& f) {
    return std::any_of(q.facets().begin(), q.facets().end(), [&](const Facet& fa) {
      return std::all_of(f.begin(), f.end(), [&](std::size_t i) { return fa.evaluate(a[i]) == 0; });
    });
  };
  std::map<Cell, std::vector<std::size_t>> by_face;  // (n-1)-face -> simplices containing it
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t drop = 0; drop <= n; ++drop) {
      Cell f;
      for (std::size_t j = 0; j <= n; ++j)
        if (j != drop) f.push_back(simplices[i][j]);
      by_face[f].push_back(i);
    }

  const std::int64_t target = volume(q);
  std::set<CellSet> found;
  std::vector<std::size_t> chosen;

  std::function<void()> grow = [&]() {
    std::map<Cell, std::pair<int, std::size_t>> faces;  // count, owning simplex
    for (auto i : chosen)
      for (std::size_t drop = 0; drop <= n; ++drop) {
        Cell f;
        for (std::size_t j = 0; j <= n; ++j)
          if (j != drop) f.push_back(simplices[i][j]);
        auto& e = faces[f];
        ++e.first;
        e.second = i;
      }
    for (const auto& [f, e] : faces) {
      if (e.first != 1 || on_boundary(f)) continue;
      const auto& owner = simplices[e.second];
      std::size_t apex = 0;
      for (auto v : owner)
        if (!std::binary_search(f.begin(), f.end(), v)) apex = v;
      const int own_side = side(a, f, to_q(a[apex]));
      for (auto cand : by_face[f]) {
        if (std::find(chosen.begin(), chosen.end(), cand) != chosen.end()) continue;
        std::size_t capex = 0;
        for (auto v : simplices[cand])
          if (!std::binary_search(f.begin(), f.end(), v)) capex = v;
        if (side(a, f, to_q(a[capex])) != -own_side) continue;
        if (!std::all_of(chosen.begin(), chosen.end(),
                         [&](std::size_t c) { return compatible[c][cand]; }))
          continue;
        chosen.push_back(cand);
        grow();
        chosen.pop_back();
      }
      return;  // this wall must be closed by one of the candidates
    }
    CellSet cells;
    std::int64_t vol = 0;
    for (auto i : chosen) {
      cells.push_back(simplices[i]);
      vol += normalized_volume(simplices[i], a);
    }
    if (vol != target) throw std::logic_error("oracle: closed complex with wrong volume");
    std::sort(cells.begin(), cells.end());
    found.insert(std::move(cells));
  };

  for (std::size_t i = 0; i < m; ++i) {
    const auto b = bary(a, simplices[i], x0);
    if (std::all_of(b.begin(), b.end(), [](const Q& v) { return v > 0; })) {
      chosen = {i};
      grow();
    }
  }
  return found;
}

}  // namespace toric::oracle
