#include "placing.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace toric::detail {

int orientation(std::span<const IntVector> points, std::span<const std::size_t> facet,
                const IntVector& x) {
  const std::size_t d = x.size();
  const IntVector& base = points[facet[0]];
  IntMatrix m(d, d);
  for (std::size_t r = 0; r + 1 < facet.size(); ++r)
    for (std::size_t c = 0; c < d; ++c)
      m(r, c) = static_cast<long>(points[facet[r + 1]][c] - base[c]);
  for (std::size_t c = 0; c < d; ++c) m(d - 1, c) = static_cast<long>(x[c] - base[c]);
  return sgn(det(m));
}

std::vector<std::vector<std::size_t>> placing_simplices(std::span<const IntVector> points,
                                                        std::span<const std::size_t> order) {
  if (order.empty()) throw std::invalid_argument("placing: empty insertion order");
  const std::size_t d = points[order[0]].size();

  std::vector<std::size_t> seed{order[0]};
  std::vector<IntVector> diffs;
  std::vector<std::size_t> rest;
  for (std::size_t k = 1; k < order.size(); ++k) {
    const std::size_t i = order[k];
    if (seed.size() == d + 1) {
      rest.push_back(i);
      continue;
    }
    IntVector diff(d);
    for (std::size_t c = 0; c < d; ++c) diff[c] = points[i][c] - points[order[0]][c];
    diffs.push_back(diff);
    if (rank(std::span<const IntVector>(diffs)) == diffs.size()) {
      seed.push_back(i);
    } else {
      diffs.pop_back();
      rest.push_back(i);
    }
  }
  if (seed.size() != d + 1) throw std::invalid_argument("placing: points do not span their space");

  std::sort(seed.begin(), seed.end());
  std::vector<std::vector<std::size_t>> simplices{seed};
  if (d == 0) return simplices;

  for (const std::size_t p : rest) {
    // Boundary facets: (d-1)-faces that belong to exactly one simplex.
    std::map<std::vector<std::size_t>, std::pair<int, std::size_t>> faces;  // count, opposite
    for (const auto& s : simplices) {
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<std::size_t> f;
        for (std::size_t j = 0; j < s.size(); ++j)
          if (j != drop) f.push_back(s[j]);
        auto& entry = faces[f];
        ++entry.first;
        entry.second = s[drop];
      }
    }
    std::vector<std::vector<std::size_t>> added;
    for (const auto& [f, entry] : faces) {
      if (entry.first != 1) continue;
      const int side_p = orientation(points, f, points[p]);
      const int side_in = orientation(points, f, points[entry.second]);
      if (side_p != 0 && side_p == -side_in) {
        auto s = f;
        s.push_back(p);
        std::sort(s.begin(), s.end());
        added.push_back(std::move(s));
      }
    }
    simplices.insert(simplices.end(), added.begin(), added.end());
  }
  std::sort(simplices.begin(), simplices.end());
  return simplices;
}

}  // namespace toric::detail
