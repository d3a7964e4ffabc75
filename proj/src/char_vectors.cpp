#include "toric/char_vectors.hpp"

#include <numeric>

namespace toric {

std::string_view to_string(CharKind kind) {
  switch (kind) {
    case CharKind::gkz:
      return "gkz";
    case CharKind::boundary:
      return "boundary";
    case CharKind::hurwitz:
      return "hurwitz";
  }
  return "unknown";
}

std::int64_t CharVector::sum() const {
  return std::accumulate(entries.begin(), entries.end(), std::int64_t{0});
}

CharVector gkz_vector(const Triangulation& t) {
  CharVector v{CharKind::gkz, IntVector(t.num_points(), 0)};
  for (const auto& s : t.simplices())
    for (auto i : s.vertices) v.entries[i] += s.volume;
  return v;
}

std::vector<Simplex> massive_faces(const Triangulation& t, const LatticePolytope& q,
                                   const PointConfiguration& a) {
  std::vector<Simplex> out;
  for (auto& face : t.faces(q.dim() - 1)) {
    Simplex s = Simplex::make(std::move(face), a);
    if (is_massive(s, q, a)) out.push_back(std::move(s));
  }
  return out;
}

CharVector boundary_vector(const Triangulation& t, const LatticePolytope& q,
                           const PointConfiguration& a) {
  CharVector v{CharKind::boundary, IntVector(t.num_points(), 0)};
  for (const auto& s : massive_faces(t, q, a))
    for (auto i : s.vertices) v.entries[i] += s.volume;
  return v;
}

CharVector hurwitz_vector(const Triangulation& t, const LatticePolytope& q,
                          const PointConfiguration& a) {
  const auto n = static_cast<std::int64_t>(q.dim());
  const CharVector eta = gkz_vector(t);
  const CharVector bdry = boundary_vector(t, q, a);
  CharVector xi{CharKind::hurwitz, IntVector(t.num_points(), 0)};
  for (std::size_t i = 0; i < xi.entries.size(); ++i)
    xi.entries[i] = n * eta.entries[i] - bdry.entries[i];
  return xi;
}

}  // namespace toric
