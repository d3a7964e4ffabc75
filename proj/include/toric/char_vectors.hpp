// GKZ, boundary and Hurwitz vectors of a triangulation, indexed like A.
#pragma once

#include "toric/lattice_polytope.hpp"
#include "toric/triangulation.hpp"

#include <string_view>

namespace toric {

enum class CharKind { gkz, boundary, hurwitz };

std::string_view to_string(CharKind kind);

struct CharVector {
  CharKind kind = CharKind::gkz;
  IntVector entries;

  std::int64_t sum() const;
};

/// Entry i: total normalized volume of the maximal simplices containing w_i.
CharVector gkz_vector(const Triangulation& t);

/// Massive (n-1)-simplices of t, i.e. its faces lying in a facet of q.
std::vector<Simplex> massive_faces(const Triangulation& t, const LatticePolytope& q,
                                   const PointConfiguration& a);

/// Entry i: total (n-1)-volume of the massive faces containing w_i.
CharVector boundary_vector(const Triangulation& t, const LatticePolytope& q,
                           const PointConfiguration& a);

/// n * gkz - boundary, entrywise.
CharVector hurwitz_vector(const Triangulation& t, const LatticePolytope& q,
                          const PointConfiguration& a);

}  // namespace toric
