#pragma once

#include "toric/exact.hpp"

#include <span>
#include <vector>

namespace toric::detail {

/// Placing triangulation of points spanning their ambient space. The first
/// affinely independent points met in `order` form the seed simplex; every
/// remaining point of `order` is then coned over the boundary facets it
/// strictly sees, or skipped when it sees none. Returns sorted index sets.
std::vector<std::vector<std::size_t>> placing_simplices(std::span<const IntVector> points,
                                                        std::span<const std::size_t> order);

/// Sign of det[f_1 - f_0, ..., f_{d-1} - f_0, x - f_0] for a facet f of d points in Z^d.
int orientation(std::span<const IntVector> points, std::span<const std::size_t> facet,
                const IntVector& x);

}  // namespace toric::detail
