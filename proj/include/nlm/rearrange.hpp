#pragma once

#include <cstdint>
#include <vector>

#include "nlm/field.hpp"

namespace nlm {

/// Cell indices sorted by (min-image distance from the origin, flat index).
/// Cached per grid signature; safe to call concurrently.
const std::vector<std::uint32_t>& radial_cell_order(const Grid& grid);

/// Schwarz (symmetric decreasing) rearrangement of |f|: the sorted values of
/// |f| assigned nonincreasingly along radial_cell_order. Every L^p norm is
/// preserved exactly (the output is a permutation of |f|).
ScalarField schwarz_rearrange(const ScalarField& f);

}  // namespace nlm
