#pragma once

#include <optional>

#include "diagram.hpp"
#include "util.hpp"

namespace knotkit {

/// One attempt at a random realizable knot diagram with exactly n crossings:
/// a uniformly random signed one-component Gauss code, kept when it embeds.
std::optional<PlanarDiagram> try_random_knot(Rng& rng, int n);

/// Rejection-sampled random knot; throws a budget error when max_tries
/// attempts all fail (practically unreachable for n <= 12).
PlanarDiagram random_knot(Rng& rng, int n, int max_tries = 200000);

/// Insert a kink of random sign on a random arc (adds one crossing).
PlanarDiagram with_random_kink(Rng& rng, const PlanarDiagram& d);

/// Random knot with n base crossings and up to `extra_kinks` kinks.
PlanarDiagram random_kinked_knot(Rng& rng, int n, int extra_kinks);

}  // namespace knotkit
