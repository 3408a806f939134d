#pragma once

#include <vector>

#include "diagram.hpp"

namespace knotkit {

/// All R1 kink removals available on d, as (crossing, result) candidates in a
/// deterministic order.
std::vector<PlanarDiagram> r1_reductions(const PlanarDiagram& d);
/// All R2 bigon removals available on d.
std::vector<PlanarDiagram> r2_reductions(const PlanarDiagram& d);
/// All R3 slides available on d (crossing count preserved).
std::vector<PlanarDiagram> r3_moves(const PlanarDiagram& d);

/// Monotone simplification: greedy R1/R2 until exhausted, then breadth-first
/// R3 exploration (up to `r3_steps` expanded nodes total) looking for a
/// position where R1/R2 applies again. Crossing count never increases;
/// deterministic for a given budget; returns the input when nothing reduces.
PlanarDiagram reidemeister_simplify(const PlanarDiagram& d, int r3_steps = 64);

}  // namespace knotkit
