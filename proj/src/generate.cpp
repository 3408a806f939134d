#include "generate.hpp"

#include <algorithm>

#include "gauss.hpp"

namespace knotkit {

std::optional<PlanarDiagram> try_random_knot(Rng& rng, int n) {
  if (n == 0) return PlanarDiagram::unknot();
  // Random chord pairing of 2n walk positions.
  std::vector<int> slots(2 * n);
  for (int i = 0; i < 2 * n; ++i) slots[i] = i;
  for (int i = 2 * n - 1; i > 0; --i) std::swap(slots[i], slots[rng.below(i + 1)]);
  std::vector<GaussPass> passes(2 * n);
  for (int c = 0; c < n; ++c) {
    int p1 = slots[2 * c], p2 = slots[2 * c + 1];
    bool first_over = rng.flip();
    int sign = rng.flip() ? +1 : -1;
    passes[p1] = {c + 1, first_over, sign};
    passes[p2] = {c + 1, !first_over, sign};
  }
  GaussCode g;
  g.components = {passes};
  try {
    return pd_from_gauss(g);
  } catch (const Error&) {
    return std::nullopt;
  }
}

PlanarDiagram random_knot(Rng& rng, int n, int max_tries) {
  // Realizable codes get rare beyond ~8 crossings; larger diagrams are grown
  // from two smaller random pieces joined at random arcs, with kinks filling
  // odd remainders.
  if (n <= 8) {
    for (int t = 0; t < max_tries; ++t) {
      if (auto d = try_random_knot(rng, n)) return *d;
    }
    throw budget_error("random_knot: no realizable code found in " + std::to_string(max_tries) +
                       " tries for n=" + std::to_string(n));
  }
  int n1 = 3 + static_cast<int>(rng.below(std::min(n - 3, 8) - 2));
  int n2 = std::min(n - n1, 8);
  PlanarDiagram d1 = random_knot(rng, n1, max_tries);
  PlanarDiagram d2 = random_knot(rng, n2, max_tries);
  auto arcs1 = d1.arcs();
  auto arcs2 = d2.arcs();
  PlanarDiagram sum = PlanarDiagram::connected_sum(d1, arcs1[rng.below(arcs1.size())], d2,
                                                   arcs2[rng.below(arcs2.size())]);
  while (sum.crossing_count() < n) sum = with_random_kink(rng, sum);
  return sum;
}

PlanarDiagram with_random_kink(Rng& rng, const PlanarDiagram& d) {
  d.require_valid();
  int sign = rng.flip() ? +1 : -1;
  auto arcs = d.arcs();
  if (arcs.empty()) {
    if (d.component_count() < 1) throw input_error("kink on an empty diagram");
    PlanarDiagram kink =
        sign > 0 ? PlanarDiagram({Crossing{{1, 2, 2, 1}}}, d.component_count())
                 : PlanarDiagram({Crossing{{1, 2, 2, 1}}}, d.component_count()).mirrored();
    return kink;
  }
  ArcId a = arcs[rng.below(arcs.size())];
  ArcId fresh = *std::max_element(arcs.begin(), arcs.end());
  ArcId m = fresh + 1, nn = fresh + 2;
  auto cs = d.crossings();
  auto e = d.entry_of(a);
  cs[e.crossing].end[e.pos] = nn;
  cs.push_back(sign > 0 ? Crossing{{a, m, m, nn}} : Crossing{{a, nn, m, m}});
  return PlanarDiagram(std::move(cs), d.component_count());
}

PlanarDiagram random_kinked_knot(Rng& rng, int n, int extra_kinks) {
  PlanarDiagram d = random_knot(rng, n);
  int k = extra_kinks > 0 ? static_cast<int>(rng.below(extra_kinks + 1)) : 0;
  for (int i = 0; i < k; ++i) d = with_random_kink(rng, d);
  return d;
}

}  // namespace knotkit
