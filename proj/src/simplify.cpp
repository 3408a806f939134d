#include "simplify.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace knotkit {

namespace {

// Replace arc label `victim` by `keep` in a crossing list. Equal labels mean
// a loop closed up; component accounting is recovered by the constructor.
void weld(std::vector<Crossing>& cs, ArcId keep, ArcId victim, std::vector<ArcId*> pending = {}) {
  if (keep == victim) return;
  for (auto& c : cs)
    for (auto& a : c.end)
      if (a == victim) a = keep;
  for (ArcId* p : pending)
    if (*p == victim) *p = keep;
}

int through_partner(const PlanarDiagram& d, int c, int pos) {
  if (pos == 0) return 2;
  if (pos == 2) return 0;
  return pos == 1 ? 3 : 1;
}

// Tuple from strand data: under (u_in -> u_out), over (o_in -> o_out), sign.
Crossing make_crossing(ArcId u_in, ArcId u_out, ArcId o_in, ArcId o_out, int sign) {
  Crossing c;
  if (sign > 0)
    c.end = {u_in, o_in, u_out, o_out};
  else
    c.end = {u_in, o_out, u_out, o_in};
  return c;
}

}  // namespace

std::vector<PlanarDiagram> r1_reductions(const PlanarDiagram& d) {
  d.require_valid();
  std::vector<PlanarDiagram> out;
  for (int c = 0; c < d.crossing_count(); ++c) {
    const auto& e = d.crossing(c).end;
    int kink_pos = -1;
    for (int p = 0; p < 4; ++p)
      if (e[p] == e[(p + 1) & 3]) {
        kink_pos = p;
        break;
      }
    if (kink_pos < 0) continue;
    int q1 = (kink_pos + 2) & 3, q2 = (kink_pos + 3) & 3;
    ArcId in_label = d.is_entry(c, q1) ? e[q1] : e[q2];
    ArcId out_label = d.is_entry(c, q1) ? e[q2] : e[q1];
    std::vector<Crossing> cs;
    for (int i = 0; i < d.crossing_count(); ++i)
      if (i != c) cs.push_back(d.crossing(i));
    weld(cs, in_label, out_label);
    out.emplace_back(std::move(cs), d.component_count());
  }
  return out;
}

std::vector<PlanarDiagram> r2_reductions(const PlanarDiagram& d) {
  d.require_valid();
  std::vector<PlanarDiagram> out;
  std::set<int> seen_faces;
  for (int dart = 0; dart < d.dart_count(); ++dart) {
    int f = d.face_of_dart(dart);
    if (!seen_faces.insert(f).second) continue;
    auto darts = d.face_darts(f);
    if (darts.size() != 2) continue;
    int c1 = darts[0] / 4, c2 = darts[1] / 4;
    if (c1 == c2) continue;
    ArcId u = d.crossing(darts[0] / 4).end[darts[0] & 3];
    ArcId v = d.crossing(darts[1] / 4).end[darts[1] & 3];
    if (u == v) continue;
    auto over_at_both = [&](ArcId a) {
      return (d.entry_of(a).pos % 2 == 1) && (d.exit_of(a).pos % 2 == 1);
    };
    ArcId top;
    if (over_at_both(u))
      top = u;
    else if (over_at_both(v))
      top = v;
    else
      continue;
    ArcId bot = (top == u) ? v : u;

    // Over strand: a_in -> [cx] -> top -> [cy] -> a_out; under: b_in/b_out.
    auto ox = d.exit_of(top), oy = d.entry_of(top);
    ArcId a_in = d.crossing(ox.crossing).end[through_partner(d, ox.crossing, ox.pos)];
    ArcId a_out = d.crossing(oy.crossing).end[through_partner(d, oy.crossing, oy.pos)];
    auto bx = d.exit_of(bot), by = d.entry_of(bot);
    ArcId b_in = d.crossing(bx.crossing).end[0];
    ArcId b_out = d.crossing(by.crossing).end[2];

    std::vector<Crossing> cs;
    for (int i = 0; i < d.crossing_count(); ++i)
      if (i != c1 && i != c2) cs.push_back(d.crossing(i));
    weld(cs, a_in, a_out, {&b_in, &b_out});
    weld(cs, b_in, b_out);
    out.emplace_back(std::move(cs), d.component_count());
  }
  return out;
}

std::vector<PlanarDiagram> r3_moves(const PlanarDiagram& d) {
  d.require_valid();
  std::vector<PlanarDiagram> out;
  std::set<int> seen_faces;
  for (int dart = 0; dart < d.dart_count(); ++dart) {
    int f = d.face_of_dart(dart);
    if (!seen_faces.insert(f).second) continue;
    auto darts = d.face_darts(f);
    if (darts.size() != 3) continue;
    int cA = darts[0] / 4, cB = darts[1] / 4, cC = darts[2] / 4;
    if (cA == cB || cB == cC || cA == cC) continue;
    std::array<ArcId, 3> edge;
    for (int i = 0; i < 3; ++i) edge[i] = d.crossing(darts[i] / 4).end[darts[i] & 3];
    if (edge[0] == edge[1] || edge[1] == edge[2] || edge[0] == edge[2]) continue;

    for (ArcId u : edge) {
      int p1 = d.exit_of(u).pos % 2, p2 = d.entry_of(u).pos % 2;
      if (p1 != p2) continue;  // mixed edge cannot slide

      // Strand T carries u between crossings ta and tb; cR is the third.
      int ta = d.exit_of(u).crossing, tb = d.entry_of(u).crossing;
      int cR = cA + cB + cC - ta - tb;
      ArcId p = 0, q = 0;
      for (ArcId e : edge) {
        if (e == u) continue;
        int x1 = d.exit_of(e).crossing, x2 = d.entry_of(e).crossing;
        if (x1 == ta || x2 == ta) p = e;
        if (x1 == tb || x2 == tb) q = e;
      }
      if (p == 0 || q == 0 || p == q) continue;

      auto outer_at = [&](ArcId e, int c) {
        auto occ = (d.exit_of(e).crossing == c) ? d.exit_of(e) : d.entry_of(e);
        return d.crossing(c).end[through_partner(d, c, occ.pos)];
      };
      ArcId u1 = outer_at(u, ta), u2 = outer_at(u, tb);
      ArcId p1a = outer_at(p, ta), p2a = outer_at(p, cR);
      ArcId q1a = outer_at(q, tb), q2a = outer_at(q, cR);
      // Degenerate small diagrams where a stub coincides with a triangle edge
      // do not admit the slide.
      std::set<ArcId> tri{u, p, q};
      if (tri.count(u1) || tri.count(u2) || tri.count(p1a) || tri.count(p2a) || tri.count(q1a) ||
          tri.count(q2a))
        continue;

      bool t_fwd = d.exit_of(u).crossing == ta;  // T flows u1 -> u -> u2 always; orient per arcs
      (void)t_fwd;
      // Flow helpers: does the strand of arc `mid` run outer1 -> mid -> outer2?
      auto flows_from = [&](ArcId mid, int c_first) { return d.exit_of(mid).crossing == c_first; };
      bool pf = flows_from(p, ta);  // P runs p1a -> p -> p2a
      bool qf = flows_from(q, tb);  // Q runs q1a -> q -> q2a
      bool tf = flows_from(u, ta);  // T runs u1 -> u -> u2

      auto role_over = [&](ArcId e, int c) {
        auto occ = (d.exit_of(e).crossing == c) ? d.exit_of(e) : d.entry_of(e);
        return occ.pos % 2 == 1;
      };
      bool T_over_P = role_over(u, ta);
      bool T_over_Q = role_over(u, tb);
      bool P_over_Q = role_over(p, cR);
      int sTP = d.sign(ta), sTQ = d.sign(tb), sPQ = d.sign(cR);

      // After the slide: T: u1 -[x Q]- u -[x P]- u2;  P: p1a -[x Q]- p -[x T]- p2a;
      // Q: q1a -[x P]- q -[x T]- q2a. Roles and signs are preserved pairwise.
      auto strand_arcs = [](bool fwd, ArcId first, ArcId mid, ArcId last, bool at_first)
          -> std::pair<ArcId, ArcId> {
        // Returns (in, out) at the named crossing of the rebuilt strand
        // first -[crossing1]- mid -[crossing2]- last.
        if (fwd) return at_first ? std::make_pair(first, mid) : std::make_pair(mid, last);
        return at_first ? std::make_pair(mid, first) : std::make_pair(last, mid);
      };

      std::vector<Crossing> cs = d.crossings();
      {  // new T x P at index ta (T side: second crossing; P side: second)
        auto [t_in, t_out] = strand_arcs(tf, u1, u, u2, false);
        auto [pp_in, pp_out] = strand_arcs(pf, p1a, p, p2a, false);
        cs[ta] = T_over_P ? make_crossing(pp_in, pp_out, t_in, t_out, sTP)
                          : make_crossing(t_in, t_out, pp_in, pp_out, sTP);
      }
      {  // new T x Q at index tb (T side: first crossing; Q side: second)
        auto [t_in, t_out] = strand_arcs(tf, u1, u, u2, true);
        auto [qq_in, qq_out] = strand_arcs(qf, q1a, q, q2a, false);
        cs[tb] = T_over_Q ? make_crossing(qq_in, qq_out, t_in, t_out, sTQ)
                          : make_crossing(t_in, t_out, qq_in, qq_out, sTQ);
      }
      {  // new P x Q at index cR (both at their first crossings)
        auto [pp_in, pp_out] = strand_arcs(pf, p1a, p, p2a, true);
        auto [qq_in, qq_out] = strand_arcs(qf, q1a, q, q2a, true);
        cs[cR] = P_over_Q ? make_crossing(qq_in, qq_out, pp_in, pp_out, sPQ)
                          : make_crossing(pp_in, pp_out, qq_in, qq_out, sPQ);
      }
      PlanarDiagram moved(std::move(cs), d.component_count());
      if (moved.is_valid()) out.push_back(std::move(moved));
    }
  }
  return out;
}

namespace {

PlanarDiagram greedy_r1_r2(PlanarDiagram d) {
  while (true) {
    auto r1 = r1_reductions(d);
    if (!r1.empty()) {
      d = r1.front();
      continue;
    }
    auto r2 = r2_reductions(d);
    if (!r2.empty()) {
      d = r2.front();
      continue;
    }
    return d;
  }
}

}  // namespace

PlanarDiagram reidemeister_simplify(const PlanarDiagram& d, int r3_steps) {
  d.require_valid();
  PlanarDiagram cur = greedy_r1_r2(d);
  while (r3_steps > 0 && cur.crossing_count() >= 3) {
    PlanarDiagram start = cur.canonical_form();
    std::set<std::string> visited{start.canonical_key()};
    std::deque<PlanarDiagram> queue{start};
    bool reduced = false;
    while (!queue.empty() && r3_steps > 0) {
      PlanarDiagram node = queue.front();
      queue.pop_front();
      for (PlanarDiagram& child : r3_moves(node)) {
        if (--r3_steps < 0) break;
        if (!r1_reductions(child).empty() || !r2_reductions(child).empty()) {
          cur = greedy_r1_r2(child);
          reduced = true;
          break;
        }
        PlanarDiagram canon = child.canonical_form();
        std::string key = canon.canonical_key();
        if (visited.insert(key).second) queue.push_back(std::move(canon));
      }
      if (reduced) break;
    }
    if (!reduced) break;
  }
  return cur;
}

}  // namespace knotkit
