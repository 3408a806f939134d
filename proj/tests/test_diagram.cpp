#include "diagram.hpp"

#include <set>

#include "doctest.h"
#include "gauss.hpp"
#include "oracles.hpp"

using namespace knotkit;
using namespace knotkit::oracle;

TEST_CASE("0-crossing unknot is valid") {
  PlanarDiagram d = PlanarDiagram::unknot();
  CHECK(d.is_valid());
  CHECK(d.component_count() == 1);
  CHECK(d.crossing_count() == 0);
  CHECK(d.free_loop_count() == 1);
}

TEST_CASE("right trefoil PD validates with all positive signs") {
  PlanarDiagram d = right_trefoil();
  CHECK(d.validate().empty());
  CHECK(d.traced_component_count() == 1);
  for (int c = 0; c < 3; ++c) CHECK(d.sign(c) == +1);
  CHECK(d.writhe() == 3);
}

TEST_CASE("mirror negates all signs and is an involution") {
  PlanarDiagram d = right_trefoil();
  PlanarDiagram m = d.mirrored();
  for (int c = 0; c < 3; ++c) CHECK(m.sign(c) == -1);
  CHECK(m.mirrored().canonical_key() == d.canonical_key());
}

TEST_CASE("figure-eight has two positive and two negative crossings") {
  PlanarDiagram d = figure_eight();
  REQUIRE(d.is_valid());
  int pos = 0, neg = 0;
  for (int c = 0; c < 4; ++c) (d.sign(c) > 0 ? pos : neg)++;
  CHECK(pos == 2);
  CHECK(neg == 2);
}

TEST_CASE("dangling arc is reported") {
  PlanarDiagram d({Crossing{{1, 2, 3, 4}}}, 1);
  bool found = false;
  for (const auto& v : d.validate())
    if (v.kind == "arc-occurrence") found = true;
  CHECK(found);
}

TEST_CASE("two circles crossing once are rejected as non-planar") {
  PlanarDiagram d({Crossing{{1, 2, 1, 2}}}, 2);
  bool found = false;
  for (const auto& v : d.validate())
    if (v.kind == "non-planar") found = true;
  CHECK(found);
}

TEST_CASE("crossing change is an involution") {
  PlanarDiagram d = figure_eight();
  for (int c = 0; c < d.crossing_count(); ++c) {
    PlanarDiagram once = d.with_crossing_changed(c);
    CHECK(once.is_valid());
    CHECK(once.sign(c) == -d.sign(c));
    CHECK(once.with_crossing_changed(c) == d);
  }
  CHECK_THROWS_AS(PlanarDiagram::unknot().with_crossing_changed(0), Error);
}

TEST_CASE("reverse preserves signs and validity") {
  for (const PlanarDiagram& d : {right_trefoil(), figure_eight(), hopf_link()}) {
    PlanarDiagram r = d.reversed();
    REQUIRE(r.is_valid());
    for (int c = 0; c < d.crossing_count(); ++c) CHECK(r.sign(c) == d.sign(c));
    CHECK(r.reversed() == d);
  }
  CHECK(PlanarDiagram::unknot().reversed() == PlanarDiagram::unknot());
}

TEST_CASE("canonical key identifies relabeled diagrams") {
  PlanarDiagram d = right_trefoil();
  // Relabel arcs 1..6 -> 11..16 and permute the crossing list.
  PlanarDiagram relab({Crossing{{15, 12, 16, 13}}, Crossing{{11, 14, 12, 15}}, Crossing{{13, 16, 14, 11}}},
                      1);
  CHECK(relab.is_valid());
  CHECK(d.canonical_key() == relab.canonical_key());
  CHECK(d.canonical_key() != left_trefoil().canonical_key());
  CHECK(d.canonical_form().canonical_key() == d.canonical_key());
}

TEST_CASE("faces satisfy the Euler relation on planar diagrams") {
  for (const PlanarDiagram& d : {unknot_kink(+1), right_trefoil(), figure_eight(), granny()}) {
    REQUIRE(d.is_valid());
    CHECK(d.genus() == 0);
    // connected pieces here are single: V - E + F = 2
    CHECK(d.crossing_count() - d.arc_count() + d.face_count() == 2);
  }
}

TEST_CASE("kink diagram has the expected face sizes") {
  PlanarDiagram d = unknot_kink(+1);
  REQUIRE(d.face_count() == 3);
  std::multiset<size_t> sizes;
  for (int f = 0; f < d.face_count(); ++f) sizes.insert(d.face_darts(f).size());
  CHECK(sizes == std::multiset<size_t>({1, 1, 2}));
}

TEST_CASE("left and right faces of an arc straddle it") {
  PlanarDiagram d = right_trefoil();
  for (ArcId a : d.arcs()) {
    int l = d.left_face(a), r = d.right_face(a);
    CHECK(l != r);  // no bridge arcs in a knot projection with this few crossings
  }
}

TEST_CASE("connected sum counts components and validates") {
  PlanarDiagram g = granny();
  REQUIRE(g.is_valid());
  CHECK(g.component_count() == 1);
  CHECK(g.crossing_count() == 6);
  CHECK(PlanarDiagram::connected_sum(right_trefoil(), 1, PlanarDiagram::unknot(), 1) == right_trefoil());
}

TEST_CASE("JSON round trip is bit-exact") {
  PlanarDiagram d = figure_eight();
  std::string j = d.to_json();
  PlanarDiagram back = PlanarDiagram::from_json(j);
  CHECK(back == d);
  CHECK(back.to_json() == j);
  CHECK_THROWS_AS(PlanarDiagram::from_json("{\"components\":1}"), Error);
  CHECK_THROWS_AS(PlanarDiagram::from_json("not json"), Error);
}

TEST_CASE("gauss round trip on knot corpus") {
  for (const PlanarDiagram& d :
       {right_trefoil(), left_trefoil(), figure_eight(), cinquefoil(), twist_5_2(), granny(), square_knot(),
        hopf_link(), unknot_kink(+1), unknot_r2()}) {
    REQUIRE(d.is_valid());
    GaussCode g = gauss_from_pd(d);
    PlanarDiagram back = pd_from_gauss(g);
    CHECK(back.canonical_key() == d.canonical_key());
    GaussCode g2 = GaussCode::from_text(g.to_text());
    CHECK(g2 == g);
  }
}

TEST_CASE("trefoil gauss text matches the alternating pattern") {
  GaussCode g = gauss_from_pd(right_trefoil());
  REQUIRE(g.components.size() == 1);
  REQUIRE(g.components[0].size() == 6);
  // Alternating over/under with all-positive signs, each crossing once each way.
  std::set<int> overs, unders;
  bool expect_over = g.components[0][0].over;
  for (const auto& p : g.components[0]) {
    CHECK(p.sign == +1);
    CHECK(p.over == expect_over);
    expect_over = !expect_over;
    (p.over ? overs : unders).insert(p.crossing);
  }
  CHECK(overs.size() == 3);
  CHECK(unders.size() == 3);
}

TEST_CASE("empty gauss text is the unknot") {
  PlanarDiagram d = pd_from_gauss(GaussCode::from_text(""));
  CHECK(d.component_count() == 1);
  CHECK(d.crossing_count() == 0);
}

TEST_CASE("non-realizable signed code is rejected, confirmed by exhaustive sign search") {
  // O1 O2 U1 U2 on one component is the classic non-planar interleaving.
  for (int s1 : {+1, -1})
    for (int s2 : {+1, -1}) {
      GaussCode g;
      g.components = {{{1, true, s1}, {2, true, s2}, {1, false, s1}, {2, false, s2}}};
      CHECK_THROWS_AS(pd_from_gauss(g), Error);
    }
}

TEST_CASE("gauss from pd rejects malformed codes") {
  GaussCode g;
  g.components = {{{1, true, +1}, {1, true, +1}}};
  CHECK_THROWS_AS(pd_from_gauss(g), Error);
  GaussCode g2;
  g2.components = {{{1, true, +1}, {1, false, -1}}};
  CHECK_THROWS_AS(pd_from_gauss(g2), Error);
}
