#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"

using namespace linarr;

namespace {

std::vector<int> zone_of_graph_containing(const IncidenceStructure& inc,
                                          int line) {
  auto gs = maximal_graphs(inc);
  auto zs = zones(inc, gs);
  for (std::size_t i = 0; i < gs.size(); ++i)
    if (std::ranges::binary_search(gs[i].members, line)) return zs[i].members;
  return {};
}

}  // namespace

TEST_CASE("13-line fixture: one regular graph whose zone is everything") {
  auto inc = build_incidence(fixtures::ex29());
  auto gs = maximal_graphs(inc);
  REQUIRE(gs.size() == 1);
  CHECK(gs[0].kind == GraphKind::regular);
  CHECK(gs[0].members == std::vector<int>{0, 1, 2, 12});
  CHECK(gs[0].zone_points.size() == 6);  // joint points partition {p_1..p_6}
  auto zs = zones(inc, gs);
  CHECK(zs[0].members.size() == 13);
  CHECK(verify_zone_partition(inc));
}

TEST_CASE("12-line fixture: two 3-cycles with 6-line zones") {
  auto inc = build_incidence(fixtures::ex36());
  auto gs = maximal_graphs(inc);
  REQUIRE(gs.size() == 2);
  CHECK(gs[0].members == std::vector<int>{0, 7, 8});
  CHECK(gs[1].members == std::vector<int>{1, 2, 3});

  CHECK(zone_of_graph_containing(inc, 1) ==
        std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK(zone_of_graph_containing(inc, 0) ==
        std::vector<int>{0, 7, 8, 9, 10, 11});
  CHECK(verify_zone_partition(inc));

  auto cyc = cycles(inc);
  REQUIRE(cyc.size() == 2);
  for (const auto& c : cyc) {
    CHECK(c.is_cycle);
    CHECK(c.lines.size() == 3);
    CHECK(c.joints.size() == 3);
    // joints pairwise distinct and each on consecutive lines
    CHECK(std::set<int>(c.joints.begin(), c.joints.end()).size() == 3);
  }
}

TEST_CASE("generic arrangement: every line is its own singleton graph") {
  Arrangement arr{{Line(1, 0, 0), Line(0, 1, 0), Line(1, 1, -1)}};
  auto inc = build_incidence(arr);
  auto gs = maximal_graphs(inc);
  REQUIRE(gs.size() == 3);
  for (const auto& g : gs) {
    CHECK(g.kind == GraphKind::no_m_point);
    CHECK(g.members.size() == 1);
  }
  auto zs = zones(inc, gs);
  for (const auto& z : zs) CHECK(z.members.size() == 1);
  CHECK(verify_zone_partition(inc));
  CHECK(cycles(inc).empty());  // M is empty, no cycles through double points
}

TEST_CASE("isolated M-point: one representative singleton graph") {
  Arrangement arr{{Line(1, 0, 0), Line(0, 1, 0), Line(1, 1, 0),
                   Line(1, 2, -17), Line(3, -1, -29)}};
  auto inc = build_incidence(arr);
  auto gs = maximal_graphs(inc);
  int iso = 0, empty = 0;
  for (const auto& g : gs) {
    if (g.kind == GraphKind::isolated_point) {
      ++iso;
      CHECK(g.members == std::vector<int>{0});  // smallest line through it
      CHECK(g.zone_points.size() == 1);
    }
    if (g.kind == GraphKind::no_m_point) ++empty;
  }
  CHECK(iso == 1);
  CHECK(empty == 2);
  // zone of the isolated-point graph covers all three concurrent lines
  CHECK(zone_of_graph_containing(inc, 0) == std::vector<int>{0, 1, 2});
  CHECK(verify_zone_partition(inc));
}

TEST_CASE("two triangles sharing a line form one graph with two cycles") {
  auto inc = build_incidence(fixtures::two_triangles());
  auto gs = maximal_graphs(inc);
  REQUIRE(gs.size() == 1);
  CHECK(gs[0].members == std::vector<int>{0, 1, 2, 3, 4});
  auto cyc = cycles(inc);
  REQUIRE(cyc.size() == 2);
  CHECK(cyc[0].lines == std::vector<int>{0, 1, 2});
  CHECK(cyc[1].lines == std::vector<int>{0, 3, 4});
  CHECK(verify_zone_partition(inc));
}

TEST_CASE("two disjoint quadrilaterals: two 4-cycles") {
  auto inc = build_incidence(fixtures::two_quads());
  auto cyc = cycles(inc);
  REQUIRE(cyc.size() == 2);
  CHECK(cyc[0].lines == std::vector<int>{0, 1, 2, 3});
  CHECK(cyc[1].lines == std::vector<int>{4, 5, 6, 7});
  CHECK(verify_zone_partition(inc));
}

TEST_CASE("cycle census is invariant under relabeling") {
  auto base = fixtures::two_triangles();
  std::vector<Line> flipped(base.lines.rbegin(), base.lines.rend());
  auto inc = build_incidence(Arrangement{flipped});
  CHECK(cycles(inc).size() == 2);
}

TEST_CASE("graph joint sets are path-connected within the graph") {
  for (const auto& arr : {fixtures::ex29(), fixtures::ex36(),
                          fixtures::two_triangles(), fixtures::two_quads()}) {
    auto inc = build_incidence(arr);
    for (const auto& g : maximal_graphs(inc)) {
      if (g.kind != GraphKind::regular) continue;
      // walk the member adjacency; all joints must be reachable
      std::set<int> seen_joints;
      std::set<int> seen{g.members.front()};
      std::vector<int> stack{g.members.front()};
      while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        for (int other : g.members) {
          if (cur == other) continue;
          for (int p : inc.line_m_points[cur])
            if (std::ranges::binary_search(inc.line_m_points[other], p)) {
              seen_joints.insert(p);
              if (!seen.contains(other)) {
                seen.insert(other);
                stack.push_back(other);
              }
            }
        }
      }
      CHECK(seen.size() == g.members.size());
      CHECK(seen_joints ==
            std::set<int>(g.joint_points.begin(), g.joint_points.end()));
    }
  }
}

TEST_CASE("zone partition precondition") {
  // condition (C) fails here; the partition check must refuse to run
  std::vector<Line> lines{
      Line(1, 0, 0), Line(0, 1, 0), Line(1, 1, 0), Line(1, 1, -1),
      Line(2, 1, -1), Line(1, 3, -1), Line(1, 5, -1), Line(1, 2, 1),
      Line(1, 4, 3)};
  auto inc = build_incidence(Arrangement{lines});
  REQUIRE_FALSE(check_condition_c(inc));
  CHECK_THROWS_AS(verify_zone_partition(inc), std::domain_error);
}
