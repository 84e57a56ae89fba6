#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"

using namespace linarr;

namespace {

// independent oracle for adjacency: brute force over all M-point pairs,
// scanning all lines rather than the incidence structure's index
std::vector<int> brute_adjacent(const IncidenceStructure& inc, int x) {
  std::vector<int> out;
  for (int y : inc.m_points) {
    if (y == x) continue;
    int shared = 0;
    for (int l = 0; l < inc.arr.size(); ++l)
      if (on_line(inc.points[x].point, inc.arr.lines[l]) &&
          on_line(inc.points[y].point, inc.arr.lines[l]))
        ++shared;
    if (shared == 1) out.push_back(y);
    REQUIRE(shared <= 1);
  }
  return out;
}

std::vector<int> incident_of(const IncidenceStructure& inc, const Point& p) {
  int idx = inc.find_point(p);
  REQUIRE(idx >= 0);
  return inc.points[idx].incident;
}

}  // namespace

TEST_CASE("13-line fixture has the six frozen triple points") {
  auto inc = build_incidence(fixtures::ex29());
  REQUIRE(inc.m_points.size() == 6);
  for (int p : inc.m_points) CHECK(inc.points[p].multiplicity == 3);

  CHECK(incident_of(inc, Point(1, 3, 1)) == std::vector<int>{7, 8, 12});
  CHECK(incident_of(inc, Point(0, 1, 1)) == std::vector<int>{1, 3, 4});
  CHECK(incident_of(inc, Point(2, 0, 1)) == std::vector<int>{2, 5, 6});
  CHECK(incident_of(inc, Point(0, 1, 0)) == std::vector<int>{0, 1, 9});
  CHECK(incident_of(inc, Point(1, 0, 0)) == std::vector<int>{0, 2, 10});
  CHECK(incident_of(inc, Point(1, 1, 0)) == std::vector<int>{0, 11, 12});

  CHECK(check_condition_c(inc));
  CHECK(cycles(inc).empty());
}

TEST_CASE("12-line fixture has the six frozen points and two cycles") {
  auto inc = build_incidence(fixtures::ex36());
  REQUIRE(inc.m_points.size() == 6);

  CHECK(incident_of(inc, Point(0, 0, 1)) == std::vector<int>{1, 2, 4});
  CHECK(incident_of(inc, Point(1, 0, 1)) == std::vector<int>{2, 3, 5});
  CHECK(incident_of(inc, Point(0, 1, 1)) == std::vector<int>{1, 3, 6});
  CHECK(incident_of(inc, Point(2, 4, 1)) == std::vector<int>{7, 8, 9});
  CHECK(incident_of(inc, Point(1, 1, 0)) == std::vector<int>{0, 7, 10});
  CHECK(incident_of(inc, Point(1, -4, 0)) == std::vector<int>{0, 8, 11});

  CHECK(check_condition_c(inc));
  auto cyc = cycles(inc);
  REQUIRE(cyc.size() == 2);
  CHECK(cyc[0].lines == std::vector<int>{0, 7, 8});
  CHECK(cyc[1].lines == std::vector<int>{1, 2, 3});
}

TEST_CASE("three generic lines: double points only") {
  Arrangement arr{{Line(1, 0, 0), Line(0, 1, 0), Line(1, 1, -1)}};
  auto inc = build_incidence(arr);
  CHECK(inc.points.size() == 3);
  CHECK(inc.m_points.empty());
  for (const auto& p : inc.points) CHECK(p.multiplicity == 2);
  CHECK(check_condition_c(inc));  // vacuous
}

TEST_CASE("duplicate lines are rejected") {
  CHECK_THROWS_AS(Arrangement({Line(1, 0, 0), Line(2, 0, 0)}),
                  validation_error);
  CHECK_THROWS_AS(Arrangement({Line(1, 0, 0)}), validation_error);
}

TEST_CASE("pair-count identity holds on all fixtures") {
  for (const auto& arr :
       {fixtures::ex29(), fixtures::ex36(), fixtures::path7(),
        fixtures::two_triangles(), fixtures::quad9(), fixtures::two_quads()}) {
    auto inc = build_incidence(arr);  // build_incidence asserts the identity
    Int pairs = 0;
    for (const auto& mp : inc.points)
      pairs += Int(mp.multiplicity) * (mp.multiplicity - 1) / 2;
    CHECK(pairs == Int(arr.size()) * (arr.size() - 1) / 2);
  }
}

TEST_CASE("incident sets are exact: listed lines pass through, others miss") {
  for (const auto& arr :
       {fixtures::ex29(), fixtures::ex36(), fixtures::star15()}) {
    auto inc = build_incidence(arr);
    for (const auto& mp : inc.points)
      for (int l = 0; l < arr.size(); ++l)
        CHECK(on_line(mp.point, arr.lines[l]) ==
              std::ranges::binary_search(mp.incident, l));
  }
}

TEST_CASE("adjacency of the frozen points") {
  auto inc29 = build_incidence(fixtures::ex29());
  int p4 = inc29.find_point(Point(0, 1, 0));
  auto adj = adjacent_points(inc29, p4);
  // [0:1:1] via L_1, [1:0:0] and [1:1:0] via L_0
  std::vector<Point> pts;
  for (int y : adj) pts.push_back(inc29.points[y].point);
  CHECK(std::ranges::count(pts, Point(0, 1, 1)) == 1);
  CHECK(std::ranges::count(pts, Point(1, 0, 0)) == 1);
  CHECK(std::ranges::count(pts, Point(1, 1, 0)) == 1);
  CHECK(adj.size() == 3);

  auto inc36 = build_incidence(fixtures::ex36());
  int q4 = inc36.find_point(Point(2, 4, 1));
  auto adj36 = adjacent_points(inc36, q4);
  std::vector<Point> pts36;
  for (int y : adj36) pts36.push_back(inc36.points[y].point);
  CHECK(pts36 == std::vector<Point>{Point(1, -4, 0), Point(1, 1, 0)});

  // A double point is not in M's domain.
  int dbl = -1;
  for (int i = 0; i < (int)inc36.points.size(); ++i)
    if (inc36.points[i].multiplicity == 2) dbl = i;
  REQUIRE(dbl >= 0);
  CHECK_THROWS_AS(adjacent_points(inc36, dbl), std::domain_error);
}

TEST_CASE("adjacency matches the brute-force enumeration") {
  for (const auto& arr : {fixtures::ex29(), fixtures::ex36(),
                          fixtures::two_triangles(), fixtures::two_quads()}) {
    auto inc = build_incidence(arr);
    for (int x : inc.m_points)
      CHECK(adjacent_points(inc, x) == brute_adjacent(inc, x));
  }
}

TEST_CASE("isolated triple point has no adjacent points") {
  // three concurrent lines plus two generic ones
  Arrangement arr{{Line(1, 0, 0), Line(0, 1, 0), Line(1, 1, 0),
                   Line(1, 2, -17), Line(3, -1, -29)}};
  auto inc = build_incidence(arr);
  REQUIRE(inc.m_points.size() == 1);
  CHECK(adjacent_points(inc, inc.m_points[0]).empty());
}

TEST_CASE("condition (C) fails when three lines through a point each carry "
          "another triple point") {
  // Central point [0:0:1] on lines 0,1,2; each of those lines carries a
  // second triple point made by two extra lines.
  std::vector<Line> lines{
      Line(1, 0, 0), Line(0, 1, 0), Line(1, 1, 0),
      // second triple point on line 0 (x=0): [0:1:1]
      Line(1, 1, -1), Line(2, 1, -1),
      // on line 1 (y=0): [1:0:1]
      Line(1, 3, -1), Line(1, 5, -1),
      // on line 2 (x+y=0): [1:-1:1]
      Line(1, 2, 1), Line(1, 4, 3),
  };
  auto inc = build_incidence(Arrangement{lines});
  auto center = inc.find_point(Point(0, 0, 1));
  REQUIRE(center >= 0);
  REQUIRE(inc.points[center].multiplicity == 3);
  REQUIRE(inc.find_point(Point(0, 1, 1)) >= 0);
  auto res = check_condition_c(inc);
  CHECK_FALSE(res);
  CHECK(res.witness_point == center);
  CHECK(res.covering_lines.size() >= 3);
}

TEST_CASE("condition (C) is invariant under line reorder") {
  auto base = fixtures::ex36();
  std::vector<Line> flipped(base.lines.rbegin(), base.lines.rend());
  auto inc = build_incidence(Arrangement{flipped});
  CHECK(check_condition_c(inc));
  CHECK(cycles(inc).size() == 2);
}

namespace {

// random unimodular integer matrix: a product of elementary operations
std::array<std::array<Int, 3>, 3> random_unimodular(std::mt19937_64& rng) {
  std::array<std::array<Int, 3>, 3> u{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  std::uniform_int_distribution<int> idx(0, 2), coef(-3, 3), op(0, 5);
  for (int step = 0; step < 12; ++step) {
    int i = idx(rng), j = idx(rng);
    if (op(rng) == 0) {
      for (auto& row : u) std::swap(row[i], row[j]);
    } else if (i != j) {
      Int c = coef(rng);
      for (auto& row : u) row[i] += c * row[j];
    }
  }
  return u;
}

Line transform(const std::array<std::array<Int, 3>, 3>& u, const Line& l) {
  std::array<Rat, 3> out{0, 0, 0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i] += Rat(u[i][j] * l.coeffs[j]);
  return Line(out[0], out[1], out[2]);
}

}  // namespace

TEST_CASE("condition (C) and the cycle census survive projective changes "
          "of coordinates") {
  std::mt19937_64 rng(424242);
  for (const auto& arr : {fixtures::ex29(), fixtures::ex36(),
                          fixtures::two_triangles()}) {
    auto inc = build_incidence(arr);
    bool cc = static_cast<bool>(check_condition_c(inc));
    std::size_t n_m = inc.m_points.size();
    std::size_t n_cyc = cycles(inc).size();
    for (int trial = 0; trial < 5; ++trial) {
      auto u = random_unimodular(rng);
      std::vector<Line> mapped;
      for (const auto& l : arr.lines) mapped.push_back(transform(u, l));
      auto inc2 = build_incidence(Arrangement{mapped});
      CHECK(static_cast<bool>(check_condition_c(inc2)) == cc);
      CHECK(inc2.m_points.size() == n_m);
      CHECK(cycles(inc2).size() == n_cyc);
    }
  }
}
