#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "tropcount/subdivision.hpp"

using namespace tropcount;

namespace {

LatticePath big_step_cubic() {
  // the unique degree-3 path with a drop of size 2
  return LatticePath{3, {{0, 3}, {0, 2}, {0, 1}, {0, 0}, {1, 2}, {1, 0}, {2, 1}, {2, 0}, {3, 0}}};
}

LatticePath pictured_degree6() {
  return LatticePath{6, {{0, 6}, {0, 5}, {0, 4}, {0, 3}, {0, 2}, {0, 1},
                         {1, 4}, {1, 3}, {1, 1},
                         {2, 3}, {2, 2},
                         {3, 2}, {3, 1},
                         {4, 2}, {4, 1}, {4, 0},
                         {5, 0},
                         {6, 0}}};
}

LatticePath staircase(int d) {
  LatticePath p;
  p.degree = d;
  p.points.push_back({0, d});
  for (int i = 0; i < d; ++i) {
    p.points.push_back({i, d - i - 1});
    p.points.push_back({i + 1, d - i - 1});
  }
  return p;
}

}  // namespace

TEST_CASE("unique beta data of the pictured degree-6 path") {
  auto pr = column_profile(pictured_degree6());
  auto sols = enumerate_beta_sequences(pr);
  REQUIRE(sols.size() == 1);
  const auto& b = sols[0];
  CHECK(b.beta_prime[0].is_zero());
  CHECK(b.beta_prime[1] == StepSequence::units(1));
  CHECK(b.beta_prime[2] == StepSequence::units(1));
  CHECK(b.beta_prime[3] == StepSequence::units(1));
  CHECK(b.beta_prime[4].is_zero());
  CHECK(b.beta_prime[5] == StepSequence::units(1));
  CHECK(b.beta[0] == StepSequence::units(1));
  CHECK(b.beta[1] == StepSequence::units(1));
  CHECK(b.beta[2] == StepSequence::units(2));
  CHECK(b.beta[3] == StepSequence::units(1));
  CHECK(b.beta[4].is_zero());
  CHECK(b.beta[5].is_zero());
}

TEST_CASE("staircase path has exactly one beta solution") {
  auto pr = column_profile(staircase(4));
  CHECK(enumerate_beta_sequences(pr).size() == 1);
  // its unique arrangement is d disjoint lines (a reducible curve), so no
  // irreducible subdivision survives for d >= 2
  CHECK(count_subdivisions_and_multiplicity(pr).empty());
  CHECK(path_multiplicity(pr) == 0);
  CHECK(mikhalkin_multiplicity(staircase(4)) == 0);

  // at degree 1 the staircase is the single counted path
  auto pr1 = column_profile(staircase(1));
  auto classes1 = count_subdivisions_and_multiplicity(pr1);
  REQUIRE(classes1.size() == 1);
  CHECK(classes1[0].count == 1);
  CHECK(classes1[0].mult == 1);
}

TEST_CASE("degree-3 big-step path: one subdivision, two double-area-2 triangles, mult 4") {
  auto path = big_step_cubic();
  auto classes = count_subdivisions_and_multiplicity(column_profile(path));
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].count == 1);
  CHECK(classes[0].mult == 4);

  auto subs = generate_subdivisions(path);
  REQUIRE(subs.size() == 1);
  const auto& s = subs[0];
  int area2_triangles = 0;
  Int total_area2 = 0;
  for (const auto& c : s.cells) {
    total_area2 += double_area(c);
    if (c.kind() == PolygonKind::Triangle && double_area(c) == 2) ++area2_triangles;
    CHECK(pick_identity_holds(c));
  }
  CHECK(area2_triangles == 2);
  CHECK(total_area2 == 9);
  CHECK(subdivision_multiplicity(s) == 4);
  CHECK(genus(s) == 0);
}

TEST_CASE("staircase arrangements are reducible for d >= 2") {
  CHECK(generate_subdivisions(staircase(4)).empty());
  auto subs1 = generate_subdivisions(staircase(1));
  REQUIRE(subs1.size() == 1);
  CHECK(subdivision_multiplicity(subs1[0]) == 1);
}

TEST_CASE("mixed connectivity: some arrangements of a path are reducible") {
  // all-unit degree-4 path whose strip-0 tilings can cut off a line component
  LatticePath p{4, {{0, 4}, {0, 3}, {0, 2}, {0, 1}, {0, 0}, {1, 0},
                    {2, 2}, {2, 1}, {2, 0}, {3, 1}, {3, 0}, {4, 0}}};
  REQUIRE(is_valid_path(p));
  CHECK(enumerate_beta_sequences(column_profile(p)).size() == 1);
  CHECK(generate_subdivisions(p).empty());  // all four arrangements reducible
  CHECK(path_multiplicity(column_profile(p)) == 0);
  CHECK(mikhalkin_multiplicity(p) == 0);
}

TEST_CASE("generated subdivisions tile the triangle") {
  for (int d = 1; d <= 4; ++d) {
    for (const auto& p : enumerate_paths(d)) {
      for (const auto& s : generate_subdivisions(p)) {
        Int total = 0;
        for (const auto& c : s.cells) total += double_area(c);
        CHECK(total == static_cast<Int>(d) * d);
        CHECK(genus(s) == 0);
        for (const auto& c : s.cells) {
          if (c.kind() == PolygonKind::Triangle) CHECK(interior_count(c) == 0);
          CHECK(pick_identity_holds(c));
        }
      }
    }
  }
}

TEST_CASE("three-way multiplicity agreement up to degree 4") {
  for (int d = 1; d <= 4; ++d) {
    for (const auto& p : enumerate_paths(d)) {
      auto pr = column_profile(p);
      Int closed = 0;
      Int n_subs = 0;
      for (const auto& cl : count_subdivisions_and_multiplicity(pr)) {
        closed += cl.count * cl.mult;
        n_subs += cl.count;
      }
      CHECK(closed == path_multiplicity(pr));
      Int explicit_sum = 0;
      Int n_generated = 0;
      for (const auto& s : generate_subdivisions(p)) {
        explicit_sum += subdivision_multiplicity(s);
        ++n_generated;
      }
      CHECK(explicit_sum == closed);
      CHECK(n_generated == n_subs);
      CHECK(mikhalkin_multiplicity(p) == closed);
    }
  }
}

TEST_CASE("genus of hand-built subdivisions") {
  // full unimodular triangulation of the degree-3 triangle: one interior
  // point, no parallelograms
  ColumnwiseSubdivision s;
  s.degree = 3;
  s.source_path = big_step_cubic();
  s.cells = {
      LatticePolygon::triangle({0, 0}, {1, 0}, {0, 1}),
      LatticePolygon::triangle({1, 0}, {1, 1}, {0, 1}),
      LatticePolygon::triangle({1, 0}, {2, 0}, {1, 1}),
      LatticePolygon::triangle({2, 0}, {2, 1}, {1, 1}),
      LatticePolygon::triangle({2, 0}, {3, 0}, {2, 1}),
      LatticePolygon::triangle({0, 1}, {1, 1}, {0, 2}),
      LatticePolygon::triangle({1, 1}, {1, 2}, {0, 2}),
      LatticePolygon::triangle({1, 1}, {2, 1}, {1, 2}),
      LatticePolygon::triangle({0, 2}, {1, 2}, {0, 3}),
  };
  CHECK(genus(s) == 1);
  CHECK(subdivision_multiplicity(s) == 1);

  // a degree-2 subdivision (no interior points at all)
  ColumnwiseSubdivision c2;
  c2.degree = 2;
  c2.source_path = staircase(2);
  c2.cells = {
      LatticePolygon::triangle({0, 0}, {1, 0}, {0, 1}),
      LatticePolygon::triangle({1, 0}, {1, 1}, {0, 1}),
      LatticePolygon::triangle({1, 0}, {2, 0}, {1, 1}),
      LatticePolygon::triangle({0, 1}, {1, 1}, {0, 2}),
  };
  CHECK(genus(c2) == 0);

  // one double-area-3 triangle, rest unimodular
  ColumnwiseSubdivision m3;
  m3.degree = 3;
  m3.source_path = big_step_cubic();
  m3.cells = {
      LatticePolygon::triangle({0, 0}, {3, 0}, {0, 1}),
      LatticePolygon::triangle({0, 1}, {1, 1}, {0, 2}),
  };
  CHECK(subdivision_multiplicity(m3) == 3);
}

TEST_CASE("paths with non-unit boundary drops admit no subdivision") {
  LatticePath p{3, {{0, 3}, {0, 2}, {0, 0}, {1, 2}, {1, 1}, {1, 0}, {2, 1}, {2, 0}, {3, 0}}};
  REQUIRE(is_valid_path(p));
  CHECK(p.steps() == 8);
  CHECK(generate_subdivisions(p).empty());
  CHECK(path_multiplicity(column_profile(p)) == 0);
  CHECK(mikhalkin_multiplicity(p) == 0);
}
