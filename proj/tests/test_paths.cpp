#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "tropcount/paths.hpp"

using namespace tropcount;

namespace {

// Independent brute-force enumeration: all admissible-step paths from (0,d)
// to (d,0) with exactly 3d-1 steps and unit boundary drops, no pruning.
void brute_rec(int d, std::vector<LatticePoint>& cur, int steps, std::vector<LatticePath>& out) {
  LatticePoint p = cur.back();
  if (p.x == d && p.y == 0) {
    if (steps == 3 * d - 1) out.push_back({d, cur});
    return;
  }
  if (steps >= 3 * d - 1) return;
  for (Int ny = p.y - 1; ny >= (p.x == 0 ? p.y - 1 : 0); --ny) {
    if (ny < 0) break;
    cur.push_back({p.x, ny});
    brute_rec(d, cur, steps + 1, out);
    cur.pop_back();
  }
  if (p.x < d) {
    for (Int ny = 0; ny <= d - p.x - 1; ++ny) {
      cur.push_back({p.x + 1, ny});
      brute_rec(d, cur, steps + 1, out);
      cur.pop_back();
    }
  }
}

std::vector<LatticePath> brute_force_paths(int d) {
  std::vector<LatticePath> out;
  std::vector<LatticePoint> cur{{0, d}};
  brute_rec(d, cur, 0, out);
  return out;
}

LatticePath staircase(int d) {
  LatticePath p;
  p.degree = d;
  p.points.push_back({0, d});
  for (int i = 0; i < d; ++i) {
    p.points.push_back({i, d - i - 1});
    p.points.push_back({i + 1, d - i - 1});
  }
  // last pushed point is (d, 0)
  return p;
}

}  // namespace

TEST_CASE("enumerate_paths rejects degree 0") {
  CHECK_THROWS_AS(enumerate_paths(0), std::domain_error);
}

TEST_CASE("degree 1: the single path, cross-checked by brute force") {
  auto paths = enumerate_paths(1);
  auto brute = brute_force_paths(1);
  REQUIRE(paths.size() == brute.size());
  REQUIRE(paths.size() == 1);
  CHECK(paths[0].points ==
        std::vector<LatticePoint>{{0, 1}, {0, 0}, {1, 0}});
  CHECK(mikhalkin_multiplicity(paths[0]) == 1);
}

TEST_CASE("brute force agreement and determinism for small degrees") {
  for (int d = 1; d <= 3; ++d) {
    auto paths = enumerate_paths(d);
    auto brute = brute_force_paths(d);
    std::vector<std::vector<LatticePoint>> a, b;
    for (const auto& p : paths) a.push_back(p.points);
    for (const auto& p : brute) b.push_back(p.points);
    std::sort(b.begin(), b.end());
    CHECK(a == b);  // enumeration is already sorted and complete
    CHECK(std::is_sorted(a.begin(), a.end()));
    CHECK(std::adjacent_find(a.begin(), a.end()) == a.end());
  }
}

TEST_CASE("every enumerated path is valid with 3d-1 steps") {
  for (int d = 1; d <= 4; ++d) {
    for (const auto& p : enumerate_paths(d)) {
      CHECK(is_lambda_increasing(p));
      CHECK(is_valid_path(p));
      CHECK(p.steps() == static_cast<size_t>(3 * d - 1));
    }
  }
}

TEST_CASE("degree 3 has exactly one path with a big step") {
  auto paths = enumerate_paths(3);
  int big = 0;
  for (const auto& p : paths) big += has_big_step(p) ? 1 : 0;
  CHECK(big == 1);
}

TEST_CASE("is_lambda_increasing rejections") {
  LatticePath stair = staircase(3);
  CHECK(is_lambda_increasing(stair));
  CHECK(!has_big_step(stair));

  LatticePath repeated{3, {{0, 3}, {0, 2}, {0, 2}, {3, 0}}};
  CHECK(!is_lambda_increasing(repeated));

  LatticePath reversed{3, {{3, 0}, {0, 3}}};
  CHECK(!is_lambda_increasing(reversed));

  LatticePath up{3, {{0, 3}, {0, 2}, {0, 3}, {3, 0}}};
  CHECK(!is_lambda_increasing(up));
}

TEST_CASE("column profile of the pictured degree-6 path") {
  // drops per line: 5 units, then {1,2}, {1}, {1}, {2 units}; entry heights 4,3,2,2,0
  LatticePath p{6, {{0, 6}, {0, 5}, {0, 4}, {0, 3}, {0, 2}, {0, 1},
                    {1, 4}, {1, 3}, {1, 1},
                    {2, 3}, {2, 2},
                    {3, 2}, {3, 1},
                    {4, 2}, {4, 1}, {4, 0},
                    {5, 0},
                    {6, 0}}};
  REQUIRE(is_valid_path(p));
  CHECK(p.steps() == 17);  // 3*6 - 1
  ColumnProfile pr = column_profile(p);
  CHECK(pr.alpha(0) == StepSequence::units(5));
  CHECK(pr.alpha(1) == StepSequence::from_sizes({1, 2}));
  CHECK(pr.alpha(2) == StepSequence::units(1));
  CHECK(pr.alpha(3) == StepSequence::units(1));
  CHECK(pr.alpha(4) == StepSequence::units(2));
  CHECK(pr.alpha(5).is_zero());
  CHECK(pr.alpha(6).is_zero());
  CHECK(pr.h(1) == 4);
  CHECK(pr.h(2) == 3);
  CHECK(pr.h(3) == 2);
  CHECK(pr.h(4) == 2);
  CHECK(pr.h(5) == 0);
  CHECK(profile_to_path(pr).points == p.points);
}

TEST_CASE("staircase profile: unit drops, strictly decreasing heights") {
  const int d = 5;
  LatticePath p = staircase(d);
  ColumnProfile pr = column_profile(p);
  for (int i = 0; i < d; ++i) CHECK(pr.alpha(i) == StepSequence::units(1));
  for (int i = 1; i + 1 <= d - 1; ++i) CHECK(pr.h(i) > pr.h(i + 1));
}

TEST_CASE("path <-> profile round trips") {
  for (const auto& p : enumerate_paths(3)) {
    CHECK(profile_to_path(column_profile(p)).points == p.points);
  }
}

TEST_CASE("step sequence arithmetic") {
  StepSequence a = StepSequence::from_sizes({1, 1, 2});  // (2,1)
  CHECK(a.weight() == 4);
  CHECK(a.length() == 3);
  CHECK(!a.all_units());
  CHECK(StepSequence::units(3).all_units());
  CHECK(a.weight_power() == 2);
  CHECK((a + StepSequence::units(1)).weight() == 5);
  CHECK((a - StepSequence::units(1)) == StepSequence::from_sizes({1, 2}));
  CHECK_THROWS_AS(StepSequence::units(1) - StepSequence::from_sizes({2}), std::invalid_argument);
  // componentwise binomials
  CHECK(StepSequence::from_sizes({1, 1, 2}).choose(StepSequence::from_sizes({1, 2})) == 2);
  // (I^2-1)/2: one size-2 entry gives 3/2, size-3 gives 4
  CHECK(StepSequence::from_sizes({2}).half_square_sum() == Rational(3, 2));
  CHECK(StepSequence::from_sizes({3}).half_square_sum() == Rational(4));
  CHECK(StepSequence::units(7).half_square_sum() == Rational(0));
}

TEST_CASE("mikhalkin multiplicities: degree 2 and degree 3 totals") {
  Int total2 = 0;
  for (const auto& p : enumerate_paths(2)) total2 += mikhalkin_multiplicity(p);
  CHECK(total2 == 1);

  Int total3 = 0;
  Int big_mult = 0;
  for (const auto& p : enumerate_paths(3)) {
    Int m = mikhalkin_multiplicity(p);
    total3 += m;
    if (has_big_step(p)) big_mult = m;
  }
  CHECK(total3 == 12);
  CHECK(big_mult == 4);  // the unique big-step cubic path
}

TEST_CASE("a path whose completions admit no subdivision has multiplicity 0") {
  // ends on the hypotenuse side of the last column; the lower completion is stuck
  LatticePath p{2, {{0, 2}, {0, 1}, {0, 0}, {1, 1}, {1, 0}, {2, 0}}};
  REQUIRE(is_valid_path(p));
  LatticePath stuck{2, {{0, 2}, {0, 1}, {0, 0}, {1, 1}, {2, 0}}};
  REQUIRE(is_valid_path(stuck));
  CHECK(mikhalkin_multiplicity(p) == 1);
  CHECK(mikhalkin_multiplicity(stuck) == 0);
}
