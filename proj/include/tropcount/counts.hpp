#pragma once

#include <stdexcept>

#include "tropcount/paths.hpp"
#include "tropcount/subdivision.hpp"

namespace tropcount {

// Count of rational curves of degree d through 3d-1 points, with
// multiplicity, summed over the path enumeration.
inline Int n_trop(int d) {
  if (d < 1) throw std::domain_error("n_trop: degree must be at least 1");
  Int total = 0;
  for (const auto& p : enumerate_paths(d)) total += path_multiplicity(column_profile(p));
  return total;
}

// Sum over triangles of (Area - 1/2) plus sum over parallelograms of Area.
// For a genus-0 subdivision this equals the number of interior lattice
// points of the big triangle, C(d-1, 2).
inline Rational elliptic_factor_large_j(const ColumnwiseSubdivision& s) {
  if (genus(s) != 0)
    throw std::invalid_argument("elliptic_factor_large_j: subdivision must have genus 0");
  Rational sum(0);
  for (const auto& c : s.cells) {
    Int a2 = double_area(c);
    sum += c.kind() == PolygonKind::Triangle ? Rational(a2 - 1, 2) : Rational(a2, 2);
  }
  return sum;
}

inline Int e_trop_large_j(int d) {
  if (d < 1) throw std::domain_error("e_trop_large_j: degree must be at least 1");
  return binomial(d - 1, 2) * n_trop(d);
}

// Sum over triangles of (2 Area^2 - 1/2); unimodular triangles contribute 0.
inline Rational small_j_factor(const ColumnwiseSubdivision& s) {
  if (genus(s) != 0) throw std::invalid_argument("small_j_factor: subdivision must have genus 0");
  Rational sum(0);
  for (const auto& c : s.cells)
    if (c.kind() == PolygonKind::Triangle) {
      Int a2 = double_area(c);
      sum += Rational(a2 * a2 - 1, 2);
    }
  return sum;
}

// Elliptic count through the small-j reduction, evaluated per explicitly
// generated subdivision. The half-integer terms cancel in total.
inline Int e_trop_small_j(int d) {
  if (d < 1) throw std::domain_error("e_trop_small_j: degree must be at least 1");
  Rational total(0);
  for (const auto& p : enumerate_paths(d))
    for (const auto& s : generate_subdivisions(p))
      total += small_j_factor(s) * Rational(subdivision_multiplicity(s));
  if (!total.is_integer())
    throw std::logic_error("e_trop_small_j: total is not integral: " + total.to_string());
  return total.as_integer();
}

struct CorollaryRun {
  Int value = 0;
  Int paths_evaluated = 0;  // only paths with a big step are worth visiting
  Int paths_total = 0;
};

// Accelerated rational count: the small-j sum restricted to big-step paths
// (unit-step paths carry factor 0), divided by C(d-1, 2). The division must
// be exact; anything else signals a convention bug.
inline CorollaryRun n_via_corollary_run(int d) {
  if (d < 3) throw std::domain_error("n_via_corollary: formula requires degree >= 3");
  Rational sum(0);
  CorollaryRun run;
  for (const auto& p : enumerate_paths(d)) {
    ++run.paths_total;
    if (!has_big_step(p)) continue;
    ++run.paths_evaluated;
    sum += path_small_j_total(column_profile(p));
  }
  Rational value = sum / Rational(binomial(d - 1, 2));
  if (!value.is_integer())
    throw std::logic_error("n_via_corollary: sum " + sum.to_string() +
                           " is not divisible by the interior point count");
  run.value = value.as_integer();
  return run;
}

inline Int n_via_corollary(int d) { return n_via_corollary_run(d).value; }

}  // namespace tropcount
