#pragma once

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "tropcount/lattice.hpp"
#include "tropcount/rational.hpp"

namespace tropcount {

// Abstract stratum descriptor for a combinatorial type of marked plane
// curves of genus at most 1: the degree, the number of marked points, the
// valences above 3, and how degenerate the cycle image is (deficiency 2:
// a point, 1: a line, 0: neither).
struct CombinatorialType {
  int degree = 0;
  int marked_points = 0;
  int genus = 0;
  std::vector<int> excess_valences;
  int deficiency = 0;

  CombinatorialType(int d, int n, int g, std::vector<int> excess, int def)
      : degree(d), marked_points(n), genus(g), excess_valences(std::move(excess)),
        deficiency(def) {
    if (d < 1) throw std::invalid_argument("CombinatorialType: degree must be positive");
    if (n < 0) throw std::invalid_argument("CombinatorialType: marked points must be >= 0");
    if (g != 0 && g != 1) throw std::invalid_argument("CombinatorialType: genus must be 0 or 1");
    if (def < 0 || def > 2) throw std::invalid_argument("CombinatorialType: deficiency in {0,1,2}");
    if (def > 0 && g != 1)
      throw std::invalid_argument("CombinatorialType: positive deficiency needs genus 1");
    for (int v : excess_valences)
      if (v < 4) throw std::invalid_argument("CombinatorialType: excess valences must be >= 4");
  }

  int excess_sum() const {
    int s = 0;
    for (int v : excess_valences) s += v - 3;
    return s;
  }
};

// Dimension of the stratum: 3d + n + g - 1 - sum(val - 3) + deficiency for
// genus 1, and 3d + n - 1 - sum(val - 3) for rational types.
inline int stratum_dimension(const CombinatorialType& t) {
  int base = 3 * t.degree + t.marked_points - t.excess_sum();
  if (t.genus == 1) return base + t.deficiency;
  return base - 1;
}

enum class Codim1Case { A, B, C, D, E, F, NotCodim1 };

// The six walls of the genus-1 moduli space, one dimension below 3d + n.
inline Codim1Case codim1_case(const CombinatorialType& t) {
  if (t.genus != 1) return Codim1Case::NotCodim1;
  if (stratum_dimension(t) != 3 * t.degree + t.marked_points - 1) return Codim1Case::NotCodim1;
  std::vector<int> ex = t.excess_valences;
  std::sort(ex.begin(), ex.end());
  if (t.deficiency == 0 && ex == std::vector<int>{4}) return Codim1Case::A;
  if (t.deficiency == 1 && ex == std::vector<int>{4, 4}) return Codim1Case::B;
  if (t.deficiency == 1 && ex == std::vector<int>{5}) return Codim1Case::C;
  if (t.deficiency == 2 && ex == std::vector<int>{4, 4, 4}) return Codim1Case::D;
  if (t.deficiency == 2 && ex == std::vector<int>{4, 5}) return Codim1Case::E;
  if (t.deficiency == 2 && ex == std::vector<int>{6}) return Codim1Case::F;
  return Codim1Case::NotCodim1;
}

// Local germ of a flat cycle: two edges of directions n*u and m*u
// (gcd(n,m) = 1, u primitive) closing up along a line, and a reference
// adjacent edge of direction v.
struct LocalCycleData {
  Direction u;
  Direction v;
  Int weight_n = 1;
  Int weight_m = 1;
  bool marked_point_on_cycle = false;

  LocalCycleData(Direction u_, Direction v_, Int n, Int m, bool marked)
      : u(u_), v(v_), weight_n(n), weight_m(m), marked_point_on_cycle(marked) {
    if (!is_primitive(u)) throw std::invalid_argument("LocalCycleData: u must be primitive");
    if (n < 1 || m < 1) throw std::invalid_argument("LocalCycleData: weights must be positive");
    if (std::gcd(n, m) != 1)
      throw std::invalid_argument("LocalCycleData: weights must be coprime");
  }
};

// Weight of a top-dimensional stratum whose curves carry a flat cycle:
// |det(u,v)| in general, halved when the cycle consists of two
// indistinguishable weight-1 edges with no marked point on it.
inline Rational stratum_weight_flat_cycle(const LocalCycleData& c) {
  Int dabs = std::llabs(det2(c.u, c.v));
  if (c.weight_n != c.weight_m) return Rational(dabs);
  // coprime and equal forces n = m = 1
  if (c.marked_point_on_cycle) return Rational(dabs);
  return Rational(dabs, 2);
}

// Weight of a stratum whose curves have a contracted loop at a 5-valent
// vertex with adjacent directions u and v: (|det(u,v)| - 1) / 2.
inline Rational stratum_weight_contracted_loop(const Direction& u, const Direction& v) {
  return Rational(std::llabs(det2(u, v)) - 1, 2);
}

// ev x j multiplicity of a curve with a contracted loop: half of
// (mult(V) - 1) times the multiplicity of the rational curve left after
// removing the loop.
inline Rational mult_contracted_loop(Int mult_vertex, Int mult_rest) {
  return Rational(mult_vertex - 1, 2) * Rational(mult_rest);
}

// ev x j multiplicity of a curve whose cycle contains a contracted bounded
// edge between two 3-valent vertices; u, v are the straightened directions.
inline Int mult_contracted_edge(const Direction& u, const Direction& v, Int mult_rest) {
  return std::llabs(det2(u, v)) * mult_rest;
}

// ev x j multiplicity of a curve with a flat cycle; v1 is the direction of a
// remaining adjacent edge.
inline Rational mult_flat_cycle(const LocalCycleData& c, const Direction& v1, Int mult_rest) {
  Int dabs = std::llabs(det2(c.u, v1));
  if (c.weight_n != c.weight_m) return Rational((c.weight_n + c.weight_m) * dabs * mult_rest);
  return Rational(dabs * mult_rest);
}

// ev x j multiplicity of a curve whose cycle is spanned by three edges of
// directions v1, v2, v3; the determinant sum is the multiplicity of the
// vertex the cycle contracts to.
inline Int mult_three_edge_cycle(const Direction& v1, const Direction& v2, const Direction& v3,
                                 Int mult_rest) {
  Int bracket = std::llabs(det2(v1, v2)) + std::llabs(det2(v1, v3)) + std::llabs(det2(v2, v3));
  return bracket * mult_rest;
}

struct WallDeterminants {
  Int a1 = 0;
  Int a2 = 0;
  Int b3 = 0;
  Int b4 = 0;
};

// Closed forms of the four local wall matrices around a flat cycle. The
// exact matrix build lives in the test suite and pins these signs.
inline WallDeterminants wall_determinants(const Direction& u, const Direction& v1,
                                          const Direction& v2, Int n, Int m) {
  if (n < 1 || m < 1 || std::gcd(n, m) != 1)
    throw std::invalid_argument("wall_determinants: weights must be coprime positive");
  Int d1 = det2(u, v1);
  Int d2 = det2(u, v2);
  Int d12 = det2(v1, v2);
  WallDeterminants w;
  w.a1 = -n * (n + m) * (n + m) * d1 * d2;
  w.a2 = w.a1;
  w.b3 = -d1 * d2 * n * ((n * n + n * m) * (d1 + d2) + n * d12);
  w.b4 = d1 * d2 * n * ((m * m + n * m) * (d1 + d2) - n * d12);
  return w;
}

// The wall-crossing balance: det(u,v2)*detA1 + det(u,v1)*detA2 - detB3 +
// detB4 = 0, exactly, for every input.
inline bool wall_identity_holds(const Direction& u, const Direction& v1, const Direction& v2,
                                Int n, Int m) {
  WallDeterminants w = wall_determinants(u, v1, v2, n, m);
  return det2(u, v2) * w.a1 + det2(u, v1) * w.a2 - w.b3 + w.b4 == 0;
}

}  // namespace tropcount
