#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropcount/lattice.hpp"
#include "tropcount/paths.hpp"

namespace tropcount {

// The beta data of a column-wise subdivision compatible with a path:
// beta[i] is the multiset of vertical cell edges on the line x = i below the
// path (they tile [0, L(i)]), beta_prime[i] the multiset above the path
// (tiling [h(i), d-i]). Constraints: beta[0] is all units, I(alpha^i) +
// I(beta^i) = h(i), beta_prime[0] = 0 and d - i - I(beta_prime^i) = h(i),
// plus the componentwise dominances that make the arrangement counts nonzero.
struct BetaSequences {
  std::vector<StepSequence> beta;
  std::vector<StepSequence> beta_prime;
};

struct SubdivisionClass {
  Int count = 0;  // number of irreducible column-wise subdivisions with this beta data
  Int mult = 0;   // product of triangle double areas of any one of them
  BetaSequences betas;
};

// A Newton subdivision of the degree-d triangle assembled column by column.
struct ColumnwiseSubdivision {
  int degree = 0;
  std::vector<LatticePolygon> cells;
  LatticePath source_path;
};

namespace detail {

// All sub-multisets of bound with total weight target, deterministic order.
template <typename F>
inline void submultiset_rec(const StepSequence& bound, int k, Int remaining, StepSequence& cur,
                            F&& fn) {
  if (k < 0) {
    if (remaining == 0) fn(cur);
    return;
  }
  Int size = k + 1;
  Int maxc = std::min(bound.at(static_cast<size_t>(k)), remaining / size);
  for (Int c = maxc; c >= 0; --c) {
    cur.counts[static_cast<size_t>(k)] = c;
    submultiset_rec(bound, k - 1, remaining - c * size, cur, fn);
  }
  cur.counts[static_cast<size_t>(k)] = 0;
}

template <typename F>
inline void for_each_submultiset(const StepSequence& bound, Int target, F&& fn) {
  if (target < 0) return;
  StepSequence cur;
  cur.counts.assign(bound.counts.size(), 0);
  submultiset_rec(bound, static_cast<int>(bound.counts.size()) - 1, target, cur, fn);
}

// Below-path chains beta^0..beta^d, built from the right edge of the triangle
// leftwards since beta^i must embed into alpha^{i+1} + beta^{i+1}.
inline std::vector<std::vector<StepSequence>> lower_beta_chains(const ColumnProfile& pr) {
  std::vector<std::vector<StepSequence>> out;
  const int d = pr.degree;
  if (!pr.alpha(0).all_units()) return out;  // boundary edges on x = 0 must be unit
  std::vector<StepSequence> chain(static_cast<size_t>(d) + 1);
  chain[static_cast<size_t>(d)] = StepSequence::zero();

  auto rec = [&](auto&& self, int i) -> void {
    if (i < 0) {
      out.push_back(chain);
      return;
    }
    StepSequence bound = pr.alpha(i + 1) + chain[static_cast<size_t>(i) + 1];
    Int target = pr.exit(i);
    if (i == 0) {
      StepSequence candidate = StepSequence::units(target);
      if (bound.contains(candidate)) {
        chain[0] = candidate;
        self(self, -1);
      }
      return;
    }
    for_each_submultiset(bound, target, [&](const StepSequence& s) {
      chain[static_cast<size_t>(i)] = s;
      self(self, i - 1);
    });
  };
  rec(rec, d - 1);
  return out;
}

// Above-path chains beta_prime^0..beta_prime^d, built left to right since
// beta_prime^{i+1} must embed into alpha^i + beta_prime^i.
inline std::vector<std::vector<StepSequence>> upper_beta_chains(const ColumnProfile& pr) {
  std::vector<std::vector<StepSequence>> out;
  const int d = pr.degree;
  std::vector<StepSequence> chain(static_cast<size_t>(d) + 1);
  chain[0] = StepSequence::zero();

  auto rec = [&](auto&& self, int i) -> void {
    if (i == d) {
      out.push_back(chain);
      return;
    }
    StepSequence bound = pr.alpha(i) + chain[static_cast<size_t>(i)];
    Int target = static_cast<Int>(d - (i + 1)) - pr.entry[static_cast<size_t>(i) + 1];
    for_each_submultiset(bound, target, [&](const StepSequence& s) {
      chain[static_cast<size_t>(i) + 1] = s;
      self(self, i + 1);
    });
  };
  rec(rec, 0);
  return out;
}

struct ChainStats {
  Int count = 1;      // product of the arrangement binomials (reducible ones included)
  Int mult = 1;       // product of triangle double areas (the I-powers)
  Rational half_sq;   // sum over triangles of (size^2 - 1)/2
};

inline ChainStats lower_stats(const ColumnProfile& pr, const std::vector<StepSequence>& beta) {
  ChainStats st;
  for (int i = 0; i < pr.degree; ++i) {
    StepSequence avail = pr.alpha(i + 1) + beta[static_cast<size_t>(i) + 1];
    StepSequence triangles = avail - beta[static_cast<size_t>(i)];
    st.count *= avail.choose(beta[static_cast<size_t>(i)]);
    st.mult *= triangles.weight_power();
    st.half_sq += triangles.half_square_sum();
  }
  return st;
}

inline ChainStats upper_stats(const ColumnProfile& pr, const std::vector<StepSequence>& bprime) {
  ChainStats st;
  for (int i = 0; i < pr.degree; ++i) {
    StepSequence avail = pr.alpha(i) + bprime[static_cast<size_t>(i)];
    StepSequence triangles = avail - bprime[static_cast<size_t>(i) + 1];
    st.count *= avail.choose(bprime[static_cast<size_t>(i) + 1]);
    st.mult *= triangles.weight_power();
    st.half_sq += triangles.half_square_sum();
  }
  return st;
}

// One tiling of one side of the path, together with the chain of edge
// multisets it induces on the lines.
struct SideTiling {
  std::vector<LatticePolygon> cells;
  std::vector<StepSequence> chain;
};

// Tilings of the region below the path, strips processed right to left.
// ordered_next is the induced bottom-up composition of beta^{i+1} on the
// line x = i+1; parallelograms occupy the matched gaps, left-pointing
// triangles the unmatched ones.
inline std::vector<SideTiling> lower_tilings(const ColumnProfile& pr) {
  std::vector<SideTiling> out;
  const int d = pr.degree;
  if (!pr.alpha(0).all_units()) return out;
  std::vector<LatticePolygon> cells;
  std::vector<std::vector<Int>> chain_sizes(static_cast<size_t>(d) + 1);

  auto rec = [&](auto&& self, int i, const std::vector<Int>& ordered_next) -> void {
    if (i < 0) {
      SideTiling st;
      st.cells = cells;
      st.chain.resize(static_cast<size_t>(d) + 1);
      for (int j = 0; j <= d; ++j)
        st.chain[static_cast<size_t>(j)] = StepSequence::from_sizes(chain_sizes[static_cast<size_t>(j)]);
      out.push_back(std::move(st));
      return;
    }
    std::vector<Int> right = ordered_next;  // bottom-up gaps on the line x = i+1
    const auto& dr = pr.drops[static_cast<size_t>(i) + 1];
    for (auto it = dr.rbegin(); it != dr.rend(); ++it) right.push_back(*it);
    Int need = pr.exit(i);
    int ng = static_cast<int>(right.size());
    for (unsigned mask = 0; mask < (1u << ng); ++mask) {
      Int sum = 0;
      bool ok = true;
      for (int j = 0; j < ng; ++j)
        if (mask & (1u << j)) {
          sum += right[static_cast<size_t>(j)];
          if (i == 0 && right[static_cast<size_t>(j)] != 1) ok = false;
        }
      if (!ok || sum != need) continue;
      size_t mark = cells.size();
      Int a = 0, b = 0;
      std::vector<Int> beta_i;
      for (int j = 0; j < ng; ++j) {
        Int s = right[static_cast<size_t>(j)];
        Int xl = i, xr = i + 1;
        if (mask & (1u << j)) {
          cells.push_back(
              LatticePolygon::parallelogram({xl, a}, {xr, b}, {xr, b + s}, {xl, a + s}));
          beta_i.push_back(s);
          a += s;
        } else {
          cells.push_back(LatticePolygon::triangle({xl, a}, {xr, b}, {xr, b + s}));
        }
        b += s;
      }
      chain_sizes[static_cast<size_t>(i)] = beta_i;
      self(self, i - 1, beta_i);
      cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(mark), cells.end());
    }
  };
  rec(rec, d - 1, {});
  return out;
}

// Tilings of the region above the path, strips processed left to right;
// ordered is the induced bottom-up composition of beta_prime^i on the line
// x = i. Right-pointing triangles occupy the unmatched gaps.
inline std::vector<SideTiling> upper_tilings(const ColumnProfile& pr) {
  std::vector<SideTiling> out;
  const int d = pr.degree;
  std::vector<LatticePolygon> cells;
  std::vector<std::vector<Int>> chain_sizes(static_cast<size_t>(d) + 1);

  auto rec = [&](auto&& self, int i, const std::vector<Int>& ordered) -> void {
    if (i == d) {
      SideTiling st;
      st.cells = cells;
      st.chain.resize(static_cast<size_t>(d) + 1);
      for (int j = 0; j <= d; ++j)
        st.chain[static_cast<size_t>(j)] = StepSequence::from_sizes(chain_sizes[static_cast<size_t>(j)]);
      out.push_back(std::move(st));
      return;
    }
    std::vector<Int> left;  // bottom-up gaps on the line x = i above the path foot
    const auto& dr = pr.drops[static_cast<size_t>(i)];
    for (auto it = dr.rbegin(); it != dr.rend(); ++it) left.push_back(*it);
    for (Int s : ordered) left.push_back(s);
    Int need = static_cast<Int>(d - (i + 1)) - pr.entry[static_cast<size_t>(i) + 1];
    int ng = static_cast<int>(left.size());
    for (unsigned mask = 0; mask < (1u << ng); ++mask) {
      Int sum = 0;
      for (int j = 0; j < ng; ++j)
        if (mask & (1u << j)) sum += left[static_cast<size_t>(j)];
      if (sum != need) continue;
      size_t mark = cells.size();
      Int a = pr.exit(i);
      Int b = pr.entry[static_cast<size_t>(i) + 1];
      std::vector<Int> next;
      for (int j = 0; j < ng; ++j) {
        Int s = left[static_cast<size_t>(j)];
        Int xl = i, xr = i + 1;
        if (mask & (1u << j)) {
          cells.push_back(
              LatticePolygon::parallelogram({xl, a}, {xr, b}, {xr, b + s}, {xl, a + s}));
          next.push_back(s);
          b += s;
        } else {
          cells.push_back(LatticePolygon::triangle({xl, a}, {xl, a + s}, {xr, b}));
        }
        a += s;
      }
      chain_sizes[static_cast<size_t>(i) + 1] = next;
      self(self, i + 1, next);
      cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(mark), cells.end());
    }
  };
  rec(rec, 0, {});
  return out;
}

inline std::string chain_key(const std::vector<StepSequence>& lo,
                             const std::vector<StepSequence>& up) {
  std::string k;
  for (const auto& s : lo) k += s.to_string();
  k += "|";
  for (const auto& s : up) k += s.to_string();
  return k;
}

// Visit every irreducible arrangement of the path once.
template <typename F>
inline void for_each_connected_arrangement(const ColumnProfile& pr, F&& fn) {
  auto lows = lower_tilings(pr);
  if (lows.empty()) return;
  auto ups = upper_tilings(pr);
  std::vector<LatticePolygon> cells;
  for (size_t li = 0; li < lows.size(); ++li)
    for (size_t ui = 0; ui < ups.size(); ++ui) {
      cells.clear();
      cells.insert(cells.end(), lows[li].cells.begin(), lows[li].cells.end());
      cells.insert(cells.end(), ups[ui].cells.begin(), ups[ui].cells.end());
      if (!dual_curve_connected(cells)) continue;
      fn(lows[li], ups[ui], li, ui, cells);
    }
}

}  // namespace detail

// Every admissible (beta, beta_prime) pair for the profile. These are the
// solutions of the arithmetic constraints; whether a given pair carries any
// irreducible arrangement is a separate question answered by
// count_subdivisions_and_multiplicity.
inline std::vector<BetaSequences> enumerate_beta_sequences(const ColumnProfile& pr) {
  std::vector<BetaSequences> out;
  auto lower = detail::lower_beta_chains(pr);
  auto upper = detail::upper_beta_chains(pr);
  for (const auto& lo : lower)
    for (const auto& up : upper) out.push_back({lo, up});
  return out;
}

// Explicit cell lists, one subdivision per irreducible arrangement. Below
// the path every left gap must be matched (triangles there point left,
// vertical side on the right line of their strip), above the path every
// right gap must be matched (triangles point right). Arrangements whose dual
// curve falls apart into several components are dual to no curve through
// points in general position and are dropped.
inline std::vector<ColumnwiseSubdivision> generate_subdivisions(const LatticePath& path) {
  ColumnProfile pr = column_profile(path);
  std::vector<ColumnwiseSubdivision> out;
  detail::for_each_connected_arrangement(
      pr, [&](const detail::SideTiling&, const detail::SideTiling&, size_t, size_t,
              const std::vector<LatticePolygon>& cells) {
        ColumnwiseSubdivision s;
        s.degree = pr.degree;
        s.cells = cells;
        s.source_path = path;
        out.push_back(std::move(s));
      });
  return out;
}

// Per beta-solution: (number of irreducible arrangements, multiplicity, the
// solution). Solutions all of whose arrangements are reducible are omitted.
// Sum of count*mult over the classes is the multiplicity of the path.
inline std::vector<SubdivisionClass> count_subdivisions_and_multiplicity(
    const ColumnProfile& pr) {
  std::map<std::string, size_t> index;
  std::vector<SubdivisionClass> out;
  detail::for_each_connected_arrangement(
      pr, [&](const detail::SideTiling& lo, const detail::SideTiling& up, size_t, size_t,
              const std::vector<LatticePolygon>&) {
        std::string key = detail::chain_key(lo.chain, up.chain);
        auto it = index.find(key);
        if (it == index.end()) {
          Int mult = detail::lower_stats(pr, lo.chain).mult *
                     detail::upper_stats(pr, up.chain).mult;
          index.emplace(key, out.size());
          out.push_back({1, mult, BetaSequences{lo.chain, up.chain}});
        } else {
          out[it->second].count += 1;
        }
      });
  return out;
}

struct PathSummary {
  Int multiplicity = 0;   // sum of triangle-area products over irreducible arrangements
  Int subdivisions = 0;   // number of irreducible arrangements
  Rational small_j_sum;   // sum of mult * (per-triangle (2 Area^2 - 1/2) terms)
};

// One pass over the irreducible arrangements of the path.
inline PathSummary path_summary(const ColumnProfile& pr) {
  auto lows = detail::lower_tilings(pr);
  PathSummary sum;
  if (lows.empty()) return sum;
  auto ups = detail::upper_tilings(pr);
  std::vector<detail::ChainStats> lstats, ustats;
  lstats.reserve(lows.size());
  ustats.reserve(ups.size());
  for (const auto& lo : lows) lstats.push_back(detail::lower_stats(pr, lo.chain));
  for (const auto& up : ups) ustats.push_back(detail::upper_stats(pr, up.chain));
  std::vector<LatticePolygon> cells;
  for (size_t li = 0; li < lows.size(); ++li)
    for (size_t ui = 0; ui < ups.size(); ++ui) {
      cells.clear();
      cells.insert(cells.end(), lows[li].cells.begin(), lows[li].cells.end());
      cells.insert(cells.end(), ups[ui].cells.begin(), ups[ui].cells.end());
      if (!dual_curve_connected(cells)) continue;
      Int mult = lstats[li].mult * ustats[ui].mult;
      sum.multiplicity += mult;
      sum.subdivisions += 1;
      sum.small_j_sum += Rational(mult) * (lstats[li].half_sq + ustats[ui].half_sq);
    }
  return sum;
}

// Multiplicity of the path: total of (product of triangle double areas) over
// its irreducible arrangements.
inline Int path_multiplicity(const ColumnProfile& pr) { return path_summary(pr).multiplicity; }

// Sum over the path's irreducible arrangements of (sum over triangles of
// (2 Area^2 - 1/2)) * multiplicity, in closed form per arrangement. The
// per-path weight of the accelerated count.
inline Rational path_small_j_total(const ColumnProfile& pr) {
  return path_summary(pr).small_j_sum;
}

// Product over triangle cells of their double areas.
inline Int subdivision_multiplicity(const ColumnwiseSubdivision& s) {
  Int m = 1;
  for (const auto& c : s.cells)
    if (c.kind() == PolygonKind::Triangle) m *= double_area(c);
  return m;
}

// Interior lattice points of the big triangle used as cell vertices, minus
// the number of parallelograms.
inline Int genus(const ColumnwiseSubdivision& s) {
  std::set<LatticePoint> verts;
  Int parallelograms = 0;
  for (const auto& c : s.cells) {
    if (c.kind() == PolygonKind::Parallelogram) ++parallelograms;
    for (const auto& v : c.vertices()) verts.insert(v);
  }
  Int interior = 0;
  for (const auto& v : verts)
    if (v.x > 0 && v.y > 0 && v.x + v.y < s.degree) ++interior;
  return interior - parallelograms;
}

}  // namespace tropcount
