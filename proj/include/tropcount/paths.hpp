#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropcount/lattice.hpp"
#include "tropcount/rational.hpp"

namespace tropcount {

// A lattice path in the triangle with vertices (0,0), (d,0), (0,d), running
// from (0,d) to (d,0) and strictly increasing for x - eps*y. Steps either
// advance one column to the right (any landing height) or move down within
// the current column. Paths produced by enumerate_paths additionally have
// exactly 3d-1 steps, one per marked point.
struct LatticePath {
  int degree = 0;
  std::vector<LatticePoint> points;

  size_t steps() const { return points.empty() ? 0 : points.size() - 1; }
};

inline bool in_triangle(const LatticePoint& p, int d) {
  return p.x >= 0 && p.y >= 0 && p.x + p.y <= d;
}

// Strict comparator order (x ascending, then y descending) plus the fixed
// endpoints; the eps -> 0+ limit of x - eps*y needs no floating eps.
inline bool is_lambda_increasing(const LatticePath& path) {
  const int d = path.degree;
  if (d < 1 || path.points.size() < 2) return false;
  if (path.points.front() != LatticePoint{0, d}) return false;
  if (path.points.back() != LatticePoint{d, 0}) return false;
  for (size_t i = 0; i + 1 < path.points.size(); ++i) {
    LatticePoint s = path.points[i + 1] - path.points[i];
    bool increasing = s.x > 0 || (s.x == 0 && s.y < 0);
    if (!increasing) return false;
  }
  return true;
}

// Full type invariants: lambda-increasing, inside the triangle, and steps
// restricted to one-column-right or in-column-down.
inline bool is_valid_path(const LatticePath& path) {
  if (!is_lambda_increasing(path)) return false;
  for (const auto& p : path.points)
    if (!in_triangle(p, path.degree)) return false;
  for (size_t i = 0; i + 1 < path.points.size(); ++i) {
    LatticePoint s = path.points[i + 1] - path.points[i];
    if (!((s.x == 0 && s.y < 0) || s.x == 1)) return false;
  }
  return true;
}

// Some step has lattice length >= 2, i.e. a vertical drop of two or more
// (column steps are always primitive).
inline bool has_big_step(const LatticePath& path) {
  for (size_t i = 0; i + 1 < path.points.size(); ++i) {
    LatticePoint s = path.points[i + 1] - path.points[i];
    if (std::gcd(s.x, s.y) >= 2) return true;
  }
  return false;
}

// All admissible paths with exactly 3d-1 steps, emitted in strictly
// increasing lexicographic order on their point lists. Steps lying on the
// boundary of the triangle must be unit (they are dual to the weight-1 ends
// of a degree-d curve); only drops on the line x = 0 can violate that, so
// drops there are restricted to size 1.
inline std::vector<LatticePath> enumerate_paths(int d) {
  if (d < 1) throw std::domain_error("enumerate_paths: degree must be at least 1");
  const int total_steps = 3 * d - 1;
  std::vector<LatticePath> out;
  std::vector<LatticePoint> cur;
  cur.push_back({0, d});

  // Largest step count still reachable from (x,y): the remaining right
  // steps plus every drop the remaining columns can hold.
  auto max_steps_from = [d](Int x, Int y) {
    Int c = d - x;
    return c + y + c * (c - 1) / 2;
  };

  auto dfs = [&](auto&& self, Int x, Int y, int used) -> void {
    if (x == d) {
      if (used == total_steps) out.push_back({d, cur});
      return;
    }
    int remaining = total_steps - used;
    if (remaining < d - x || remaining > max_steps_from(x, y)) return;
    Int lowest = x == 0 ? std::max<Int>(y - 1, 0) : 0;
    for (Int ny = lowest; ny < y; ++ny) {  // in-column drops, next point ascending
      cur.push_back({x, ny});
      self(self, x, ny, used + 1);
      cur.pop_back();
    }
    for (Int ny = 0; ny <= d - x - 1; ++ny) {  // column steps
      cur.push_back({x + 1, ny});
      self(self, x + 1, ny, used + 1);
      cur.pop_back();
    }
  };
  dfs(dfs, 0, d, 0);
  return out;
}

inline Int binomial(Int n, Int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (Int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Multiset of step sizes in the Caporaso-Harris encoding:
// counts[k] = number of entries of size k+1.
struct StepSequence {
  std::vector<Int> counts;

  static StepSequence zero() { return {}; }
  static StepSequence units(Int n) {
    StepSequence s;
    if (n > 0) s.counts = {n};
    return s;
  }
  static StepSequence from_sizes(const std::vector<Int>& sizes) {
    StepSequence s;
    for (Int v : sizes) {
      if (v < 1) throw std::invalid_argument("StepSequence: sizes must be positive");
      if (static_cast<size_t>(v) > s.counts.size()) s.counts.resize(v, 0);
      s.counts[v - 1] += 1;
    }
    return s;
  }

  // I(alpha) = sum of all entries.
  Int weight() const {
    Int t = 0;
    for (size_t k = 0; k < counts.size(); ++k) t += static_cast<Int>(k + 1) * counts[k];
    return t;
  }
  // |alpha| = number of entries.
  Int length() const {
    Int t = 0;
    for (Int c : counts) t += c;
    return t;
  }
  bool is_zero() const {
    for (Int c : counts)
      if (c != 0) return false;
    return true;
  }
  bool all_units() const {
    for (size_t k = 1; k < counts.size(); ++k)
      if (counts[k] != 0) return false;
    return true;
  }
  Int at(size_t k) const { return k < counts.size() ? counts[k] : 0; }

  void trim() {
    while (!counts.empty() && counts.back() == 0) counts.pop_back();
  }

  bool contains(const StepSequence& o) const {
    for (size_t k = 0; k < o.counts.size(); ++k)
      if (o.counts[k] > at(k)) return false;
    return true;
  }

  friend StepSequence operator+(const StepSequence& a, const StepSequence& b) {
    StepSequence r;
    r.counts.resize(std::max(a.counts.size(), b.counts.size()), 0);
    for (size_t k = 0; k < r.counts.size(); ++k) r.counts[k] = a.at(k) + b.at(k);
    r.trim();
    return r;
  }
  friend StepSequence operator-(const StepSequence& a, const StepSequence& b) {
    if (!a.contains(b)) throw std::invalid_argument("StepSequence: difference would be negative");
    StepSequence r = a;
    for (size_t k = 0; k < b.counts.size(); ++k) r.counts[k] -= b.counts[k];
    r.trim();
    return r;
  }
  friend bool operator==(const StepSequence& a, const StepSequence& b) {
    size_t n = std::max(a.counts.size(), b.counts.size());
    for (size_t k = 0; k < n; ++k)
      if (a.at(k) != b.at(k)) return false;
    return true;
  }
  friend bool operator!=(const StepSequence& a, const StepSequence& b) { return !(a == b); }

  // Componentwise binomial: product of C(counts[k], k'...).
  Int choose(const StepSequence& k) const {
    Int r = 1;
    size_t n = std::max(counts.size(), k.counts.size());
    for (size_t i = 0; i < n; ++i) r *= binomial(at(i), k.at(i));
    return r;
  }
  // I^alpha = product over entries of their sizes.
  Int weight_power() const {
    Int r = 1;
    for (size_t k = 0; k < counts.size(); ++k)
      for (Int c = 0; c < counts[k]; ++c) r *= static_cast<Int>(k + 1);
    return r;
  }
  // (I^2-1)/2 * alpha = sum over entries of (size^2 - 1)/2.
  Rational half_square_sum() const {
    Rational r(0);
    for (size_t k = 0; k < counts.size(); ++k) {
      Int s = static_cast<Int>(k + 1);
      r += Rational(counts[k]) * Rational(s * s - 1, 2);
    }
    return r;
  }

  std::string to_string() const {
    std::string s = "(";
    StepSequence t = *this;
    t.trim();
    for (size_t k = 0; k < t.counts.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(t.counts[k]);
    }
    return s + ")";
  }
};

// Column data of a path. drops[i] holds the vertical step sizes on the line
// x = i in path order (top to bottom); entry[i] = h(i) is the height at which
// the path enters that line, with h(0) = d and h(d) = 0. The drop order is
// kept so that profile -> path is a bijection; alpha(i) gives the multiset.
struct ColumnProfile {
  int degree = 0;
  std::vector<std::vector<Int>> drops;
  std::vector<Int> entry;

  Int h(int i) const { return entry[i]; }
  Int exit(int i) const {
    Int e = entry[i];
    for (Int s : drops[i]) e -= s;
    return e;
  }
  StepSequence alpha(int i) const { return StepSequence::from_sizes(drops[i]); }
};

inline ColumnProfile column_profile(const LatticePath& path) {
  if (!is_valid_path(path)) throw std::invalid_argument("column_profile: invalid path");
  ColumnProfile pr;
  pr.degree = path.degree;
  pr.drops.assign(path.degree + 1, {});
  pr.entry.assign(path.degree + 1, 0);
  pr.entry[0] = path.degree;
  int line = 0;
  for (size_t i = 0; i + 1 < path.points.size(); ++i) {
    LatticePoint s = path.points[i + 1] - path.points[i];
    if (s.x == 0) {
      pr.drops[line].push_back(-s.y);
    } else {
      ++line;
      pr.entry[line] = path.points[i + 1].y;
    }
  }
  return pr;
}

inline LatticePath profile_to_path(const ColumnProfile& pr) {
  LatticePath path;
  path.degree = pr.degree;
  LatticePoint cur{0, pr.degree};
  path.points.push_back(cur);
  for (int i = 0; i <= pr.degree; ++i) {
    for (Int s : pr.drops[i]) {
      cur.y -= s;
      path.points.push_back(cur);
    }
    if (i < pr.degree) {
      cur = {static_cast<Int>(i + 1), pr.entry[i + 1]};
      path.points.push_back(cur);
    }
  }
  if (!is_valid_path(path)) throw std::invalid_argument("profile_to_path: inconsistent profile");
  return path;
}

// Irreducibility of the curve dual to a set of cells. Curve edges are runs
// of parallel subdivision edges glued through parallelograms (a crossing is
// not a graph vertex); triangles are the 3-valent vertices. The curve is
// irreducible iff the triangles form one component.
inline bool dual_curve_connected(const std::vector<LatticePolygon>& cells) {
  auto pack = [](const LatticePoint& a, const LatticePoint& b) {
    const LatticePoint* p = &a;
    const LatticePoint* q = &b;
    if (*q < *p) std::swap(p, q);
    return (static_cast<std::uint64_t>(p->x) << 48) | (static_cast<std::uint64_t>(p->y) << 32) |
           (static_cast<std::uint64_t>(q->x) << 16) | static_cast<std::uint64_t>(q->y);
  };
  std::vector<std::uint64_t> keys;
  keys.reserve(cells.size() * 4);
  for (const auto& c : cells) {
    const auto& v = c.vertices();
    for (size_t i = 0; i < v.size(); ++i) keys.push_back(pack(v[i], v[(i + 1) % v.size()]));
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  auto seg_id = [&](std::uint64_t k) {
    return static_cast<int>(std::lower_bound(keys.begin(), keys.end(), k) - keys.begin());
  };

  // parent array: one slot per segment, then one per triangle
  int nseg = static_cast<int>(keys.size());
  int ntri = 0;
  for (const auto& c : cells)
    if (c.kind() == PolygonKind::Triangle) ++ntri;
  if (ntri <= 1) return true;
  std::vector<int> parent(static_cast<size_t>(nseg + ntri));
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<size_t>(a)] = b;
  };

  int tri = 0;
  for (const auto& c : cells) {
    const auto& v = c.vertices();
    if (c.kind() == PolygonKind::Parallelogram) {
      unite(seg_id(pack(v[0], v[1])), seg_id(pack(v[2], v[3])));
      unite(seg_id(pack(v[1], v[2])), seg_id(pack(v[3], v[0])));
    }
  }
  for (const auto& c : cells) {
    if (c.kind() != PolygonKind::Triangle) continue;
    const auto& v = c.vertices();
    for (size_t i = 0; i < 3; ++i) unite(nseg + tri, seg_id(pack(v[i], v[(i + 1) % 3])));
    ++tri;
  }
  int root = find(nseg);
  for (int t = 1; t < ntri; ++t)
    if (find(nseg + t) != root) return false;
  return true;
}

namespace detail {

inline std::vector<LatticePoint> diagonal_base(int d) {
  std::vector<LatticePoint> v;
  for (int i = 0; i <= d; ++i) v.push_back({i, d - i});
  return v;
}

inline std::vector<LatticePoint> corner_base(int d) {
  std::vector<LatticePoint> v;
  for (int y = d; y >= 0; --y) v.push_back({0, y});
  for (int x = 1; x <= d; ++x) v.push_back({x, 0});
  return v;
}

struct Completion {
  Int weight = 1;  // product of double areas of the cut triangles
  std::vector<LatticePolygon> cells;
};

// One side of the completion recursion. side > 0 processes left-turn corners
// and bottoms out at the all-unit diagonal path, side < 0 processes
// right-turn corners and bottoms out at the all-unit corner path. Cutting the
// corner lays down the dual triangle cell and weights the branch by twice its
// area; reflecting lays down a parallelogram when the reflected vertex stays
// inside the triangle.
inline void enumerate_completions(std::vector<LatticePoint>& pts, int d, int side,
                                  const std::vector<LatticePoint>& base, Int weight,
                                  std::vector<LatticePolygon>& cells,
                                  std::vector<Completion>& out) {
  if (pts == base) {
    out.push_back({weight, cells});
    return;
  }
  for (size_t k = 1; k + 1 < pts.size(); ++k) {
    LatticePoint in = pts[k] - pts[k - 1];
    LatticePoint out_step = pts[k + 1] - pts[k];
    Int c = cross(in, out_step);
    if ((side > 0 && c > 0) || (side < 0 && c < 0)) {
      LatticePoint a = pts[k - 1], b = pts[k], cc = pts[k + 1];
      {
        std::vector<LatticePoint> cut = pts;
        cut.erase(cut.begin() + static_cast<std::ptrdiff_t>(k));
        cells.push_back(LatticePolygon::triangle(a, b, cc));
        enumerate_completions(cut, d, side, base, weight * std::llabs(c), cells, out);
        cells.pop_back();
      }
      LatticePoint t = a + cc - b;
      if (in_triangle(t, d)) {
        std::vector<LatticePoint> refl = pts;
        refl[k] = t;
        cells.push_back(LatticePolygon::parallelogram(a, b, cc, t));
        enumerate_completions(refl, d, side, base, weight, cells, out);
        cells.pop_back();
      }
      return;
    }
  }
  // no processable corner and not the base path: dead end
}

}  // namespace detail

// Recursive positive/negative completion multiplicity of a path: the two
// corner recursions enumerate the completions on both sides, and a pair of
// completions counts (with the product of its cut weights) iff the assembled
// dual curve is irreducible. Kept independent of the column-wise subdivision
// pipeline; the two must agree path by path.
inline Int mikhalkin_multiplicity(const LatticePath& path) {
  if (!is_valid_path(path)) throw std::invalid_argument("mikhalkin_multiplicity: invalid path");
  const int d = path.degree;
  std::vector<detail::Completion> upper, lower;
  {
    std::vector<LatticePoint> pts = path.points;
    std::vector<LatticePolygon> cells;
    detail::enumerate_completions(pts, d, +1, detail::diagonal_base(d), 1, cells, upper);
    detail::enumerate_completions(pts, d, -1, detail::corner_base(d), 1, cells, lower);
  }
  Int total = 0;
  for (const auto& up : upper)
    for (const auto& lo : lower) {
      std::vector<LatticePolygon> cells = up.cells;
      cells.insert(cells.end(), lo.cells.begin(), lo.cells.end());
      if (dual_curve_connected(cells)) total += up.weight * lo.weight;
    }
  return total;
}

inline std::string path_to_string(const LatticePath& path) {
  std::string s;
  for (size_t i = 0; i < path.points.size(); ++i) {
    if (i) s += " ";
    s += "(" + std::to_string(path.points[i].x) + "," + std::to_string(path.points[i].y) + ")";
  }
  return s;
}

}  // namespace tropcount
