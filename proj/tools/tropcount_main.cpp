// Command line front end: count curves by every pipeline, list paths, render
// subdivisions as SVG, and run the randomized/exhaustive verification suites.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 I/O error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tropcount/counts.hpp"
#include "tropcount/elliptic.hpp"
#include "tropcount/lattice.hpp"
#include "tropcount/paths.hpp"
#include "tropcount/subdivision.hpp"
#include "tropcount/svg.hpp"

namespace {

using namespace tropcount;

struct PathRow {
  int id = 0;
  LatticePath path;
  Int multiplicity = 0;
  Int subdivisions = 0;
  Int contribution = 0;
};

std::vector<PathRow> path_rows(int degree) {
  std::vector<PathRow> rows;
  auto paths = enumerate_paths(degree);
  for (size_t i = 0; i < paths.size(); ++i) {
    PathRow row;
    row.id = static_cast<int>(i);
    row.path = paths[i];
    auto sum = path_summary(column_profile(paths[i]));
    row.subdivisions = sum.subdivisions;
    row.multiplicity = sum.multiplicity;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string json_points(const LatticePath& p) {
  std::string s = "[";
  for (size_t i = 0; i < p.points.size(); ++i) {
    if (i) s += ",";
    s += "[" + std::to_string(p.points[i].x) + "," + std::to_string(p.points[i].y) + "]";
  }
  return s + "]";
}

void print_json(std::ostream& os, int degree, const std::string& pipeline, Int value,
                const std::vector<PathRow>& rows) {
  os << "{\n";
  os << "  \"degree\": " << degree << ",\n";
  os << "  \"pipeline\": \"" << pipeline << "\",\n";
  os << "  \"value\": \"" << value << "\",\n";
  os << "  \"paths\": [\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    os << "    {\"id\": " << r.id << ", \"points\": " << json_points(r.path)
       << ", \"multiplicity\": \"" << r.multiplicity << "\", \"subdivisions\": "
       << r.subdivisions << "}" << (i + 1 < rows.size() ? "," : "") << "\n";
  }
  os << "  ]\n";
  os << "}\n";
}

int cmd_count(int degree, const std::string& pipeline, bool json, bool cross_check) {
  if (degree < 1 || (pipeline == "corollary" && degree < 3)) {
    std::cerr << "error: degree " << degree << " out of range for pipeline " << pipeline << "\n";
    return 2;
  }
  auto t0 = std::chrono::steady_clock::now();
  auto rows = path_rows(degree);

  Int value = 0;
  if (pipeline == "ntrop") {
    for (auto& r : rows) {
      r.contribution = r.multiplicity;
      value += r.contribution;
    }
  } else if (pipeline == "large_j") {
    Int factor = binomial(degree - 1, 2);
    for (auto& r : rows) {
      r.contribution = factor * r.multiplicity;
      value += r.contribution;
    }
  } else if (pipeline == "small_j") {
    Rational total(0);
    for (auto& r : rows) {
      Rational c(0);
      for (const auto& s : generate_subdivisions(r.path))
        c += small_j_factor(s) * Rational(subdivision_multiplicity(s));
      r.contribution = c.as_integer();
      total += c;
    }
    value = total.as_integer();
  } else if (pipeline == "corollary") {
    // per-path contributions are the undivided big-step weights
    Rational total(0);
    for (auto& r : rows) {
      if (!has_big_step(r.path)) continue;
      Rational c = path_small_j_total(column_profile(r.path));
      r.contribution = c.as_integer();
      total += c;
    }
    Rational v = total / Rational(binomial(degree - 1, 2));
    if (!v.is_integer())
      throw std::logic_error("corollary sum is not divisible by the interior point count");
    value = v.as_integer();
  } else {
    std::cerr << "error: unknown pipeline " << pipeline << "\n";
    return 2;
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();

  if (cross_check) {
    Int other = 0;
    std::string other_name;
    if (pipeline == "ntrop" || pipeline == "corollary") {
      other_name = pipeline == "ntrop" ? (degree >= 3 ? "corollary" : "mikhalkin") : "ntrop";
      if (other_name == "corollary")
        other = n_via_corollary(degree);
      else if (other_name == "ntrop")
        other = n_trop(degree);
      else
        for (const auto& r : rows) other += mikhalkin_multiplicity(r.path);
    } else {
      other_name = pipeline == "large_j" ? "small_j" : "large_j";
      other = other_name == "small_j" ? e_trop_small_j(degree) : e_trop_large_j(degree);
    }
    if (other != value) {
      std::cerr << "cross-check FAILED: " << pipeline << " = " << value << " but " << other_name
                << " = " << other << "\n";
      return 1;
    }
  }

  if (json) {
    print_json(std::cout, degree, pipeline, value, rows);
  } else {
    std::cout << "degree " << degree << ", pipeline " << pipeline << "\n";
    std::cout << "value = " << value << "  (" << elapsed << " ms)\n";
    std::cout << "  id  contribution  path\n";
    for (const auto& r : rows)
      std::cout << "  " << r.id << "  " << r.contribution << "  " << path_to_string(r.path)
                << "\n";
  }
  return 0;
}

int cmd_paths(int degree, bool big_only, bool json) {
  if (degree < 1) {
    std::cerr << "error: degree must be at least 1\n";
    return 2;
  }
  auto rows = path_rows(degree);
  std::vector<PathRow> shown;
  Int total = 0;
  for (const auto& r : rows) {
    total += r.multiplicity;
    if (!big_only || has_big_step(r.path)) shown.push_back(r);
  }
  if (json) {
    print_json(std::cout, degree, "ntrop", total, shown);
  } else {
    std::cout << "degree " << degree << ": " << shown.size() << " paths"
              << (big_only ? " with big steps" : "") << ", total multiplicity " << total << "\n";
    std::cout << "  id  mult  subdivisions  path\n";
    for (const auto& r : shown)
      std::cout << "  " << r.id << "  " << r.multiplicity << "  " << r.subdivisions << "  "
                << path_to_string(r.path) << "\n";
  }
  return 0;
}

int cmd_render(int degree, int path_id, const std::string& out) {
  if (degree < 1) {
    std::cerr << "error: degree must be at least 1\n";
    return 2;
  }
  auto paths = enumerate_paths(degree);
  if (path_id < 0 || static_cast<size_t>(path_id) >= paths.size()) {
    std::cerr << "error: path id " << path_id << " out of range (0.." << paths.size() - 1
              << ")\n";
    return 2;
  }
  auto subs = generate_subdivisions(paths[static_cast<size_t>(path_id)]);
  ColumnwiseSubdivision chosen;
  if (subs.empty()) {
    // zero-multiplicity path: draw the bare path on the empty triangle
    chosen.degree = degree;
    chosen.source_path = paths[static_cast<size_t>(path_id)];
  } else {
    chosen = subs.front();
  }
  std::ofstream os(out);
  if (!os) {
    std::cerr << "error: cannot open " << out << " for writing\n";
    return 3;
  }
  write_subdivision_svg(os, chosen);
  os.flush();
  if (!os) {
    std::cerr << "error: write to " << out << " failed\n";
    return 3;
  }
  std::cout << "wrote " << out << " (" << subs.size() << " subdivision(s) available)\n";
  return 0;
}

int verify_pick(long long trials, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Int> coord(0, 8);
  std::uniform_int_distribution<Int> delta(-4, 4);
  long long done = 0;
  while (done < trials) {
    bool make_triangle = (rng() & 1u) != 0;
    try {
      LatticePolygon p = [&]() {
        if (make_triangle)
          return LatticePolygon::triangle({coord(rng), coord(rng)}, {coord(rng), coord(rng)},
                                          {coord(rng), coord(rng)});
        LatticePoint a{coord(rng), coord(rng)};
        LatticePoint u{delta(rng), delta(rng)}, v{delta(rng), delta(rng)};
        return LatticePolygon::parallelogram(a, a + u, a + u + v, a + v);
      }();
      ++done;
      if (!pick_identity_holds(p) || interior_count(p) != interior_count_scan(p) ||
          double_area(p) <= 0) {
        std::cerr << "pick FAILED (seed " << seed << ", trial " << done << ")\n";
        return 1;
      }
    } catch (const std::invalid_argument&) {
      continue;  // degenerate sample, resample
    }
  }
  std::cout << "pick: " << trials << " random polygons ok\n";
  return 0;
}

int verify_walls(long long trials, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Int> coord(-10, 10);
  std::uniform_int_distribution<Int> weight(1, 7);
  for (long long t = 0; t < trials; ++t) {
    Direction u{coord(rng), coord(rng)};
    Direction v1{coord(rng), coord(rng)};
    Direction v2{coord(rng), coord(rng)};
    Int n = weight(rng), m = weight(rng);
    if (std::gcd(n, m) != 1) {
      --t;
      continue;
    }
    auto w = wall_determinants(u, v1, v2, n, m);
    if (!wall_identity_holds(u, v1, v2, n, m) || w.a1 != w.a2) {
      std::cerr << "walls FAILED (seed " << seed << ", trial " << t << ")\n";
      return 1;
    }
  }
  std::cout << "walls: " << trials << " randomized identity checks ok\n";
  return 0;
}

int verify_oracles(int degree) {
  for (const auto& p : enumerate_paths(degree)) {
    Int closed = path_multiplicity(column_profile(p));
    Int recursive = mikhalkin_multiplicity(p);
    Int explicit_sum = 0;
    for (const auto& s : generate_subdivisions(p)) explicit_sum += subdivision_multiplicity(s);
    if (closed != recursive || closed != explicit_sum) {
      std::cerr << "oracles FAILED at path " << path_to_string(p) << ": closed=" << closed
                << " recursive=" << recursive << " explicit=" << explicit_sum << "\n";
      return 1;
    }
  }
  std::cout << "oracles: three-way multiplicity agreement at degree " << degree << " ok\n";
  return 0;
}

int verify_factors(int degree) {
  Int expect = binomial(degree - 1, 2);
  for (const auto& p : enumerate_paths(degree))
    for (const auto& s : generate_subdivisions(p)) {
      Int area2 = 0;
      for (const auto& c : s.cells) {
        area2 += double_area(c);
        if (!pick_identity_holds(c)) {
          std::cerr << "factors FAILED: Pick identity violated\n";
          return 1;
        }
      }
      if (genus(s) != 0 || area2 != static_cast<Int>(degree) * degree ||
          elliptic_factor_large_j(s) != Rational(expect)) {
        std::cerr << "factors FAILED at path " << path_to_string(p) << "\n";
        return 1;
      }
    }
  std::cout << "factors: every subdivision at degree " << degree << " checks out\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tropcount: exact counts of plane tropical curves via lattice paths"};
  app.require_subcommand(1);

  int degree = 3;
  std::string pipeline = "ntrop";
  bool json = false, big_only = false, cross_check = false;
  int path_id = 0;
  std::string out = "subdivision.svg";
  long long trials = 1000;
  unsigned long long seed = 42;
  std::string suite;

  auto* count = app.add_subcommand("count", "count curves of a given degree");
  count->add_option("-d,--degree", degree, "curve degree")->required();
  count->add_option("--pipeline", pipeline, "ntrop|large_j|small_j|corollary");
  count->add_flag("--json", json, "emit JSON");
  count->add_flag("--cross-check", cross_check, "verify against the paired pipeline");

  auto* paths_cmd = app.add_subcommand("paths", "list the lattice paths");
  paths_cmd->add_option("-d,--degree", degree, "curve degree")->required();
  paths_cmd->add_flag("--big-steps-only", big_only, "only paths with a step of size > 1");
  paths_cmd->add_flag("--json", json, "emit JSON");

  auto* render = app.add_subcommand("render", "render a path's subdivision as SVG");
  render->add_option("-d,--degree", degree, "curve degree")->required();
  render->add_option("--path-id", path_id, "path index in enumeration order")->required();
  render->add_option("--out", out, "output SVG file");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "pick|walls|oracles|factors")->required();
  verify->add_option("-d,--degree", degree, "degree for oracles/factors");
  verify->add_option("--trials", trials, "number of randomized trials");
  verify->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (count->parsed()) return cmd_count(degree, pipeline, json, cross_check);
    if (paths_cmd->parsed()) return cmd_paths(degree, big_only, json);
    if (render->parsed()) return cmd_render(degree, path_id, out);
    if (verify->parsed()) {
      if (suite == "pick") return verify_pick(trials, seed);
      if (suite == "walls") return verify_walls(trials, seed);
      if (suite == "oracles") return verify_oracles(degree);
      if (suite == "factors") return verify_factors(degree);
      std::cerr << "error: unknown suite " << suite << "\n";
      return 2;
    }
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
