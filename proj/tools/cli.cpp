#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "planar5/catalog.hpp"
#include "planar5/discharge.hpp"
#include "planar5/error.hpp"
#include "planar5/instances.hpp"
#include "planar5/matcher.hpp"
#include "planar5/reducer.hpp"

namespace planar5::cli {

namespace {

std::string slurp(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
    buf << f.rdbuf();
  }
  return buf.str();
}

std::uint32_t parse_families(const std::string& list) {
  if (list.empty()) return MatchOptions{}.families;
  std::uint32_t mask = 0;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.size() != 2 || (item[0] != 'F' && item[0] != 'f') || item[1] < '1' || item[1] > '8') {
      throw Error(ErrorCode::InvalidArgument, "bad family '" + item + "' (expected F1..F8)");
    }
    mask |= 1u << (item[1] - '0');
  }
  return mask;
}

// The input itself when every face is a triangle, else its triangulation.
Triangulation as_triangulation(const EmbeddedGraph& g) {
  const auto faces = trace_faces(g.view());
  const bool triangular =
      std::all_of(faces.begin(), faces.end(), [](const FaceWalk& f) { return f.length() == 3; });
  return triangular ? Triangulation::from(g) : triangulate(g);
}

Coloring read_coloring(const std::string& text, std::size_t n) {
  Coloring c(n);
  std::istringstream is(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first.rfind("n=", 0) == 0) continue;
    long long v = 0;
    int col = 0;
    std::string rest;
    try {
      std::size_t used = 0;
      v = std::stoll(first, &used);
      if (used != first.size()) throw std::invalid_argument(first);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "coloring line " + std::to_string(line_no) + ": bad vertex id");
    }
    if (!(ls >> col) || (ls >> rest)) {
      throw Error(ErrorCode::ParseError, "coloring line " + std::to_string(line_no) + ": expected '<v> <color>'");
    }
    if (v < 0 || static_cast<std::size_t>(v) >= n) {
      throw Error(ErrorCode::ParseError, "coloring line " + std::to_string(line_no) + ": vertex out of range");
    }
    if (col < 1 || col > 5) {
      throw Error(ErrorCode::ParseError, "coloring line " + std::to_string(line_no) + ": color must be 1..5");
    }
    c.set(static_cast<Vertex>(v), col);
  }
  return c;
}

std::string bound_word(bool ok) { return ok ? "PASS" : "FAIL"; }

// Least-squares slope of log(t) against log(n).
double fit_exponent(const std::vector<std::pair<double, double>>& points) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [n, t] : points) {
    const double x = std::log(n), y = std::log(t);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double k = static_cast<double>(points.size());
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

struct Config {
  std::string output;
  bool audit = false;
  bool verbose = false;
  std::string input = "-";
  std::string coloring;
  std::string families;
  bool table = false;
  std::uint64_t seed = 1;
  int n = 0;
  int flips = 0;
  bool min_degree_5 = false;
  std::vector<int> sizes{250, 500, 1000, 2000, 4000};
  int reps = 1;
};

int cmd_color(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto g = read_pg(slurp(cfg.input, in));
  ColorOptions opt;
  opt.audit = cfg.audit;
  opt.match.families = parse_families(cfg.families);
  const auto result = color_planar(g, opt);
  const auto rep = check_coloring(g, result.coloring);
  for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
    if (g.alive(v)) out << v << ' ' << result.coloring[v] << '\n';
  }
  out << "n=" << rep.n << " v5=" << rep.v5 << " bound=" << bound_word(rep.bound()) << '\n';
  const auto& s = result.stats;
  if (cfg.verbose) {
    err << "levels=" << s.levels << " low_degree=" << s.low_degree_levels << " scans=" << s.scans
        << " fifth=" << s.fifth_assigned << " free_color=" << s.kempe.free_color_calls << " swaps=" << s.kempe.swaps
        << '\n';
  }
  const bool audit_ok = s.bound_breaches == 0 && s.class5_violations == 0 && s.improper_steps == 0 &&
                        s.peel_replay_failures == 0;
  if (!rep.proper() || !rep.bound() || !audit_ok) {
    err << "error: coloring invariant violated\n";
    return 2;
  }
  return 0;
}

int cmd_verify(const Config& cfg, std::istream& in, std::ostream& out, std::ostream&) {
  const auto g = read_pg(slurp(cfg.input, in));
  const auto c = read_coloring(slurp(cfg.coloring, in), g.vertex_count());
  const auto rep = check_coloring(g, c);
  for (const auto& e : rep.violations) out << "violation " << e.u << ' ' << e.v << '\n';
  for (Vertex v : rep.uncolored) out << "uncolored " << v << '\n';
  out << "proper=" << bound_word(rep.proper()) << " n=" << rep.n << " v5=" << rep.v5
      << " bound=" << bound_word(rep.bound()) << '\n';
  return rep.proper() && rep.bound() ? 0 : 1;
}

std::optional<Occurrence> first_match(const Triangulation& t, std::uint32_t families, std::ostream& err) {
  try {
    return find_reducible(t.view(), MatchOptions{families});
  } catch (const CompletenessBreach& e) {
    err << "warning: " << e.what() << '\n';
    return std::nullopt;
  }
}

int cmd_match(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto t = as_triangulation(read_pg(slurp(cfg.input, in)));
  const auto occ = first_match(t, parse_families(cfg.families), err);
  if (!occ) {
    out << "NONE\n";
    return 3;
  }
  out << occ->entry_id << ' ' << family_name(occ->family()) << " anchor=" << occ->anchor
      << " offset=" << occ->offset;
  if (occ->hub_degree() > 0) out << " d=" << occ->hub_degree();
  out << '\n';
  for (std::size_t i = 0; i < occ->map.size(); ++i) out << occ->spec.vertices[i].label << ' ' << occ->map[i] << '\n';
  if (!occ->separators.empty()) {
    out << "separators";
    for (Vertex v : occ->separators) out << ' ' << v;
    out << '\n';
  }
  return 0;
}

int cmd_audit(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto t = as_triangulation(read_pg(slurp(cfg.input, in)));
  const bool matched = first_match(t, parse_families(cfg.families), err).has_value();
  const auto rep = audit(t.view(), matched);
  out << "sum=" << rep.sum << " ok\n";
  for (const auto& [v, c] : rep.nonzero) out << v << ' ' << c.num() << '/' << c.den() << '\n';
  if (rep.inconsistent) {
    out << "inconsistent: minimum degree " << rep.min_degree << ", no occurrence, positive";
    for (Vertex v : rep.positive) out << ' ' << v;
    out << '\n';
    return 4;
  }
  return 0;
}

int cmd_generate(const Config& cfg, std::ostream& out, std::ostream& err) {
  GenSpec spec;
  spec.seed = cfg.seed;
  spec.n = cfg.n;
  spec.flips = cfg.flips;
  spec.min_degree_5 = cfg.min_degree_5;
  GenReport rep;
  const auto g = generate(spec, &rep);
  if (spec.min_degree_5 && rep.shaping_exhausted) {
    err << "note: shaping budget exhausted, minimum degree " << rep.min_degree << '\n';
  }
  out << write_pg(g);
  return 0;
}

int cmd_catalog_validate(const Config& cfg, std::ostream& out, std::ostream& err) {
  std::size_t scenarios = 0, failed = 0;
  for (const auto& entry : builtin_catalog()) {
    const auto report = validate_entry(entry);
    for (const auto& s : report.scenarios) {
      ++scenarios;
      const bool fail = s.status == ScenarioStatus::Fail;
      failed += fail;
      if (!cfg.table) {
        out << report.entry_id << ' ' << s.name << ' ' << (fail ? "FAIL" : "PASS") << '\n';
        continue;
      }
      out << report.entry_id << '\t' << s.name << '\t';
      if (s.status == ScenarioStatus::Unreachable) {
        out << "PASS (vacuous: blocking needs a halfedge)\n";
        continue;
      }
      auto label = [&](int v) -> const std::string& {
        const auto i = static_cast<std::size_t>(v);
        return s.labels.empty() ? entry.vertices[i].label : s.labels[i];
      };
      out << (fail ? "FAIL" : "PASS") << "\tpeel";
      for (int v : s.peel.order) out << ' ' << label(v);
      if (!s.peel.stuck.empty()) {
        out << "\tstuck";
        for (int v : s.peel.stuck) out << ' ' << label(v);
      }
      out << '\n';
    }
  }
  err << builtin_catalog().size() << " entries, " << scenarios << " scenarios, " << failed << " failed\n";
  return failed == 0 ? 0 : 2;
}

int cmd_bench(const Config& cfg, std::ostream& out) {
  std::vector<std::pair<double, double>> points;
  for (int n : cfg.sizes) {
    GenSpec spec;
    spec.seed = cfg.seed;
    spec.n = n;
    spec.flips = 2 * n;
    spec.min_degree_5 = true;
    const auto g = generate(spec);
    std::vector<double> times;
    for (int r = 0; r < std::max(1, cfg.reps); ++r) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto result = color_planar(g);
      const auto t1 = std::chrono::steady_clock::now();
      if (!check_coloring(g, result.coloring).proper()) throw Error(ErrorCode::SchemeExhausted, "improper coloring");
      times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    std::sort(times.begin(), times.end());
    const double ms = times[times.size() / 2];
    points.emplace_back(n, std::max(ms, 1e-3));
    out << "n=" << n << " ms=" << ms << '\n';
  }
  if (points.size() >= 2) out << "exponent=" << fit_exponent(points) << '\n';
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"5-coloring of planar graphs with a small fifth color class", "planar5"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-o,--output", cfg.output, "Write results to a file instead of stdout");
  app.add_flag("-v,--verbose", cfg.verbose, "Print run statistics to stderr");

  auto* color = app.add_subcommand("color", "Color a pg/1 graph");
  color->add_option("input", cfg.input, "pg/1 file, - for stdin");
  color->add_flag("--audit", cfg.audit, "Check per-step invariants while coloring");
  color->add_option("--families", cfg.families, "Comma-separated families the matcher may use");

  auto* verify = app.add_subcommand("verify", "Check a coloring against a graph");
  verify->add_option("graph", cfg.input, "pg/1 file")->required();
  verify->add_option("coloring", cfg.coloring, "coloring file, - for stdin")->required();

  auto* match = app.add_subcommand("match", "Print the first catalog occurrence");
  match->add_option("input", cfg.input, "pg/1 file, - for stdin");
  match->add_option("--families", cfg.families, "Comma-separated families to scan");

  auto* audit_cmd = app.add_subcommand("audit", "Discharging charge report");
  audit_cmd->add_option("input", cfg.input, "pg/1 file, - for stdin");
  audit_cmd->add_option("--families", cfg.families, "Comma-separated families the matcher may use");

  auto* gen = app.add_subcommand("generate", "Write a random triangulation in pg/1");
  gen->add_option("--seed", cfg.seed, "64-bit seed");
  gen->add_option("--n", cfg.n, "Vertex count (>= 4)")->required();
  gen->add_option("--flips", cfg.flips, "Random edge flips after growth");
  gen->add_flag("--min-degree-5", cfg.min_degree_5, "Flip until the minimum degree is 5");

  auto* catalog = app.add_subcommand("catalog", "Configuration catalog");
  catalog->require_subcommand(1);
  auto* validate = catalog->add_subcommand("validate", "Validate every catalog entry");
  validate->add_flag("--table", cfg.table, "Human-readable table with peel orders");

  auto* bench = app.add_subcommand("bench", "Time color over growing sizes");
  bench->add_option("--sizes", cfg.sizes, "Vertex counts")->delimiter(',');
  bench->add_option("--seed", cfg.seed, "Generator seed");
  bench->add_option("--reps", cfg.reps, "Repetitions per size (median reported)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  std::ofstream file;
  if (!cfg.output.empty()) {
    file.open(cfg.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << cfg.output << '\n';
      return 1;
    }
  }
  std::ostream& dst = cfg.output.empty() ? out : file;

  try {
    if (color->parsed()) return cmd_color(cfg, in, dst, err);
    if (verify->parsed()) return cmd_verify(cfg, in, dst, err);
    if (match->parsed()) return cmd_match(cfg, in, dst, err);
    if (audit_cmd->parsed()) return cmd_audit(cfg, in, dst, err);
    if (gen->parsed()) return cmd_generate(cfg, dst, err);
    if (validate->parsed()) return cmd_catalog_validate(cfg, dst, err);
    if (bench->parsed()) return cmd_bench(cfg, dst);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_tripwire(e.code()) ? 2 : 1;
  }
  return 1;
}

}  // namespace planar5::cli
