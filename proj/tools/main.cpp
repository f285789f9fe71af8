#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "kakutani/contfrac.hpp"
#include "kakutani/discrepancy.hpp"
#include "kakutani/enumerate.hpp"
#include "kakutani/errors.hpp"
#include "kakutani/experiments.hpp"
#include "kakutani/report.hpp"
#include "kakutani/spectral.hpp"
#include "kakutani/svg.hpp"
#include "kakutani/verify.hpp"

namespace fs = std::filesystem;
using namespace kak;

namespace {

struct Options {
  std::string config_path;
  std::string scheme_spec;
  std::string grid_spec = "decade:6";
  std::string out_dir;
  long precision = 200;
  unsigned threads = 1;
  std::uint64_t budget = 5'000'000;
  int digits = 12;
  bool svg = false;
  std::size_t levels = 7;
  std::string min_len = "1/100";
  std::string lambda;
  std::optional<std::size_t> ladder_count;
  bool theorem = false;
  std::string family;
};

Scheme scheme_from_spec(const std::string& spec) {
  if (spec.empty()) throw config_error("no scheme given (use --scheme or a config file)");
  for (const auto& [name, s] : bundled_schemes())
    if (name == spec) return s;
  if (spec.rfind("kakutani:", 0) == 0) {
    Rational a = parse_rational(spec.substr(9));
    if (a <= 0 || a >= 1) throw config_error("kakutani ratio must be in (0,1)");
    return Scheme::build({AtomSpec{a}, AtomSpec{1 - a}});
  }
  if (spec.find(':') != std::string::npos) {
    // Inline blocks: "atom:1/2;tail:1/3:1/3:asc"
    std::vector<BlockSpec> blocks;
    std::istringstream in(spec);
    std::string tok;
    while (std::getline(in, tok, ';')) {
      if (tok.empty()) continue;
      std::vector<std::string> parts;
      std::istringstream ts(tok);
      std::string f;
      while (std::getline(ts, f, ':')) parts.push_back(f);
      if (parts[0] == "atom" && parts.size() == 2) {
        blocks.push_back(AtomSpec{parse_rational(parts[1])});
      } else if (parts[0] == "tail" && parts.size() == 4) {
        TailDirection dir;
        if (parts[3] == "asc")
          dir = TailDirection::ascending;
        else if (parts[3] == "desc")
          dir = TailDirection::descending;
        else
          throw config_error("tail direction must be asc or desc");
        blocks.push_back(GeoTailSpec{parse_rational(parts[1]), parse_rational(parts[2]), dir});
      } else {
        throw config_error("bad inline block: " + tok);
      }
    }
    return Scheme::build(std::move(blocks));
  }
  std::ifstream in(spec);
  if (!in) throw config_error("cannot open scheme file: " + spec);
  std::stringstream buf;
  buf << in.rdbuf();
  return Scheme::parse(buf.str());
}

void load_config(Options& opt) {
  if (opt.config_path.empty()) return;
  std::ifstream in(opt.config_path);
  if (!in) throw config_error("cannot open config: " + opt.config_path);
  bool saw_version = false;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    auto e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);
    auto eq = line.find('=');
    if (eq == std::string::npos) throw config_error("expected key = value: " + line);
    auto trim = [](std::string s) {
      auto x = s.find_first_not_of(" \t");
      auto y = s.find_last_not_of(" \t");
      return x == std::string::npos ? std::string() : s.substr(x, y - x + 1);
    };
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key == "schema_version") {
      if (value != "1") throw config_error("unsupported schema_version: " + value);
      saw_version = true;
    } else if (key == "scheme")
      opt.scheme_spec = value;
    else if (key == "grid")
      opt.grid_spec = value;
    else if (key == "precision_bits")
      opt.precision = std::stol(value);
    else if (key == "threads")
      opt.threads = static_cast<unsigned>(std::stoul(value));
    else if (key == "budget")
      opt.budget = std::stoull(value);
    else if (key == "digits")
      opt.digits = std::stoi(value);
    else if (key == "out_dir")
      opt.out_dir = value;
    else if (key == "svg")
      opt.svg = value == "true" || value == "1";
    else if (key == "levels")
      opt.levels = std::stoul(value);
    else if (key == "min_len")
      opt.min_len = value;
    else if (key == "lambda")
      opt.lambda = value;
    else if (key == "ladder")
      opt.ladder_count = std::stoul(value);
    else
      throw config_error("unknown config key: " + key);
  }
  if (!saw_version) throw config_error("config is missing schema_version");
}

Budget make_budget(const Options& opt) { return Budget{opt.budget, opt.budget}; }

std::vector<Rational> make_grid(const Options& opt, const Scheme& s) {
  std::istringstream in(opt.grid_spec);
  std::vector<std::string> parts;
  std::string tok;
  while (std::getline(in, tok, ':')) parts.push_back(tok);
  if (parts.empty()) throw config_error("empty grid spec");
  const Budget budget = make_budget(opt);
  if (parts[0] == "decade" && parts.size() == 2) return decade_grid(std::stoi(parts[1]));
  if (parts[0] == "dense" && parts.size() == 2) return dense_decade_grid(std::stoi(parts[1]));
  if (parts[0] == "ladder" && parts.size() == 2) {
    auto ladder = length_ladder(s, std::stoul(parts[1]), budget);
    return {ladder.values.begin() + 1, ladder.values.end()};
  }
  if (parts[0] == "lattice" && parts.size() == 2) {
    RankReport rank = rank_report(s);
    if (rank.rank != 1) throw not_rank_one_error("lattice grid needs a rank-one scheme");
    return lattice_grid(*rank.minimal_base, 1, std::stoi(parts[1]));
  }
  if (parts[0] == "geometric" && parts.size() == 4) {
    Rational start = parse_rational(parts[1]), ratio = parse_rational(parts[2]);
    int count = std::stoi(parts[3]);
    if (start <= 0 || ratio <= 0 || ratio >= 1) throw config_error("bad geometric grid");
    std::vector<Rational> grid;
    Rational v = start;
    for (int i = 0; i < count; ++i, v *= ratio) grid.push_back(v);
    return grid;
  }
  throw config_error("bad grid spec: " + opt.grid_spec +
                     " (use decade:K, dense:K, ladder:K, lattice:M, geometric:S:R:N)");
}

void write_or_print(const Options& opt, const std::string& filename, const std::string& content) {
  if (opt.out_dir.empty()) {
    std::cout << content;
    return;
  }
  fs::create_directories(opt.out_dir);
  std::ofstream out(fs::path(opt.out_dir) / filename, std::ios::binary);
  out << content;
}

int cmd_partitions(const Options& opt) {
  Scheme s = scheme_from_spec(opt.scheme_spec);
  Budget budget = make_budget(opt);
  Rational min_len = parse_rational(opt.min_len);
  std::vector<PartitionLevel> levels;
  std::ostringstream table;
  for (std::size_t n = 0; n <= opt.levels; ++n) {
    levels.push_back(partition_level(s, n, min_len, budget));
    const auto& lv = levels.back();
    table << "P_" << n;
    if (lv.truncated_mass != 0) table << " (truncated mass " << to_pq(lv.truncated_mass) << ")";
    table << ":";
    for (const auto& e : lv.entries)
      table << " [" << to_pq(e.left) << "," << to_pq(Rational(e.left + e.length)) << "]";
    table << "\n";
  }
  write_or_print(opt, "partitions.txt", table.str());
  if (opt.svg) {
    if (opt.out_dir.empty()) throw config_error("--svg needs --out DIR");
    std::ofstream svg(fs::path(opt.out_dir) / "partitions.svg", std::ios::binary);
    svg << partitions_svg(levels);
  }
  return 0;
}

int cmd_points(const Options& opt) {
  Scheme s = scheme_from_spec(opt.scheme_spec);
  Budget budget = make_budget(opt);
  if (opt.ladder_count) {
    auto ladder = length_ladder(s, *opt.ladder_count, budget);
    write_or_print(opt, "ladder.csv", ladder_csv(ladder, opt.digits));
    return 0;
  }
  if (opt.lambda.empty()) throw config_error("points needs --lambda or --ladder");
  PointSet ps = point_set(s, parse_rational(opt.lambda), budget);
  write_or_print(opt, "points.csv", points_csv(ps, opt.digits));
  return 0;
}

int cmd_count(const Options& opt) {
  Scheme s = scheme_from_spec(opt.scheme_spec);
  write_or_print(opt, "count.csv", count_csv(s, make_grid(opt, s), make_budget(opt), opt.digits));
  return 0;
}

int cmd_analyze(const Options& opt) {
  if (!opt.family.empty()) {
    for (const auto& fam : symbolic_catalog()) {
      if (fam.name != opt.family) continue;
      nlohmann::json j{{"schema_version", 1},
                       {"family", fam.name},
                       {"description", fam.description},
                       {"rank", fam.infinite_rank ? nlohmann::json("infinite")
                                                  : nlohmann::json(fam.rank)},
                       {"entropy_nats", real_str(fam.entropy(0), opt.digits)}};
      if (fam.minimal_base) j["minimal_base"] = to_pq(*fam.minimal_base);
      nlohmann::json sweep = nlohmann::json::array();
      for (const auto& eps : {rat(1, 10), rat(1, 4), rat(1, 2)}) {
        auto v = fam.summability(eps, 0);
        sweep.push_back({{"epsilon", to_pq(eps)},
                         {"value", v ? nlohmann::json(real_str(*v, opt.digits))
                                     : nlohmann::json("infinite")}});
      }
      j["summability"] = sweep;
      write_or_print(opt, "analysis.json", j.dump(2) + "\n");
      return 0;
    }
    throw config_error("unknown symbolic family: " + opt.family);
  }
  Scheme s = scheme_from_spec(opt.scheme_spec);
  nlohmann::json j = analysis_report(s, {rat(1, 10), rat(1, 4), rat(1, 2)}, make_budget(opt),
                                     opt.precision, 30);
  write_or_print(opt, "analysis.json", j.dump(2) + "\n");
  return 0;
}

int cmd_discrepancy(const Options& opt) {
  Scheme s = scheme_from_spec(opt.scheme_spec);
  Budget budget = make_budget(opt);
  auto grid = make_grid(opt, s);
  auto curve = discrepancy_curve(s, grid, budget, opt.threads);
  write_or_print(opt, "discrepancy.csv", discrepancy_csv(curve, opt.digits));
  nlohmann::json j;
  DecayModel model =
      rank_report(s).rank == 1 ? DecayModel::geometric : DecayModel::log_power;
  j["fit"] = fit_json(fit_decay(curve, model), opt.digits);
  if (opt.theorem) j["theorem"] = theorem_json(theorem_check(s, rat(1, 4), budget, opt.precision));
  if (!opt.out_dir.empty()) {
    write_or_print(opt, "fit.json", j.dump(2) + "\n");
  } else {
    std::cout << j.dump(2) << "\n";
  }
  if (opt.svg) {
    if (opt.out_dir.empty()) throw config_error("--svg needs --out DIR");
    std::ofstream svg(fs::path(opt.out_dir) / "discrepancy.svg", std::ios::binary);
    svg << discrepancy_svg(curve);
  }
  return 0;
}

int cmd_verify(const Options& opt) {
  Real::set_default_prec(opt.precision);
  VerifySummary summary = run_verify(make_budget(opt), opt.precision);
  for (const auto& r : summary.results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << "  [" << r.module << "] " << r.instance << ": "
              << r.invariant;
    if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
    std::cout << "\n";
  }
  std::cout << (summary.all_pass ? "verify: all invariants hold\n"
                                 : "verify: FAILURES detected\n");
  if (!summary.all_pass) throw invariant_error("invariant battery failed");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact interval substitution schemes: refinement sets, renewal "
               "asymptotics, and discrepancy decay"};
  app.require_subcommand(1);
  Options opt;
  std::vector<CLI::Option*> tracked;
  auto track = [&](CLI::Option* o) {
    tracked.push_back(o);
    return o;
  };
  app.add_option("--config", opt.config_path, "experiment config file");
  track(app.add_option("--precision", opt.precision, "working precision in bits (>= 64)"));
  track(app.add_option("--threads", opt.threads, "worker threads for per-lambda work"));
  track(app.add_option("--budget", opt.budget, "word/memo budget"));
  track(app.add_option("--out", opt.out_dir, "output directory (default: stdout)"));
  track(app.add_flag("--svg", opt.svg, "also emit SVG figures (needs --out)"));
  track(app.add_option("--digits", opt.digits, "decimal digits in CSV output"));

  auto add_scheme_opt = [&](CLI::App* sub) {
    track(sub->add_option("--scheme", opt.scheme_spec,
                          "bundled name, kakutani:p/q, inline blocks, or a file path"));
  };

  auto* partitions = app.add_subcommand("partitions", "print refinement levels P_0..P_n");
  add_scheme_opt(partitions);
  track(partitions->add_option("--levels", opt.levels, "deepest level to print"));
  track(partitions->add_option("--min-len", opt.min_len,
                               "display threshold for infinite partitions"));

  auto* points = app.add_subcommand("points", "emit X_lambda or the length ladder as CSV");
  add_scheme_opt(points);
  track(points->add_option("--lambda", opt.lambda, "cutoff lambda as p/q"));
  std::size_t ladder_n = 0;
  auto* ladder_opt = points->add_option("--ladder", ladder_n, "emit the first N+1 ladder values");

  auto* count = app.add_subcommand("count", "emit |A_lambda| and |X_lambda| along a grid");
  add_scheme_opt(count);
  track(count->add_option("--grid", opt.grid_spec,
                          "decade:K | dense:K | ladder:K | lattice:M | geometric:S:R:N"));

  auto* analyze = app.add_subcommand("analyze", "emit the analysis report JSON");
  add_scheme_opt(analyze);
  track(analyze->add_option("--family", opt.family, "analyze a symbolic catalog family instead"));

  auto* discrepancy =
      app.add_subcommand("discrepancy", "discrepancy curve, decay fit, optional SVG");
  add_scheme_opt(discrepancy);
  track(discrepancy->add_option("--grid", opt.grid_spec, "grid spec (see count)"));
  track(discrepancy->add_flag("--theorem", opt.theorem, "also run the full theorem dispatch"));

  auto* verify = app.add_subcommand("verify", "run the invariant battery over bundled schemes");
  (void)verify;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    // Config file supplies defaults; explicit flags win.
    if (!opt.config_path.empty()) {
      Options file_opt;
      file_opt.config_path = opt.config_path;
      load_config(file_opt);
      Options flags_only = opt;
      opt = file_opt;
      opt.config_path = flags_only.config_path;
      for (auto* o : tracked) {
        if (o->count() == 0) continue;
        const std::string name = o->get_name();
        if (name == "--precision") opt.precision = flags_only.precision;
        else if (name == "--threads") opt.threads = flags_only.threads;
        else if (name == "--budget") opt.budget = flags_only.budget;
        else if (name == "--out") opt.out_dir = flags_only.out_dir;
        else if (name == "--svg") opt.svg = flags_only.svg;
        else if (name == "--digits") opt.digits = flags_only.digits;
        else if (name == "--scheme") opt.scheme_spec = flags_only.scheme_spec;
        else if (name == "--levels") opt.levels = flags_only.levels;
        else if (name == "--min-len") opt.min_len = flags_only.min_len;
        else if (name == "--lambda") opt.lambda = flags_only.lambda;
        else if (name == "--grid") opt.grid_spec = flags_only.grid_spec;
        else if (name == "--family") opt.family = flags_only.family;
        else if (name == "--theorem") opt.theorem = flags_only.theorem;
      }
    }
    if (opt.precision < 64) throw config_error("precision must be at least 64 bits");
    Real::set_default_prec(opt.precision);
    if (ladder_opt->count() > 0) opt.ladder_count = ladder_n;
    if (partitions->parsed()) return cmd_partitions(opt);
    if (points->parsed()) return cmd_points(opt);
    if (count->parsed()) return cmd_count(opt);
    if (analyze->parsed()) return cmd_analyze(opt);
    if (discrepancy->parsed()) return cmd_discrepancy(opt);
    if (verify->parsed()) return cmd_verify(opt);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
