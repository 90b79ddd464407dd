#include "fuzzy/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fuzzy/aggregation.hpp"
#include "fuzzy/errors.hpp"
#include "fuzzy/estimation.hpp"
#include "fuzzy/format.hpp"
#include "fuzzy/io.hpp"
#include "fuzzy/report_io.hpp"
#include "fuzzy/simulation.hpp"

namespace fuzzy::cli {
namespace {

namespace fs = std::filesystem;

struct Options {
  std::size_t grid = AlphaGrid::kDefaultLevels;
  std::string tnorm = "product";
  double epsilon = 0.05;
  std::string output;

  std::string samples;
  std::string truth;
  std::string sidecar;

  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> threads;
  std::string profiles_dir;

  std::string profile;
  std::string other;
  std::string op;
  std::size_t n = 2;
  std::string shift;
  std::string map = "identity";
  std::string binary = "plus";
  bool envelope = false;

  std::string statistic = "median";
  std::size_t n_max = 50;
  double radius = 0.1;

  std::string table;
};

std::vector<double> parse_pair(const std::string& text, const char* what) {
  std::vector<double> v;
  std::string_view rest = text;
  try {
    while (true) {
      const auto comma = rest.find(',');
      v.push_back(parse_number(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  } catch (const DataError&) {
    throw ConfigError(std::string(what) + ": expected numbers separated by ','");
  }
  return v;
}

AlphaGrid grid_of(const Options& o) {
  if (o.grid < 2) throw ConfigError("--grid needs at least 2 levels");
  return AlphaGrid::uniform(o.grid);
}

AlphaProfile load_profile(const std::string& path, const AlphaGrid& grid) {
  return read_profile(path).resampled(grid);
}

fs::path default_sidecar(const fs::path& output) {
  fs::path p = output;
  p.replace_extension(".meta.json");
  return p;
}

std::function<double(double)> unary_map(const std::string& spec) {
  if (spec == "identity") return [](double x) { return x; };
  if (spec == "neg") return [](double x) { return -x; };
  if (spec == "exp") return [](double x) { return std::exp(x); };
  if (spec.starts_with("scale:")) {
    const double c = parse_pair(spec.substr(6), "--map scale")[0];
    return [c](double x) { return c * x; };
  }
  if (spec.starts_with("affine:")) {
    const auto v = parse_pair(spec.substr(7), "--map affine");
    if (v.size() != 2) throw ConfigError("--map affine:<a>,<b> needs two numbers");
    return [a = v[0], b = v[1]](double x) { return a * x + b; };
  }
  throw ConfigError("--map: unknown map '" + spec +
                    "' (identity, neg, exp, scale:<c>, affine:<a>,<b>)");
}

MonotoneBinaryOp binary_op(const std::string& name) {
  if (name == "plus") return MonotoneBinaryOp::plus();
  if (name == "minus") return MonotoneBinaryOp::minus();
  if (name == "average") return MonotoneBinaryOp::average();
  if (name == "min") return MonotoneBinaryOp::minimum();
  if (name == "max") return MonotoneBinaryOp::maximum();
  throw ConfigError("--f: unknown operation '" + name + "' (plus, minus, average, min, max)");
}

void print_report_summary(const ConvergenceReport& report, std::ostream& out) {
  const bool simulated = report.seed.has_value();
  for (const auto& row : report.rows) {
    out << "n=" << row.n;
    if (simulated) {
      out << " median_dn=" << format_number(row.distance)
          << " max_dn=" << format_number(row.maximum)
          << " modal_distance=" << format_number(row.modal_distance);
    } else {
      out << " sup_distance=" << format_number(row.distance);
      if (margin_found(row.margin)) out << " margin=" << format_number(row.margin);
      if (row.postulated) out << " (postulated)";
    }
    out << "\n";
  }
  out << "monotone=" << (report.monotone ? "yes" : "no") << "\n";
  if (report.upper_bound) out << "note: distances are upper bounds (concave envelope)\n";
}

void write_profiles(const std::string& dir, const std::vector<std::size_t>& ns,
                    const std::vector<AlphaProfile>& profiles) {
  if (dir.empty()) return;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw DataError("cannot create directory '" + dir + "': " + ec.message());
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    write_profile(fs::path(dir) / ("profile_n" + std::to_string(ns[i]) + ".csv"), profiles[i]);
  }
}

int cmd_estimate(const Options& o, std::ostream& out) {
  EstimatorConfig cfg{.kind = TNorm::parse(o.tnorm),
                      .grid = grid_of(o),
                      .epsilon = o.epsilon,
                      .index_rule = {}};
  validate(cfg);
  const Sample sample(parse_sample_text(read_text_file(o.samples)));
  EstimationResult result = estimate_profile(sample, cfg);
  if (!o.truth.empty()) {
    result.dn = dn_statistic(result, load_profile(o.truth, cfg.grid), cfg.epsilon);
  }
  write_profile(o.output, result.profile);
  const fs::path sidecar = o.sidecar.empty() ? default_sidecar(o.output) : fs::path(o.sidecar);
  write_text_file(sidecar, write_estimation_sidecar_json(result));

  const ModalValue m = modal(result.profile);
  out << "n=" << result.n << " tnorm=" << result.tnorm << " modal=[" << format_number(m.lo)
      << ", " << format_number(m.hi) << "]\n";
  if (result.dn) out << "D_n=" << format_number(*result.dn) << "\n";
  return kExitOk;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  const fs::path config_path = o.config;
  ExperimentConfig cfg = parse_experiment_config(read_text_file(config_path),
                                                 config_path.parent_path(), o.grid);
  if (o.seed) cfg.seed = *o.seed;
  if (o.threads) cfg.threads = *o.threads;
  std::vector<AlphaProfile> profiles;
  const ConvergenceReport report =
      run_experiment(cfg, o.profiles_dir.empty() ? nullptr : &profiles);
  write_text_file(o.output, write_report_json(report));
  write_profiles(o.profiles_dir, cfg.schedule, profiles);
  print_report_summary(report, out);
  return kExitOk;
}

int cmd_aggregate(const Options& o, std::ostream& out) {
  const AlphaGrid grid = grid_of(o);
  const AlphaProfile a = load_profile(o.profile, grid);
  AlphaProfile result = a;
  bool bound = false;
  if (o.op == "median") {
    result = median_power(a, o.n, TNorm::parse(o.tnorm));
    if (median_power_postulated(o.n)) out << "note: even n uses the postulated any-n formula\n";
  } else if (o.op == "average") {
    const TNorm kind = TNorm::parse(o.tnorm);
    if (!kind.archimedean()) throw ConfigError("average needs an Archimedean t-norm");
    AverageResult r = average_power(
        a, o.n, kind.generator(),
        o.envelope ? ConcavityPolicy::envelope_bound : ConcavityPolicy::require);
    result = std::move(r.profile);
    bound = r.upper_bound;
  } else if (o.op == "shift") {
    const auto v = parse_pair(o.shift, "--shift");
    if (v.size() != 2 || !(v[0] <= v[1])) throw ConfigError("--shift expects <lo>,<hi>, lo <= hi");
    result = shift_by_crisp(a, CrispInterval{v[0], v[1]});
  } else if (o.op == "envelope") {
    result = concave_envelope(a);
  } else if (o.op == "image") {
    if (o.other.empty()) {
      result = unary_image(unary_map(o.map), a);
    } else {
      result = nfk_binary(binary_op(o.binary), a, load_profile(o.other, grid),
                          TNorm::parse(o.tnorm));
    }
  } else {
    throw ConfigError("--op: unknown operation '" + o.op + "'");
  }
  write_profile(o.output, result);
  const ModalValue m = modal(result);
  out << "op=" << o.op << " modal=[" << format_number(m.lo) << ", " << format_number(m.hi)
      << "]\n";
  if (bound) out << "note: input slopes are not concave; result is an upper bound\n";
  return kExitOk;
}

int cmd_lln(const Options& o, std::ostream& out) {
  Statistic statistic;
  if (o.statistic == "median") {
    statistic = Statistic::median;
  } else if (o.statistic == "average") {
    statistic = Statistic::average;
  } else {
    throw ConfigError("--statistic must be median or average");
  }
  const LlnSequenceSpec spec{.base = load_profile(o.profile, grid_of(o)),
                             .statistic = statistic,
                             .kind = TNorm::parse(o.tnorm),
                             .n_max = o.n_max,
                             .epsilon = o.epsilon,
                             .radius = o.radius};
  const LlnSequence seq = lln_sequence(spec);
  write_text_file(o.output, write_report_json(seq.report));
  std::vector<std::size_t> ns;
  for (const auto& row : seq.report.rows) ns.push_back(row.n);
  write_profiles(o.profiles_dir, ns, seq.profiles);
  print_report_summary(seq.report, out);
  return kExitOk;
}

int cmd_distance(const Options& o, std::ostream& out) {
  const AlphaGrid grid = grid_of(o);
  out << format_number(sup_distance(load_profile(o.profile, grid), load_profile(o.other, grid),
                                    o.epsilon))
      << "\n";
  return kExitOk;
}

int cmd_transform(const Options& o, std::ostream& out) {
  const AlphaGrid grid = grid_of(o);
  const QuantileTable table = parse_quantile_table_csv(read_text_file(o.table));
  const AlphaProfile result = from_cdf(table, grid);
  write_profile(o.output, result);
  const ModalValue m = modal(result);
  out << "modal=[" << format_number(m.lo) << ", " << format_number(m.hi) << "]\n";
  return kExitOk;
}

void add_grid(CLI::App* cmd, Options& o) {
  cmd->add_option("--grid", o.grid, "Number of alpha levels")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Possibility-theory numerics: estimation, aggregation and convergence runs",
               "fuzzyctl"};
  app.require_subcommand(1, 1);

  auto* estimate = app.add_subcommand("estimate", "Estimate a membership profile from a sample");
  estimate->add_option("samples", o.samples, "Sample file (one value per line or CSV with x)")
      ->required();
  estimate->add_option("--tnorm", o.tnorm, "Strict t-norm: product or power:<a>")
      ->capture_default_str();
  estimate->add_option("--epsilon", o.epsilon, "Lowest level used by D_n")->capture_default_str();
  estimate->add_option("--truth", o.truth, "Reference profile; adds D_n to the output");
  estimate->add_option("-o,--output", o.output, "Profile file (.csv or .json)")->required();
  estimate->add_option("--sidecar", o.sidecar, "Metadata JSON (default <output>.meta.json)");
  add_grid(estimate, o);

  auto* simulate = app.add_subcommand("simulate", "Run a seeded Monte Carlo experiment");
  simulate->add_option("config", o.config, "Experiment config JSON")->required();
  simulate->add_option("-o,--output", o.output, "Report JSON")->required();
  simulate->add_option("--seed", o.seed, "Override the config seed");
  simulate->add_option("--threads", o.threads, "Worker threads (0 = hardware)");
  simulate->add_option("--profiles-dir", o.profiles_dir, "Write trial-0 profiles per n here");
  add_grid(simulate, o);

  auto* aggregate = app.add_subcommand("aggregate", "Aggregate or transform a profile");
  aggregate->add_option("profile", o.profile, "Input profile")->required();
  aggregate->add_option("--op", o.op, "median, average, shift, envelope or image")
      ->required()
      ->check(CLI::IsMember({"median", "average", "shift", "envelope", "image"}));
  aggregate->add_option("--n", o.n, "Number of operands for median/average")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  aggregate->add_option("--tnorm", o.tnorm, "t-norm: product, lukasiewicz, minimum, power:<a>")
      ->capture_default_str();
  aggregate->add_option("--shift", o.shift, "Crisp interval <lo>,<hi> for op=shift");
  aggregate->add_option("--map", o.map, "Unary map for op=image")->capture_default_str();
  aggregate->add_option("--with", o.other, "Second profile for a binary op=image");
  aggregate->add_option("--f", o.binary, "Binary map for op=image: plus, minus, average, min, max")
      ->capture_default_str();
  aggregate->add_flag("--envelope", o.envelope,
                      "Allow non-concave input to op=average via its concave envelope");
  aggregate->add_option("-o,--output", o.output, "Profile file (.csv or .json)")->required();
  add_grid(aggregate, o);

  auto* lln = app.add_subcommand("lln", "Convergence of median/average powers to the modal value");
  lln->add_option("profile", o.profile, "Base profile")->required();
  lln->add_option("--statistic", o.statistic, "median or average")->capture_default_str();
  lln->add_option("--n-max", o.n_max, "Largest n")->capture_default_str()->check(
      CLI::PositiveNumber);
  lln->add_option("--tnorm", o.tnorm, "Archimedean t-norm")->capture_default_str();
  lln->add_option("--epsilon", o.epsilon, "Lowest level of the sup-distance")
      ->capture_default_str();
  lln->add_option("--radius", o.radius, "Ball radius for the convergence margin")
      ->capture_default_str();
  lln->add_option("-o,--output", o.output, "Report JSON")->required();
  lln->add_option("--profiles-dir", o.profiles_dir, "Write every n-th profile here");
  add_grid(lln, o);

  auto* distance = app.add_subcommand("distance", "Sup-distance of two profiles above epsilon");
  distance->add_option("a", o.profile, "First profile")->required();
  distance->add_option("b", o.other, "Second profile")->required();
  distance->add_option("--epsilon", o.epsilon, "Lowest level")->capture_default_str();
  add_grid(distance, o);

  auto* transform =
      app.add_subcommand("transform", "Probability-possibility transform of a quantile table");
  transform->add_option("table", o.table, "Quantile table CSV with header p,x")->required();
  transform->add_option("-o,--output", o.output, "Profile file (.csv or .json)")->required();
  add_grid(transform, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*estimate) return cmd_estimate(o, out);
    if (*simulate) return cmd_simulate(o, out);
    if (*aggregate) return cmd_aggregate(o, out);
    if (*lln) return cmd_lln(o, out);
    if (*distance) return cmd_distance(o, out);
    return cmd_transform(o, out);
  } catch (const ConfigError& e) {
    err << "fuzzyctl: config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DomainError& e) {
    err << "fuzzyctl: invalid argument: " << e.what() << "\n";
    return kExitConfig;
  } catch (const UnsupportedError& e) {
    err << "fuzzyctl: unsupported: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DataError& e) {
    err << "fuzzyctl: data error: " << e.what() << "\n";
    return kExitData;
  }
}

}  // namespace fuzzy::cli
