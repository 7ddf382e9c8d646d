// relaysec: intercept probabilities of direct transmission, max-min relay
// selection and secrecy-optimal relay selection under eavesdropping.
//
//   relaysec analytic --mer-db 5 --relays 2
//   relaysec simulate --mer-db 5 --relays 2 --trials 1000000 --seed 7
//   relaysec sweep --var relay_count --mer-db 5 --scheme maxmin,proposed
//   relaysec sweep --config fig2.cfg --format json --out fig2.json

#include <algorithm>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "relaysec/config.hpp"
#include "relaysec/emit.hpp"
#include "relaysec/model.hpp"
#include "relaysec/sweep.hpp"

namespace {

using namespace relaysec;

enum class Mode { Analytic, Simulate, Sweep };

constexpr std::uint64_t kDefaultSimulateTrials = 100000;

// Flag values are kept as text and routed through the config-key setter so
// the file and the command line share one parser.
struct FlagValues {
  std::vector<std::string> schemes;
  std::optional<std::string> mer_db, alpha_si, alpha_id, alpha_ie, relays, power, noise_var;
  std::optional<std::string> trials, seed, confidence, var, from, to, step;
  std::string format = "csv";
  std::string out;
  std::string config;
  unsigned workers = 1;
};

void add_common_flags(CLI::App& cmd, FlagValues& f, Mode mode) {
  cmd.add_option("--scheme", f.schemes,
                 "Schemes: direct, maxmin, proposed (comma list or repeated)")
      ->delimiter(',');
  cmd.add_option("--mer-db", f.mer_db, "Main-to-eavesdropper ratio in dB");
  cmd.add_option("--alpha-si", f.alpha_si, "sigma2_si / sigma2_sd");
  cmd.add_option("--alpha-id", f.alpha_id, "sigma2_id / sigma2_sd");
  cmd.add_option("--alpha-ie", f.alpha_ie, "sigma2_ie / sigma2_se");
  cmd.add_option("--relays", f.relays, "Number of relays M");
  cmd.add_option("--power", f.power, "Total transmit power P");
  cmd.add_option("--noise-var", f.noise_var, "Receiver noise variance");
  if (mode != Mode::Analytic) {
    cmd.add_option("--trials", f.trials, "Monte-Carlo trials (0 = analytic only)");
    cmd.add_option("--seed", f.seed, "64-bit Monte-Carlo seed");
    cmd.add_option("--confidence", f.confidence, "Wilson interval confidence level");
  }
  if (mode == Mode::Sweep) {
    cmd.add_option("--var", f.var, "Swept variable: mer_db or relay_count");
    cmd.add_option("--from", f.from, "First grid value");
    cmd.add_option("--to", f.to, "Last grid value (inclusive)");
    cmd.add_option("--step", f.step, "Grid spacing");
  }
  cmd.add_option("--format", f.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd.add_option("--out", f.out, "Output path (default: stdout)");
  cmd.add_option("--config", f.config, "key = value config file; flags override it");
  cmd.add_option("--workers", f.workers, "Worker threads (0 = all cores)");
}

std::vector<std::pair<std::string, std::string>> flag_overrides(const FlagValues& f) {
  std::vector<std::pair<std::string, std::string>> kv;
  auto put = [&](const char* key, const std::optional<std::string>& v) {
    if (v) kv.emplace_back(key, *v);
  };
  if (!f.schemes.empty()) {
    std::string joined;
    for (const auto& s : f.schemes) joined += (joined.empty() ? "" : ",") + s;
    kv.emplace_back("schemes", joined);
  }
  put("variable", f.var);
  put("from", f.from);
  put("to", f.to);
  put("step", f.step);
  put("mer_db", f.mer_db);
  put("alpha_si", f.alpha_si);
  put("alpha_id", f.alpha_id);
  put("alpha_ie", f.alpha_ie);
  put("relay_count", f.relays);
  put("power", f.power);
  put("noise_var", f.noise_var);
  put("trials", f.trials);
  put("seed", f.seed);
  put("confidence_level", f.confidence);
  return kv;
}

SweepSpec build_spec(const FlagValues& f, Mode mode) {
  SweepSpec spec;
  spec.fixed.relay_count = 2;
  if (mode == Mode::Simulate) spec.trials = kDefaultSimulateTrials;

  std::vector<std::string> seen;
  if (!f.config.empty()) seen = apply_config_file(f.config, spec);
  for (const auto& [key, value] : flag_overrides(f)) {
    set_config_value(spec, key, value);
    seen.push_back(key);
  }
  auto was_set = [&](const char* key) { return std::find(seen.begin(), seen.end(), key) != seen.end(); };

  if (mode == Mode::Sweep && spec.variable == SweepVariable::RelayCount) {
    if (!was_set("from")) spec.from = 1;
    if (!was_set("to")) spec.to = 8;
    if (!was_set("step")) spec.step = 1;
  }
  if (mode == Mode::Analytic) spec.trials = 0;
  if (mode == Mode::Simulate && spec.trials == 0) {
    throw std::invalid_argument("simulate needs --trials >= 1");
  }
  return spec;
}

void warn_if_heterogeneous(const FigureParams& fp) {
  if (!scenario_from_figure(fp).has_homogeneous_relays()) {
    std::cerr << "warning: per-relay variances differ; the max-min closed form assumes "
                 "identically distributed relays and is approximate here\n";
  }
}

int run(const FlagValues& f, Mode mode) {
  const SweepSpec spec = build_spec(f, mode);
  const OutputFormat format = f.format == "json" ? OutputFormat::Json : OutputFormat::Csv;

  std::vector<SweepRow> rows;
  if (mode == Mode::Sweep) {
    for (double v : sweep_grid(spec)) {
      FigureParams fp = spec.fixed;
      if (spec.variable == SweepVariable::RelayCount) fp.relay_count = static_cast<std::size_t>(v);
      warn_if_heterogeneous(fp);
    }
    rows = run_sweep(spec, f.workers);
  } else {
    warn_if_heterogeneous(spec.fixed);
    rows = run_point({spec.fixed, spec.schemes, spec.trials, spec.seed, spec.confidence_level},
                     f.workers);
  }
  emit(rows, format, f.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intercept probability of relay networks under eavesdropping"};
  app.require_subcommand(1);

  FlagValues analytic_flags, simulate_flags, sweep_flags;
  auto* analytic = app.add_subcommand("analytic", "Closed-form values at one point");
  auto* simulate = app.add_subcommand("simulate", "Closed form plus Monte-Carlo at one point");
  auto* sweep = app.add_subcommand("sweep", "Grid over mer_db or relay_count");
  add_common_flags(*analytic, analytic_flags, Mode::Analytic);
  add_common_flags(*simulate, simulate_flags, Mode::Simulate);
  add_common_flags(*sweep, sweep_flags, Mode::Sweep);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analytic->parsed()) return run(analytic_flags, Mode::Analytic);
    if (simulate->parsed()) return run(simulate_flags, Mode::Simulate);
    return run(sweep_flags, Mode::Sweep);
  } catch (const std::exception& e) {
    std::cerr << "relaysec: error: " << e.what() << '\n';
    return 1;
  }
}
