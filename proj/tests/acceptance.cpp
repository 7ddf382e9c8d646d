// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.
//
//   relaysec_acceptance [--workers N]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "oracles.hpp"
#include "relaysec/analytic.hpp"
#include "relaysec/emit.hpp"
#include "relaysec/montecarlo.hpp"
#include "relaysec/sweep.hpp"

namespace {

using namespace relaysec;

constexpr SchemeId kSchemes[] = {SchemeId::Direct, SchemeId::MaxMin, SchemeId::Proposed};

struct Report {
  int failed = 0;

  void line(int id, bool ok, const std::string& title, const std::string& detail) {
    std::printf("[%s] criterion %d: %s -- %s\n", ok ? "PASS" : "FAIL", id, title.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failed;
  }
};

void note(const std::string& text) { std::printf("    %s\n", text.c_str()); }

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

Scenario figure_scenario(double mer_db, std::size_t relays) {
  FigureParams fp;
  fp.mer_db = mer_db;
  fp.relay_count = relays;
  return scenario_from_figure(fp);
}

// 1. Closed form inside the 99% Wilson interval of a 10^6-trial estimate.
void closed_form_vs_monte_carlo(Report& r, unsigned workers) {
  const auto start = std::chrono::steady_clock::now();
  int checks = 0, inside = 0;
  for (double mer_db : {0.0, 5.0, 10.0, 15.0}) {
    for (std::size_t relays : {1u, 2u, 4u}) {
      const Scenario s = figure_scenario(mer_db, relays);
      const auto est = estimate_intercepts(kSchemes, s, {1000000, 20261019, 0.99, workers});
      for (std::size_t k = 0; k < 3; ++k) {
        const double p = analytic_intercept(kSchemes[k], s);
        const bool ok = est[k].ci_low <= p && p <= est[k].ci_high;
        ++checks;
        inside += ok ? 1 : 0;
        if (!ok) {
          note(fmt("outside: %s mer=%g dB M=%zu analytic=%.8g CI=[%.8g, %.8g]",
                   std::string(to_string(kSchemes[k])).c_str(), mer_db, relays, p, est[k].ci_low,
                   est[k].ci_high));
        }
      }
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.line(1, inside == checks, "closed form inside 99% Wilson CI (10^6 trials, 12 scenarios)",
         fmt("%d/%d scheme-scenario pairs inside, %.2f s", inside, checks, seconds));
}

// 2. One relay: both relay-selection closed forms agree to 1e-12 relative.
void single_relay_coincidence(Report& r) {
  std::mt19937_64 gen(2);
  std::uniform_real_distribution<double> log_var(-3.0, 3.0);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const Scenario s = Scenario::homogeneous(
        1, std::pow(10.0, log_var(gen)), std::pow(10.0, log_var(gen)), std::pow(10.0, log_var(gen)),
        std::pow(10.0, log_var(gen)), std::pow(10.0, log_var(gen)));
    const double p = proposed_intercept(s);
    worst = std::max(worst, std::abs(maxmin_intercept(s) - p) / p);
  }
  r.line(2, worst <= 1e-12, "M=1 max-min == proposed over 1000 random scenarios",
         fmt("worst relative error %.3g (limit 1e-12)", worst));
}

// 3. No shared draw where the proposed scheme is intercepted but max-min is not.
void per_draw_dominance(Report& r) {
  long violations = 0, proposed_hits = 0, maxmin_hits = 0;
  for (std::size_t relays : {2u, 4u}) {
    for (double mer_db : {0.0, 5.0}) {
      const Scenario s = figure_scenario(mer_db, relays);
      ChannelDraw d;
      for (std::uint64_t t = 0; t < 100000; ++t) {
        SplitMix64 rng = SplitMix64::for_trial(303, t);
        sample_draw_into(s, rng, d);
        const bool proposed = intercept_event(SchemeId::Proposed, d, s);
        const bool maxmin = intercept_event(SchemeId::MaxMin, d, s);
        proposed_hits += proposed;
        maxmin_hits += maxmin;
        if (proposed && !maxmin) ++violations;
      }
    }
  }
  r.line(3, violations == 0, "per-draw dominance of proposed over max-min (M in {2,4})",
         fmt("%ld violations in 4 x 10^5 draws (proposed %ld, max-min %ld intercepts)",
             violations, proposed_hits, maxmin_hits));
}

// 4. Symmetric unit-variance fixed points, each confirmed by an oracle.
void derived_fixed_points(Report& r, unsigned workers) {
  const Scenario s = Scenario::homogeneous(2, 1, 1, 1, 1, 1);
  const double maxmin = maxmin_intercept(s);
  const double proposed = proposed_intercept(s);
  const double direct = direct_intercept(Scenario::homogeneous(0, 1, 1, 1, 1, 1));

  const double enum_oracle = oracle::maxmin_inclusion_exclusion({2.0, 2.0}, 1.0);
  const double beta_oracle = oracle::maxmin_beta(2, 2.0, 1.0);
  const double per_relay = oracle::relay_intercept_quadrature(1.0, 1.0, 1.0);
  const auto est = estimate_intercepts(kSchemes, s, {1000000, 404, 0.99, workers});

  const bool oracles_ok = std::abs(enum_oracle - 8.0 / 15.0) <= 1e-12 &&
                          std::abs(beta_oracle - 8.0 / 15.0) <= 1e-12 &&
                          std::abs(per_relay * per_relay - 4.0 / 9.0) <= 1e-12 &&
                          est[1].ci_low <= 8.0 / 15.0 && 8.0 / 15.0 <= est[1].ci_high &&
                          est[2].ci_low <= 4.0 / 9.0 && 4.0 / 9.0 <= est[2].ci_high &&
                          est[0].ci_low <= 0.5 && 0.5 <= est[0].ci_high;
  const bool values_ok = std::abs(maxmin - 8.0 / 15.0) <= 1e-12 &&
                         std::abs(proposed - 4.0 / 9.0) <= 1e-12 && direct == 0.5;
  r.line(4, oracles_ok && values_ok, "fixed points 8/15, 4/9, 1/2",
         fmt("maxmin-8/15=%.2g proposed-4/9=%.2g direct=%.17g; oracles %s (MC %.5f, %.5f, %.5f)",
             maxmin - 8.0 / 15.0, proposed - 4.0 / 9.0, direct, oracles_ok ? "agree" : "DISAGREE",
             est[0].p_hat, est[1].p_hat, est[2].p_hat));
}

// 5. Estimates and closed forms do not depend on the transmit power.
void power_invariance(Report& r, unsigned workers) {
  bool ok = true;
  for (std::size_t relays : {1u, 2u, 4u}) {
    std::vector<std::vector<InterceptEstimate>> runs;
    std::vector<double> analytic;
    for (double power : {0.1, 1.0, 10.0}) {
      FigureParams fp;
      fp.mer_db = 5.0;
      fp.relay_count = relays;
      fp.power = power;
      const Scenario s = scenario_from_figure(fp);
      runs.push_back(estimate_intercepts(kSchemes, s, {200000, 505, 0.99, workers}));
      for (SchemeId scheme : kSchemes) analytic.push_back(analytic_intercept(scheme, s));
    }
    for (std::size_t p = 1; p < runs.size(); ++p) {
      for (std::size_t k = 0; k < 3; ++k) {
        ok &= runs[p][k].intercepts == runs[0][k].intercepts &&
              runs[p][k].p_hat == runs[0][k].p_hat && runs[p][k].ci_low == runs[0][k].ci_low &&
              runs[p][k].ci_high == runs[0][k].ci_high;
        ok &= analytic[3 * p + k] == analytic[k];
      }
    }
  }
  r.line(5, ok, "power invariance across P in {0.1, 1, 10}",
         ok ? "estimates bit-identical, closed forms identical" : "outputs differ across P");
}

// 6. Shapes of the relay-count and MER sweeps.
void figure_shapes(Report& r) {
  SweepSpec fig3;
  fig3.variable = SweepVariable::RelayCount;
  fig3.from = 1;
  fig3.to = 8;
  fig3.step = 1;
  fig3.fixed.mer_db = 5.0;
  fig3.schemes = {SchemeId::MaxMin, SchemeId::Proposed};
  const auto rows3 = run_sweep(fig3);
  bool fig3_ok = true;
  for (std::size_t k = 0; k + 1 < rows3.size(); k += 2) {
    const double maxmin = rows3[k].analytic, proposed = rows3[k + 1].analytic;
    if (rows3[k].relay_count == 1) {
      fig3_ok &= std::abs(maxmin - proposed) <= 1e-12 * proposed;
    } else {
      fig3_ok &= proposed < maxmin;
      fig3_ok &= maxmin < rows3[k - 2].analytic && proposed < rows3[k - 1].analytic;
    }
  }
  note(fmt("relay-count sweep at 5 dB: %s", fig3_ok ? "both curves strictly decreasing, "
                                                      "proposed < max-min for M >= 2, equal at M = 1"
                                                    : "shape violated"));

  bool monotone = true, direct_above = true;
  for (std::size_t relays : {2u, 4u}) {
    SweepSpec fig2;
    fig2.from = 0;
    fig2.to = 20;
    fig2.step = 1;
    fig2.fixed.relay_count = relays;
    const auto rows2 = run_sweep(fig2);
    for (std::size_t k = 0; k < rows2.size(); ++k) {
      if (k >= 3 && !(rows2[k].analytic < rows2[k - 3].analytic)) {
        monotone = false;
        note(fmt("not decreasing: %s M=%zu at %g dB",
                 std::string(to_string(rows2[k].scheme)).c_str(), relays, rows2[k].mer_db));
      }
      if (rows2[k].scheme != SchemeId::Direct) {
        const double direct = rows2[k - (rows2[k].scheme == SchemeId::MaxMin ? 1 : 2)].analytic;
        if (!(direct > rows2[k].analytic)) {
          direct_above = false;
          note(fmt("direct not above %s: M=%zu at %g dB (direct %.6f, %s %.6f)",
                   std::string(to_string(rows2[k].scheme)).c_str(), relays, rows2[k].mer_db,
                   direct, std::string(to_string(rows2[k].scheme)).c_str(), rows2[k].analytic));
        }
      }
    }
  }
  note(fmt("MER sweep 0..20 dB, M in {2,4}: decreasing in MER %s; direct above both relay "
           "schemes %s",
           monotone ? "yes" : "NO", direct_above ? "yes" : "NO"));
  r.line(6, fig3_ok && monotone && direct_above, "relay-count and MER sweep shapes",
         fmt("relay-count sweep %s, MER monotonicity %s, direct above relay schemes %s",
             fig3_ok ? "ok" : "violated", monotone ? "ok" : "violated",
             direct_above ? "ok" : "violated"));
}

// 7. The same sweep spec gives byte-identical CSV, across worker counts.
void determinism(Report& r, unsigned workers) {
  SweepSpec spec;
  spec.from = 0;
  spec.to = 20;
  spec.step = 2;
  spec.fixed.relay_count = 3;
  spec.trials = 20000;
  spec.seed = 707;
  std::ostringstream a, b, c;
  write_csv(a, run_sweep(spec, 1));
  write_csv(b, run_sweep(spec, 1));
  write_csv(c, run_sweep(spec, std::max(2u, workers)));
  const bool ok = a.str() == b.str() && a.str() == c.str();
  r.line(7, ok, "sweep CSV byte-identical across runs and worker counts",
         fmt("%zu bytes, 1 vs 1 vs %u workers", a.str().size(), std::max(2u, workers)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relaysec acceptance suite"};
  unsigned workers = 0;
  app.add_option("--workers", workers, "Monte-Carlo worker threads (0 = all cores)");
  CLI11_PARSE(app, argc, argv);

  Report report;
  closed_form_vs_monte_carlo(report, workers);
  single_relay_coincidence(report);
  per_draw_dominance(report);
  derived_fixed_points(report, workers);
  power_invariance(report, workers);
  figure_shapes(report);
  determinism(report, workers);

  std::printf("%d of 7 criteria failed\n", report.failed);
  return report.failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
