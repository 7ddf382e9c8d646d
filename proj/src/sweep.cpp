#include "relaysec/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "relaysec/analytic.hpp"
#include "relaysec/montecarlo.hpp"

namespace relaysec {
namespace {

// Tolerates accumulated rounding when (to - from) / step is meant to be whole.
constexpr double kGridSlack = 1e-9;

FigureParams params_at(const SweepSpec& spec, double value) {
  FigureParams fp = spec.fixed;
  if (spec.variable == SweepVariable::MerDb) {
    fp.mer_db = value;
  } else {
    fp.relay_count = static_cast<std::size_t>(std::llround(value));
  }
  return fp;
}

bool is_integral(double v) { return std::isfinite(v) && v == std::floor(v); }

}  // namespace

void SweepSpec::validate() const {
  if (!std::isfinite(from) || !std::isfinite(to)) {
    throw std::invalid_argument("sweep bounds must be finite");
  }
  if (from > to) throw std::invalid_argument("sweep requires from <= to");
  if (!(step > 0.0) || !std::isfinite(step)) throw std::invalid_argument("sweep step must be > 0");
  if (schemes.empty()) throw std::invalid_argument("sweep needs at least one scheme");
  if (!(confidence_level > 0.0 && confidence_level < 1.0)) {
    throw std::invalid_argument("confidence level must lie in (0, 1)");
  }
  if (variable == SweepVariable::RelayCount) {
    if (!is_integral(from) || !is_integral(to) || !is_integral(step)) {
      throw std::invalid_argument("relay_count sweeps need integer from/to/step");
    }
    if (from < 0.0) throw std::invalid_argument("relay_count sweep must start at >= 0");
  }
  FigureParams probe = fixed;
  probe.relay_count = 1;
  probe.validate();
}

std::vector<SweepRow> run_point(const PointRequest& req, unsigned mc_workers) {
  if (req.schemes.empty()) throw std::invalid_argument("no schemes requested");
  const Scenario s = scenario_from_figure(req.params);
  for (SchemeId scheme : req.schemes) {
    if (uses_relays(scheme) && s.relay_count == 0) {
      throw std::invalid_argument(std::string(to_string(scheme)) + " needs relay_count >= 1");
    }
  }

  std::vector<SweepRow> rows;
  rows.reserve(req.schemes.size());
  for (SchemeId scheme : req.schemes) {
    SweepRow row;
    row.scheme = scheme;
    row.relay_count = req.params.relay_count;
    row.mer_db = req.params.mer_db;
    row.alpha_si = req.params.alpha_si;
    row.alpha_id = req.params.alpha_id;
    row.alpha_ie = req.params.alpha_ie;
    row.analytic = analytic_intercept(scheme, s);
    row.trials = req.trials;
    row.seed = req.seed;
    rows.push_back(row);
  }

  if (req.trials > 0) {
    const auto estimates = estimate_intercepts(
        req.schemes, s, {req.trials, req.seed, req.confidence_level, mc_workers});
    for (std::size_t k = 0; k < rows.size(); ++k) {
      rows[k].mc_p_hat = estimates[k].p_hat;
      rows[k].mc_ci_low = estimates[k].ci_low;
      rows[k].mc_ci_high = estimates[k].ci_high;
    }
  }
  return rows;
}

std::vector<double> sweep_grid(const SweepSpec& spec) {
  spec.validate();
  const auto steps = static_cast<std::size_t>(std::floor((spec.to - spec.from) / spec.step + kGridSlack));
  std::vector<double> grid;
  grid.reserve(steps + 1);
  for (std::size_t k = 0; k <= steps; ++k) {
    grid.push_back(spec.from + static_cast<double>(k) * spec.step);
  }
  if (grid.empty()) throw std::invalid_argument("empty sweep grid");
  return grid;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned workers) {
  const std::vector<double> grid = sweep_grid(spec);
  std::vector<std::vector<SweepRow>> per_point(grid.size());

  auto evaluate = [&](std::size_t k) {
    PointRequest req{params_at(spec, grid[k]), spec.schemes, spec.trials, spec.seed,
                     spec.confidence_level};
    per_point[k] = run_point(req);
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, grid.size()));
  if (workers <= 1) {
    for (std::size_t k = 0; k < grid.size(); ++k) evaluate(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (std::size_t k = next++; k < grid.size(); k = next++) {
            try {
              evaluate(k);
            } catch (...) {
              std::lock_guard lock(failure_mutex);
              if (!failure) failure = std::current_exception();
            }
          }
        });
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<SweepRow> rows;
  for (auto& point : per_point) rows.insert(rows.end(), point.begin(), point.end());
  return rows;
}

}  // namespace relaysec
