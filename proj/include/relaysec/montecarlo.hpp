// Seeded Monte-Carlo estimation of intercept probabilities.
//
// Random numbers come from SplitMix64 (Steele, Lea & Flood 2014). Trial t of
// a run seeded with `seed` owns an independent substream whose initial state
// is mix64(seed ^ mix64(t + kTrialSalt)); a trial's draw therefore depends
// only on (seed, t), and estimates are bit-identical for any worker count.
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "relaysec/capacity.hpp"
#include "relaysec/model.hpp"
#include "relaysec/selection.hpp"

namespace relaysec {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  /// Substream generator for one trial of a seeded run.
  static SplitMix64 for_trial(std::uint64_t seed, std::uint64_t trial);

  std::uint64_t next();
  /// Uniform on (0, 1] with 53-bit resolution.
  double uniform_open_closed();

  [[nodiscard]] std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

[[nodiscard]] std::uint64_t mix64(std::uint64_t z);

/// Inverse-CDF exponential sample -variance * ln(u); u must lie in (0, 1].
[[nodiscard]] double exponential_from_uniform(double variance, double u);

/// Samples g_sd, g_se, then (g_si, g_id, g_ie) for each relay in order.
[[nodiscard]] ChannelDraw sample_draw(const Scenario& s, SplitMix64& rng);
/// Overwrites `out` in place, reusing its storage.
void sample_draw_into(const Scenario& s, SplitMix64& rng, ChannelDraw& out);

struct ConfidenceInterval {
  double low = 0.0;
  double high = 1.0;
};

/// Wilson score interval for `successes` out of `trials` Bernoulli trials.
/// Throws std::invalid_argument unless 0 < confidence_level < 1 and
/// trials >= 1.
[[nodiscard]] ConfidenceInterval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                                                 double confidence_level);

struct InterceptEstimate {
  SchemeId scheme = SchemeId::Direct;
  std::uint64_t trials = 0;
  std::uint64_t intercepts = 0;
  double p_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 1.0;
  double confidence_level = 0.99;
  std::uint64_t seed = 0;
};

struct MonteCarloOptions {
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  double confidence_level = 0.99;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned workers = 1;
};

/// Evaluates every requested scheme on the same draws. Results are returned
/// in the order of `schemes`.
[[nodiscard]] std::vector<InterceptEstimate> estimate_intercepts(std::span<const SchemeId> schemes,
                                                                 const Scenario& s,
                                                                 const MonteCarloOptions& opts);

[[nodiscard]] InterceptEstimate estimate_intercept(SchemeId scheme, const Scenario& s,
                                                   std::uint64_t trials, std::uint64_t seed,
                                                   double confidence_level, unsigned workers = 1);

}  // namespace relaysec
