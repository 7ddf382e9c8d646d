#include "relaysec/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

#include <boost/math/distributions/normal.hpp>

namespace relaysec {
namespace {

constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kTrialSalt = 0x632BE59BD9B4E019ULL;

double z_for(double confidence_level) {
  const boost::math::normal standard;
  return boost::math::quantile(standard, 0.5 + 0.5 * confidence_level);
}

unsigned resolve_workers(unsigned requested, std::uint64_t trials) {
  unsigned w = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  return static_cast<unsigned>(std::min<std::uint64_t>(w, std::max<std::uint64_t>(trials, 1)));
}

void count_range(std::span<const SchemeId> schemes, const Scenario& s, std::uint64_t seed,
                 std::uint64_t begin, std::uint64_t end, std::vector<std::uint64_t>& counts) {
  ChannelDraw draw;
  for (std::uint64_t t = begin; t < end; ++t) {
    SplitMix64 rng = SplitMix64::for_trial(seed, t);
    sample_draw_into(s, rng, draw);
    for (std::size_t k = 0; k < schemes.size(); ++k) {
      if (intercept_event(schemes[k], draw, s)) ++counts[k];
    }
  }
}

}  // namespace

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

SplitMix64 SplitMix64::for_trial(std::uint64_t seed, std::uint64_t trial) {
  return SplitMix64(mix64(seed ^ mix64(trial + kTrialSalt)));
}

std::uint64_t SplitMix64::next() {
  state_ += kGoldenGamma;
  return mix64(state_);
}

double SplitMix64::uniform_open_closed() {
  return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
}

double exponential_from_uniform(double variance, double u) { return -variance * std::log(u); }

void sample_draw_into(const Scenario& s, SplitMix64& rng, ChannelDraw& out) {
  out.g_sd = exponential_from_uniform(s.sigma2_sd, rng.uniform_open_closed());
  out.g_se = exponential_from_uniform(s.sigma2_se, rng.uniform_open_closed());
  out.g_si.resize(s.relay_count);
  out.g_id.resize(s.relay_count);
  out.g_ie.resize(s.relay_count);
  for (std::size_t i = 0; i < s.relay_count; ++i) {
    out.g_si[i] = exponential_from_uniform(s.sigma2_si[i], rng.uniform_open_closed());
    out.g_id[i] = exponential_from_uniform(s.sigma2_id[i], rng.uniform_open_closed());
    out.g_ie[i] = exponential_from_uniform(s.sigma2_ie[i], rng.uniform_open_closed());
  }
}

ChannelDraw sample_draw(const Scenario& s, SplitMix64& rng) {
  ChannelDraw d;
  sample_draw_into(s, rng, d);
  return d;
}

ConfidenceInterval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                                   double confidence_level) {
  if (!(confidence_level > 0.0 && confidence_level < 1.0)) {
    throw std::invalid_argument("confidence level must lie in (0, 1)");
  }
  if (trials == 0) throw std::invalid_argument("Wilson interval needs at least one trial");
  if (successes > trials) throw std::invalid_argument("successes exceed trials");

  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z = z_for(confidence_level);
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  // Clamp so the interval always brackets p_hat despite rounding.
  return {std::clamp(std::min(center - half, p), 0.0, 1.0),
          std::clamp(std::max(center + half, p), 0.0, 1.0)};
}

std::vector<InterceptEstimate> estimate_intercepts(std::span<const SchemeId> schemes,
                                                   const Scenario& s,
                                                   const MonteCarloOptions& opts) {
  s.validate();
  if (opts.trials == 0) throw std::invalid_argument("trials must be >= 1");
  if (!(opts.confidence_level > 0.0 && opts.confidence_level < 1.0)) {
    throw std::invalid_argument("confidence level must lie in (0, 1)");
  }
  for (SchemeId scheme : schemes) {
    if (uses_relays(scheme) && s.relay_count == 0) {
      throw std::invalid_argument(std::string(to_string(scheme)) + " needs at least one relay");
    }
  }

  const unsigned workers = resolve_workers(opts.workers, opts.trials);
  std::vector<std::vector<std::uint64_t>> counts(workers,
                                                 std::vector<std::uint64_t>(schemes.size(), 0));
  if (workers == 1) {
    count_range(schemes, s, opts.seed, 0, opts.trials, counts[0]);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::uint64_t chunk = opts.trials / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = chunk * w;
      const std::uint64_t end = w + 1 == workers ? opts.trials : begin + chunk;
      pool.emplace_back([&, w, begin, end] {
        count_range(schemes, s, opts.seed, begin, end, counts[w]);
      });
    }
  }

  std::vector<InterceptEstimate> out;
  out.reserve(schemes.size());
  for (std::size_t k = 0; k < schemes.size(); ++k) {
    std::uint64_t hits = 0;
    for (const auto& c : counts) hits += c[k];
    const ConfidenceInterval ci = wilson_interval(hits, opts.trials, opts.confidence_level);
    out.push_back({schemes[k], opts.trials, hits,
                   static_cast<double>(hits) / static_cast<double>(opts.trials), ci.low, ci.high,
                   opts.confidence_level, opts.seed});
  }
  return out;
}

InterceptEstimate estimate_intercept(SchemeId scheme, const Scenario& s, std::uint64_t trials,
                                     std::uint64_t seed, double confidence_level,
                                     unsigned workers) {
  const SchemeId one[] = {scheme};
  return estimate_intercepts(one, s, {trials, seed, confidence_level, workers}).front();
}

}  // namespace relaysec
