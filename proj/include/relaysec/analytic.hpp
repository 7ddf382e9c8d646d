// Closed-form intercept probabilities over Rayleigh fading.
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "relaysec/model.hpp"
#include "relaysec/selection.hpp"

namespace relaysec {

/// Largest relay count for which the max-min subset expansion is evaluated.
inline constexpr std::size_t kMaxEnumeratedRelays = 20;

class TooManyRelaysError : public std::domain_error {
 public:
  explicit TooManyRelaysError(std::size_t relays);
};

/// One non-empty relay subset A of the inclusion-exclusion expansion of
/// Pr(max_i min(g_si, g_id) < x).
struct SubsetTerm {
  std::uint32_t subset_mask = 0;
  int sign = 0;          // (-1)^|A|
  double rate_sum = 0;   // sum over A of (1/sigma2_si + 1/sigma2_id)
};

/// Per-relay exponential rate of min(g_si, g_id): 1/sigma2_si + 1/sigma2_id.
[[nodiscard]] std::vector<double> min_gain_rates(const Scenario& s);

/// All 2^M - 1 subset terms ordered by increasing subset size, masks
/// ascending within a size. Throws TooManyRelaysError above the cap.
[[nodiscard]] std::vector<SubsetTerm> subset_terms(std::span<const double> rates);

/// sigma2_se / (sigma2_se + sigma2_sd) = 1 / (1 + MER).
[[nodiscard]] double direct_intercept(const Scenario& s);

/// Max-min selection, averaged uniformly over which relay is selected:
///   (1/M) sum_m [1 + sum_A (-1)^|A| / (1 + sigma2_me * rate_sum(A))].
/// Exact for relays with identically distributed main links; for
/// heterogeneous inputs it is evaluated as written and is an approximation.
[[nodiscard]] double maxmin_intercept(const Scenario& s);

/// prod_i Pr(min(g_si, g_id) < g_ie).
[[nodiscard]] double proposed_intercept(const Scenario& s);

[[nodiscard]] double analytic_intercept(SchemeId scheme, const Scenario& s);

}  // namespace relaysec
