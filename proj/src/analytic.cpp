#include "relaysec/analytic.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace relaysec {
namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  [[nodiscard]] double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Calls fn(mask) for every non-empty subset of `n` elements, by increasing
// popcount, masks ascending within a popcount (Gosper's hack).
template <typename Fn>
void for_each_subset_by_size(std::size_t n, Fn&& fn) {
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::size_t k = 1; k <= n; ++k) {
    std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    while (mask < limit) {
      fn(static_cast<std::uint32_t>(mask));
      const std::uint64_t c = mask & (~mask + 1);
      const std::uint64_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
}

void check_cap(std::size_t relays) {
  if (relays > kMaxEnumeratedRelays) throw TooManyRelaysError(relays);
}

// rate_sum for every mask, indexed by mask.
std::vector<double> rate_sums_by_mask(std::span<const double> rates) {
  std::vector<double> sums(std::size_t{1} << rates.size(), 0.0);
  for (std::size_t mask = 1; mask < sums.size(); ++mask) {
    const auto low = static_cast<std::size_t>(std::countr_zero(mask));
    sums[mask] = sums[mask & (mask - 1)] + rates[low];
  }
  return sums;
}

}  // namespace

TooManyRelaysError::TooManyRelaysError(std::size_t relays)
    : std::domain_error("too many relays for subset enumeration: " + std::to_string(relays) +
                        " > " + std::to_string(kMaxEnumeratedRelays)) {}

std::vector<double> min_gain_rates(const Scenario& s) {
  std::vector<double> rates(s.relay_count);
  for (std::size_t i = 0; i < s.relay_count; ++i) {
    rates[i] = 1.0 / s.sigma2_si[i] + 1.0 / s.sigma2_id[i];
  }
  return rates;
}

std::vector<SubsetTerm> subset_terms(std::span<const double> rates) {
  check_cap(rates.size());
  const std::vector<double> sums = rate_sums_by_mask(rates);
  std::vector<SubsetTerm> terms;
  terms.reserve(sums.size() - 1);
  for_each_subset_by_size(rates.size(), [&](std::uint32_t mask) {
    terms.push_back({mask, std::popcount(mask) % 2 == 0 ? 1 : -1, sums[mask]});
  });
  return terms;
}

double direct_intercept(const Scenario& s) {
  s.validate();
  return s.sigma2_se / (s.sigma2_se + s.sigma2_sd);
}

double maxmin_intercept(const Scenario& s) {
  s.validate();
  if (s.relay_count == 0) throw std::invalid_argument("max-min selection needs at least one relay");
  check_cap(s.relay_count);

  const std::vector<double> sums = rate_sums_by_mask(min_gain_rates(s));
  CompensatedSum outer;
  for (std::size_t m = 0; m < s.relay_count; ++m) {
    // 1 + sum_A (-1)^|A| / (1 + c_A) with c_A = sigma2_me * rate_sum(A). The
    // signs over non-empty subsets sum to -1, so the leading 1 cancels and the
    // bracket equals sum_A (-1)^(|A|+1) c_A / (1 + c_A), free of the
    // cancellation that 1 - 1/(1 + c) suffers for small c.
    const double eve = s.sigma2_ie[m];
    CompensatedSum inner;
    for_each_subset_by_size(s.relay_count, [&](std::uint32_t mask) {
      const double c = eve * sums[mask];
      const double term = c / (1.0 + c);
      inner.add(std::popcount(mask) % 2 == 1 ? term : -term);
    });
    outer.add(inner.value());
  }
  return outer.value() / static_cast<double>(s.relay_count);
}

double proposed_intercept(const Scenario& s) {
  s.validate();
  if (s.relay_count == 0) throw std::invalid_argument("relay selection needs at least one relay");
  double p = 1.0;
  for (std::size_t i = 0; i < s.relay_count; ++i) {
    const double si = s.sigma2_si[i];
    const double id = s.sigma2_id[i];
    const double ie = s.sigma2_ie[i];
    const double num = id * ie + si * ie;
    p *= num / (num + si * id);
  }
  return p;
}

double analytic_intercept(SchemeId scheme, const Scenario& s) {
  switch (scheme) {
    case SchemeId::Direct:
      return direct_intercept(s);
    case SchemeId::MaxMin:
      return maxmin_intercept(s);
    case SchemeId::Proposed:
      return proposed_intercept(s);
  }
  throw std::invalid_argument("unknown scheme");
}

}  // namespace relaysec
