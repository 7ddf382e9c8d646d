// Instantaneous capacities on realized channel gains. Rates are in bits per
// channel use. The relay schemes split the total power P equally between the
// source and the selected relay.
#pragma once

#include <cstddef>
#include <vector>

#include "relaysec/model.hpp"

namespace relaysec {

/// One joint realization of every squared channel magnitude.
struct ChannelDraw {
  double g_sd = 0.0;
  double g_se = 0.0;
  std::vector<double> g_si;
  std::vector<double> g_id;
  std::vector<double> g_ie;

  [[nodiscard]] std::size_t relay_count() const { return g_si.size(); }

  /// Throws std::invalid_argument on negative/non-finite gains or list
  /// lengths that disagree with s.relay_count.
  void validate_against(const Scenario& s) const;
};

/// log2(1 + gain * power / noise_var)
[[nodiscard]] double direct_capacity(double gain, double power, double noise_var);

[[nodiscard]] double direct_secrecy(const ChannelDraw& d, const Scenario& s);

/// Two-hop DF rate through relay i at power P/2 per hop; the weaker hop
/// limits the rate. Throws std::out_of_range for a bad index.
[[nodiscard]] double df_capacity(std::size_t i, const ChannelDraw& d, const Scenario& s);

/// Rate of the relay i -> eavesdropper link at power P/2.
[[nodiscard]] double df_eavesdropper_capacity(std::size_t i, const ChannelDraw& d,
                                              const Scenario& s);

/// df_capacity minus the eavesdropper's rate; negative means interceptable.
[[nodiscard]] double df_secrecy(std::size_t i, const ChannelDraw& d, const Scenario& s);

}  // namespace relaysec
