#include "relaysec/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace relaysec {
namespace {

void check_gains(const std::vector<double>& g, std::size_t expected, const char* name) {
  if (g.size() != expected) {
    throw std::invalid_argument(std::string(name) + " length does not match relay_count");
  }
  for (double v : g) {
    if (!(std::isfinite(v) && v >= 0.0)) {
      throw std::invalid_argument(std::string(name) + " entries must be finite and >= 0");
    }
  }
}

void check_index(std::size_t i, const ChannelDraw& d) {
  if (i >= d.relay_count() || i >= d.g_id.size() || i >= d.g_ie.size()) {
    throw std::out_of_range("relay index " + std::to_string(i) + " out of range for " +
                            std::to_string(d.relay_count()) + " relays");
  }
}

}  // namespace

void ChannelDraw::validate_against(const Scenario& s) const {
  check_gains({g_sd}, 1, "g_sd");
  check_gains({g_se}, 1, "g_se");
  check_gains(g_si, s.relay_count, "g_si");
  check_gains(g_id, s.relay_count, "g_id");
  check_gains(g_ie, s.relay_count, "g_ie");
}

double direct_capacity(double gain, double power, double noise_var) {
  return std::log2(1.0 + gain * power / noise_var);
}

double direct_secrecy(const ChannelDraw& d, const Scenario& s) {
  return direct_capacity(d.g_sd, s.power, s.noise_var) -
         direct_capacity(d.g_se, s.power, s.noise_var);
}

double df_capacity(std::size_t i, const ChannelDraw& d, const Scenario& s) {
  check_index(i, d);
  return direct_capacity(std::min(d.g_si[i], d.g_id[i]), 0.5 * s.power, s.noise_var);
}

double df_eavesdropper_capacity(std::size_t i, const ChannelDraw& d, const Scenario& s) {
  check_index(i, d);
  return direct_capacity(d.g_ie[i], 0.5 * s.power, s.noise_var);
}

double df_secrecy(std::size_t i, const ChannelDraw& d, const Scenario& s) {
  return df_capacity(i, d, s) - df_eavesdropper_capacity(i, d, s);
}

}  // namespace relaysec
