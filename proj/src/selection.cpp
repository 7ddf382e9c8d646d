#include "relaysec/selection.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

namespace relaysec {
namespace {

void require_relays(const ChannelDraw& d) {
  if (d.relay_count() == 0) throw std::invalid_argument("relay selection needs at least one relay");
  if (d.g_id.size() != d.relay_count() || d.g_ie.size() != d.relay_count()) {
    throw std::invalid_argument("per-relay gain lists have different lengths");
  }
}

// Main-link bottleneck gain of relay i.
double bottleneck(const ChannelDraw& d, std::size_t i) { return std::min(d.g_si[i], d.g_id[i]); }

// The capacity comparisons reduce to gain comparisons because log2(1 + g*c)
// is strictly increasing in g; comparing gains keeps the event exactly
// independent of P and N0 in floating point too.
bool relay_intercepted(const ChannelDraw& d, std::size_t i) { return bottleneck(d, i) < d.g_ie[i]; }

}  // namespace

std::string_view to_string(SchemeId scheme) {
  switch (scheme) {
    case SchemeId::Direct:
      return "direct";
    case SchemeId::MaxMin:
      return "maxmin";
    case SchemeId::Proposed:
      return "proposed";
  }
  return "unknown";
}

std::optional<SchemeId> parse_scheme(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "direct") return SchemeId::Direct;
  if (lower == "maxmin" || lower == "max-min") return SchemeId::MaxMin;
  if (lower == "proposed" || lower == "best") return SchemeId::Proposed;
  return std::nullopt;
}

std::size_t select_max_min(const ChannelDraw& d) {
  require_relays(d);
  std::size_t best = 0;
  double best_gain = bottleneck(d, 0);
  for (std::size_t i = 1; i < d.relay_count(); ++i) {
    const double g = bottleneck(d, i);
    if (g > best_gain) {
      best = i;
      best_gain = g;
    }
  }
  return best;
}

std::size_t select_proposed(const ChannelDraw& d, const Scenario& s) {
  require_relays(d);
  const double floor = 2.0 * s.noise_var;
  auto ratio = [&](std::size_t i) {
    return (bottleneck(d, i) * s.power + floor) / (d.g_ie[i] * s.power + floor);
  };
  std::size_t best = 0;
  double best_ratio = ratio(0);
  for (std::size_t i = 1; i < d.relay_count(); ++i) {
    const double r = ratio(i);
    if (r > best_ratio) {
      best = i;
      best_ratio = r;
    }
  }
  return best;
}

bool intercept_event(SchemeId scheme, const ChannelDraw& d, const Scenario& s) {
  switch (scheme) {
    case SchemeId::Direct:
      return d.g_sd < d.g_se;
    case SchemeId::MaxMin:
      return relay_intercepted(d, select_max_min(d));
    case SchemeId::Proposed: {
      // The selected relay maximizes secrecy capacity, so the transmission is
      // intercepted exactly when every relay is.
      require_relays(d);
      (void)s;
      for (std::size_t i = 0; i < d.relay_count(); ++i) {
        if (!relay_intercepted(d, i)) return false;
      }
      return true;
    }
  }
  throw std::invalid_argument("unknown scheme");
}

}  // namespace relaysec
