#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "relaysec/capacity.hpp"
#include "relaysec/model.hpp"

namespace relaysec {

enum class SchemeId { Direct, MaxMin, Proposed };

inline constexpr SchemeId kAllSchemes[] = {SchemeId::Direct, SchemeId::MaxMin,
                                           SchemeId::Proposed};

[[nodiscard]] std::string_view to_string(SchemeId scheme);
/// Accepts "direct", "maxmin"/"max-min", "proposed" (case-insensitive).
[[nodiscard]] std::optional<SchemeId> parse_scheme(std::string_view name);

[[nodiscard]] constexpr bool uses_relays(SchemeId scheme) {
  return scheme != SchemeId::Direct;
}

// Both selectors return the lowest index among tied maxima and throw
// std::invalid_argument when the draw has no relays.

/// argmax_i min(g_si[i], g_id[i]); ignores the eavesdropper.
[[nodiscard]] std::size_t select_max_min(const ChannelDraw& d);

/// argmax_i (min(g_si[i], g_id[i]) P + 2 N0) / (g_ie[i] P + 2 N0), i.e. the
/// relay with the largest instantaneous secrecy capacity.
[[nodiscard]] std::size_t select_proposed(const ChannelDraw& d, const Scenario& s);

/// True when the secrecy capacity of the scheme's transmission is strictly
/// negative on this draw.
[[nodiscard]] bool intercept_event(SchemeId scheme, const ChannelDraw& d, const Scenario& s);

}  // namespace relaysec
