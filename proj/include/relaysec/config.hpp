// Plain-text key/value configuration for sweeps and single points.
//
//   # comment
//   variable = mer_db
//   from = 0
//   to = 20
//   step = 1
//   relay_count = 2
//   schemes = direct, maxmin, proposed
//
// Keys mirror the SweepSpec / FigureParams field names: variable, from, to,
// step, mer_db, alpha_si, alpha_id, alpha_ie, relay_count, power, noise_var,
// schemes, trials, seed, confidence_level.
#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "relaysec/sweep.hpp"

namespace relaysec {

/// Applies every key in `in` on top of `spec` and returns the keys seen, in
/// order. Throws std::invalid_argument with the offending line number on
/// unknown keys or malformed values.
std::vector<std::string> apply_config(std::istream& in, SweepSpec& spec);
std::vector<std::string> apply_config_file(const std::string& path, SweepSpec& spec);

/// Single-key setter shared by the config reader and the CLI.
void set_config_value(SweepSpec& spec, std::string_view key, std::string_view value);

[[nodiscard]] std::vector<SchemeId> parse_scheme_list(std::string_view text);

}  // namespace relaysec
