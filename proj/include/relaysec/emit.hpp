// CSV / JSON serialization of sweep rows.
#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "relaysec/sweep.hpp"

namespace relaysec {

enum class OutputFormat { Csv, Json };

inline constexpr std::string_view kCsvHeader =
    "scheme,relay_count,mer_db,alpha_si,alpha_id,alpha_ie,analytic,mc_p_hat,mc_ci_low,"
    "mc_ci_high,trials,seed";

/// Probabilities are printed with 10 significant digits, parameters in the
/// shortest round-trip form; absent Monte-Carlo values are empty fields.
void write_csv(std::ostream& out, std::span<const SweepRow> rows);
/// Array of objects keyed like the CSV header; absent values are null.
/// Doubles are written at full precision.
void write_json(std::ostream& out, std::span<const SweepRow> rows);

[[nodiscard]] std::vector<SweepRow> parse_json_rows(std::string_view text);

/// Writes rows to `path`, or to stdout when path is empty or "-". Throws
/// std::invalid_argument on empty rows and std::runtime_error when the
/// destination cannot be written.
void emit(std::span<const SweepRow> rows, OutputFormat format, const std::string& path);

}  // namespace relaysec
