// Single-point and grid evaluation producing plot-ready rows.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "relaysec/model.hpp"
#include "relaysec/selection.hpp"

namespace relaysec {

enum class SweepVariable { MerDb, RelayCount };

struct SweepSpec {
  SweepVariable variable = SweepVariable::MerDb;
  double from = 0.0;
  double to = 20.0;
  double step = 1.0;
  FigureParams fixed;  // the swept field is overwritten per grid point
  std::vector<SchemeId> schemes{kAllSchemes[0], kAllSchemes[1], kAllSchemes[2]};
  std::uint64_t trials = 0;  // 0 = analytic only
  std::uint64_t seed = 1;
  double confidence_level = 0.99;

  /// Throws std::invalid_argument on from > to, step <= 0, no schemes,
  /// a non-integral relay-count grid, or a bad confidence level.
  void validate() const;
};

struct SweepRow {
  SchemeId scheme = SchemeId::Direct;
  std::size_t relay_count = 0;
  double mer_db = 0.0;
  double alpha_si = 1.0;
  double alpha_id = 1.0;
  double alpha_ie = 1.0;
  double analytic = 0.0;
  std::optional<double> mc_p_hat;
  std::optional<double> mc_ci_low;
  std::optional<double> mc_ci_high;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct PointRequest {
  FigureParams params;
  std::vector<SchemeId> schemes;
  std::uint64_t trials = 0;
  std::uint64_t seed = 1;
  double confidence_level = 0.99;
};

/// One row per scheme, in request order. Monte-Carlo columns are filled iff
/// trials > 0; all schemes share the same draws. Relay schemes require
/// relay_count >= 1.
[[nodiscard]] std::vector<SweepRow> run_point(const PointRequest& req, unsigned mc_workers = 1);

/// Grid values in ascending order: from + k*step for k = 0..n.
[[nodiscard]] std::vector<double> sweep_grid(const SweepSpec& spec);

/// Rows for every grid point (ascending) times scheme (spec order). Grid
/// points may be evaluated concurrently by `workers` threads; the result is
/// independent of the worker count.
[[nodiscard]] std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned workers = 1);

}  // namespace relaysec
