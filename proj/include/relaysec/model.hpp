// Scenario parameterization for a dual-hop decode-and-forward relay network
// with a single passive eavesdropper.
//
// All links are Rayleigh faded, so every squared channel magnitude |h|^2 is
// exponentially distributed and fully described by its mean (the "variance"
// of the complex gain). A Scenario stores those means directly; FigureParams
// is the ratio-based parameterization (MER in dB plus per-link alpha ratios)
// used for the intercept-probability-versus-MER and versus-relay-count plots.
#pragma once

#include <cstddef>
#include <vector>

namespace relaysec {

struct Scenario {
  std::size_t relay_count = 0;
  double sigma2_sd = 1.0;  // E|h_sd|^2, source -> destination
  double sigma2_se = 1.0;  // E|h_se|^2, source -> eavesdropper
  std::vector<double> sigma2_si;  // E|h_si|^2, source -> relay i
  std::vector<double> sigma2_id;  // E|h_id|^2, relay i -> destination
  std::vector<double> sigma2_ie;  // E|h_ie|^2, relay i -> eavesdropper
  double power = 1.0;
  double noise_var = 1.0;

  /// Builds a scenario in which every relay shares the same variance triple.
  static Scenario homogeneous(std::size_t relays, double sd, double se,
                              double si, double id, double ie,
                              double power = 1.0, double noise_var = 1.0);

  /// Throws std::invalid_argument if any variance, the power or the noise
  /// variance is not strictly positive and finite, or if a per-relay list
  /// length differs from relay_count.
  void validate() const;

  /// True when all per-relay variance lists are constant.
  [[nodiscard]] bool has_homogeneous_relays() const;
};

struct FigureParams {
  double mer_db = 0.0;
  double alpha_si = 1.0;
  double alpha_id = 1.0;
  double alpha_ie = 1.0;
  std::size_t relay_count = 1;
  double power = 1.0;
  double noise_var = 1.0;

  void validate() const;
};

/// Main-to-eavesdropper ratio sigma2_sd / sigma2_se (linear scale).
[[nodiscard]] double mer_of(const Scenario& s);

[[nodiscard]] double db_to_linear(double db);
[[nodiscard]] double linear_to_db(double linear);

/// Maps the ratio parameterization onto raw variances with sigma2_sd = 1.
/// Relays are homogeneous. relay_count = 0 is accepted and yields a scenario
/// usable only by the direct scheme.
[[nodiscard]] Scenario scenario_from_figure(const FigureParams& fp);

}  // namespace relaysec
