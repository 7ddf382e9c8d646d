#include "relaysec/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace relaysec {
namespace {

void require_positive(double v, const char* name) {
  if (!(std::isfinite(v) && v > 0.0)) {
    throw std::invalid_argument(std::string(name) + " must be finite and > 0, got " +
                                std::to_string(v));
  }
}

void require_positive_list(const std::vector<double>& values, std::size_t expected,
                           const char* name) {
  if (values.size() != expected) {
    throw std::invalid_argument(std::string(name) + " has " + std::to_string(values.size()) +
                                " entries, expected relay_count = " + std::to_string(expected));
  }
  for (double v : values) require_positive(v, name);
}

bool is_constant(const std::vector<double>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
}

}  // namespace

Scenario Scenario::homogeneous(std::size_t relays, double sd, double se, double si, double id,
                               double ie, double power, double noise_var) {
  Scenario s;
  s.relay_count = relays;
  s.sigma2_sd = sd;
  s.sigma2_se = se;
  s.sigma2_si.assign(relays, si);
  s.sigma2_id.assign(relays, id);
  s.sigma2_ie.assign(relays, ie);
  s.power = power;
  s.noise_var = noise_var;
  return s;
}

void Scenario::validate() const {
  require_positive(sigma2_sd, "sigma2_sd");
  require_positive(sigma2_se, "sigma2_se");
  require_positive_list(sigma2_si, relay_count, "sigma2_si");
  require_positive_list(sigma2_id, relay_count, "sigma2_id");
  require_positive_list(sigma2_ie, relay_count, "sigma2_ie");
  require_positive(power, "power");
  require_positive(noise_var, "noise_var");
}

bool Scenario::has_homogeneous_relays() const {
  return is_constant(sigma2_si) && is_constant(sigma2_id) && is_constant(sigma2_ie);
}

void FigureParams::validate() const {
  if (!std::isfinite(mer_db)) throw std::invalid_argument("mer_db must be finite");
  require_positive(alpha_si, "alpha_si");
  require_positive(alpha_id, "alpha_id");
  require_positive(alpha_ie, "alpha_ie");
  require_positive(power, "power");
  require_positive(noise_var, "noise_var");
}

double mer_of(const Scenario& s) {
  s.validate();
  return s.sigma2_sd / s.sigma2_se;
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

Scenario scenario_from_figure(const FigureParams& fp) {
  fp.validate();
  const double sd = 1.0;
  const double se = db_to_linear(-fp.mer_db);
  Scenario s = Scenario::homogeneous(fp.relay_count, sd, se, fp.alpha_si * sd, fp.alpha_id * sd,
                                     fp.alpha_ie * se, fp.power, fp.noise_var);
  s.validate();
  return s;
}

}  // namespace relaysec
