#include "rydion/bbr.hpp"

#include <cmath>

#include "rydion/units.hpp"

namespace rydion {

void BbrQuery::validate() const {
  if (n < 1) throw ConfigError("principal quantum number must be >= 1");
  if (l < 0 || l >= n) throw ConfigError("angular quantum number must satisfy 0 <= L < n");
  if (temperature_k < 0) throw ConfigError("black-body temperature must be >= 0");
  if (omega_nl < 0) throw ConfigError("threshold frequency must be >= 0");
}

double omega_threshold(int n) {
  if (n < 1) throw ConfigError("principal quantum number must be >= 1");
  constexpr double z = 2.0;
  return z * z * units::rydberg_energy_si /
         (units::hbar_si * static_cast<double>(n) * n);
}

double ionisation_rate(const BbrQuery& query) {
  query.validate();
  if (query.temperature_k == 0.0) return 0.0;

  const double omega =
      query.omega_nl > 0 ? query.omega_nl : omega_threshold(query.n);
  const double kt = units::k_boltzmann_si * query.temperature_k;
  const double alpha3 = std::pow(units::fine_structure, 3);
  const double prefactor = alpha3 * kt / (units::hbar_si * units::pi * units::pi);

  const double n73 = std::pow(query.n, 7.0 / 3.0);
  const double n113 = std::pow(query.n, 11.0 / 3.0);
  const double bracket =
      2.8 / n73 + 2.09 * query.l * query.l / n113;

  const double x = units::hbar_si * omega / kt;
  const double log_term = -std::log1p(-std::exp(-x));
  return prefactor * bracket * log_term;
}

}  // namespace rydion
