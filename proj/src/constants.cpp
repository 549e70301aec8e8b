#include "bhinfo/constants.hpp"

#include <cmath>
#include <string>

#include "bhinfo/errors.hpp"

namespace bhinfo {
namespace {

PhysicalConstants make_constants() {
  PhysicalConstants pc{};
  pc.G = kG;
  pc.c = kC;
  pc.hbar = kHbar;
  pc.k_B = kBoltzmann;
  const double pi2 = std::numbers::pi * std::numbers::pi;
  pc.sigma_SB = pi2 * std::pow(kBoltzmann, 4) /
                (60.0 * std::pow(kHbar, 3) * kC * kC);
  pc.planck_length = std::sqrt(kG * kHbar / (kC * kC * kC));
  pc.planck_mass = std::sqrt(kHbar * kC / kG);
  return pc;
}

void require_positive_mass(double m, const char* what) {
  if (!(m > 0.0)) {
    throw DomainError(std::string(what) + ": mass must be positive");
  }
}

}  // namespace

const PhysicalConstants& constants() {
  static const PhysicalConstants table = make_constants();
  return table;
}

double stefan_boltzmann_energy_units() {
  const double pi2 = std::numbers::pi * std::numbers::pi;
  return pi2 / (60.0 * std::pow(kHbar, 3) * kC * kC);
}

double geometrized_mass(double mass_g) {
  require_positive_mass(mass_g, "geometrized_mass");
  return kG * mass_g / (kC * kC);
}

double mass_from_geometrized(double length_cm) {
  if (!(length_cm > 0.0)) {
    throw DomainError("mass_from_geometrized: length must be positive");
  }
  return length_cm * kC * kC / kG;
}

double geometrized_charge(double charge_esu) {
  return std::sqrt(kG) * charge_esu / (kC * kC);
}

double charge_from_geometrized(double length_cm) {
  return length_cm * kC * kC / std::sqrt(kG);
}

double spin_length(double angular_momentum, double mass_g) {
  require_positive_mass(mass_g, "spin_length");
  return angular_momentum / (mass_g * kC);
}

double energy_temperature_to_kelvin(double temperature_erg) {
  if (temperature_erg < 0.0 || std::isnan(temperature_erg)) {
    throw DomainError("energy_temperature_to_kelvin: negative temperature");
  }
  return temperature_erg / kBoltzmann;
}

double nats_to_bits(double nats) {
  if (nats < 0.0 || std::isnan(nats)) {
    throw DomainError("nats_to_bits: negative entropy");
  }
  return nats * kLog2E;
}

}  // namespace bhinfo
