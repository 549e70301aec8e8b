#pragma once

// CGS physical constants and the handful of unit conversions used across the
// library. Temperatures are carried in erg and entropies in nats (S/k_B);
// kelvin and bits appear only at display boundaries.

#include <numbers>

namespace bhinfo {

struct PhysicalConstants {
  double G;              // cm^3 g^-1 s^-2
  double c;              // cm s^-1
  double hbar;           // erg s
  double k_B;            // erg K^-1
  double sigma_SB;       // erg cm^-2 s^-1 K^-4, pi^2 k_B^4 / (60 hbar^3 c^2)
  double planck_length;  // cm, (G hbar / c^3)^(1/2)
  double planck_mass;    // g, (hbar c / G)^(1/2)
};

// CODATA-2018 exact/recommended values.
inline constexpr double kG = 6.67430e-8;
inline constexpr double kC = 2.99792458e10;
inline constexpr double kHbar = 1.054571817e-27;
inline constexpr double kBoltzmann = 1.380649e-16;

// The one table every module reads. Derived entries are computed once from
// (G, c, hbar, k_B).
const PhysicalConstants& constants();

// Stefan-Boltzmann constant for temperature measured in erg:
// pi^2 / (60 hbar^3 c^2), units erg^-3 cm^-2 s^-1.
double stefan_boltzmann_energy_units();

inline constexpr double kLog2E = std::numbers::log2e;

// M = G m / c^2
double geometrized_mass(double mass_g);
// Inverse of geometrized_mass.
double mass_from_geometrized(double length_cm);
// Q = sqrt(G) q / c^2
double geometrized_charge(double charge_esu);
// Inverse of geometrized_charge.
double charge_from_geometrized(double length_cm);
// a = j / (m c)
double spin_length(double angular_momentum, double mass_g);

double energy_temperature_to_kelvin(double temperature_erg);
double nats_to_bits(double nats);

}  // namespace bhinfo
