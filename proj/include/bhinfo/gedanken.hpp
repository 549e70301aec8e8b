#pragma once

// Gedanken experiments replayed as entropy ledgers. Each scenario lists the
// entropy of every participant before and after the process and checks the
// generalised second law: the total may not decrease.

#include <optional>
#include <string>
#include <vector>

#include "bhinfo/entropy_bounds.hpp"
#include "bhinfo/evaporation.hpp"
#include "bhinfo/kerr_newman.hpp"

namespace bhinfo {

inline constexpr double kLedgerSlack = 1e-9;

struct LedgerEntry {
  std::string label;
  double before = 0.0;  // nats
  double after = 0.0;   // nats
};

class EntropyLedger {
 public:
  void add(std::string label, double before, double after);

  const std::vector<LedgerEntry>& entries() const { return entries_; }
  // sum(after - before)
  double delta_total() const;
  // delta_total >= -kLedgerSlack * (largest single change)
  bool gsl_satisfied() const;

 private:
  std::vector<LedgerEntry> entries_;
};

struct AssumptionCheck {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  std::string relation;  // "<=" or ">=": how value must compare to threshold
  bool passed = false;
};

struct Quantity {
  std::string name;
  double value = 0.0;
  std::string unit;
};

struct GedankenReport {
  std::string scenario;
  EntropyLedger ledger;
  std::vector<AssumptionCheck> assumption_checks;
  std::vector<Quantity> quantities;
  std::string notes;

  bool applicable() const;
  // Empty unless every assumption check passed.
  std::optional<bool> gsl_verdict() const;
  const Quantity& quantity(const std::string& name) const;
};

struct GedankenOptions {
  ApplicabilityThresholds thresholds;
  // "Much more massive than" the infalling object.
  double mass_factor = 1e3;
  // Host hole radius over capsule radius.
  double size_factor = 10.0;
  // "Negligible" radiation-pressure ratio.
  double pressure_max = 1e-2;
};

// Collapse of a neutral, nonrotating system of entropy S to a Schwarzschild
// hole of mass E/c^2 inside a surface of area `enclosing_area`. Throws
// DomainError if the system carries no entropy or the resulting horizon
// would not fit inside the surface.
GedankenReport susskind_collapse(const MaterialSystem& sys,
                                 double enclosing_area,
                                 const GedankenOptions& options = {});

// Gentle lowering of a capsule (rest mass mu, radius b, entropy S_cap) into a
// Kerr-Newman hole. The minimal area increase 8 pi G mu b / c^2 does not
// depend on the hole's parameters.
GedankenReport capsule_lowering(const BlackHole& bh, double mu_g, double b_cm,
                                double capsule_entropy,
                                const GedankenOptions& options = {});

// Minimum horizon area increase from lowering the capsule, cm^2.
double capsule_area_increase(double mu_g, double b_cm);

struct DropDistance {
  double distance = 0.0;  // cm
  double over_M = 0.0;    // d / M
  double threshold = 0.0; // 36 zeta^(2/3)
  bool passed = false;
};

// d ~ 780 (zeta E R / (N c hbar))^(2/3) M with M = zeta R.
DropDistance drop_distance(const MaterialSystem& sys, double zeta,
                           const EmissionParameters& p = {});

// The infall experiment with a Schwarzschild hole of scale M = zeta R.
GedankenReport infall_experiment(const MaterialSystem& sys, double zeta,
                                 const EmissionParameters& p = {},
                                 const GedankenOptions& options = {});

// Same, with the host hole given explicitly (must be Schwarzschild).
GedankenReport infall_experiment(const MaterialSystem& sys,
                                 const BlackHole& bh,
                                 const EmissionParameters& p = {},
                                 const GedankenOptions& options = {});

// Upper bound Gamma / (7680 zeta^2) on the radiation-pressure to gravity
// force ratio.
double pressure_ratio_bound(double zeta, const EmissionParameters& p = {});

// Non-radiative merger of two Schwarzschild holes into one of mass m1 + m2.
GedankenReport merger(const BlackHole& first, const BlackHole& second);

}  // namespace bhinfo
