#include "bhinfo/gedanken.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bhinfo/constants.hpp"
#include "bhinfo/errors.hpp"

namespace bhinfo {

using std::numbers::pi;

void EntropyLedger::add(std::string label, double before, double after) {
  entries_.push_back({std::move(label), before, after});
}

double EntropyLedger::delta_total() const {
  double sum = 0.0;
  for (const auto& e : entries_) sum += e.after - e.before;
  return sum;
}

bool EntropyLedger::gsl_satisfied() const {
  double scale = 0.0;
  for (const auto& e : entries_) {
    scale = std::max(scale, std::abs(e.after - e.before));
  }
  return delta_total() >= -kLedgerSlack * scale;
}

bool GedankenReport::applicable() const {
  return std::all_of(assumption_checks.begin(), assumption_checks.end(),
                     [](const AssumptionCheck& c) { return c.passed; });
}

std::optional<bool> GedankenReport::gsl_verdict() const {
  if (!applicable()) return std::nullopt;
  return ledger.gsl_satisfied();
}

const Quantity& GedankenReport::quantity(const std::string& name) const {
  const auto it =
      std::find_if(quantities.begin(), quantities.end(),
                   [&](const Quantity& q) { return q.name == name; });
  if (it == quantities.end()) {
    throw std::out_of_range("no quantity named " + name);
  }
  return *it;
}

namespace {

AssumptionCheck at_most(std::string name, double value, double threshold) {
  return {std::move(name), value, threshold, "<=", value <= threshold};
}

AssumptionCheck at_least(std::string name, double value, double threshold) {
  return {std::move(name), value, threshold, ">=", value >= threshold};
}

double require_entropy(const MaterialSystem& sys, const char* scenario) {
  if (!sys.entropy) {
    throw DomainError(std::string(scenario) +
                      ": the system's entropy must be given");
  }
  return *sys.entropy;
}

}  // namespace

GedankenReport susskind_collapse(const MaterialSystem& sys,
                                 double enclosing_area,
                                 const GedankenOptions&) {
  sys.validate();
  const double stored = require_entropy(sys, "susskind_collapse");
  if (!(enclosing_area > 0.0)) {
    throw DomainError("susskind_collapse: enclosing area must be positive");
  }

  const BlackHole hole = make_schwarzschild(sys.energy / (kC * kC));
  const double area = horizon_area(hole);
  if (area > enclosing_area * (1.0 + 1e-12)) {
    throw DomainError(
        "susskind_collapse: horizon would not fit inside the enclosing surface");
  }

  GedankenReport r;
  r.scenario = "susskind_collapse";
  r.assumption_checks.push_back(
      at_most("fits_inside", sphere_area(sys.radius) / enclosing_area, 1.0));
  r.ledger.add("system", stored, 0.0);
  r.ledger.add("black hole", 0.0, entropy(hole));
  r.quantities = {
      {"horizon_area", area, "cm^2"},
      {"enclosing_area", enclosing_area, "cm^2"},
      {"black_hole_entropy", entropy(hole), "nats"},
      {"holographic_limit", holographic_bound(enclosing_area), "nats"},
  };
  r.notes =
      "GSL: S <= S_BH of the collapsed hole <= A / 4 l_P^2 of the surface.";
  return r;
}

double capsule_area_increase(double mu_g, double b_cm) {
  return 8.0 * pi * kG * mu_g * b_cm / (kC * kC);
}

GedankenReport capsule_lowering(const BlackHole& bh, double mu_g, double b_cm,
                                double capsule_entropy,
                                const GedankenOptions& options) {
  if (!(mu_g > 0.0) || !(b_cm > 0.0)) {
    throw DomainError("capsule_lowering: capsule mass and radius must be positive");
  }
  if (!(capsule_entropy >= 0.0)) {
    throw DomainError("capsule_lowering: capsule entropy must be non-negative");
  }
  const double dA = capsule_area_increase(mu_g, b_cm);
  const double lp = constants().planck_length;
  const double gain = dA / (4.0 * lp * lp);

  GedankenReport r;
  r.scenario = "capsule_lowering";
  r.assumption_checks.push_back(at_least(
      "hole_accepts_capsule", bh.outer_radius() / b_cm, options.size_factor));
  r.assumption_checks.push_back(
      at_least("hole_much_heavier", bh.mass() / mu_g, options.mass_factor));
  r.ledger.add("capsule", capsule_entropy, 0.0);
  r.ledger.add("black hole (minimal gain)", 0.0, gain);
  r.quantities = {
      {"delta_area_min", dA, "cm^2"},
      {"capsule_limit", 2.0 * pi * mu_g * b_cm * kC / kHbar, "nats"},
  };
  r.notes = "Capsule entropy is taken as fully assimilated by the hole.";
  return r;
}

DropDistance drop_distance(const MaterialSystem& sys, double zeta,
                           const EmissionParameters& p) {
  p.validate();
  if (!(zeta > 0.0)) throw DomainError("drop_distance: zeta must be positive");
  const double M = zeta * sys.radius;
  const double x = zeta * compositeness(sys) / p.n_species;
  DropDistance d;
  d.distance = 780.0 * std::pow(x, 2.0 / 3.0) * M;
  d.over_M = d.distance / M;
  d.threshold = 36.0 * std::pow(zeta, 2.0 / 3.0);
  d.passed = d.over_M >= d.threshold;
  return d;
}

double pressure_ratio_bound(double zeta, const EmissionParameters& p) {
  return p.gamma_bar / (7680.0 * zeta * zeta);
}

GedankenReport infall_experiment(const MaterialSystem& sys, double zeta,
                                 const EmissionParameters& p,
                                 const GedankenOptions& options) {
  sys.validate();
  p.validate();
  if (!(zeta >= 1.0)) {
    throw DomainError("infall_experiment: zeta = M/R must be at least 1");
  }
  const double stored = require_entropy(sys, "infall_experiment");
  const double M = zeta * sys.radius;
  const BlackHole hole = make_schwarzschild(mass_from_geometrized(M));
  const double t_bh = schwarzschild_temperature(hole.mass());
  const double radiated = p.nu * sys.energy / t_bh;

  // Species able to push on the system: at most one per emitted quantum.
  const double quanta = 8.0 * pi * M * sys.energy / (kC * kHbar);
  const double n_eff = std::min(p.n_species, quanta);
  const double r = sys.radius;
  const double pressure_ratio = kC * p.gamma_bar * n_eff * kHbar * r * r /
                                (61440.0 * pi * M * M * M * sys.energy);
  const double pressure_bound = pressure_ratio_bound(zeta, p);
  const DropDistance drop = drop_distance(sys, zeta, p);

  GedankenReport rep;
  rep.scenario = "infall";
  rep.assumption_checks = {
      at_least("composite", compositeness(sys),
               options.thresholds.composite_min),
      at_most("weak_gravity", weak_gravity_ratio(sys),
              options.thresholds.weak_gravity_max),
      at_least("hole_much_heavier", hole.mass() * kC * kC / sys.energy,
               options.mass_factor),
      at_most("radiation_pressure_ratio", pressure_ratio, pressure_bound),
      at_most("radiation_pressure_bound", pressure_bound, options.pressure_max),
      at_least("drop_distance_over_M", drop.over_M, drop.threshold),
  };
  rep.ledger.add("radiated Hawking entropy", 0.0, radiated);
  rep.ledger.add("system", stored, 0.0);
  const double s_bh = entropy(hole);
  rep.ledger.add("black hole (mass restored)", s_bh, s_bh);
  rep.quantities = {
      {"zeta", zeta, ""},
      {"hole_mass", hole.mass(), "g"},
      {"hole_temperature", t_bh, "erg"},
      {"entropy_limit", radiated, "nats"},
      {"pressure_ratio", pressure_ratio, ""},
      {"pressure_ratio_bound", pressure_bound, ""},
      {"drop_distance", drop.distance, "cm"},
  };
  rep.notes = "Quantum buoyancy is not modelled.";
  return rep;
}

GedankenReport infall_experiment(const MaterialSystem& sys,
                                 const BlackHole& bh,
                                 const EmissionParameters& p,
                                 const GedankenOptions& options) {
  if (!bh.is_schwarzschild()) {
    throw DomainError("infall_experiment: host hole must be Schwarzschild");
  }
  sys.validate();
  return infall_experiment(sys, bh.mass_length() / sys.radius, p, options);
}

GedankenReport merger(const BlackHole& first, const BlackHole& second) {
  if (!first.is_schwarzschild() || !second.is_schwarzschild()) {
    throw DomainError("merger: both holes must be Schwarzschild");
  }
  const BlackHole merged = make_schwarzschild(first.mass() + second.mass());
  const double a1 = horizon_area(first);
  const double a2 = horizon_area(second);
  const double af = horizon_area(merged);

  GedankenReport r;
  r.scenario = "merger";
  r.ledger.add("first hole", entropy(first), 0.0);
  r.ledger.add("second hole", entropy(second), 0.0);
  r.ledger.add("merged hole", 0.0, entropy(merged));
  r.quantities = {
      {"area_first", a1, "cm^2"},
      {"area_second", a2, "cm^2"},
      {"area_final", af, "cm^2"},
      {"area_ratio", af / (a1 + a2), ""},
  };
  r.notes = "No gravitational-wave losses.";
  return r;
}

}  // namespace bhinfo
