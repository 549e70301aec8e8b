#include "cli/run.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "bhinfo/channel.hpp"
#include "bhinfo/constants.hpp"
#include "bhinfo/entropy_bounds.hpp"
#include "bhinfo/errors.hpp"
#include "bhinfo/evaporation.hpp"
#include "bhinfo/gedanken.hpp"
#include "bhinfo/kerr_newman.hpp"
#include "bhinfo/sweep.hpp"
#include "cli/keyvalue.hpp"
#include "cli/output.hpp"
#include "json.hpp"

namespace bhinfo::cli {
namespace {

// Bad input that is not a physics-domain problem (unreadable record, missing
// argument combination). Reported with the usage exit code.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string slug(const std::string& label) {
  std::string s;
  for (char c : label) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else if (!s.empty() && s.back() != '_') {
      s += '_';
    }
  }
  while (!s.empty() && s.back() == '_') s.pop_back();
  return s;
}

// ---------------------------------------------------------------------------
// Option sets

struct EmissionArgs {
  EmissionParameters p;
  void attach(CLI::App* app) {
    app->add_option("--nu", p.nu, "Radiated-entropy irreversibility factor")
        ->capture_default_str();
    app->add_option("--gamma-bar", p.gamma_bar, "Relativistic emission correction")
        ->capture_default_str();
    app->add_option("--n-species", p.n_species, "Effective massless species count")
        ->capture_default_str();
  }
};

struct SystemArgs {
  std::optional<double> energy;
  std::optional<double> mass;
  double radius = 0.0;
  std::optional<double> entropy;
  std::string label;

  void attach(CLI::App* app, bool entropy_required) {
    auto* e = app->add_option("--energy", energy, "Rest energy E [erg]");
    auto* m = app->add_option("--mass", mass, "Rest mass [g] (E = mc^2)");
    e->excludes(m);
    app->add_option("--radius", radius, "Largest radius R [cm]")->required();
    auto* s = app->add_option("--entropy", entropy, "Stored entropy [nats]");
    if (entropy_required) s->required();
    app->add_option("--label", label, "Free-form label");
  }

  MaterialSystem build() const {
    if (!energy && !mass) throw UsageError("one of --energy or --mass is required");
    MaterialSystem sys;
    sys.energy = energy ? *energy : *mass * kC * kC;
    sys.radius = radius;
    sys.entropy = entropy;
    sys.label = label;
    sys.validate();
    return sys;
  }
};

struct HoleArgs {
  std::optional<double> mass;
  std::optional<double> charge;
  std::optional<double> charge_over_M;
  std::optional<double> spin;
  std::optional<double> spin_over_M;

  void attach(CLI::App* app, const std::string& prefix = "") {
    app->add_option("--" + prefix + "mass", mass, "Hole mass [g]");
    auto* q = app->add_option("--" + prefix + "charge", charge, "Charge [esu]");
    auto* qr = app->add_option("--" + prefix + "charge-over-M", charge_over_M,
                               "Charge as the ratio Q/M");
    q->excludes(qr);
    auto* j = app->add_option("--" + prefix + "spin", spin,
                              "Angular momentum [erg s]");
    auto* jr = app->add_option("--" + prefix + "spin-over-M", spin_over_M,
                               "Spin as the ratio a/M");
    j->excludes(jr);
  }

  BlackHole build() const {
    if (!mass) throw UsageError("a hole mass is required");
    const double m = *mass;
    const double M = m > 0.0 ? kG * m / (kC * kC) : 0.0;
    const double q = charge ? *charge
                            : charge_from_geometrized(charge_over_M.value_or(0.0) * M);
    const double j = spin ? *spin : spin_over_M.value_or(0.0) * M * m * kC;
    return make_black_hole(m, q, j);
  }
};

void add_emission_fields(Document& doc, const EmissionParameters& p) {
  doc.add("emission.nu", p.nu);
  doc.add("emission.gamma_bar", p.gamma_bar);
  doc.add("emission.n_species", p.n_species);
}

// ---------------------------------------------------------------------------
// Documents

Document constants_document() {
  const auto& pc = constants();
  Document doc;
  doc.add("source", "CODATA 2018");
  doc.add("G", pc.G, "cm^3 g^-1 s^-2");
  doc.add("c", pc.c, "cm s^-1");
  doc.add("hbar", pc.hbar, "erg s");
  doc.add("k_B", pc.k_B, "erg K^-1");
  doc.add("sigma_SB", pc.sigma_SB, "erg cm^-2 s^-1 K^-4");
  doc.add("sigma_SB_energy_units", stefan_boltzmann_energy_units(),
          "erg^-3 cm^-2 s^-1");
  doc.add("planck_length", pc.planck_length, "cm");
  doc.add("planck_mass", pc.planck_mass, "g");
  return doc;
}

Document black_hole_document(const BlackHole& bh, const EmissionParameters& p) {
  Document doc;
  doc.add_exact("input.mass", bh.mass(), "g");
  doc.add_exact("input.charge", bh.charge(), "esu");
  doc.add_exact("input.angular_momentum", bh.angular_momentum(), "erg s");
  doc.add("lengths.M", bh.mass_length(), "cm");
  doc.add("lengths.Q", bh.charge_length(), "cm");
  doc.add("lengths.a", bh.spin_length(), "cm");
  doc.add("lengths.r_plus", bh.outer_radius(), "cm");
  doc.add("extremal", bh.is_extremal());
  doc.add("area", horizon_area(bh), "cm^2");
  doc.add("entropy", entropy(bh), "nats");
  doc.add("entropy_bits", nats_to_bits(entropy(bh)), "bits");
  doc.add("temperature", temperature(bh), "erg");
  doc.add("temperature_kelvin", energy_temperature_to_kelvin(temperature(bh)), "K");
  const auto pot = potentials(bh);
  doc.add("potentials.theta", pot.theta, "erg cm^-2");
  doc.add("potentials.phi", pot.phi, "statvolt");
  doc.add("potentials.omega", pot.omega, "s^-1");
  const auto h = h_factors(bh);
  doc.add("h_factors.h1", h.h1);
  doc.add("h_factors.h2", h.h2);
  doc.add("mean_density", mean_density(bh.mass()), "g cm^-3");
  if (bh.is_schwarzschild()) {
    add_emission_fields(doc, p);
    doc.add("emission.hawking_power", hawking_power(bh, p), "erg s^-1");
    doc.add("emission.mass_loss_rate_per_species", mass_loss_rate(bh.mass()),
            "g s^-1");
    doc.add("emission.entropy_rate", radiated_entropy_rate(bh, p), "nats s^-1");
  }
  return doc;
}

Document bounds_document(const MaterialSystem& sys, double area,
                         const BoundReport& r) {
  Document doc;
  if (!sys.label.empty()) doc.add("system.label", sys.label);
  doc.add("system.energy", sys.energy, "erg");
  doc.add("system.radius", sys.radius, "cm");
  if (sys.entropy) doc.add("system.entropy", *sys.entropy, "nats");
  doc.add("enclosing_area", area, "cm^2");
  doc.add("compositeness", r.compositeness);
  doc.add("weak_gravity_ratio", r.weak_gravity_ratio);
  doc.add("composite", r.composite);
  doc.add("weakly_gravitating", r.weakly_gravitating);
  for (const auto& e : r.entries) {
    const std::string base = "bounds." + e.name + ".";
    doc.add(base + "limit", e.limit, "nats");
    doc.add(base + "limit_bits", e.limit_bits, "bits");
    doc.add(base + "applicable", e.applicable);
    doc.add(base + "reason", e.applicability_reason);
    if (e.violated) doc.add(base + "violated", *e.violated);
  }
  doc.add("tightest_applicable", r.tightest_applicable);
  doc.add("ordering_consistent", r.ordering_consistent);
  std::string violations;
  for (const auto& v : r.violations) {
    violations += (violations.empty() ? "" : ",") + v;
  }
  doc.add("violations", violations);
  return doc;
}

Document gedanken_document(const GedankenReport& r) {
  Document doc;
  doc.add("scenario", r.scenario);
  doc.add("applicable", r.applicable());
  const auto verdict = r.gsl_verdict();
  doc.add("verdict", !verdict ? "inapplicable" : (*verdict ? "satisfied" : "violated"));
  doc.add("ledger.delta_total", r.ledger.delta_total(), "nats");
  doc.add("ledger.gsl_satisfied", r.ledger.gsl_satisfied());
  for (const auto& e : r.ledger.entries()) {
    const std::string base = "ledger.entries." + slug(e.label) + ".";
    doc.add(base + "before", e.before, "nats");
    doc.add(base + "after", e.after, "nats");
  }
  for (const auto& c : r.assumption_checks) {
    const std::string base = "checks." + c.name + ".";
    doc.add(base + "value", c.value);
    doc.add(base + "threshold", c.threshold);
    doc.add(base + "relation", c.relation);
    doc.add(base + "passed", c.passed);
  }
  for (const auto& q : r.quantities) {
    doc.add("quantities." + q.name, q.value, q.unit);
  }
  doc.add("notes", r.notes);
  return doc;
}

Document channel_document(const Channel& ch, const CapacityReport& r,
                          std::optional<double> packet_energy) {
  Document doc;
  doc.add("channel.lambda_c", ch.lambda_c, "cm");
  doc.add("channel.power", ch.power, "erg s^-1");
  doc.add("channel.n_carriers", ch.n_carriers);
  add_emission_fields(doc, ch.emission);
  doc.add("p_c", r.p_c, "erg s^-1");
  doc.add("p_c_approx", r.p_c_approx, "erg s^-1");
  doc.add("regime", to_string(r.regime));
  doc.add("xi_used", r.xi_used);
  doc.add("bound_bits_per_s", r.bound_bits_per_s, "bits s^-1");
  doc.add("pendry_bits_per_s", r.pendry_bits_per_s, "bits s^-1");
  doc.add("consistency.f0_limit", r.consistency.f0_limit);
  doc.add("consistency.finf_value", r.consistency.finf_value);
  doc.add("consistency.monotone_ok", r.consistency.monotone_ok);
  doc.add("consistency.caveat", r.consistency.caveat);
  doc.add("consistency.pendry_crossover_power",
          r.consistency.pendry_crossover_power, "erg s^-1");
  doc.add("consistency.dominates_at_pc", r.consistency.dominates_at_pc);
  if (packet_energy) {
    doc.add("bremermann_bits_per_s", bremermann_rate(*packet_energy, r.xi_used),
            "bits s^-1");
  }
  return doc;
}

Series sweep_series(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
  Series s;
  s.columns = {{to_string(spec.variable), unit_of(spec.variable)},
               {to_string(spec.quantity), unit_of(spec.quantity)}};
  const bool with_regime = spec.quantity == SweepQuantity::capacity_bound;
  if (with_regime) s.columns.push_back({"regime", ""});
  for (const auto& row : rows) {
    std::vector<Value> cells{row.x, row.value};
    if (with_regime) cells.emplace_back(to_string(row.regime.value_or(Regime::low)));
    s.rows.push_back(std::move(cells));
  }
  s.summary.add("points", static_cast<double>(rows.size()));
  return s;
}

// Reads an emitted `bh` JSON record back into a hole.
BlackHole black_hole_from_record(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
  const nlohmann::json* input = nullptr;
  if (j.contains("values") && j["values"].contains("input")) {
    input = &j["values"]["input"];
  } else if (j.contains("input")) {
    input = &j["input"];
  }
  if (!input || !input->is_object()) {
    throw UsageError(path + ": no `input` record");
  }
  for (const auto& [key, value] : input->items()) {
    if (key != "mass" && key != "charge" && key != "angular_momentum") {
      throw UsageError(path + ": unknown key `" + key + "` in input record");
    }
    if (!value.is_number()) throw UsageError(path + ": `" + key + "` is not a number");
  }
  if (!input->contains("mass")) throw UsageError(path + ": input record lacks mass");
  return make_black_hole(input->at("mass").get<double>(),
                         input->value("charge", 0.0),
                         input->value("angular_momentum", 0.0));
}

// ---------------------------------------------------------------------------
// Config files

bool mentions_option(const std::vector<std::string>& args,
                     const std::string& name) {
  return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
    return a == name || a.rfind(name + "=", 0) == 0;
  });
}

CLI::App* deepest_subcommand(CLI::App& app, const std::vector<std::string>& args) {
  CLI::App* target = &app;
  for (const auto& a : args) {
    if (a.empty() || a[0] == '-') continue;
    CLI::App* sub = nullptr;
    try {
      sub = target->get_subcommand(a);
    } catch (const CLI::OptionNotFound&) {
      sub = nullptr;
    }
    if (sub) target = sub;
  }
  return target;
}

const CLI::Option* find_option(CLI::App* app, const std::string& name) {
  for (CLI::App* a = app; a; a = a->get_parent()) {
    if (const CLI::Option* opt = a->get_option_no_throw(name)) return opt;
  }
  return nullptr;
}

// Splices `key = value` pairs from --config into the argument list as
// `--key=value`, skipping keys also given on the command line.
std::vector<std::string> apply_config(CLI::App& app, std::vector<std::string> args) {
  std::optional<std::string> path;
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config needs a file");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (!path) return rest;

  KeyValues kv;
  try {
    kv = read_key_value_file(*path);
  } catch (const KeyValueError& e) {
    throw UsageError(*path + ": " + e.what());
  }
  CLI::App* target = deepest_subcommand(app, rest);
  for (const auto& [key, value] : kv) {
    const std::string name = "--" + key;
    if (!find_option(target, name)) {
      throw UsageError(*path + ": unknown key `" + key + "` for `" +
                       (target == &app ? std::string("bhinfo") : target->get_name()) +
                       "`");
    }
    if (!mentions_option(rest, name)) rest.push_back(name + "=" + value);
  }
  return rest;
}

}  // namespace

// ---------------------------------------------------------------------------

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Black-hole thermodynamics, entropy bounds and channel capacity",
               "bhinfo"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "json";
  app.add_option("--format", format_name, "Output format: table, json or csv")
      ->envname(kFormatEnv)
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  // Handled before parsing; registered so it shows in --help.
  app.add_option("--config", "Flat key = value file of option defaults");

  std::function<void(Format)> action;

  // constants
  auto* constants_cmd = app.add_subcommand("constants", "Dump the constants table");
  constants_cmd->callback([&] {
    action = [&](Format f) { render(constants_document(), f, out); };
  });

  // bh
  auto* bh_cmd = app.add_subcommand("bh", "Kerr-Newman hole properties");
  HoleArgs bh_args;
  bh_args.attach(bh_cmd);
  EmissionArgs bh_emission;
  bh_emission.attach(bh_cmd);
  std::string bh_input;
  bh_cmd->add_option("--input", bh_input, "Re-read an emitted JSON record")
      ->excludes("--mass")
      ->check(CLI::ExistingFile);
  bh_cmd->callback([&] {
    action = [&](Format f) {
      const BlackHole bh =
          bh_input.empty() ? bh_args.build() : black_hole_from_record(bh_input);
      render(black_hole_document(bh, bh_emission.p), f, out);
    };
  });

  // evaporate
  auto* evap_cmd = app.add_subcommand("evaporate", "Evaporation track m(t) down to the Planck mass");
  double evap_mass = 0.0;
  std::size_t evap_samples = 200;
  EmissionArgs evap_emission;
  evap_cmd->add_option("--mass", evap_mass, "Initial mass [g]")->required();
  evap_cmd->add_option("--samples", evap_samples, "Maximum rows in the track")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  evap_emission.attach(evap_cmd);
  evap_cmd->callback([&] {
    action = [&](Format f) {
      const auto result = evaporate(evap_mass, evap_emission.p, true);
      Series s;
      s.columns = {{"t", "s"}, {"m", "g"}};
      // Points nearest a uniform time grid; the final (Planck-mass) point is
      // always kept.
      const auto& track = result.track;
      const std::size_t rows = std::max<std::size_t>(evap_samples, 2);
      std::size_t next = 0;
      for (std::size_t k = 0; k < rows && next < track.size(); ++k) {
        const double target = result.seconds * static_cast<double>(k) /
                              static_cast<double>(rows - 1);
        while (next + 1 < track.size() && track[next].t < target) ++next;
        s.rows.push_back({track[next].t, track[next].y});
        ++next;
      }
      // The last grams go in far less than one ulp of t, so the final sample
      // can share its time with an earlier one; the endpoint wins.
      if (!track.empty()) {
        const std::vector<Value> last{track.back().t, track.back().y};
        if (std::get<double>(s.rows.back()[0]) >= track.back().t) {
          s.rows.back() = last;
        } else {
          s.rows.push_back(last);
        }
      }
      s.summary.add("initial_mass", evap_mass, "g");
      s.summary.add("final_mass", constants().planck_mass, "g");
      s.summary.add("lifetime", result.seconds, "s");
      s.summary.add("steps", static_cast<double>(result.steps));
      s.summary.add("evaporation_constant",
                    evap_emission.p.n_species * evaporation_constant(), "g^3 s^-1");
      render(s, f, out);
    };
  });

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "Entropy and information bounds for a system");
  SystemArgs bounds_sys;
  bounds_sys.attach(bounds_cmd, false);
  std::optional<double> bounds_area;
  BoundOptions bound_opts;
  bounds_cmd->add_option("--area", bounds_area,
                         "Enclosing area [cm^2]; default 4 pi R^2");
  bounds_cmd->add_option("--nu", bound_opts.nu, "nu for the weak bound")->capture_default_str();
  bounds_cmd->add_option("--zeta", bound_opts.zeta, "zeta for the weak bound")->capture_default_str();
  bounds_cmd->add_option("--composite-min", bound_opts.thresholds.composite_min,
                         "Compositeness threshold on ER/(c hbar)")
      ->capture_default_str();
  bounds_cmd->add_option("--weak-gravity-max", bound_opts.thresholds.weak_gravity_max,
                         "Weak-gravity threshold on GE/(c^4 R)")
      ->capture_default_str();
  bounds_cmd->callback([&] {
    action = [&](Format f) {
      const MaterialSystem sys = bounds_sys.build();
      const double area = bounds_area.value_or(sphere_area(sys.radius));
      render(bounds_document(sys, area, bound_report(sys, area, bound_opts)), f, out);
    };
  });

  // gedanken
  auto* ged_cmd = app.add_subcommand("gedanken", "GSL gedanken-experiment ledgers");
  ged_cmd->require_subcommand(1);
  GedankenOptions ged_opts;
  auto attach_ged_options = [&](CLI::App* sub) {
    sub->add_option("--mass-factor", ged_opts.mass_factor,
                    "Required hole/object mass ratio")
        ->capture_default_str();
  };

  auto* sus_cmd = ged_cmd->add_subcommand("susskind", "Collapse of a system inside a sphere");
  SystemArgs sus_sys;
  sus_sys.attach(sus_cmd, true);
  std::optional<double> sus_area;
  sus_cmd->add_option("--area", sus_area, "Enclosing area [cm^2]; default 4 pi R^2");
  sus_cmd->callback([&] {
    action = [&](Format f) {
      const auto sys = sus_sys.build();
      render(gedanken_document(susskind_collapse(
                 sys, sus_area.value_or(sphere_area(sys.radius)), ged_opts)),
             f, out);
    };
  });

  auto* cap_cmd = ged_cmd->add_subcommand("capsule", "Lower a capsule into a Kerr-Newman hole");
  HoleArgs cap_hole;
  cap_hole.attach(cap_cmd);
  double cap_mu = 0.0;
  double cap_b = 0.0;
  double cap_s = 0.0;
  cap_cmd->add_option("--capsule-mass", cap_mu, "Capsule rest mass mu [g]")->required();
  cap_cmd->add_option("--capsule-radius", cap_b, "Capsule radius b [cm]")->required();
  cap_cmd->add_option("--capsule-entropy", cap_s, "Capsule entropy [nats]")->required();
  cap_cmd->add_option("--size-factor", ged_opts.size_factor,
                      "Required r_plus / b")
      ->capture_default_str();
  attach_ged_options(cap_cmd);
  cap_cmd->callback([&] {
    action = [&](Format f) {
      render(gedanken_document(
                 capsule_lowering(cap_hole.build(), cap_mu, cap_b, cap_s, ged_opts)),
             f, out);
    };
  });

  auto* inf_cmd = ged_cmd->add_subcommand("infall", "Drop a system into a Schwarzschild hole");
  SystemArgs inf_sys;
  inf_sys.attach(inf_cmd, true);
  double inf_zeta = 10.0;
  std::optional<double> inf_hole_mass;
  EmissionArgs inf_emission;
  auto* zeta_opt = inf_cmd->add_option("--zeta", inf_zeta, "Hole scale M / R")
                       ->capture_default_str();
  inf_cmd->add_option("--hole-mass", inf_hole_mass, "Host hole mass [g]")->excludes(zeta_opt);
  inf_cmd->add_option("--composite-min", ged_opts.thresholds.composite_min,
                      "Compositeness threshold")
      ->capture_default_str();
  inf_cmd->add_option("--weak-gravity-max", ged_opts.thresholds.weak_gravity_max,
                      "Weak-gravity threshold")
      ->capture_default_str();
  inf_cmd->add_option("--pressure-max", ged_opts.pressure_max,
                      "Largest negligible radiation-pressure ratio")
      ->capture_default_str();
  inf_emission.attach(inf_cmd);
  attach_ged_options(inf_cmd);
  inf_cmd->callback([&] {
    action = [&](Format f) {
      const auto sys = inf_sys.build();
      const auto report =
          inf_hole_mass
              ? infall_experiment(sys, make_schwarzschild(*inf_hole_mass),
                                  inf_emission.p, ged_opts)
              : infall_experiment(sys, inf_zeta, inf_emission.p, ged_opts);
      render(gedanken_document(report), f, out);
    };
  });

  auto* mer_cmd = ged_cmd->add_subcommand("merger", "Merge two Schwarzschild holes");
  double mer_m1 = 0.0;
  double mer_m2 = 0.0;
  mer_cmd->add_option("--mass1", mer_m1, "First hole mass [g]")->required();
  mer_cmd->add_option("--mass2", mer_m2, "Second hole mass [g]")->required();
  mer_cmd->callback([&] {
    action = [&](Format f) {
      render(gedanken_document(
                 merger(make_schwarzschild(mer_m1), make_schwarzschild(mer_m2))),
             f, out);
    };
  });

  // channel
  auto* ch_cmd = app.add_subcommand("channel", "GSL bound on a channel's information rate");
  ch_cmd->require_subcommand(0, 1);
  std::optional<double> ch_lambda;
  std::optional<double> ch_frequency;
  double ch_power = 0.0;
  double ch_n = 1.0;
  std::optional<double> ch_packet;
  CapacityOptions ch_opts;
  EmissionArgs ch_emission;
  auto* lam = ch_cmd->add_option("--lambda-c", ch_lambda, "Long-wavelength cutoff [cm]");
  auto* freq = ch_cmd->add_option("--frequency", ch_frequency,
                                  "Cutoff as a frequency [Hz], lambda_c = c / f");
  lam->excludes(freq);
  auto* power_opt = ch_cmd->add_option("--power", ch_power, "Channel power P [erg s^-1]");
  ch_cmd->add_option("--n-carriers", ch_n, "Effective carrier species n")->capture_default_str();
  ch_cmd->add_option("--packet-energy", ch_packet, "Packet energy for Bremermann's rate [erg]");
  ch_cmd->add_option("--xi-floor", ch_opts.xi_floor, "xi in the high-power regime")
      ->capture_default_str();
  ch_cmd->add_flag("--separate-helicities", ch_opts.separate_helicities,
                   "Count photon helicities as two species");
  ch_emission.attach(ch_cmd);

  auto build_channel = [&](double power) {
    if (!ch_lambda && !ch_frequency) {
      throw UsageError("one of --lambda-c or --frequency is required");
    }
    Channel ch;
    ch.lambda_c = ch_lambda ? *ch_lambda : kC / *ch_frequency;
    ch.power = power;
    ch.n_carriers = ch_n;
    ch.emission = ch_emission.p;
    ch.validate();
    return ch;
  };

  auto* ch_sweep = ch_cmd->add_subcommand("sweep", "Bound versus power series");
  double chs_from = 0.0;
  double chs_to = 0.0;
  std::size_t chs_points = 50;
  bool chs_linear = false;
  ch_sweep->add_option("--from", chs_from, "Lowest power [erg s^-1]")->required();
  ch_sweep->add_option("--to", chs_to, "Highest power [erg s^-1]")->required();
  ch_sweep->add_option("--points", chs_points, "Grid points")->capture_default_str();
  ch_sweep->add_flag("--linear", chs_linear, "Linear instead of log spacing");

  ch_cmd->callback([&] {
    action = [&](Format f) {
      if (ch_sweep->parsed()) {
        if (power_opt->count() > 0) {
          throw UsageError("--power is swept; use --from/--to");
        }
        const Channel base = build_channel(0.0);
        SweepSpec spec;
        spec.variable = SweepVariable::power;
        spec.quantity = SweepQuantity::capacity_bound;
        spec.from = chs_from;
        spec.to = chs_to;
        spec.points = chs_points;
        spec.log_spacing = !chs_linear;
        spec.lambda_c = base.lambda_c;
        spec.n_carriers = base.n_carriers;
        spec.emission = base.emission;
        spec.capacity = ch_opts;
        render(sweep_series(spec, run_sweep_parallel(spec)), f, out);
        return;
      }
      if (power_opt->count() == 0) throw UsageError("--power is required");
      const Channel ch = build_channel(ch_power);
      render(channel_document(ch, capacity_bound(ch, ch_opts), ch_packet), f, out);
    };
  });

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate a quantity over a mass or power range");
  SweepSpec sw;
  std::string sw_over = "mass";
  std::string sw_quantity = "entropy";
  bool sw_linear = false;
  bool sw_serial = false;
  EmissionArgs sw_emission;
  sweep_cmd->add_option("--over", sw_over, "Swept variable: mass or power")
      ->check(CLI::IsMember({"mass", "power"}))
      ->capture_default_str();
  sweep_cmd->add_option("--quantity", sw_quantity,
                        "entropy, temperature, area, radius, density, "
                        "mass_loss_rate, lifetime | capacity_bound, "
                        "pendry_capacity, entropy_rate")
      ->capture_default_str();
  sweep_cmd->add_option("--from", sw.from, "Range start")->required();
  sweep_cmd->add_option("--to", sw.to, "Range end")->required();
  sweep_cmd->add_option("--points", sw.points, "Grid points")->required();
  sweep_cmd->add_flag("--linear", sw_linear, "Linear instead of log spacing");
  sweep_cmd->add_flag("--serial", sw_serial, "Use the serial reference kernel");
  sweep_cmd->add_option("--charge-over-M", sw.charge_over_M, "Q/M of swept holes")
      ->capture_default_str();
  sweep_cmd->add_option("--spin-over-M", sw.spin_over_M, "a/M of swept holes")
      ->capture_default_str();
  sweep_cmd->add_option("--lambda-c", sw.lambda_c, "Channel cutoff for power sweeps [cm]")
      ->capture_default_str();
  sweep_cmd->add_option("--n-carriers", sw.n_carriers, "Carrier species for power sweeps")
      ->capture_default_str();
  sw_emission.attach(sweep_cmd);
  sweep_cmd->callback([&] {
    action = [&](Format f) {
      sw.variable = *parse_sweep_variable(sw_over);
      const auto q = parse_sweep_quantity(sw_quantity);
      if (!q) throw UsageError("unknown sweep quantity `" + sw_quantity + "`");
      sw.quantity = *q;
      sw.log_spacing = !sw_linear;
      sw.emission = sw_emission.p;
      if (variable_of(sw.quantity) != sw.variable) {
        throw UsageError(sw_quantity + " cannot be swept over " + sw_over);
      }
      const auto rows = sw_serial ? run_sweep_serial(sw) : run_sweep_parallel(sw);
      render(sweep_series(sw, rows), f, out);
    };
  });

  try {
    std::vector<std::string> tokens = apply_config(app, args);
    std::reverse(tokens.begin(), tokens.end());
    app.parse(tokens);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const UsageError& e) {
    err << "bhinfo: " << e.what() << "\n";
    return kExitUsage;
  }

  const Format format = *parse_format(format_name);
  try {
    if (action) action(format);
  } catch (const NakedSingularityError& e) {
    err << "bhinfo: " << e.what() << "\n";
    return kExitDomain;
  } catch (const DomainError& e) {
    err << "bhinfo: " << e.what() << "\n";
    return kExitDomain;
  } catch (const UsageError& e) {
    err << "bhinfo: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "bhinfo: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace bhinfo::cli
