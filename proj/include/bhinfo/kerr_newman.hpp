#pragma once

// Kerr-Newman black holes in CGS. A hole is specified by its mass m (g),
// charge q (esu) and angular momentum j (erg s); everything else is derived
// from the three length scales M = Gm/c^2, Q = sqrt(G) q/c^2, a = j/(mc).

namespace bhinfo {

// Relative slack on the existence test Q^2 + a^2 <= M^2.
inline constexpr double kExtremalSlack = 1e-12;

class BlackHole {
 public:
  double mass() const { return m_; }
  double charge() const { return q_; }
  double angular_momentum() const { return j_; }

  double mass_length() const { return M_; }
  double charge_length() const { return Q_; }
  double spin_length() const { return a_; }

  // sqrt(M^2 - Q^2 - a^2), clamped to zero within the extremal slack.
  double horizon_gap() const { return gap_; }
  // Outer horizon radius r_+ = M + sqrt(M^2 - Q^2 - a^2).
  double outer_radius() const { return M_ + gap_; }

  bool is_schwarzschild() const { return q_ == 0.0 && j_ == 0.0; }
  bool is_extremal() const { return gap_ == 0.0; }

 private:
  friend BlackHole make_black_hole(double m, double q, double j);
  friend BlackHole make_black_hole_from_ratios(double m, double qr, double ar);
  BlackHole() = default;

  double m_ = 0.0;
  double q_ = 0.0;
  double j_ = 0.0;
  double M_ = 0.0;
  double Q_ = 0.0;
  double a_ = 0.0;
  double gap_ = 0.0;
};

// Throws DomainError for m below the Planck mass and NakedSingularityError
// when Q^2 + a^2 exceeds M^2 by more than kExtremalSlack.
BlackHole make_black_hole(double mass_g, double charge_esu,
                          double angular_momentum);

// Same hole specified through the dimensionless ratios Q/M and a/M. The
// length scales and the gap are taken from the ratios directly, so a/M = 1
// gives an exactly extremal hole.
BlackHole make_black_hole_from_ratios(double mass_g, double charge_over_M,
                                      double spin_over_M);

inline BlackHole make_schwarzschild(double mass_g) {
  return make_black_hole(mass_g, 0.0, 0.0);
}

// 2Gm/c^2
double schwarzschild_radius(double mass_g);

// A = 4 pi [ (M + sqrt(M^2 - Q^2 - a^2))^2 + a^2 ]
double horizon_area(const BlackHole& bh);

// S_BH = A / (4 l_P^2), in nats.
double entropy(const BlackHole& bh);

// T_BH = (c hbar / 2 eta A) sqrt(M^2 - Q^2 - a^2) with eta = 1/4, in erg.
double temperature(const BlackHole& bh);

// hbar c / (8 pi M): the q = j = 0 reduction, evaluated independently of
// temperature().
double schwarzschild_temperature(double mass_g);

struct FirstLawPotentials {
  double theta;  // erg cm^-2
  double phi;    // statvolt
  double omega;  // s^-1
};

// Conjugates in d(mc^2) = Theta dA + Phi dq + Omega dj:
//   Theta = c^4 (r_+ - M) / (2 G A)
//   Phi   = q r_+ / (r_+^2 + a^2)
//   Omega = a c / (r_+^2 + a^2) = j / (m (r_+^2 + a^2))
FirstLawPotentials potentials(const BlackHole& bh);

// |d(mc^2) - Theta dA - Phi dq - Omega dj| normalised by
// |d(mc^2)| + |Phi dq| + |Omega dj|, with dA from a central difference of
// the area. Throws DomainError if all perturbations vanish or if either
// perturbed hole would be over-extremal.
double first_law_residual(const BlackHole& bh, double dm, double dq,
                          double dj);

struct HFactors {
  double h1;  // S_BH / S_BH(Schwarzschild, same m)
  double h2;  // T_BH / T_BH(Schwarzschild, same m)
};

HFactors h_factors(const BlackHole& bh);

// <rho> = 3 c^6 / (32 pi G^3 m^2), the mean density inside r_g.
double mean_density(double mass_g);

}  // namespace bhinfo
