#pragma once

// Thermodynamics of the ideal spin-1/2 Fermi gas in a box of side L with a
// hard floor under gravity. With E_r the in-plane kinetic energy and E_z the
// vertical level, the density of states is proportional to sqrt(E_z), which
// gives in reduced units t = kB T / eps_F and eta = mu / kB T:
//
//   (beta eps_F)^{5/2} = (5/2) F_{3/2}(eta)
//   mu / eps_F         = eta t
//   U / (N eps_F)      = (15/4) t^{7/2} [ (2/5) F_{5/2}(eta) + D(eta) ]
//
// where D(eta) = int int zeta^{1/2} upsilon / (e^{zeta+upsilon-eta} + 1)
// reduces to (4/15) F_{5/2}(eta).

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ucngas/constants.hpp"
#include "ucngas/error.hpp"
#include "ucngas/fermi_dirac.hpp"
#include "ucngas/numerics.hpp"

namespace ucngas {

inline constexpr int spin_degeneracy = 2;
inline constexpr double min_reduced_temperature = 1e-4;
inline constexpr double max_reduced_temperature = 1e3;

/// eps_F = (hbar^2 / 2m) (15 pi^2 m^2 g N / (hbar^2 L^2))^{2/5}.
[[nodiscard]] inline double fermi_energy(double N, double L, const PhysicalConstants& c) {
  if (!(N > 0.0) || !(L > 0.0)) throw domain_error("N and L must be positive");
  require_valid(c);
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  const double h2 = c.hbar * c.hbar;
  return h2 / (2.0 * c.m) * std::pow(15.0 * pi2 * c.m * c.m * c.g * N / (h2 * L * L), 0.4);
}

/// Particle number holding a given Fermi energy; inverse of fermi_energy.
[[nodiscard]] inline double particle_count(double eps_F, double L, const PhysicalConstants& c) {
  if (!(eps_F > 0.0) || !(L > 0.0)) throw domain_error("eps_F and L must be positive");
  require_valid(c);
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  const double h2 = c.hbar * c.hbar;
  return std::pow(2.0 * c.m * eps_F / h2, 2.5) * h2 * L * L / (15.0 * pi2 * c.m * c.m * c.g);
}

/// Particle number N, wall size L and the Fermi energy they imply.
class GasSpec {
 public:
  [[nodiscard]] static GasSpec from_particles(double N, double L, const PhysicalConstants& c) {
    return GasSpec(N, L, ucngas::fermi_energy(N, L, c));
  }

  /// Chooses N so that the gas has Fermi energy eps_F in a box of side L.
  [[nodiscard]] static GasSpec from_fermi_energy(double eps_F, double L,
                                                 const PhysicalConstants& c) {
    return GasSpec(particle_count(eps_F, L, c), L, eps_F);
  }

  [[nodiscard]] double particles() const noexcept { return N_; }
  [[nodiscard]] double side() const noexcept { return L_; }
  [[nodiscard]] double fermi_energy() const noexcept { return eps_F_; }

 private:
  GasSpec(double N, double L, double eps_F) : N_(N), L_(L), eps_F_(eps_F) {}

  double N_;
  double L_;
  double eps_F_;
};

/// One temperature point of the gas in reduced units.
struct ThermoPoint {
  double t = 0.0;           ///< kB T / eps_F
  double eta = 0.0;         ///< mu / kB T
  double mu_over_ef = 0.0;  ///< mu / eps_F
  double u_over_nef = 0.0;  ///< U / (N eps_F)
};

namespace detail {

inline void require_reduced_temperature(double t) {
  if (!(t >= min_reduced_temperature && t <= max_reduced_temperature)) {
    throw domain_error("reduced temperature " + std::to_string(t) + " outside [1e-4, 1e3]");
  }
}

// Solves beta_eps_F(eta) * t = 1 with beta_eps_F increasing in eta.
template <class BetaEpsF>
double invert_temperature(BetaEpsF beta_epsf, double t) {
  require_reduced_temperature(t);
  auto residual = [&](double eta) { return beta_epsf(eta) * t - 1.0; };
  // beta eps_F > eta for eta > 0, so the root lies below 1/t.
  const double hi = 1.0 / t + 1.0;
  double lo = -50.0;
  while (residual(lo) > 0.0) {
    lo *= 2.0;
    if (lo < -specfun::fermi_dirac_max_abs_eta) {
      throw convergence_error("cannot bracket eta at t = " + std::to_string(t));
    }
  }
  return numerics::find_root(residual, lo, hi);
}

}  // namespace detail

/// beta eps_F as a function of the degeneracy parameter: ((5/2) F_{3/2}(eta))^{2/5}.
[[nodiscard]] inline double beta_epsf_from_eta(double eta) {
  return std::pow(2.5 * specfun::fermi_dirac(specfun::FermiDiracOrder::three_halves, eta), 0.4);
}

/// Degeneracy parameter eta = mu / kB T at reduced temperature t, 1e-4 <= t <= 1e3.
[[nodiscard]] inline double eta_from_t(double t) {
  return detail::invert_temperature(beta_epsf_from_eta, t);
}

[[nodiscard]] inline double mu_over_ef(double t) { return eta_from_t(t) * t; }

/// Low-temperature expansion of mu / eps_F: 1 - (pi^2/4) t^2, or the printed
/// 1 - (pi^2/2) t^2 under Coefficients::paper_literal.
[[nodiscard]] inline double mu_over_ef_sommerfeld(double t,
                                                  Coefficients coeffs = Coefficients::consistent) {
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  const double k = coeffs == Coefficients::paper_literal ? pi2 / 2.0 : pi2 / 4.0;
  return 1.0 - k * t * t;
}

/// Cross term D(eta) of the internal energy, (4/15) F_{5/2}(eta).
[[nodiscard]] inline double internal_energy_cross_term(double eta) {
  return 4.0 / 15.0 * specfun::fermi_dirac(specfun::FermiDiracOrder::five_halves, eta);
}

/// U / (N eps_F) given eta and the matching t.
[[nodiscard]] inline double internal_energy_at(double eta, double t) {
  const double f52 = specfun::fermi_dirac(specfun::FermiDiracOrder::five_halves, eta);
  return 3.75 * std::pow(t, 3.5) * (0.4 * f52 + internal_energy_cross_term(eta));
}

/// U / (N eps_F) at reduced temperature t.
[[nodiscard]] inline double internal_energy(double t) {
  return internal_energy_at(eta_from_t(t), t);
}

/// Full thermodynamic state; t = 0 returns the degenerate limit
/// (mu = eps_F, U = (5/7) N eps_F).
[[nodiscard]] inline ThermoPoint thermo_point(double t) {
  if (t == 0.0) {
    return {0.0, std::numeric_limits<double>::infinity(), 1.0, 5.0 / 7.0};
  }
  ThermoPoint p;
  p.t = t;
  p.eta = eta_from_t(t);
  p.mu_over_ef = p.eta * t;
  p.u_over_nef = internal_energy_at(p.eta, t);
  return p;
}

/// The same quantities for a free (no gravity) Fermi gas at equal eps_F,
/// where (beta eps_F)^{3/2} = (3/2) F_{1/2}(eta).
[[nodiscard]] inline double free_gas_beta_epsf_from_eta(double eta) {
  return std::pow(1.5 * specfun::fermi_dirac(specfun::FermiDiracOrder::one_half, eta),
                  2.0 / 3.0);
}

[[nodiscard]] inline double free_gas_eta_from_t(double t) {
  return detail::invert_temperature(free_gas_beta_epsf_from_eta, t);
}

[[nodiscard]] inline double free_gas_mu_over_ef(double t) { return free_gas_eta_from_t(t) * t; }

/// U / (N eps_F) = (3/2) t^{5/2} F_{3/2}(eta) for the free gas.
[[nodiscard]] inline double free_gas_u_over_nef(double t) {
  const double eta = free_gas_eta_from_t(t);
  return 1.5 * std::pow(t, 2.5) *
         specfun::fermi_dirac(specfun::FermiDiracOrder::three_halves, eta);
}

/// 1 - (pi^2/12) t^2.
[[nodiscard]] inline double free_gas_mu_over_ef_sommerfeld(double t) {
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  return 1.0 - pi2 / 12.0 * t * t;
}

}  // namespace ucngas
