#pragma once

// Semiclassical number density of the trapped gas,
//
//   n(T, z) = g_s / (2 pi hbar)^3 int d^3p  1 / (e^{(p^2/2m + m g z - mu)/kB T} + 1)
//           = (2 m kB T)^{3/2} / (2 pi^2 hbar^3) F_{1/2}(eta - m g z / kB T)    (g_s = 2)
//
// and diagnostics for how degenerate a given density is.

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "ucngas/constants.hpp"
#include "ucngas/error.hpp"
#include "ucngas/fermi_dirac.hpp"
#include "ucngas/thermo.hpp"
#include "ucngas/units.hpp"

namespace ucngas {

/// Densities on a height grid at one reduced temperature.
struct DensityProfile {
  double t = 0.0;
  std::vector<double> zs;  ///< heights [m]
  std::vector<double> ns;  ///< number densities [m^-3]
  double eps_F = 0.0;      ///< [J]
};

/// Mean separation versus thermal wavelength at a density and temperature.
struct DilutenessReport {
  double density = 0.0;             ///< [m^-3]
  double mean_separation = 0.0;     ///< n^{-1/3} [m]
  double thermal_wavelength = 0.0;  ///< h / sqrt(3 m kB T) [m]
  bool degenerate = false;          ///< mean_separation <= thermal_wavelength
};

/// One point of the bottom density as a function of the Fermi energy.
struct BottomDensityPoint {
  double fermi_temperature_K = 0.0;  ///< eps_F / kB
  double density_per_cm3 = 0.0;      ///< n(0, 0)
};

namespace detail {

// Spin-summed 1/(2 pi^2) or the literal single-spin 1/(4 pi^2) prefactor.
[[nodiscard]] inline double spin_factor(Coefficients coeffs) noexcept {
  return coeffs == Coefficients::paper_literal ? 0.5 : 1.0;
}

}  // namespace detail

/// Height eps_F / (m g) at which the zero-temperature density vanishes.
[[nodiscard]] inline double column_height(double eps_F, const PhysicalConstants& c) {
  return eps_F / (c.m * c.g);
}

/// n(0, z) = (2 m (eps_F - m g z))^{3/2} / (3 pi^2 hbar^3) for m g z < eps_F, else 0.
/// The literal coefficient is 6 pi^2.
[[nodiscard]] inline double density_zero_T(double z, const GasSpec& spec,
                                           const PhysicalConstants& c,
                                           Coefficients coeffs = Coefficients::consistent) {
  if (!(z >= 0.0)) throw domain_error("height must be >= 0");
  const double excess = spec.fermi_energy() - c.m * c.g * z;
  if (excess <= 0.0) return 0.0;
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  return detail::spin_factor(coeffs) * std::pow(2.0 * c.m * excess, 1.5) /
         (3.0 * pi2 * c.hbar * c.hbar * c.hbar);
}

/// n(T, z) for a known degeneracy parameter eta at reduced temperature t > 0.
[[nodiscard]] inline double density_at(double eta, double t, double z, const GasSpec& spec,
                                       const PhysicalConstants& c,
                                       Coefficients coeffs = Coefficients::consistent) {
  if (!(z >= 0.0)) throw domain_error("height must be >= 0");
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  const double kT = t * spec.fermi_energy();
  const double arg = eta - c.m * c.g * z / kT;
  if (arg < -specfun::fermi_dirac_max_abs_eta) return 0.0;
  return detail::spin_factor(coeffs) * std::pow(2.0 * c.m * kT, 1.5) /
         (2.0 * pi2 * c.hbar * c.hbar * c.hbar) *
         specfun::fermi_dirac(specfun::FermiDiracOrder::one_half, arg);
}

/// n(T, z) at reduced temperature t; t = 0 gives the zero-temperature profile.
[[nodiscard]] inline double density(double t, double z, const GasSpec& spec,
                                    const PhysicalConstants& c,
                                    Coefficients coeffs = Coefficients::consistent) {
  if (t == 0.0) return density_zero_T(z, spec, c, coeffs);
  return density_at(eta_from_t(t), t, z, spec, c, coeffs);
}

/// n(T, z) / n(0, 0) in reduced variables, x = m g z / eps_F. Independent of
/// the spin convention.
[[nodiscard]] inline double reduced_density(double eta, double t, double x) {
  const double arg = eta - x / t;
  if (arg < -specfun::fermi_dirac_max_abs_eta) return 0.0;
  return 1.5 * std::pow(t, 1.5) * specfun::fermi_dirac(specfun::FermiDiracOrder::one_half, arg);
}

/// n(T, 0) / n(0, 0) = (3/2) (beta eps_F)^{-3/2} F_{1/2}(eta).
[[nodiscard]] inline double density_ratio_at_bottom(double t) {
  if (t == 0.0) return 1.0;
  return reduced_density(eta_from_t(t), t, 0.0);
}

/// Low-temperature expansion of n(T, 0) / n(0, 0): 1 - (pi^2/4) t^2, or the
/// printed 1 - (5 pi^2/8) t^2 under Coefficients::paper_literal.
[[nodiscard]] inline double density_ratio_sommerfeld(double t,
                                                     Coefficients coeffs = Coefficients::consistent) {
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  const double k = coeffs == Coefficients::paper_literal ? 5.0 * pi2 / 8.0 : pi2 / 4.0;
  return 1.0 - k * t * t;
}

/// Profile on [0, 1.5 eps_F / m g] with `z_steps` uniform points; for t > 0.5
/// a further z_steps / 4 points cover the thermal tail up to 20 t eps_F / m g
/// beyond the grid.
[[nodiscard]] inline DensityProfile density_profile(double t, const GasSpec& spec,
                                                    const PhysicalConstants& c,
                                                    int z_steps = 400,
                                                    Coefficients coeffs = Coefficients::consistent) {
  if (z_steps < 2) throw domain_error("z_steps must be >= 2");
  DensityProfile p;
  p.t = t;
  p.eps_F = spec.fermi_energy();
  const double height = column_height(p.eps_F, c);
  const double top = 1.5 * height;
  for (int i = 0; i < z_steps; ++i) {
    p.zs.push_back(top * i / (z_steps - 1));
  }
  if (t > 0.5) {
    const int extra = z_steps / 4;
    const double span = 20.0 * t * height;
    for (int i = 1; i <= extra; ++i) {
      p.zs.push_back(top + span * i / extra);
    }
  }
  const double eta = t == 0.0 ? 0.0 : eta_from_t(t);
  p.ns.reserve(p.zs.size());
  for (const double z : p.zs) {
    p.ns.push_back(t == 0.0 ? density_zero_T(z, spec, c, coeffs)
                            : density_at(eta, t, z, spec, c, coeffs));
  }
  return p;
}

/// n(0, 0) = (2 m eps_F)^{3/2} / (3 pi^2 hbar^3) [m^-3].
[[nodiscard]] inline double bottom_density_zero_T(double eps_F, const PhysicalConstants& c,
                                                  Coefficients coeffs = Coefficients::consistent) {
  if (!(eps_F > 0.0)) throw domain_error("Fermi energy must be positive");
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  return detail::spin_factor(coeffs) * std::pow(2.0 * c.m * eps_F, 1.5) /
         (3.0 * pi2 * c.hbar * c.hbar * c.hbar);
}

/// Bottom density in display units (K, cm^-3) for a grid of Fermi energies [J].
[[nodiscard]] inline std::vector<BottomDensityPoint> bottom_density_vs_fermi(
    std::span<const double> eps_F_grid, const PhysicalConstants& c,
    Coefficients coeffs = Coefficients::consistent) {
  std::vector<BottomDensityPoint> curve;
  curve.reserve(eps_F_grid.size());
  for (const double eps : eps_F_grid) {
    const double n = bottom_density_zero_T(eps, c, coeffs);
    curve.push_back({convert(eps, Unit::joule, Unit::kelvin, c),
                     convert(n, Unit::per_cubic_metre, Unit::per_cubic_centimetre, c)});
  }
  return curve;
}

/// Mean separation n^{-1/3} against the thermal wavelength h / sqrt(3 m kB T).
[[nodiscard]] inline DilutenessReport diluteness(double n, double T, const PhysicalConstants& c) {
  if (!(n > 0.0) || !(T > 0.0)) throw domain_error("density and temperature must be positive");
  DilutenessReport r;
  r.density = n;
  r.mean_separation = 1.0 / std::cbrt(n);
  r.thermal_wavelength = c.h() / std::sqrt(3.0 * c.m * c.kB * T);
  r.degenerate = r.mean_separation <= r.thermal_wavelength;
  return r;
}

}  // namespace ucngas
