#pragma once

// Bound states of a neutron above a hard floor in a uniform gravitational
// field, and the side-wall (infinite square well) spectrum.

#include <cmath>
#include <numbers>
#include <string>

#include "ucngas/airy.hpp"
#include "ucngas/constants.hpp"
#include "ucngas/error.hpp"

namespace ucngas {

inline constexpr int max_vertical_quantum_number = specfun::airy_zero_max_index;

/// Vertical eigenstate psi(z) = norm * Ai(z / l_g + a_n).
struct EigenState {
  int n_z = 0;
  double energy = 0.0;          ///< e_g |a_n| [J]
  specfun::AiryZero zero;
  double norm = 0.0;            ///< alpha^{1/6} / |Ai'(a_n)| [m^-1/2]
  double inverse_length = 0.0;  ///< alpha^{1/3} = 1 / l_g [m^-1]
};

/// Square cross-section of side L bounded by hard walls.
struct BoxSpec {
  double L = 0.0;  ///< [m]
};

/// Which vertical spectrum the total energy sums over.
enum class VerticalLevels { asymptotic, exact };

namespace detail {

inline void require_quantum_number(int n_z) {
  if (n_z < 1 || n_z > max_vertical_quantum_number) {
    throw domain_error("n_z = " + std::to_string(n_z) + " outside [1, 1000]");
  }
}

}  // namespace detail

[[nodiscard]] inline EigenState make_eigenstate(int n_z, const PhysicalConstants& c) {
  detail::require_quantum_number(n_z);
  const GravityScales s = derive_scales(c);
  EigenState st;
  st.n_z = n_z;
  st.zero = specfun::airy_zero(n_z);
  st.energy = s.e_g * std::abs(st.zero.a);
  st.inverse_length = 1.0 / s.l_g;
  st.norm = std::sqrt(st.inverse_length) / std::abs(specfun::airy_ai_prime(st.zero.a));
  return st;
}

/// E_{n_z} from the refined Airy zero.
[[nodiscard]] inline double eigen_energy_exact(int n_z, const PhysicalConstants& c) {
  detail::require_quantum_number(n_z);
  return derive_scales(c).e_g * std::abs(specfun::airy_zero(n_z).a);
}

/// E_{n_z} ~ e_g (3 pi / 8)^{2/3} (4 n_z - 1)^{2/3}.
[[nodiscard]] inline double eigen_energy_asymptotic(int n_z, const PhysicalConstants& c) {
  detail::require_quantum_number(n_z);
  return derive_scales(c).e_g * std::abs(specfun::airy_zero_asymptotic(n_z));
}

/// Classical turning height E_{n_z} / (m g).
[[nodiscard]] inline double turning_height(const EigenState& st, const PhysicalConstants& c) {
  return st.energy / (c.m * c.g);
}

/// Height beyond which |psi|^2 is negligible (< 1e-14 of its scale):
/// turning point plus ten gravitational lengths.
[[nodiscard]] inline double integration_cutoff(const EigenState& st,
                                               const PhysicalConstants& c) {
  return turning_height(st, c) + 10.0 / st.inverse_length;
}

/// Normalized wavefunction [m^-1/2]; z must lie above the floor.
[[nodiscard]] inline double wavefunction(const EigenState& st, double z) {
  if (!(z >= 0.0)) throw domain_error("wavefunction evaluated below the floor (z < 0)");
  const double x = st.inverse_length * z + st.zero.a;
  if (x > specfun::airy_max_argument) return 0.0;
  return st.norm * specfun::airy_ai(x);
}

/// Side-wall level pi^2 hbar^2 n^2 / (2 m L^2).
[[nodiscard]] inline double box_energy(int n, const BoxSpec& box, const PhysicalConstants& c) {
  if (n < 1) throw domain_error("box quantum number must be >= 1");
  if (!(box.L > 0.0)) throw domain_error("box size must be positive");
  require_valid(c);
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  const double nn = static_cast<double>(n);
  return pi2 * c.hbar * c.hbar * nn * nn / (2.0 * c.m * box.L * box.L);
}

/// E(n_x, n_y, n_z) = box(n_x) + box(n_y) + vertical(n_z). The asymptotic
/// vertical levels are the default.
[[nodiscard]] inline double total_energy(int n_x, int n_y, int n_z, const BoxSpec& box,
                                         const PhysicalConstants& c,
                                         VerticalLevels levels = VerticalLevels::asymptotic) {
  const double vertical = levels == VerticalLevels::exact ? eigen_energy_exact(n_z, c)
                                                          : eigen_energy_asymptotic(n_z, c);
  return box_energy(n_x, box, c) + box_energy(n_y, box, c) + vertical;
}

}  // namespace ucngas
