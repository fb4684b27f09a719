#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <string_view>

#include "ucngas/constants.hpp"
#include "ucngas/error.hpp"
#include "ucngas/numerics.hpp"

namespace ucngas::specfun {

/// The half-integer orders that appear in the gas thermodynamics.
enum class FermiDiracOrder { one_half, three_halves, five_halves };

[[nodiscard]] constexpr double order_value(FermiDiracOrder j) noexcept {
  switch (j) {
    case FermiDiracOrder::one_half: return 0.5;
    case FermiDiracOrder::three_halves: return 1.5;
    case FermiDiracOrder::five_halves: return 2.5;
  }
  return 0.5;
}

[[nodiscard]] constexpr std::string_view order_name(FermiDiracOrder j) noexcept {
  switch (j) {
    case FermiDiracOrder::one_half: return "1/2";
    case FermiDiracOrder::three_halves: return "3/2";
    case FermiDiracOrder::five_halves: return "5/2";
  }
  return "?";
}

inline constexpr double fermi_dirac_max_abs_eta = 1e5;

namespace detail {

// 1 / (e^x + 1) without overflow.
[[nodiscard]] inline double fermi_factor(double x) noexcept {
  if (x > 0.0) {
    const double e = std::exp(-x);
    return e / (1.0 + e);
  }
  return 1.0 / (std::exp(x) + 1.0);
}

// Beyond max(eta, 0) + tail_span the integrand is below e^{-50} times a
// power of zeta; the dropped tail is < 1e-17 of the integral for every order.
inline constexpr double tail_span = 50.0;
// Width below the Fermi edge over which the occupation differs from 1.
inline constexpr double edge_span = 40.0;

}  // namespace detail

/// Complete Fermi-Dirac integral without the 1/Gamma(j+1) normalization,
///   F_j(eta) = int_0^inf zeta^j / (e^{zeta - eta} + 1) d zeta.
///
/// The range is split at the Fermi edge: the piece touching zeta = 0 uses
/// zeta = s^2 so the integrand is smooth, the remaining pieces are integrated
/// directly. Relative accuracy is about 1e-14 for |eta| <= 1e5; values below
/// the smallest normal double (eta < ~ -700) flush to zero.
[[nodiscard]] inline double fermi_dirac(FermiDiracOrder order, double eta) {
  if (!(std::abs(eta) <= fermi_dirac_max_abs_eta)) {
    throw domain_error("Fermi-Dirac argument " + std::to_string(eta) + " outside |eta| <= 1e5");
  }
  const double j = order_value(order);
  const double edge = std::max(eta, 0.0);

  auto direct = [j, eta](double zeta) {
    return std::pow(zeta, j) * detail::fermi_factor(zeta - eta);
  };
  auto near_origin = [j, eta](double s) {
    const double zeta = s * s;
    return 2.0 * std::pow(s, 2.0 * j + 1.0) * detail::fermi_factor(zeta - eta);
  };

  // Breakpoints 0 < b1 <= edge < edge + tail_span.
  const double b1 = edge > detail::edge_span + 1.0 ? edge - detail::edge_span
                                                   : (edge > 0.0 ? edge : 1.0);
  double total = numerics::integrate(near_origin, 0.0, std::sqrt(b1));
  if (b1 < edge) total += numerics::integrate(direct, b1, edge);
  total += numerics::integrate(direct, std::max(b1, edge), edge + detail::tail_span);
  return total;
}

/// Two-term degenerate (Sommerfeld) approximation of F_j, valid for
/// e^{-eta} << 1:
///   F_{1/2} ~ (2/3) eta^{3/2} + (pi^2/12) eta^{1/2}
///   F_{3/2} ~ (2/5) eta^{5/2} + (pi^2/4)  eta^{1/2}
///   F_{5/2} ~ (2/7) eta^{7/2} + (5pi^2/12) eta^{3/2}
/// With Coefficients::paper_literal the F_{3/2} correction uses pi^2/2.
[[nodiscard]] inline double sommerfeld(FermiDiracOrder order, double eta,
                                       Coefficients coeffs = Coefficients::consistent) {
  if (!(eta > 0.0)) {
    throw domain_error("Sommerfeld expansion requires eta > 0");
  }
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  const double j = order_value(order);
  // Leading term eta^{j+1}/(j+1); correction (pi^2/6) j eta^{j-1}.
  double correction = pi2 / 6.0 * j;
  if (order == FermiDiracOrder::three_halves && coeffs == Coefficients::paper_literal) {
    correction = pi2 / 2.0;
  }
  return std::pow(eta, j + 1.0) / (j + 1.0) + correction * std::pow(eta, j - 1.0);
}

/// Nondegenerate limit Gamma(j+1) e^eta, valid for eta << 0.
[[nodiscard]] inline double maxwell(FermiDiracOrder order, double eta) {
  return std::tgamma(order_value(order) + 1.0) * std::exp(eta);
}

}  // namespace ucngas::specfun
