#pragma once

// Test-only reference computations. None of these call the library routine
// they are used to check.

#include <cmath>
#include <cstddef>
#include <vector>

#include "ucngas/eigen.hpp"
#include "ucngas/numerics.hpp"

namespace ucngas::oracle {

// 1 / (e^x + 1), written out independently of the library helper.
inline double occupation(double x) {
  return x > 0.0 ? std::exp(-x) / (1.0 + std::exp(-x)) : 1.0 / (1.0 + std::exp(x));
}

/// Finite-difference bouncer: -y'' + xi y = eps y on (0, xi_max) with
/// Dirichlet ends, `points` interior nodes and the three-point Laplacian.
/// Returns the lowest `levels` eigenvalues (in units of e_g) by Sturm-sequence
/// bisection on the symmetric tridiagonal matrix.
inline std::vector<double> finite_difference_levels(int levels, std::size_t points,
                                                    double xi_max) {
  const double h = xi_max / static_cast<double>(points + 1);
  const double off = -1.0 / (h * h);
  std::vector<double> diag(points);
  for (std::size_t i = 0; i < points; ++i) {
    diag[i] = 2.0 / (h * h) + h * static_cast<double>(i + 1);
  }

  // Number of eigenvalues strictly below lambda.
  auto count_below = [&](double lambda) {
    std::size_t count = 0;
    double q = diag[0] - lambda;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < points; ++i) {
      if (q == 0.0) q = 1e-300;
      q = diag[i] - lambda - off * off / q;
      if (q < 0.0) ++count;
    }
    return count;
  };

  std::vector<double> result;
  for (int k = 0; k < levels; ++k) {
    double lo = 0.0;
    double hi = xi_max;
    for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (count_below(mid) > static_cast<std::size_t>(k)) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    result.push_back(0.5 * (lo + hi));
  }
  return result;
}

/// <psi_a | psi_b> by quadrature over [0, max cutoff], in units of l_g.
inline double overlap(const EigenState& a, const EigenState& b, const PhysicalConstants& c) {
  const double l_g = 1.0 / a.inverse_length;
  const double top = std::max(integration_cutoff(a, c), integration_cutoff(b, c)) / l_g;
  auto integrand = [&](double xi) {
    const double z = xi * l_g;
    return wavefunction(a, z) * wavefunction(b, z) * l_g;
  };
  // Unit-width panels keep the oscillations resolved from the first pass.
  double sum = 0.0;
  for (double lo = 0.0; lo < top; lo += 1.0) {
    sum += numerics::integrate(integrand, lo, std::min(lo + 1.0, top), 1e-13, 1e-15);
  }
  return sum;
}

/// <psi | m g z | psi> by quadrature [J].
inline double potential_expectation(const EigenState& s, const PhysicalConstants& c) {
  const double l_g = 1.0 / s.inverse_length;
  const double top = integration_cutoff(s, c) / l_g;
  auto integrand = [&](double xi) {
    const double z = xi * l_g;
    const double psi = wavefunction(s, z);
    return psi * psi * c.m * c.g * z * l_g;
  };
  double sum = 0.0;
  for (double lo = 0.0; lo < top; lo += 1.0) {
    sum += numerics::integrate(integrand, lo, std::min(lo + 1.0, top), 1e-13);
  }
  return sum;
}

/// int_0^inf dzeta zeta^{1/2} int_0^inf dups ups^p / (e^{zeta + ups - eta} + 1),
/// both integrals by quadrature. p = 1 gives the internal-energy cross term,
/// p = 0 the particle-number integral.
inline double nested_double_integral(double eta, int p) {
  auto inner = [eta, p](double zeta) {
    const double shift = eta - zeta;
    auto f = [shift, p](double u) { return (p == 0 ? 1.0 : u) * occupation(u - shift); };
    const double edge = std::max(shift, 0.0);
    double v = 0.0;
    if (edge > 0.0) v += numerics::integrate(f, 0.0, edge, 1e-13);
    v += numerics::integrate(f, edge, edge + 60.0, 1e-13);
    return v;
  };
  // zeta = s^2 removes the square-root endpoint behaviour.
  auto outer = [&](double s) { return 2.0 * s * s * inner(s * s); };
  const double edge = std::max(eta, 0.0);
  double total = 0.0;
  if (edge > 0.0) total += numerics::integrate(outer, 0.0, std::sqrt(edge), 1e-12);
  total += numerics::integrate(outer, std::sqrt(edge), std::sqrt(edge + 60.0), 1e-12);
  return total;
}

/// Least-squares slope c of y = c x through the origin.
inline double fit_through_origin(const std::vector<double>& x, const std::vector<double>& y) {
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += x[i] * y[i];
    sxx += x[i] * x[i];
  }
  return sxy / sxx;
}

}  // namespace ucngas::oracle
