#pragma once

// Airy function Ai and its derivative on the real line, plus the negative
// zeros of Ai.
//
// Evaluation regions:
//   x < -9         oscillatory asymptotic expansion
//   -9 <= x < -3   Taylor stepping of y'' = x y forward from the series at -3
//   -3 <= x <= 2   Maclaurin series
//   2 < x <= 9     Taylor stepping backward from the asymptotic value at 9
//   x > 9          exponentially decaying asymptotic expansion
// Stepping runs in the direction in which Ai does not decay relative to Bi,
// so rounding errors are not amplified.

#include <cmath>
#include <numbers>
#include <string>

#include "ucngas/error.hpp"
#include "ucngas/numerics.hpp"

namespace ucngas::specfun {

inline constexpr double airy_min_argument = -300.0;
inline constexpr double airy_max_argument = 40.0;
inline constexpr int airy_zero_max_index = 1000;

/// Ai and Ai' at the same point.
struct AiryValue {
  double ai = 0.0;
  double ai_prime = 0.0;
};

/// n-th negative zero of Ai (n = 1 is the zero closest to the origin).
struct AiryZero {
  int n = 0;
  double a = 0.0;
};

namespace detail {

inline constexpr double ai0 = 0.355028053887817239260;   // Ai(0)
inline constexpr double aip0 = 0.258819403792806798405;  // -Ai'(0)
inline constexpr double series_upper = 2.0;
inline constexpr double series_lower = -3.0;
inline constexpr double asymptotic_cutoff = 9.0;
inline constexpr double max_step = 0.5;

// f, g of the Maclaurin representation Ai = c1 f - c2 g, Bi = sqrt3 (c1 f + c2 g),
// with their derivatives.
struct MaclaurinTerms {
  double f, g, fp, gp;
};

inline MaclaurinTerms maclaurin(double x) {
  const double x3 = x * x * x;
  double tf = 1.0, tg = x;            // x^{3k} and x^{3k+1} terms
  double tfp = x * x / 2.0, tgp = 1.0;  // their derivatives
  MaclaurinTerms s{tf, tg, tfp, tgp};
  for (int k = 1; k < 200; ++k) {
    const double k3 = 3.0 * k;
    tf *= x3 / ((k3 - 1.0) * k3);
    tg *= x3 / (k3 * (k3 + 1.0));
    tgp *= x3 / (k3 * (k3 - 2.0));
    if (k > 1) tfp *= x3 / ((k3 - 1.0) * (k3 - 3.0));
    s.f += tf;
    s.g += tg;
    s.gp += tgp;
    if (k > 1) s.fp += tfp;
    const double scale = std::abs(s.f) + std::abs(s.g) + std::abs(s.fp) + std::abs(s.gp);
    if (std::abs(tf) + std::abs(tg) + std::abs(tfp) + std::abs(tgp) < 1e-18 * scale) break;
  }
  return s;
}

// Advances (y, y') of y'' = x y from x0 to x0 + h with a Taylor series about x0.
inline void taylor_step(double x0, double h, double& y, double& yp) {
  // c[k] are Taylor coefficients; only the last three are kept.
  double cm1 = yp;           // c_{k-1}
  double c0 = x0 * y / 2.0;  // c_k, starting at k = 2
  double cprev = y;          // c_{k-2}
  double value = y + yp * h;
  double deriv = yp;
  double hk = h * h;         // h^k
  double hkm1 = h;           // h^{k-1}
  int small = 0;
  for (int k = 2; k < 200; ++k) {
    const double term = c0 * hk;
    const double dterm = k * c0 * hkm1;
    value += term;
    deriv += dterm;
    const double scale = std::abs(value) + std::abs(deriv * h);
    if (std::abs(term) + std::abs(dterm * h) <= 1e-18 * scale) {
      if (++small >= 3) break;
    } else {
      small = 0;
    }
    // c_{k+1} = (x0 c_{k-1} + c_{k-2}) / ((k+1) k)
    const double next = (x0 * cm1 + cprev) / ((k + 1.0) * k);
    cprev = cm1;
    cm1 = c0;
    c0 = next;
    hkm1 = hk;
    hk *= h;
  }
  y = value;
  yp = deriv;
}

inline void integrate_airy_ode(double from, double to, double& y, double& yp) {
  const double span = to - from;
  const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(span) / max_step)));
  const double h = span / steps;
  for (int i = 0; i < steps; ++i) {
    taylor_step(from + i * h, h, y, yp);
  }
}

// Sum of sum_k (-1)^k c_k zeta^{-k} truncated at the smallest term; also
// returns the even/odd split used by the oscillatory form.
struct AsymptoticSums {
  double u_even, u_odd, v_even, v_odd;  // alternating partial sums in zeta^{-2k}, zeta^{-2k-1}
  double u_all, v_all;                  // sum_k (-1)^k u_k zeta^{-k}, same for v
};

inline AsymptoticSums asymptotic_sums(double zeta) {
  AsymptoticSums s{1.0, 0.0, 1.0, 0.0, 1.0, 1.0};
  double u = 1.0;
  double last = 1.0;
  double zk = 1.0;
  for (int k = 1; k < 200; ++k) {
    u *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / ((2.0 * k - 1.0) * 216.0 * k);
    const double v = -(6.0 * k + 1.0) / (6.0 * k - 1.0) * u;
    zk /= zeta;
    const double tu = u * zk;
    const double tv = v * zk;
    if (std::abs(tu) > last) break;
    last = std::abs(tu);
    const double sign_all = (k % 2 == 0) ? 1.0 : -1.0;
    s.u_all += sign_all * tu;
    s.v_all += sign_all * tv;
    const double sign_split = (k / 2) % 2 == 0 ? 1.0 : -1.0;
    if (k % 2 == 0) {
      s.u_even += sign_split * tu;
      s.v_even += sign_split * tv;
    } else {
      s.u_odd += sign_split * tu;
      s.v_odd += sign_split * tv;
    }
    if (last < 1e-18) break;
  }
  return s;
}

// Ai and Ai' for x >= asymptotic_cutoff.
inline AiryValue airy_positive_asymptotic(double x) {
  const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
  const double q = std::sqrt(std::sqrt(x));
  const double e = std::exp(-zeta) / (2.0 * std::sqrt(std::numbers::pi));
  const AsymptoticSums s = asymptotic_sums(zeta);
  return {e / q * s.u_all, -q * e * s.v_all};
}

// Ai, Ai', Bi, Bi' at x = -z for z >= asymptotic_cutoff.
struct AiryQuad {
  double ai, ai_prime, bi, bi_prime;
};

inline AiryQuad airy_negative_asymptotic(double z) {
  const double zeta = 2.0 / 3.0 * z * std::sqrt(z);
  const double q = std::sqrt(std::sqrt(z));
  const double rpi = 1.0 / std::sqrt(std::numbers::pi);
  const double phase = zeta - std::numbers::pi / 4.0;
  const double c = std::cos(phase);
  const double sn = std::sin(phase);
  const AsymptoticSums s = asymptotic_sums(zeta);
  AiryQuad r{};
  r.ai = rpi / q * (c * s.u_even + sn * s.u_odd);
  r.bi = rpi / q * (-sn * s.u_even + c * s.u_odd);
  // d/dx at x = -z
  r.ai_prime = rpi * q * (sn * s.v_even - c * s.v_odd);
  r.bi_prime = rpi * q * (c * s.v_even + sn * s.v_odd);
  return r;
}

inline AiryQuad airy_maclaurin(double x) {
  const MaclaurinTerms t = maclaurin(x);
  const double sqrt3 = std::numbers::sqrt3;
  return {ai0 * t.f - aip0 * t.g, ai0 * t.fp - aip0 * t.gp,
          sqrt3 * (ai0 * t.f + aip0 * t.g), sqrt3 * (ai0 * t.fp + aip0 * t.gp)};
}

inline void require_airy_domain(double x) {
  if (!(x >= airy_min_argument && x <= airy_max_argument)) {
    throw domain_error("Airy argument " + std::to_string(x) + " outside [" +
                       std::to_string(airy_min_argument) + ", " +
                       std::to_string(airy_max_argument) + "]");
  }
}

inline AiryValue airy_ai_unchecked(double x) {
  if (x > asymptotic_cutoff) return airy_positive_asymptotic(x);
  if (x > series_upper) {
    AiryValue v = airy_positive_asymptotic(asymptotic_cutoff);
    integrate_airy_ode(asymptotic_cutoff, x, v.ai, v.ai_prime);
    return v;
  }
  if (x >= series_lower) {
    const AiryQuad q = airy_maclaurin(x);
    return {q.ai, q.ai_prime};
  }
  if (x >= -asymptotic_cutoff) {
    const AiryQuad q = airy_maclaurin(series_lower);
    AiryValue v{q.ai, q.ai_prime};
    integrate_airy_ode(series_lower, x, v.ai, v.ai_prime);
    return v;
  }
  const AiryQuad q = airy_negative_asymptotic(-x);
  return {q.ai, q.ai_prime};
}

/// Bi and Bi' on [-9, 9] and in the oscillatory asymptotic region. Only
/// used to validate Ai through the Wronskian; not part of the public surface.
inline AiryValue airy_bi(double x) {
  if (x > asymptotic_cutoff || x < airy_min_argument) {
    throw domain_error("validation Bi supports [-300, 9] only");
  }
  if (x >= series_lower) {
    const AiryQuad q = airy_maclaurin(x);
    return {q.bi, q.bi_prime};
  }
  if (x >= -asymptotic_cutoff) {
    const AiryQuad q = airy_maclaurin(series_lower);
    AiryValue v{q.bi, q.bi_prime};
    integrate_airy_ode(series_lower, x, v.ai, v.ai_prime);
    return v;
  }
  const AiryQuad q = airy_negative_asymptotic(-x);
  return {q.bi, q.bi_prime};
}

}  // namespace detail

/// Ai(x) and Ai'(x) together, for -300 <= x <= 40 (the zeros up to n = 1000
/// reach x = -281).
[[nodiscard]] inline AiryValue airy(double x) {
  detail::require_airy_domain(x);
  return detail::airy_ai_unchecked(x);
}

[[nodiscard]] inline double airy_ai(double x) { return airy(x).ai; }

[[nodiscard]] inline double airy_ai_prime(double x) { return airy(x).ai_prime; }

/// Leading-order asymptotic location of the n-th zero,
/// -(3 pi (4n - 1) / 8)^{2/3}.
[[nodiscard]] inline double airy_zero_asymptotic(int n) {
  if (n < 1) throw domain_error("Airy zero index must be >= 1");
  return -std::pow(3.0 * std::numbers::pi * (4.0 * n - 1.0) / 8.0, 2.0 / 3.0);
}

/// n-th negative zero of Ai, 1 <= n <= 1000, refined from the asymptotic
/// seed by bracketing root refinement on Ai.
[[nodiscard]] inline AiryZero airy_zero(int n) {
  if (n < 1 || n > airy_zero_max_index) {
    throw domain_error("Airy zero index " + std::to_string(n) + " outside [1, 1000]");
  }
  const double seed = airy_zero_asymptotic(n);
  // Local half-spacing of the zeros is about pi / (2 sqrt|a|); a quarter
  // spacing on each side brackets exactly one zero.
  double half = 0.3 * std::numbers::pi / std::sqrt(std::abs(seed));
  auto f = [](double x) { return detail::airy_ai_unchecked(x).ai; };
  double lo = seed - half;
  double hi = std::min(seed + half, -1.0);
  for (int widen = 0; (f(lo) < 0.0) == (f(hi) < 0.0); ++widen) {
    if (widen > 8) throw convergence_error("failed to bracket Airy zero " + std::to_string(n));
    half *= 1.25;
    lo = seed - half;
    hi = std::min(seed + half, -1.0);
  }
  return {n, numerics::find_root(f, lo, hi)};
}

}  // namespace ucngas::specfun
