#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include "ucngas/error.hpp"

namespace ucngas::numerics {

/// Globally adaptive quadrature on a finite interval: the panel with the
/// largest Gauss-Kronrod (15/31) error estimate is bisected until the summed
/// estimate drops below max(`rel_tol` * |integral|, `abs_tol`), or below the
/// rounding floor of the rule, or `max_panels` is reached.
template <class F>
[[nodiscard]] double integrate(F&& f, double a, double b, double rel_tol = 1e-14,
                               double abs_tol = 0.0, std::size_t max_panels = 4000) {
  if (a == b) return 0.0;
  using rule = boost::math::quadrature::gauss_kronrod<double, 31>;
  struct Panel {
    double lo, hi, value, error, l1;
  };
  auto evaluate = [&f](double lo, double hi) {
    Panel p{lo, hi, 0.0, 0.0, 0.0};
    p.value = rule::integrate(f, lo, hi, 0, 0.0, &p.error, &p.l1);
    return p;
  };
  auto by_error = [](const Panel& x, const Panel& y) { return x.error < y.error; };

  std::vector<Panel> heap{evaluate(a, b)};
  double value = heap.front().value;
  double error = heap.front().error;
  double l1 = heap.front().l1;
  constexpr double rounding = 64.0 * std::numeric_limits<double>::epsilon();

  while (heap.size() < max_panels) {
    if (error <= std::max(rel_tol * std::abs(value), abs_tol) || error <= rounding * l1) break;
    std::pop_heap(heap.begin(), heap.end(), by_error);
    const Panel worst = heap.back();
    heap.pop_back();
    if (worst.error <= rounding * worst.l1) {
      // Every remaining panel is at its rounding floor.
      heap.push_back(worst);
      break;
    }
    const double mid = 0.5 * (worst.lo + worst.hi);
    const Panel left = evaluate(worst.lo, mid);
    const Panel right = evaluate(mid, worst.hi);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    l1 += left.l1 + right.l1 - worst.l1;
    for (const Panel& p : {left, right}) {
      heap.push_back(p);
      std::push_heap(heap.begin(), heap.end(), by_error);
    }
  }
  // Resum in interval order so the result does not carry the update history.
  std::sort(heap.begin(), heap.end(), [](const Panel& x, const Panel& y) { return x.lo < y.lo; });
  double sum = 0.0;
  for (const Panel& p : heap) sum += p.value;
  return sum;
}

/// Derivative-free bracketing root refinement (TOMS 748). Requires a sign
/// change on [lo, hi]; stops when the bracket width is below `rel_tol`
/// times max(|x|, 1) or an exact zero is hit.
template <class F>
[[nodiscard]] double find_root(F&& f, double lo, double hi, double rel_tol = 2e-15,
                               std::uintmax_t max_iter = 200) {
  const double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) {
    throw convergence_error("root not bracketed on [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "]");
  }
  auto tol = [rel_tol](double x, double y) {
    return std::abs(x - y) <= rel_tol * std::max({std::abs(x), std::abs(y), 1.0});
  };
  std::uintmax_t iters = max_iter;
  const auto bracket =
      boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, tol, iters);
  if (iters >= max_iter) {
    throw convergence_error("root refinement did not converge");
  }
  return 0.5 * (bracket.first + bracket.second);
}

}  // namespace ucngas::numerics
