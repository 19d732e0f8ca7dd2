#pragma once

#include <cmath>
#include <cstddef>

namespace hyperq {

struct GoldenResult {
  double argmax = 0.0;
  double value = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

/// Golden-section maximization of a unimodal f on [lo, hi]. Stops when the
/// bracket is narrower than `x_tol` or the interior points coincide in
/// floating point; `converged` is false if the budget ran out first.
template <typename F>
GoldenResult golden_section_maximize(F&& f, double lo, double hi, std::size_t max_iter,
                                     double x_tol = 0.0) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  GoldenResult result;
  for (std::size_t it = 0; it < max_iter; ++it) {
    result.iterations = it + 1;
    if (fc < fd) {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    } else {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    }
    if (hi - lo <= x_tol || !(c < d)) {
      result.converged = true;
      break;
    }
  }
  if (fc >= fd) {
    result.argmax = c;
    result.value = fc;
  } else {
    result.argmax = d;
    result.value = fd;
  }
  return result;
}

}  // namespace hyperq
