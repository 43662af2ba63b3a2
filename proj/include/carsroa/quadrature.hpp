#pragma once
// Adaptive Simpson quadrature for complex-valued integrands over a union of
// intervals. Relative tolerance with an evaluation-count cap.
#include <complex>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace carsroa {

struct QuadratureNotConverged : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QuadOptions {
  double rel_tol = 1e-8;
  // generous: the nested time-domain propagation integrates hundreds of
  // optical cycles and legitimately needs several million points
  std::size_t max_evals = (std::size_t{1} << 24);
};

// Integrate f over [a, b].
std::complex<double> integrate(const std::function<std::complex<double>(double)>& f,
                               double a, double b, const QuadOptions& opt = {});

// Integrate f over the union of intervals; overlapping intervals are merged
// so no subrange is counted twice.
std::complex<double> integrate_union(
    const std::function<std::complex<double>(double)>& f,
    std::vector<std::pair<double, double>> intervals, const QuadOptions& opt = {});

}  // namespace carsroa
