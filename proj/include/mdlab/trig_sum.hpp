#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace mdlab {

/// S(t) = sum_m c_m exp(i w_m t). Dirichlet polynomials at fixed sigma are of
/// this form with w_m = -log n.
class TrigSum {
 public:
  TrigSum() = default;
  TrigSum(std::vector<std::complex<double>> coeffs, std::vector<double> freqs);

  std::size_t size() const { return re_.size(); }
  std::complex<double> operator()(double t) const;

  /// S(t0 + j dt) for j = 0 .. count-1. The rotation recurrence is reseeded
  /// from exact phases every few hundred steps.
  std::vector<std::complex<double>> grid(double t0, double dt, std::size_t count) const;
  /// |S|^2 on the same grid.
  std::vector<double> grid_norm_sq(double t0, double dt, std::size_t count) const;

  /// sum |c_m|
  double l1() const;

 private:
  std::vector<double> re_, im_, freq_;
};

/// Composite Simpson rule over equally spaced samples; samples.size() must be
/// odd and >= 3 (or 1, giving 0).
double simpson(std::span<const double> samples, double step);

/// Simpson on [0, T] sampled at step/2 and at step, reusing the fine grid.
struct SimpsonPair {
  double fine = 0.0;
  double coarse = 0.0;
  double step = 0.0;  // coarse step actually used (<= requested)
  double error_estimate() const { return std::abs(fine - coarse); }
};

/// Integrates |S(t)|^2 over [a, b] with an even number of coarse intervals of
/// width <= max_step, and once more at half that width.
SimpsonPair integrate_norm_sq(const TrigSum& sum, double a, double b, double max_step);

} // namespace mdlab
