#include "mdlab/trig_sum.hpp"

#include <cmath>
#include <stdexcept>

#include "mdlab/parallel.hpp"
#include "mdlab/summation.hpp"

namespace mdlab {

namespace {
constexpr std::size_t reseed_every = 256;
constexpr std::size_t lanes = 8;
} // namespace

TrigSum::TrigSum(std::vector<std::complex<double>> coeffs, std::vector<double> freqs) {
  if (coeffs.size() != freqs.size()) throw std::invalid_argument("TrigSum: size mismatch");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0.0) continue;
    re_.push_back(coeffs[i].real());
    im_.push_back(coeffs[i].imag());
    freq_.push_back(freqs[i]);
  }
}

std::complex<double> TrigSum::operator()(double t) const {
  CompensatedComplexSum s;
  for (std::size_t m = 0; m < re_.size(); ++m)
    s.add(std::complex<double>(re_[m], im_[m]) * std::polar(1.0, freq_[m] * t));
  return s.value();
}

double TrigSum::l1() const {
  CompensatedSum s;
  for (std::size_t m = 0; m < re_.size(); ++m) s.add(std::hypot(re_[m], im_[m]));
  return s.value();
}

std::vector<std::complex<double>> TrigSum::grid(double t0, double dt, std::size_t count) const {
  std::vector<std::complex<double>> out(count);
  const std::size_t M = re_.size();
  const std::size_t padded = (M + lanes - 1) / lanes * lanes;
  // Rotation per step, shared by all chunks.
  std::vector<double> wr(padded, 1.0), wi(padded, 0.0);
  for (std::size_t m = 0; m < M; ++m) {
    wr[m] = std::cos(freq_[m] * dt);
    wi[m] = std::sin(freq_[m] * dt);
  }
  const std::size_t segments = (count + reseed_every - 1) / reseed_every;
  parallel_chunks(segments, [&](std::size_t s0, std::size_t s1, std::size_t) {
    std::vector<double> zr(padded, 0.0), zi(padded, 0.0);
    for (std::size_t seg = s0; seg < s1; ++seg) {
      const std::size_t j0 = seg * reseed_every;
      const std::size_t j1 = std::min(count, j0 + reseed_every);
      const double t = t0 + static_cast<double>(j0) * dt;
      for (std::size_t m = 0; m < M; ++m) {
        const double c = std::cos(freq_[m] * t), s = std::sin(freq_[m] * t);
        zr[m] = re_[m] * c - im_[m] * s;
        zi[m] = re_[m] * s + im_[m] * c;
      }
      for (std::size_t j = j0; j < j1; ++j) {
        double ar[lanes] = {}, ai[lanes] = {};
        for (std::size_t m = 0; m < padded; m += lanes) {
          for (std::size_t u = 0; u < lanes; ++u) {
            const double xr = zr[m + u], xi = zi[m + u];
            ar[u] += xr;
            ai[u] += xi;
            zr[m + u] = xr * wr[m + u] - xi * wi[m + u];
            zi[m + u] = xr * wi[m + u] + xi * wr[m + u];
          }
        }
        double sr = 0.0, si = 0.0;
        for (std::size_t u = 0; u < lanes; ++u) {
          sr += ar[u];
          si += ai[u];
        }
        out[j] = {sr, si};
      }
    }
  }, 1);
  return out;
}

std::vector<double> TrigSum::grid_norm_sq(double t0, double dt, std::size_t count) const {
  auto values = grid(t0, dt, count);
  std::vector<double> out(count);
  for (std::size_t j = 0; j < count; ++j) out[j] = std::norm(values[j]);
  return out;
}

double simpson(std::span<const double> samples, double step) {
  if (samples.size() == 1) return 0.0;
  if (samples.size() < 3 || samples.size() % 2 == 0)
    throw std::invalid_argument("simpson: need an odd number (>= 3) of samples");
  CompensatedSum s;
  s.add(samples.front());
  s.add(samples.back());
  for (std::size_t j = 1; j + 1 < samples.size(); ++j) s.add((j % 2 ? 4.0 : 2.0) * samples[j]);
  return s.value() * step / 3.0;
}

SimpsonPair integrate_norm_sq(const TrigSum& sum, double a, double b, double max_step) {
  if (!(b >= a)) throw std::invalid_argument("integrate_norm_sq: need a <= b");
  if (!(max_step > 0.0)) throw std::invalid_argument("integrate_norm_sq: step must be positive");
  SimpsonPair out;
  if (b == a) return out;
  auto intervals = static_cast<std::size_t>(std::ceil((b - a) / max_step));
  if (intervals % 2) ++intervals;
  intervals = std::max<std::size_t>(intervals, 2);
  out.step = (b - a) / static_cast<double>(intervals);
  const double fine_step = out.step / 2.0;
  auto fine = sum.grid_norm_sq(a, fine_step, 2 * intervals + 1);
  std::vector<double> coarse(intervals + 1);
  for (std::size_t j = 0; j <= intervals; ++j) coarse[j] = fine[2 * j];
  out.fine = simpson(fine, fine_step);
  out.coarse = simpson(coarse, out.step);
  return out;
}

} // namespace mdlab
