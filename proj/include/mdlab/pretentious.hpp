#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mdlab/sieve.hpp"

namespace mdlab {

using PrimeRule = std::function<std::complex<double>(std::uint64_t p)>;

/// sum_{p <= x, p not dividing k} (1 - Re f(p) conj(g(p))) / p.
/// Throws invalid_argument naming the first prime where |f(p)| or |g(p)| > 1.
double distance_sq(const PrimeRule& f, const PrimeRule& g, std::uint64_t x, std::uint64_t k = 1);

struct DistanceReport {
  std::string spec;
  std::uint64_t k = 1, x = 0;
  double T = 0.0;
  std::vector<double> t_grid;
  std::vector<double> values;
  double argmin_t = 0.0;
  double min_value = 0.0;
  std::optional<std::string> character;
};

/// Largest admissible t-grid spacing for primes up to x: 1 / (2 log x).
double max_t_spacing(std::uint64_t x);

/// inf_{|t| <= T} D_k(f, n^{it}; x)^2: uniform grid (at least grid_points
/// points, spacing <= max_t_spacing(x)), then golden-section refinement
/// around the best grid point to width 1e-6 max(1, T).
DistanceReport m_of_f(const MultiplicativeSpec& spec, std::uint64_t x, double T, std::uint64_t k = 1,
                      std::uint64_t grid_points = 16);

/// Minimum of m_of_f(f chi) over all characters chi mod k.
DistanceReport m_over_characters(const MultiplicativeSpec& spec, std::uint64_t k, std::uint64_t x, double T,
                                 std::uint64_t grid_points = 16);

struct HalaszPair {
  std::uint64_t x = 0, k = 1;
  double T = 0.0;
  double lhs = 0.0;        // |(1/x) sum_{n <= x, (n,k)=1} f(n)|
  double M = 0.0;          // M_k(f; x; T)
  double rhs_shape = 0.0;  // (phi(k)/k) ((M+1) e^{-M} + 1/T + (log x)^{-5/64})
  double ratio = 0.0;
};

HalaszPair halasz_bound_pair(const MultiplicativeSpec& spec, std::uint64_t x, std::uint64_t k, double T);

struct FloorSample {
  std::string character;
  double t = 0.0;
  double value = 0.0;
};

struct CharacterFloorReport {
  std::uint64_t k = 0, X = 0;
  double soft_floor = 0.0;  // (1/3) log log X - 2
  std::vector<FloorSample> samples;
  FloorSample minimum;
  std::vector<FloorSample> violations;  // samples below soft_floor
};

/// D_k(chi, n^{it}; X)^2 for each non-principal chi mod k and each |t| <= X
/// in t_grid, and for the principal character at 1 <= |t| <= X. Requires
/// k <= log X.
CharacterFloorReport character_distance_floor(std::uint64_t k, std::uint64_t X, const std::vector<double>& t_grid);

} // namespace mdlab
