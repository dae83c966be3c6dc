#ifndef CIRCHAD_SPECTRUM_HPP
#define CIRCHAD_SPECTRUM_HPP

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "circhad/fft.hpp"
#include "circhad/sign_vector.hpp"

namespace circhad {

/// Eigenvalues of the circulant with first column s, in natural frequency
/// order: values[j] = p(exp(2 pi i j / n)). Never sorted.
struct Spectrum {
  std::vector<cplx> values;

  std::size_t size() const noexcept { return values.size(); }
  std::vector<double> moduli() const;
};

struct SpectralReport {
  std::size_t n = 0;
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  /// +infinity when the circulant is numerically singular.
  double condition_number = std::numeric_limits<double>::infinity();
  double sqrt_n = 0.0;
  /// max_j | |lambda_j| - sqrt(n) |
  double deviation = 0.0;
  /// deviation / n^{1/4}
  double deviation_normalized = 0.0;

  bool singular() const noexcept { return condition_number == std::numeric_limits<double>::infinity(); }
};

inline constexpr std::size_t default_oracle_cap = 4096;

/// sigma_min below this multiple of n reports an infinite condition number.
inline constexpr double singularity_tolerance = 1e-9;

/// Direct O(n^2) evaluation of p at the n-th roots of unity.
Spectrum eigenvalues_naive(const SignVector& s, std::size_t cap = default_oracle_cap);

/// O(n log n) evaluation for any n via the chirp-z transform.
Spectrum eigenvalues_fft(const SignVector& s);

SpectralReport report(const Spectrum& sp);

inline SpectralReport analyze(const SignVector& s) { return report(eigenvalues_fft(s)); }

/// Ax by FFT-based cyclic convolution.
std::vector<double> apply_circulant(const SignVector& s, std::span<const double> x);

/// Ax with A materialized entry by entry: A(i, j) = a_{(i - j) mod n}.
std::vector<double> dense_apply_oracle(const SignVector& s, std::span<const double> x,
                                       std::size_t cap = default_oracle_cap);

struct ProfilePoint {
  double t;
  cplx value;
};

struct Window {
  double t_lo;
  double t_hi;
};

/// p(e^{it}) on an endpoint-exclusive equispaced grid. Without a window the
/// grid is t_k = 2 pi k / samples and is evaluated by a folded transform; with
/// a window the polynomial is evaluated directly at each point.
std::vector<ProfilePoint> circle_profile(const SignVector& s, std::size_t samples,
                                         std::optional<Window> window = std::nullopt);

/// min_k |p(exp(2 pi i k / samples))|.
double grid_min_modulus(const SignVector& s, std::size_t samples);
/// max_k |p(exp(2 pi i k / samples))|.
double grid_max_modulus(const SignVector& s, std::size_t samples);

enum class FourierPart { real, imag };

/// Unit vector proportional to the real (or imaginary) part of
/// (exp(2 pi i j k / n))_k. Returns an empty vector for the imaginary part at
/// j = 0 or j = n/2, where it vanishes.
std::vector<double> fourier_unit_vector(std::size_t n, std::size_t j, FourierPart part);

double euclidean_norm(std::span<const double> x);

}  // namespace circhad

#endif
