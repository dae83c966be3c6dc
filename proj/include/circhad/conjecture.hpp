#ifndef CIRCHAD_CONJECTURE_HPP
#define CIRCHAD_CONJECTURE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "circhad/search.hpp"
#include "circhad/sign_vector.hpp"

namespace circhad {

struct ScanRecord {
  std::size_t n = 0;
  double min_deviation = 0.0;
  /// min_deviation / n^{1/4}
  double normalized = 0.0;
  /// True only for exhaustive rows; other rows are upper bounds on the true minimum.
  bool exact = false;
  std::string method;
  SignVector witness{1};
};

struct ScanOptions {
  std::size_t exact_cap = 16;
  std::uint64_t seed = 0;
  /// Local-search restarts for rows above the exact cap.
  unsigned restarts = 16;
  unsigned threads = 1;
};

/// One row per n in [n_lo, n_hi] with the smallest deviation found.
std::vector<ScanRecord> scan_deviation(std::size_t n_lo, std::size_t n_hi, ScanOptions opts = {});

/// Minimum of `normalized` over exact rows with n > 4: an empirical candidate
/// for the constant in the lower bound, not a proven value.
std::optional<double> epsilon_envelope(std::span<const ScanRecord> records);

/// (n, a circulant Hadamard matrix of order n exists) for n = 1..n_hi by an
/// exact integer autocorrelation test on every orbit.
std::vector<std::pair<std::size_t, bool>> ryser_verify(std::size_t n_hi,
                                                       std::size_t cap = default_exhaustive_cap,
                                                       unsigned threads = 1);

/// max over the real Fourier-derived unit vectors x (real and imaginary parts
/// of each frequency) of | ||Ax|| - sqrt(n) |, with Ax from apply_circulant.
double bridge_deviation(const SignVector& s);

struct Quantiles {
  double min = 0.0, q25 = 0.0, median = 0.0, q75 = 0.0, max = 0.0;
};

/// Linear-interpolation quantiles of a non-empty sample.
Quantiles quantiles(std::vector<double> values);

double sample_stddev(std::span<const double> values);

struct HistogramBin {
  double lo = 0.0;
  double hi = 0.0;
  std::uint64_t count = 0;
};

inline constexpr std::size_t default_histogram_bins = 60;

/// Equal-width bins spanning [min, max] of the values; max lands in the last bin.
std::vector<HistogramBin> histogram(std::span<const double> values,
                                    std::size_t bins = default_histogram_bins);

struct SeedStats {
  std::uint64_t q = 0;
  unsigned seeds = 0;
  std::uint64_t flips = 0;
  Quantiles kappa;
  Quantiles deviation;
  /// median deviation / (q^{1/4} sqrt(ln q))
  double normalized_median = 0.0;
  /// Median over seeds of the sample stddev of |lambda_j|, j >= 1.
  double moduli_stddev_median = 0.0;
  /// Per-seed moduli histograms, filled when requested.
  std::vector<std::vector<HistogramBin>> histograms;
};

struct StatsOptions {
  unsigned threads = 1;
  /// 0 disables histograms.
  std::size_t histogram_bins = 0;
};

/// legendre_modified(q, seed) with default flips for seed = 0..seeds-1.
SeedStats legendre_statistics(std::uint64_t q, unsigned seeds, StatsOptions opts = {});

}  // namespace circhad

#endif
