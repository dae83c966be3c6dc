#ifndef CIRCHAD_SRC_INCREMENTAL_HPP
#define CIRCHAD_SRC_INCREMENTAL_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "circhad/search.hpp"
#include "circhad/spectrum.hpp"

namespace circhad {

// Eigenvalues of a circulant under single-entry sign flips. Flipping entry k
// changes lambda_j by -2 a_k w^{jk}, an O(n) update.
class IncrementalSpectrum {
public:
  IncrementalSpectrum(std::vector<std::int8_t> signs, const std::vector<cplx>& roots)
    : signs_(std::move(signs)), roots_(&roots) {
    refresh();
  }

  std::size_t size() const noexcept { return signs_.size(); }
  const std::vector<std::int8_t>& signs() const noexcept { return signs_; }
  const std::vector<cplx>& values() const noexcept { return values_; }

  void refresh() { values_ = eigenvalues_fft(SignVector(signs_)).values; }

  /// Largest |incremental - fresh| over all frequencies.
  double drift() const {
    const auto fresh = eigenvalues_fft(SignVector(signs_)).values;
    double d = 0.0;
    for (std::size_t j = 0; j < fresh.size(); ++j) d = std::max(d, std::abs(fresh[j] - values_[j]));
    return d;
  }

  void flip(std::size_t k) {
    const std::size_t n = size();
    const double delta = -2.0 * signs_[k];
    std::size_t idx = 0;
    for (std::size_t j = 0; j < n; ++j) {
      values_[j] += delta * (*roots_)[idx];
      idx += k;
      if (idx >= n) idx -= n;
    }
    signs_[k] = static_cast<std::int8_t>(-signs_[k]);
  }

  double objective(Objective obj) const {
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (const auto& v : values_) {
      const double m = std::abs(v);
      lo = std::min(lo, m);
      hi = std::max(hi, m);
    }
    return score(lo, hi, obj);
  }

  double objective_if_flipped(std::size_t k, Objective obj) const {
    const std::size_t n = size();
    const double delta = -2.0 * signs_[k];
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    std::size_t idx = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const double m = std::abs(values_[j] + delta * (*roots_)[idx]);
      lo = std::min(lo, m);
      hi = std::max(hi, m);
      idx += k;
      if (idx >= n) idx -= n;
    }
    return score(lo, hi, obj);
  }

private:
  double score(double lo, double hi, Objective obj) const {
    SpectralReport r;
    const double n = static_cast<double>(size());
    r.sigma_min = lo;
    r.sigma_max = hi;
    r.sqrt_n = std::sqrt(n);
    r.condition_number = lo < singularity_tolerance * n ? std::numeric_limits<double>::infinity() : hi / lo;
    r.deviation = std::max(hi - r.sqrt_n, r.sqrt_n - lo);
    return objective_value(r, obj);
  }

  std::vector<std::int8_t> signs_;
  const std::vector<cplx>* roots_;
  std::vector<cplx> values_;
};

// a is better than b: strictly smaller beyond rounding noise.
inline bool clearly_better(double a, double b) noexcept {
  if (a == b) return false;
  if (std::isinf(b)) return !std::isinf(a);
  if (std::isinf(a)) return false;
  return a < b - 1e-9 * std::max(1.0, std::abs(b));
}

// Equal up to rounding noise (both infinite counts as equal).
inline bool tied(double a, double b) noexcept { return !clearly_better(a, b) && !clearly_better(b, a); }

}  // namespace circhad

#endif
