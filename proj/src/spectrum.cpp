#include "circhad/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include "circhad/error.hpp"

namespace circhad {

namespace {

// Plans up to this length are kept for the life of the process.
constexpr std::size_t max_cached_plan = std::size_t{1} << 16;

std::shared_ptr<const BluesteinPlan> plan_for(std::size_t n, Direction dir) {
  if (n > max_cached_plan) return std::make_shared<const BluesteinPlan>(n, dir);
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, int>, std::shared_ptr<const BluesteinPlan>> cache;
  const std::lock_guard lock(mutex);
  auto& slot = cache[{n, static_cast<int>(dir)}];
  if (!slot) slot = std::make_shared<const BluesteinPlan>(n, dir);
  return slot;
}

std::vector<double> as_doubles(const SignVector& s) {
  return std::vector<double>(s.signs().begin(), s.signs().end());
}

void check_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) {
    fail(ErrorKind::size, std::string(what) + ": n = " + std::to_string(n) +
                              " exceeds the oracle cap " + std::to_string(cap));
  }
}

}  // namespace

std::vector<double> Spectrum::moduli() const {
  std::vector<double> m(values.size());
  std::transform(values.begin(), values.end(), m.begin(), [](cplx z) { return std::abs(z); });
  return m;
}

Spectrum eigenvalues_naive(const SignVector& s, std::size_t cap) {
  const std::size_t n = s.size();
  check_cap(n, cap, "eigenvalues_naive");
  const auto w = roots_of_unity(n);
  Spectrum sp;
  sp.values.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    cplx acc{};
    std::size_t idx = 0;  // j*k mod n
    for (std::size_t k = 0; k < n; ++k) {
      acc += static_cast<double>(s[k]) * w[idx];
      idx += j;
      if (idx >= n) idx -= n;
    }
    sp.values[j] = acc;
  }
  return sp;
}

Spectrum eigenvalues_fft(const SignVector& s) {
  const auto plan = plan_for(s.size(), Direction::backward);
  return Spectrum{plan->execute_real(as_doubles(s))};
}

SpectralReport report(const Spectrum& sp) {
  if (sp.values.empty()) fail(ErrorKind::argument, "empty spectrum");
  SpectralReport r;
  r.n = sp.size();
  const auto mod = sp.moduli();
  const auto [lo, hi] = std::minmax_element(mod.begin(), mod.end());
  r.sigma_min = *lo;
  r.sigma_max = *hi;
  const double n = static_cast<double>(r.n);
  r.condition_number = r.sigma_min < singularity_tolerance * n
                           ? std::numeric_limits<double>::infinity()
                           : r.sigma_max / r.sigma_min;
  r.sqrt_n = std::sqrt(n);
  r.deviation = std::max(r.sigma_max - r.sqrt_n, r.sqrt_n - r.sigma_min);
  r.deviation_normalized = r.deviation / std::pow(n, 0.25);
  return r;
}

std::vector<double> apply_circulant(const SignVector& s, std::span<const double> x) {
  const std::size_t n = s.size();
  if (x.size() != n) {
    fail(ErrorKind::argument, "apply_circulant: x has length " + std::to_string(x.size()) +
                                  ", expected " + std::to_string(n));
  }
  const auto fwd = plan_for(n, Direction::forward);
  const auto bwd = plan_for(n, Direction::backward);
  auto a_hat = fwd->execute_real(as_doubles(s));
  const auto x_hat = fwd->execute_real(x);
  for (std::size_t j = 0; j < n; ++j) a_hat[j] *= x_hat[j];
  const auto y = bwd->execute(a_hat);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = y[i].real() / static_cast<double>(n);
  return out;
}

std::vector<double> dense_apply_oracle(const SignVector& s, std::span<const double> x,
                                       std::size_t cap) {
  const std::size_t n = s.size();
  check_cap(n, cap, "dense_apply_oracle");
  if (x.size() != n) fail(ErrorKind::argument, "dense_apply_oracle: length mismatch");
  std::vector<double> matrix(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) matrix[i * n + j] = s[(i + n - j) % n];
  }
  std::vector<double> y(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += matrix[i * n + j] * x[j];
    y[i] = acc;
  }
  return y;
}

namespace {

std::vector<cplx> full_circle_values(const SignVector& s, std::size_t samples) {
  // p(e^{2 pi i k / m}) only sees coefficient sums over residue classes mod m.
  std::vector<double> folded(samples, 0.0);
  for (std::size_t i = 0; i < s.size(); ++i) folded[i % samples] += s[i];
  return plan_for(samples, Direction::backward)->execute_real(folded);
}

}  // namespace

std::vector<ProfilePoint> circle_profile(const SignVector& s, std::size_t samples,
                                         std::optional<Window> window) {
  if (samples < 2) fail(ErrorKind::argument, "circle_profile needs at least 2 samples");
  std::vector<ProfilePoint> out(samples);
  if (!window) {
    const auto values = full_circle_values(s, samples);
    for (std::size_t k = 0; k < samples; ++k) {
      out[k] = {2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(samples),
                values[k]};
    }
    return out;
  }
  const auto [lo, hi] = *window;
  if (!(hi > lo) || !std::isfinite(lo) || !std::isfinite(hi)) {
    fail(ErrorKind::argument, "circle_profile window must satisfy t_lo < t_hi");
  }
  const double step = (hi - lo) / static_cast<double>(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    const double t = lo + step * static_cast<double>(k);
    const cplx z{std::cos(t), std::sin(t)};
    cplx acc{};
    for (std::size_t i = s.size(); i-- > 0;) acc = acc * z + static_cast<double>(s[i]);
    out[k] = {t, acc};
  }
  return out;
}

double grid_min_modulus(const SignVector& s, std::size_t samples) {
  if (samples < 1) fail(ErrorKind::argument, "grid needs at least one sample");
  const auto v = full_circle_values(s, samples);
  double m = std::numeric_limits<double>::infinity();
  for (const auto& z : v) m = std::min(m, std::abs(z));
  return m;
}

double grid_max_modulus(const SignVector& s, std::size_t samples) {
  if (samples < 1) fail(ErrorKind::argument, "grid needs at least one sample");
  const auto v = full_circle_values(s, samples);
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

std::vector<double> fourier_unit_vector(std::size_t n, std::size_t j, FourierPart part) {
  if (n == 0 || j >= n) fail(ErrorKind::argument, "fourier_unit_vector: index out of range");
  std::vector<double> v(n);
  std::size_t idx = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(idx) / static_cast<double>(n);
    v[k] = part == FourierPart::real ? std::cos(angle) : std::sin(angle);
    idx = (idx + j) % n;
  }
  const double norm = euclidean_norm(v);
  // sin(2 pi j k / n) is identically zero at j = 0 and j = n/2.
  if (norm < 1e-6) return {};
  for (auto& x : v) x /= norm;
  return v;
}

double euclidean_norm(std::span<const double> x) {
  double scale = 0.0;
  for (double v : x) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return 0.0;
  double acc = 0.0;
  for (double v : x) acc += (v / scale) * (v / scale);
  return scale * std::sqrt(acc);
}

}  // namespace circhad
