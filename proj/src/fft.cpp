#include "circhad/fft.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "circhad/error.hpp"

namespace circhad {

Radix2Plan::Radix2Plan(std::size_t size) : size_(size) {
  if (size == 0 || !std::has_single_bit(size)) {
    fail(ErrorKind::argument, "radix-2 size must be a power of two, got " + std::to_string(size));
  }
  twiddle_.resize(size / 2);
  for (std::size_t k = 0; k < size / 2; ++k) {
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(size);
    twiddle_[k] = {std::cos(angle), std::sin(angle)};
  }
  const int bits = std::countr_zero(size);
  bitrev_.resize(size);
  for (std::size_t i = 0; i < size; ++i) {
    std::size_t r = 0;
    for (int b = 0; b < bits; ++b) r |= ((i >> b) & 1) << (bits - 1 - b);
    bitrev_[i] = r;
  }
}

void Radix2Plan::execute(std::span<cplx> x, Direction dir) const {
  if (x.size() != size_) fail(ErrorKind::argument, "radix-2 input length mismatch");
  for (std::size_t i = 0; i < size_; ++i) {
    if (i < bitrev_[i]) std::swap(x[i], x[bitrev_[i]]);
  }
  const bool backward = dir == Direction::backward;
  for (std::size_t len = 2; len <= size_; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = size_ / len;
    for (std::size_t start = 0; start < size_; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        cplx w = twiddle_[k * stride];
        if (backward) w = std::conj(w);
        const cplx u = x[start + k];
        const cplx v = x[start + k + half] * w;
        x[start + k] = u + v;
        x[start + k + half] = u - v;
      }
    }
  }
}

namespace {

std::size_t convolution_size(std::size_t n) { return std::bit_ceil(2 * n - 1); }

}  // namespace

BluesteinPlan::BluesteinPlan(std::size_t n, Direction dir)
  : n_(n), dir_(dir), inner_(n == 0 ? 1 : convolution_size(n)) {
  if (n == 0) fail(ErrorKind::argument, "transform length must be positive");
  const std::uint64_t two_n = 2 * static_cast<std::uint64_t>(n);
  const double sgn = static_cast<double>(static_cast<int>(dir));
  chirp_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    // k^2 mod 2n keeps the phase argument small and exact.
    const std::uint64_t kk = static_cast<std::uint64_t>(k) % two_n;
    const std::uint64_t phase = (kk * kk) % two_n;
    const double angle = sgn * std::numbers::pi * static_cast<double>(phase) / static_cast<double>(n);
    chirp_[k] = {std::cos(angle), std::sin(angle)};
  }
  const std::size_t m = inner_.size();
  kernel_hat_.assign(m, cplx{});
  kernel_hat_[0] = std::conj(chirp_[0]);
  for (std::size_t k = 1; k < n; ++k) {
    kernel_hat_[k] = std::conj(chirp_[k]);
    kernel_hat_[m - k] = std::conj(chirp_[k]);
  }
  inner_.execute(kernel_hat_, Direction::forward);
  const double scale = 1.0 / static_cast<double>(m);
  for (auto& v : kernel_hat_) v *= scale;
}

std::vector<cplx> BluesteinPlan::execute(std::span<const cplx> x) const {
  if (x.size() != n_) fail(ErrorKind::argument, "transform input length mismatch");
  if (n_ == 1) return {x[0]};
  std::vector<cplx> work(inner_.size());
  for (std::size_t k = 0; k < n_; ++k) work[k] = x[k] * chirp_[k];
  inner_.execute(work, Direction::forward);
  for (std::size_t i = 0; i < work.size(); ++i) work[i] *= kernel_hat_[i];
  inner_.execute(work, Direction::backward);
  std::vector<cplx> out(n_);
  for (std::size_t j = 0; j < n_; ++j) out[j] = work[j] * chirp_[j];
  return out;
}

std::vector<cplx> BluesteinPlan::execute_real(std::span<const double> x) const {
  std::vector<cplx> z(x.begin(), x.end());
  return execute(z);
}

std::vector<cplx> roots_of_unity(std::size_t n) {
  std::vector<cplx> w(n);
  for (std::size_t m = 0; m < n; ++m) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
    w[m] = {std::cos(angle), std::sin(angle)};
  }
  return w;
}

}  // namespace circhad
