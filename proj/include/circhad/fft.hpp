#ifndef CIRCHAD_FFT_HPP
#define CIRCHAD_FFT_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace circhad {

using cplx = std::complex<double>;

enum class Direction { forward = -1, backward = +1 };

/// In-place radix-2 transform, x.size() a power of two. Unnormalized:
/// X_j = sum_k x_k exp(dir * 2 pi i j k / N).
class Radix2Plan {
public:
  explicit Radix2Plan(std::size_t size);

  std::size_t size() const noexcept { return size_; }
  void execute(std::span<cplx> x, Direction dir) const;

private:
  std::size_t size_;
  std::vector<cplx> twiddle_;  // exp(-2 pi i k / N), k < N/2
  std::vector<std::size_t> bitrev_;
};

/// Arbitrary-length DFT through the chirp-z (Bluestein) reduction onto a
/// power-of-two circular convolution of length >= 2n - 1. Read-only after
/// construction; execute() allocates its own scratch, so one plan can be
/// shared between threads.
class BluesteinPlan {
public:
  BluesteinPlan(std::size_t n, Direction dir);

  std::size_t size() const noexcept { return n_; }
  Direction direction() const noexcept { return dir_; }

  std::vector<cplx> execute(std::span<const cplx> x) const;
  std::vector<cplx> execute_real(std::span<const double> x) const;

private:
  std::size_t n_;
  Direction dir_;
  Radix2Plan inner_;
  std::vector<cplx> chirp_;         // exp(dir * pi i k^2 / n), k < n
  std::vector<cplx> kernel_hat_;    // transformed conj-chirp kernel, scaled by 1/M
};

/// exp(2 pi i m / n) for m = 0..n-1, each entry computed directly.
std::vector<cplx> roots_of_unity(std::size_t n);

}  // namespace circhad

#endif
