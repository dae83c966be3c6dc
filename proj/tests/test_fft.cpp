#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "circhad/error.hpp"
#include "circhad/fft.hpp"
#include "circhad/rng.hpp"

using namespace circhad;

namespace {

std::vector<cplx> direct_dft(const std::vector<cplx>& x, int sign) {
  const std::size_t n = x.size();
  std::vector<cplx> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    cplx acc{};
    for (std::size_t k = 0; k < n; ++k) {
      const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>((j * k) % n) / static_cast<double>(n);
      acc += x[k] * cplx{std::cos(angle), std::sin(angle)};
    }
    out[j] = acc;
  }
  return out;
}

std::vector<cplx> random_complex(SplitMix64& g, std::size_t n) {
  std::vector<cplx> x(n);
  for (auto& v : x) v = {g.uniform() - 0.5, g.uniform() - 0.5};
  return x;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST_CASE("radix-2 transform matches the direct DFT") {
  SplitMix64 g(1);
  for (std::size_t n : {1u, 2u, 4u, 8u, 64u, 256u}) {
    auto x = random_complex(g, n);
    const auto expect = direct_dft(x, -1);
    Radix2Plan plan(n);
    plan.execute(x, Direction::forward);
    CHECK(max_diff(x, expect) < 1e-11 * static_cast<double>(n));
  }
  CHECK_THROWS_AS(Radix2Plan(12), Error);
}

TEST_CASE("Bluestein transform matches the direct DFT for arbitrary lengths") {
  SplitMix64 g(2);
  for (std::size_t n : {1u, 2u, 3u, 5u, 7u, 12u, 17u, 100u, 101u, 257u, 1000u}) {
    for (auto dir : {Direction::forward, Direction::backward}) {
      const auto x = random_complex(g, n);
      const auto got = BluesteinPlan(n, dir).execute(x);
      const auto expect = direct_dft(x, static_cast<int>(dir));
      CHECK_MESSAGE(max_diff(got, expect) < 1e-12 * std::sqrt(static_cast<double>(n)) * 10, "n = " << n);
    }
  }
}

TEST_CASE("forward then backward transform scales by n") {
  SplitMix64 g(3);
  for (std::size_t n : {9u, 31u, 128u, 3571u}) {
    const auto x = random_complex(g, n);
    auto y = BluesteinPlan(n, Direction::backward).execute(BluesteinPlan(n, Direction::forward).execute(x));
    for (auto& v : y) v /= static_cast<double>(n);
    CHECK(max_diff(x, y) < 1e-12);
  }
  CHECK_THROWS_AS(BluesteinPlan(0, Direction::forward), Error);
  CHECK_THROWS_AS(BluesteinPlan(3, Direction::forward).execute(std::vector<cplx>(4)), Error);
}

TEST_CASE("roots of unity") {
  const auto w = roots_of_unity(4);
  CHECK(std::abs(w[1] - cplx{0, 1}) < 1e-15);
  CHECK(std::abs(w[2] - cplx{-1, 0}) < 1e-15);
}
