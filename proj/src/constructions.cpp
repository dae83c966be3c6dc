#include "circhad/constructions.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "circhad/error.hpp"
#include "circhad/number_theory.hpp"
#include "circhad/rng.hpp"
#include "circhad/spectrum.hpp"
#include "parallel.hpp"

namespace circhad {

SignVector rudin_shapiro(unsigned k) {
  if (k > max_rudin_shapiro_order) {
    fail(ErrorKind::size, "rudin_shapiro: k = " + std::to_string(k) + " exceeds the cap " +
                              std::to_string(max_rudin_shapiro_order));
  }
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::int8_t> v(n);
  for (std::size_t m = 0; m < n; ++m) {
    v[m] = (std::popcount(m & (m >> 1)) & 1) ? std::int8_t{-1} : std::int8_t{1};
  }
  return SignVector(std::move(v));
}

SignVector random_signs(std::size_t n, std::uint64_t seed) {
  if (n == 0) fail(ErrorKind::argument, "random_signs: n must be positive");
  SplitMix64 gen(seed);
  std::vector<std::int8_t> v(n);
  for (auto& x : v) x = static_cast<std::int8_t>(gen.sign());
  return SignVector(std::move(v));
}

std::uint64_t default_flips(std::uint64_t q) {
  std::uint64_t f = 0;
  while ((2 * f + 1) * (2 * f + 1) < q) ++f;
  return f;
}

SignVector legendre_modified(const LegendreParams& params) {
  const std::uint64_t q = params.q;
  if (q < 3 || !is_prime(q)) {
    fail(ErrorKind::argument, "q must be prime (and at least 3), got " + std::to_string(q));
  }
  std::vector<std::int8_t> v(q);
  v[0] = 1;
  std::vector<std::size_t> nonresidues;
  nonresidues.reserve((q - 1) / 2);
  for (std::uint64_t j = 1; j < q; ++j) {
    v[j] = static_cast<std::int8_t>(legendre_symbol(j, q));
    if (v[j] < 0) nonresidues.push_back(j);
  }
  const std::uint64_t flips = params.flips.value_or(default_flips(q));
  if (flips > nonresidues.size()) {
    fail(ErrorKind::argument, "flips = " + std::to_string(flips) + " exceeds the " +
                                  std::to_string(nonresidues.size()) + " available -1 entries");
  }
  // Partial Fisher-Yates: the first `flips` slots become a uniform sample.
  SplitMix64 gen(params.seed);
  for (std::uint64_t i = 0; i < flips; ++i) {
    const std::uint64_t j = i + gen.below(nonresidues.size() - i);
    std::swap(nonresidues[i], nonresidues[j]);
    v[nonresidues[i]] = 1;
  }
  return SignVector(std::move(v));
}

double cef_grid_min(const SignVector& p) {
  return grid_min_modulus(p, cef_grid_factor * p.size());
}

SignVector cef_product(const SignVector& p, std::size_t cap) {
  const std::size_t len = p.size();
  if (len < 2) fail(ErrorKind::argument, "cef_iterate needs degree >= 1");
  if (len > cap / len) {
    fail(ErrorKind::size, "cef_iterate: result length " + std::to_string(len) + "^2 exceeds the cap " +
                              std::to_string(cap));
  }
  // Exponent i + (d+1) j has a unique base-(d+1) digit decomposition.
  std::vector<std::int8_t> q(len * len);
  for (std::size_t j = 0; j < len; ++j) {
    for (std::size_t i = 0; i < len; ++i) {
      q[i + len * j] = static_cast<std::int8_t>(p[i] * p[j]);
    }
  }
  return SignVector(std::move(q));
}

CefState cef_start(const SignVector& p) {
  if (p.size() < 2) fail(ErrorKind::argument, "cef_start needs degree >= 1");
  return CefState{p, 0, {cef_grid_min(p)}};
}

CefState cef_iterate(const CefState& state, std::size_t cap) {
  CefState next{cef_product(state.coefficients, cap), state.generation + 1,
                state.min_modulus_history};
  next.min_modulus_history.push_back(cef_grid_min(next.coefficients));
  return next;
}

SignVector cef_seed12() {
  // Barker-13; regenerated by search_cef_seed12 in the test suite.
  return SignVector{1, 1, 1, 1, 1, -1, -1, 1, 1, -1, 1, -1, 1};
}

SignVector search_cef_seed12(unsigned threads) {
  constexpr std::size_t free_bits = 12;
  constexpr std::size_t count = std::size_t{1} << free_bits;
  // Candidate c: entries 0..11 from the packed code of c (bit set = -1),
  // entry 12 fixed at +1. Increasing c is increasing lex order.
  auto candidate = [](std::size_t c) {
    std::vector<std::int8_t> v(free_bits + 1, 1);
    for (std::size_t i = 0; i < free_bits; ++i) {
      if ((c >> (free_bits - 1 - i)) & 1) v[i] = -1;
    }
    return SignVector(std::move(v));
  };
  std::vector<double> score(count);
  parallel_for(count, threads, [&](std::size_t c) {
    score[c] = grid_min_modulus(candidate(c), seed12_grid);
  });
  // Scores that agree to rounding are mathematically tied images of each
  // other; the scan in lex order keeps the first.
  const double best = *std::max_element(score.begin(), score.end());
  for (std::size_t c = 0; c < count; ++c) {
    if (score[c] >= best - 1e-9 * best) return candidate(c);
  }
  return candidate(0);
}

}  // namespace circhad
