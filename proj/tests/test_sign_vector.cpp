#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "circhad/error.hpp"
#include "circhad/rng.hpp"
#include "circhad/sign_vector.hpp"

using namespace circhad;

namespace {

SignVector from_bits(std::uint64_t bits, std::size_t n) {
  std::vector<std::int8_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = ((bits >> i) & 1) ? -1 : 1;
  return SignVector(v);
}

SignVector random_vector(SplitMix64& g, std::size_t n) {
  std::vector<std::int8_t> v(n);
  for (auto& x : v) x = static_cast<std::int8_t>(g.sign());
  return SignVector(v);
}

// All 4n group images without deduplication, built from index formulas.
std::vector<std::vector<int>> raw_images(const SignVector& s) {
  const std::size_t n = s.size();
  std::vector<std::vector<int>> out;
  for (int neg : {1, -1}) {
    for (bool rev : {false, true}) {
      for (std::size_t r = 0; r < n; ++r) {
        std::vector<int> img(n);
        for (std::size_t i = 0; i < n; ++i) {
          const std::size_t src = (i + r) % n;
          img[i] = neg * s[rev ? n - 1 - src : src];
        }
        out.push_back(img);
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("sign vector validates entries and length") {
  CHECK_THROWS_AS(SignVector(std::vector<std::int8_t>{}), Error);
  CHECK_THROWS_AS(SignVector(std::vector<std::int8_t>{1, 0, -1}), Error);
  CHECK_THROWS_AS((SignVector{1, 2}), Error);
  const SignVector s{1, -1, -1};
  CHECK(s.size() == 3);
  CHECK(s.sum() == -1);
}

TEST_CASE("periodic autocorrelation examples") {
  CHECK(periodic_autocorrelation(SignVector{-1, 1, 1, 1}, 1) == 0);
  CHECK(periodic_autocorrelation(SignVector{1, 1, 1}, 0) == 3);
  CHECK(periodic_autocorrelation(SignVector{1, 1}, 1) == 2);
  CHECK_THROWS_AS(periodic_autocorrelation(SignVector{1, 1}, 2), Error);
}

TEST_CASE("periodic autocorrelation is symmetric, has parity of n, equals n at lag 0") {
  SplitMix64 g(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + g.below(40);
    const auto s = random_vector(g, n);
    CHECK(periodic_autocorrelation(s, 0) == static_cast<std::int64_t>(n));
    for (std::size_t k = 1; k < n; ++k) {
      const auto c = periodic_autocorrelation(s, k);
      CHECK(c == periodic_autocorrelation(s, n - k));
      CHECK(((c - static_cast<std::int64_t>(n)) % 2) == 0);
    }
  }
}

TEST_CASE("circulant Hadamard detection") {
  CHECK(is_circulant_hadamard(SignVector{-1, 1, 1, 1}));
  CHECK(is_circulant_hadamard(SignVector{1}));
  CHECK_FALSE(is_circulant_hadamard(SignVector{1, 1, 1}));
  CHECK_FALSE(is_circulant_hadamard(SignVector{1, -1}));
}

TEST_CASE("exhaustively, circulant Hadamard vectors of length <= 12 exist only at n = 1 and 4") {
  for (std::size_t n = 1; n <= 12; ++n) {
    bool any = false;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      if (is_circulant_hadamard(from_bits(bits, n))) any = true;
    }
    CHECK_MESSAGE(any == (n == 1 || n == 4), "n = " << n);
  }
}

TEST_CASE("canonicalize examples") {
  // Orbit of (1,-1,1,1): four rotations and their negations.
  const auto c = canonicalize(SignVector{1, -1, 1, 1});
  CHECK(c.representative == SignVector{1, 1, 1, -1});
  CHECK(c.orbit_size == 8);
  const auto members = orbit(SignVector{1, -1, 1, 1});
  CHECK(std::find(members.begin(), members.end(), SignVector{-1, 1, 1, 1}) != members.end());

  const auto ones = canonicalize(SignVector{1, 1, 1});
  CHECK(ones.representative == SignVector{1, 1, 1});
  CHECK(ones.orbit_size == 2);
  CHECK(canonicalize(SignVector{-1, -1, -1}).representative == SignVector{1, 1, 1});

  const auto one = canonicalize(SignVector{1});
  CHECK(one.representative == SignVector{1});
  CHECK(one.orbit_size == 2);
}

TEST_CASE("canonical form agrees with brute-force image enumeration") {
  SplitMix64 g(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + g.below(14);
    const auto s = random_vector(g, n);
    auto imgs = raw_images(s);
    std::sort(imgs.begin(), imgs.end(), [](const auto& a, const auto& b) {
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                          [](int x, int y) { return x > y; });
    });
    const std::set<std::vector<int>> distinct(imgs.begin(), imgs.end());
    const auto c = canonicalize(s);
    CHECK(std::vector<int>(c.representative.signs().begin(), c.representative.signs().end()) == imgs.front());
    CHECK(c.orbit_size == distinct.size());
    CHECK((4 * n) % c.orbit_size == 0);
    CHECK(c.representative[0] == 1);
    CHECK(canonicalize(c.representative).representative == c.representative);
  }
}

TEST_CASE("packed encoding preserves lexicographic order and matches canonicalize") {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
      const auto s = packed::decode(code, n);
      REQUIRE(packed::encode(s) == code);
      const auto c = canonicalize(s);
      CHECK(packed::canonical(code, n) == packed::encode(c.representative));
      CHECK(packed::is_canonical(code, n) == (packed::encode(c.representative) == code));
      CHECK(packed::orbit_size(code, n) == c.orbit_size);
    }
  }
  CHECK(lex_less(SignVector{1, 1, -1}, SignVector{1, -1, 1}));
  CHECK(packed::encode(SignVector{1, 1, -1}) < packed::encode(SignVector{1, -1, 1}));
}

TEST_CASE("orbit sizes partition the 2^n vectors") {
  for (std::size_t n = 1; n <= 14; ++n) {
    for (bool dec : {false, true}) {
      std::uint64_t mass = 0;
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
        if (packed::is_canonical(code, n, {dec})) mass += packed::orbit_size(code, n, {dec});
      }
      CHECK_MESSAGE(mass == (std::uint64_t{1} << n), "n = " << n << " decimation = " << dec);
    }
  }
}

TEST_CASE("decimation enlarges orbits consistently") {
  for (std::size_t n = 1; n <= 9; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
      const auto s = packed::decode(code, n);
      const auto c = canonicalize(s, {true});
      CHECK(packed::canonical(code, n, {true}) == packed::encode(c.representative));
      CHECK(packed::orbit_size(code, n, {true}) == c.orbit_size);
      CHECK(packed::canonical(code, n, {true}) <= packed::canonical(code, n));
    }
  }
  CHECK(nontrivial_units(10) == std::vector<std::size_t>{3, 7, 9});
  CHECK_THROWS_AS(SignVector({1, 1, -1, 1}).decimated(2), Error);
}

TEST_CASE("packed form rejects lengths beyond 63") {
  CHECK_THROWS_AS(packed::decode(0, 64), Error);
  CHECK_THROWS_AS(packed::decode(0, 0), Error);
}
