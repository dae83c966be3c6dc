#include <doctest.h>

#include <cmath>
#include <vector>

#include "circhad/conjecture.hpp"
#include "circhad/constructions.hpp"
#include "circhad/error.hpp"
#include "circhad/number_theory.hpp"
#include "circhad/spectrum.hpp"

using namespace circhad;

TEST_CASE("scan examples at small n") {
  const auto rows = scan_deviation(1, 16, {.exact_cap = 16});
  REQUIRE(rows.size() == 16);
  for (const auto& r : rows) {
    CHECK(r.exact);
    CHECK(r.method == "exhaustive");
    CHECK(r.normalized == doctest::Approx(r.min_deviation / std::pow(double(r.n), 0.25)));
    CHECK(analyze(r.witness).deviation == doctest::Approx(r.min_deviation).epsilon(1e-12));
    if (r.n == 1 || r.n == 4) CHECK(r.min_deviation < 1e-12);
    else CHECK(r.min_deviation > 0.0);
  }
  CHECK(is_circulant_hadamard(rows[3].witness));
  const auto env = epsilon_envelope(rows);
  REQUIRE(env);
  double expect = 1e9;
  for (const auto& r : rows) {
    if (r.n > 4) expect = std::min(expect, r.normalized);
  }
  CHECK(*env == expect);
  CHECK_THROWS_AS(scan_deviation(0, 3), Error);
  CHECK_THROWS_AS(scan_deviation(5, 4), Error);
}

TEST_CASE("scan above the exact cap records method provenance") {
  const auto rows = scan_deviation(6, 17, {.exact_cap = 5, .seed = 3, .restarts = 4});
  for (const auto& r : rows) {
    CHECK_FALSE(r.exact);
    CHECK(r.method != "exhaustive");
    CHECK(r.min_deviation == analyze(r.witness).deviation);
    // Heuristic rows bound the exact minimum from above.
    CHECK(r.min_deviation >= exhaustive_search(r.n, Objective::deviation).report.deviation - 1e-9);
  }
  CHECK_FALSE(epsilon_envelope(rows));
  const auto again = scan_deviation(6, 17, {.exact_cap = 5, .seed = 3, .restarts = 4});
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i].witness == again[i].witness);
}

TEST_CASE("exact scan minimum never exceeds a construction at the same n") {
  const auto rows = scan_deviation(1, 16, {.exact_cap = 16});
  for (const auto& r : rows) {
    std::vector<SignVector> tried;
    for (std::uint64_t s = 0; s < 8; ++s) tried.push_back(random_signs(r.n, s));
    if (r.n >= 3 && is_prime(r.n)) {
      for (std::uint64_t s = 0; s < 4; ++s) tried.push_back(legendre_modified({r.n, s, {}}));
    }
    if ((r.n & (r.n - 1)) == 0) tried.push_back(rudin_shapiro(static_cast<unsigned>(std::log2(r.n))));
    for (const auto& v : tried) CHECK(r.min_deviation <= analyze(v).deviation + 1e-12);
  }
}

TEST_CASE("Ryser verification") {
  const auto rows = ryser_verify(12);
  REQUIRE(rows.size() == 12);
  for (const auto& [n, exists] : rows) CHECK_MESSAGE(exists == (n == 1 || n == 4), "n = " << n);
  CHECK(ryser_verify(2)[1].second == false);
  CHECK(ryser_verify(4, 24, 3)[3].second == true);
  CHECK_THROWS_AS(ryser_verify(25), Error);
}

TEST_CASE("Fourier bridge reproduces the spectral deviation") {
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto w = exhaustive_search(n, Objective::deviation).best;
    CHECK(std::abs(bridge_deviation(w) - analyze(w).deviation) <= 1e-8);
  }
  const auto leg = legendre_modified({101, 2, {}});
  CHECK(std::abs(bridge_deviation(leg) - analyze(leg).deviation) <= 1e-8);
}

TEST_CASE("quantiles, stddev, histogram") {
  const auto q = quantiles({5, 1, 3, 2, 4});
  CHECK(q.min == 1);
  CHECK(q.q25 == 2);
  CHECK(q.median == 3);
  CHECK(q.q75 == 4);
  CHECK(q.max == 5);
  const auto even = quantiles({1, 2, 3, 4});
  CHECK(even.median == doctest::Approx(2.5));
  CHECK(even.q25 == doctest::Approx(1.75));
  CHECK(quantiles({7}).median == 7);
  CHECK_THROWS_AS(quantiles({}), Error);
  CHECK(sample_stddev(std::vector<double>{2, 4, 4, 4, 5, 5, 7, 9}) == doctest::Approx(std::sqrt(32.0 / 7)));

  const std::vector<double> vals{0.0, 0.5, 1.0, 1.0, 2.0};
  const auto h = histogram(vals, 4);
  REQUIRE(h.size() == 4);
  CHECK(h[0].lo == 0.0);
  CHECK(h[3].hi == 2.0);
  CHECK(h[0].count == 1);
  CHECK(h[1].count == 1);
  CHECK(h[2].count == 2);
  CHECK(h[3].count == 1);
  const auto flat = histogram(std::vector<double>{3, 3, 3}, 5);
  CHECK(flat[0].count == 3);
  CHECK_THROWS_AS(histogram(vals, 0), Error);
}

TEST_CASE("Legendre statistics") {
  const auto one = legendre_statistics(7, 1);
  const auto r = analyze(legendre_modified({7, 0, {}}));
  for (double v : {one.kappa.min, one.kappa.q25, one.kappa.median, one.kappa.q75, one.kappa.max}) {
    CHECK(v == r.condition_number);
  }
  CHECK(one.deviation.median == r.deviation);
  CHECK(one.flips == 1);

  const auto s = legendre_statistics(101, 20, {.threads = 3, .histogram_bins = 30});
  CHECK(s.kappa.min <= s.kappa.q25);
  CHECK(s.kappa.q25 <= s.kappa.median);
  CHECK(s.kappa.median <= s.kappa.q75);
  CHECK(s.kappa.q75 <= s.kappa.max);
  REQUIRE(s.histograms.size() == 20);
  std::uint64_t total = 0;
  for (const auto& b : s.histograms[0]) total += b.count;
  CHECK(total == 101);
  const auto serial = legendre_statistics(101, 20);
  CHECK(serial.kappa.median == s.kappa.median);
  CHECK(serial.normalized_median == s.normalized_median);

  CHECK_THROWS_AS(legendre_statistics(9, 5), Error);
  CHECK_THROWS_AS(legendre_statistics(7, 0), Error);
}
