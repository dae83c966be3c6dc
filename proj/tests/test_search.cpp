#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "circhad/constructions.hpp"
#include "circhad/error.hpp"
#include "circhad/search.hpp"
#include "circhad/spectrum.hpp"

using namespace circhad;

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

// Minimum over all 2^n sign vectors, computed by an independent brute-force
// FFT over every vector (no symmetry reduction).
struct Reference {
  std::size_t n;
  double deviation;
  double kappa;
};

constexpr Reference reference_table[] = {
    {1, 0.0, 1.0},
    {2, 1.4142135623730951, inf},
    {3, 0.7320508075688772, 2.0},
    {4, 0.0, 1.0},
    {5, 0.7639320225002102, 1.5},
    {6, 1.5505102572168217, 2.0},
    {7, 1.6457513110645907, 2.5000000000000004},
    {8, 0.8284271247461903, 1.7320508075688772},
    {9, 1.631919426697325, 2.5},
    {10, 1.832146421745286, 2.497212040956833},
    {11, 1.237188277478889, 2.0812466454770937},
    {12, 0.6356744903915641, 1.414213562373095},
    {13, 1.1488544324819254, 1.4433756729740645},
    {14, 1.7416573867739409, 2.1213203435596424},
    {15, 1.013819273592913, 1.6885612347964283},
    {16, 1.6568542494923806, 2.0},
    {17, 1.7181368232595076, 2.2256964969551927},
    {18, 1.8194930533486602, 2.476118217635583},
};

bool same_value(double a, double b) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b));
}

}  // namespace

TEST_CASE("objective names") {
  CHECK(parse_objective("condition") == Objective::condition);
  CHECK(parse_objective("deviation") == Objective::deviation);
  CHECK_FALSE(parse_objective("kappa"));
  CHECK(to_string(Objective::deviation) == "deviation");
}

TEST_CASE("exhaustive search examples") {
  const auto n3 = exhaustive_search(3, Objective::condition);
  CHECK(n3.report.condition_number == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(n3.best == SignVector{1, 1, -1});
  CHECK(n3.exact);

  const auto n4 = exhaustive_search(4, Objective::condition);
  CHECK(std::abs(n4.report.condition_number - 1.0) < 1e-12);
  CHECK(is_circulant_hadamard(n4.best));
  CHECK(n4.best == canonicalize(SignVector{-1, 1, 1, 1}).representative);

  const auto n2 = exhaustive_search(2, Objective::condition);
  CHECK(n2.report.singular());
  CHECK(n2.best == SignVector{1, 1});
}

TEST_CASE("exhaustive optimum matches the brute-force reference table") {
  for (const auto& ref : reference_table) {
    const auto dev = exhaustive_search(ref.n, Objective::deviation);
    const auto cond = exhaustive_search(ref.n, Objective::condition);
    CHECK_MESSAGE(same_value(dev.report.deviation, ref.deviation), "n = " << ref.n);
    CHECK_MESSAGE(same_value(cond.report.condition_number, ref.kappa), "n = " << ref.n);
    CHECK(canonicalize(dev.best).representative == dev.best);
    CHECK(dev.exact);
  }
}

TEST_CASE("exhaustive search: orbit accounting, cap, thread independence") {
  for (std::size_t n = 1; n <= 16; ++n) {
    const auto r = exhaustive_search(n, Objective::deviation);
    CHECK(r.orbit_mass == (std::uint64_t{1} << n));
    CHECK(r.evaluations == r.orbits_visited);
  }
  CHECK_THROWS_AS(exhaustive_search(25, Objective::condition), Error);
  try {
    exhaustive_search(30, Objective::condition, {.cap = 24});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::size);
    CHECK(std::string(e.what()).find("24") != std::string::npos);
  }
  for (std::size_t n : {13u, 17u, 20u}) {
    for (auto obj : {Objective::condition, Objective::deviation}) {
      const auto one = exhaustive_search(n, obj, {.threads = 1});
      const auto four = exhaustive_search(n, obj, {.threads = 4});
      CHECK(one.best == four.best);
      CHECK(one.orbits_visited == four.orbits_visited);
      CHECK(one.report.deviation == four.report.deviation);
      CHECK(one.report.condition_number == four.report.condition_number);
    }
  }
}

TEST_CASE("minimum deviation vanishes only at n = 1 and 4") {
  for (std::size_t n = 1; n <= 20; ++n) {
    const auto r = exhaustive_search(n, Objective::deviation);
    if (n == 1 || n == 4) CHECK(r.report.deviation < 1e-12);
    else CHECK(r.report.deviation > 0.1);
  }
}

TEST_CASE("decimation reduction keeps optimal objective values") {
  for (std::size_t n = 1; n <= 16; ++n) {
    for (auto obj : {Objective::condition, Objective::deviation}) {
      const auto plain = exhaustive_search(n, obj);
      const auto dec = exhaustive_search(n, obj, {.symmetry = {true}});
      CHECK(same_value(objective_value(plain.report, obj), objective_value(dec.report, obj)));
      CHECK(dec.orbits_visited <= plain.orbits_visited);
      CHECK(dec.orbit_mass == (std::uint64_t{1} << n));
      if (!(plain.best == dec.best)) {
        MESSAGE("n = " << n << " " << to_string(obj) << ": decimation changes the representative");
      }
    }
  }
}

TEST_CASE("local search reaches the Hadamard orbit at n = 4") {
  for (std::uint64_t seed = 0; seed < 32; ++seed) {
    const auto r = local_search(4, Objective::condition, {.seed = seed, .restarts = 8});
    CHECK(std::abs(r.report.condition_number - 1.0) < 1e-12);
    CHECK_FALSE(r.exact);
  }
}

TEST_CASE("local search with 64 restarts matches the exhaustive optimum for n = 8..16") {
  for (std::size_t n = 8; n <= 16; ++n) {
    for (auto obj : {Objective::condition, Objective::deviation}) {
      const auto exact = exhaustive_search(n, obj);
      const auto heur = local_search(n, obj, {.seed = 1, .restarts = 64});
      CHECK_MESSAGE(same_value(objective_value(heur.report, obj), objective_value(exact.report, obj)),
                    "n = " << n << " " << to_string(obj));
    }
  }
}

TEST_CASE("local search: determinism, local optimality, thread independence") {
  for (std::size_t n : {9u, 23u, 40u}) {
    LocalSearchOptions opts{.seed = 77, .restarts = 6, .max_iters = 500};
    const auto a = local_search(n, Objective::deviation, opts);
    const auto b = local_search(n, Objective::deviation, opts);
    opts.threads = 3;
    const auto c = local_search(n, Objective::deviation, opts);
    CHECK(a.best == b.best);
    CHECK(a.best == c.best);
    CHECK(a.evaluations == c.evaluations);
    CHECK(a.seed == std::optional<std::uint64_t>{77});
    for (std::size_t k = 0; k < n; ++k) {
      CHECK(analyze(a.best.flipped(k)).deviation >= a.report.deviation - 1e-9);
    }
  }
}

TEST_CASE("heuristics never beat the exact optimum") {
  for (std::size_t n = 1; n <= 14; ++n) {
    for (auto obj : {Objective::condition, Objective::deviation}) {
      const double exact = objective_value(exhaustive_search(n, obj).report, obj);
      const double ls = objective_value(local_search(n, obj, {.seed = n, .restarts = 2}).report, obj);
      const double an = objective_value(anneal(n, obj, n, {.epochs = 20}).report, obj);
      CHECK(ls >= exact - 1e-9);
      CHECK(an >= exact - 1e-9);
    }
  }
}

TEST_CASE("annealing calibration at n = 16 with the default schedule") {
  for (auto obj : {Objective::condition, Objective::deviation}) {
    const double exact = objective_value(exhaustive_search(16, obj).report, obj);
    int hits = 0;
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      if (same_value(objective_value(anneal(16, obj, seed).report, obj), exact)) ++hits;
    }
    CHECK_MESSAGE(hits >= 6, to_string(obj) << ": " << hits << " of 8");
  }
}

TEST_CASE("annealing edge cases") {
  const auto start = random_signs(12, 5);
  const auto zero = anneal(12, Objective::deviation, 3, {.epochs = 0}, start);
  CHECK(zero.best == canonicalize(start).representative);
  CHECK(zero.report.deviation == doctest::Approx(analyze(start).deviation).epsilon(1e-12));
  CHECK(zero.evaluations == 1);

  CHECK_THROWS_AS(anneal(8, Objective::deviation, 1, {.cooling = 1.0}), Error);
  CHECK_THROWS_AS(anneal(8, Objective::deviation, 1, {.cooling = 0.0}), Error);
  CHECK_THROWS_AS(anneal(8, Objective::deviation, 1, {.initial_temperature = -1.0}), Error);
  CHECK_THROWS_AS(anneal(8, Objective::deviation, 1, {}, random_signs(9, 1)), Error);

  const auto a = anneal(30, Objective::condition, 9, {.epochs = 50});
  const auto b = anneal(30, Objective::condition, 9, {.epochs = 50});
  CHECK(a.best == b.best);
}

TEST_CASE("annealing from a Legendre start does not lose to the construction") {
  std::vector<double> devs;
  std::vector<SignVector> starts;
  for (std::uint64_t seed = 0; seed < 9; ++seed) {
    starts.push_back(legendre_modified({101, seed, {}}));
    devs.push_back(analyze(starts.back()).deviation);
  }
  auto sorted = devs;
  std::sort(sorted.begin(), sorted.end());
  const double median = sorted[sorted.size() / 2];
  for (std::size_t i = 0; i < starts.size(); ++i) {
    const auto r = anneal(101, Objective::deviation, i, {.epochs = 100}, starts[i]);
    CHECK(r.report.deviation <= devs[i] + 1e-9);
    if (devs[i] <= median) CHECK(r.report.deviation <= median + 1e-9);
  }
  // A random start with the default schedule also gets below the median.
  CHECK(anneal(101, Objective::deviation, 4).report.deviation <= median);
}
