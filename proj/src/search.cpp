#include "circhad/search.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "circhad/constructions.hpp"
#include "circhad/error.hpp"
#include "circhad/rng.hpp"
#include "incremental.hpp"
#include "parallel.hpp"

namespace circhad {

std::string_view to_string(Objective obj) noexcept {
  return obj == Objective::condition ? "condition" : "deviation";
}

std::optional<Objective> parse_objective(std::string_view name) noexcept {
  if (name == "condition") return Objective::condition;
  if (name == "deviation") return Objective::deviation;
  return std::nullopt;
}

double objective_value(const SpectralReport& r, Objective obj) noexcept {
  return obj == Objective::condition ? r.condition_number : r.deviation;
}

namespace {

constexpr std::size_t block_bits = 12;
constexpr std::size_t block_size = std::size_t{1} << block_bits;

struct Candidate {
  double value = std::numeric_limits<double>::infinity();
  std::uint64_t code = std::numeric_limits<std::uint64_t>::max();
  bool valid = false;
};

// Lower objective wins; ties (within rounding) go to the smaller code, which
// is the lex-smaller vector.
void offer(Candidate& best, double value, std::uint64_t code) {
  if (!best.valid || clearly_better(value, best.value) ||
      (tied(value, best.value) && code < best.code)) {
    best = {value, code, true};
  }
}

struct BlockResult {
  Candidate best;
  std::uint64_t orbits = 0;
  std::uint64_t mass = 0;
};

std::vector<std::int8_t> unpack(std::uint64_t code, std::size_t n) {
  const auto s = packed::decode(code, n);
  return {s.signs().begin(), s.signs().end()};
}

void check_drift(const IncrementalSpectrum& inc) {
  const double n = static_cast<double>(inc.size());
  const double drift = inc.drift();
  if (drift > 1e-8 * std::max(1.0, std::sqrt(n))) {
    fail(ErrorKind::tolerance, "incremental spectrum drifted by " + std::to_string(drift) +
                                   " from a fresh evaluation");
  }
}

}  // namespace

SearchOutcome exhaustive_search(std::size_t n, Objective obj, ExhaustiveOptions opts) {
  const std::size_t cap = std::min(opts.cap, packed::max_length);
  if (n == 0) fail(ErrorKind::argument, "exhaustive_search: n must be positive");
  if (n > cap) {
    fail(ErrorKind::size, "exhaustive_search: n = " + std::to_string(n) +
                              " exceeds the exhaustive cap " + std::to_string(cap));
  }
  const auto roots = roots_of_unity(n);
  const std::uint64_t total = std::uint64_t{1} << (n - 1);  // a_0 = +1
  const std::uint64_t blocks = (total + block_size - 1) / block_size;
  std::vector<BlockResult> results(blocks);

  parallel_for(blocks, opts.threads, [&](std::size_t b) {
    const std::uint64_t first = b * block_size;
    const std::uint64_t last = std::min<std::uint64_t>(total, first + block_size);
    std::uint64_t code = first ^ (first >> 1);
    IncrementalSpectrum inc(unpack(code, n), roots);
    BlockResult& out = results[b];
    for (std::uint64_t g = first; g < last; ++g) {
      if (g != first) {
        const int bit = std::countr_zero(g);
        code ^= std::uint64_t{1} << bit;
        inc.flip(n - 1 - static_cast<std::size_t>(bit));
      }
      if (!packed::is_canonical(code, n, opts.symmetry)) continue;
      ++out.orbits;
      out.mass += packed::orbit_size(code, n, opts.symmetry);
      offer(out.best, inc.objective(obj), code);
    }
    check_drift(inc);
  });

  Candidate best;
  SearchOutcome outcome;
  outcome.objective = obj;
  outcome.exact = true;
  for (const auto& r : results) {
    outcome.orbits_visited += r.orbits;
    outcome.orbit_mass += r.mass;
    if (r.best.valid) offer(best, r.best.value, r.best.code);
  }
  outcome.evaluations = outcome.orbits_visited;
  outcome.best = packed::decode(best.code, n);
  outcome.report = analyze(outcome.best);
  return outcome;
}

namespace {

struct RestartResult {
  std::vector<std::int8_t> signs;
  double value = 0.0;
  std::uint64_t visited = 0;
  std::uint64_t evaluations = 0;
};

RestartResult descend(std::size_t n, Objective obj, std::uint64_t seed, unsigned max_iters,
                      const std::vector<cplx>& roots) {
  const auto start = random_signs(n, seed);
  IncrementalSpectrum inc({start.signs().begin(), start.signs().end()}, roots);
  RestartResult r;
  r.value = inc.objective(obj);
  r.visited = 1;
  r.evaluations = 1;
  std::uint64_t since_refresh = 0;
  for (unsigned it = 0; it < max_iters; ++it) {
    std::size_t best_k = n;
    double best_v = r.value;
    for (std::size_t k = 0; k < n; ++k) {
      const double v = inc.objective_if_flipped(k, obj);
      if (clearly_better(v, best_v)) {
        best_v = v;
        best_k = k;
      }
    }
    r.evaluations += n;
    if (best_k == n) break;
    inc.flip(best_k);
    ++r.visited;
    if (++since_refresh == block_size) {
      check_drift(inc);
      inc.refresh();
      since_refresh = 0;
    }
    r.value = inc.objective(obj);
  }
  r.signs = inc.signs();
  return r;
}

SearchOutcome finish(const SignVector& best, Objective obj, std::uint64_t visited,
                     std::uint64_t evaluations, std::uint64_t seed) {
  const auto canon = canonicalize(best);
  SearchOutcome out;
  out.best = canon.representative;
  out.report = analyze(canon.representative);
  out.objective = obj;
  out.orbits_visited = visited;
  out.evaluations = evaluations;
  out.seed = seed;
  return out;
}

}  // namespace

SearchOutcome local_search(std::size_t n, Objective obj, LocalSearchOptions opts) {
  if (n == 0) fail(ErrorKind::argument, "local_search: n must be positive");
  if (opts.restarts == 0) fail(ErrorKind::argument, "local_search: restarts must be positive");
  const auto roots = roots_of_unity(n);
  std::vector<RestartResult> runs(opts.restarts);
  parallel_for(opts.restarts, opts.threads, [&](std::size_t r) {
    runs[r] = descend(n, obj, derive_seed(opts.seed, r), opts.max_iters, roots);
  });
  std::size_t best = 0;
  std::uint64_t visited = 0, evaluations = 0;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    visited += runs[r].visited;
    evaluations += runs[r].evaluations;
    if (clearly_better(runs[r].value, runs[best].value)) best = r;
  }
  return finish(SignVector(runs[best].signs), obj, visited, evaluations, opts.seed);
}

SearchOutcome anneal(std::size_t n, Objective obj, std::uint64_t seed, AnnealSchedule schedule,
                     std::optional<SignVector> start) {
  if (n == 0) fail(ErrorKind::argument, "anneal: n must be positive");
  if (schedule.initial_temperature &&
      !(*schedule.initial_temperature > 0.0 && std::isfinite(*schedule.initial_temperature))) {
    fail(ErrorKind::argument, "anneal: initial temperature must be positive and finite");
  }
  if (!(schedule.cooling > 0.0 && schedule.cooling < 1.0)) {
    fail(ErrorKind::argument, "anneal: cooling factor must lie in (0, 1)");
  }
  if (start && start->size() != n) fail(ErrorKind::argument, "anneal: start vector has the wrong length");

  SplitMix64 gen(seed);
  const SignVector initial = start ? *start : random_signs(n, gen.next());
  const auto roots = roots_of_unity(n);
  IncrementalSpectrum inc({initial.signs().begin(), initial.signs().end()}, roots);

  double temperature;
  if (schedule.initial_temperature) {
    temperature = *schedule.initial_temperature;
  } else {
    const auto r = analyze(initial);
    temperature = obj == Objective::deviation ? r.deviation
                  : r.singular()              ? 1.0
                                              : r.condition_number - 1.0;
    if (!(temperature > 0.0)) temperature = 1.0;
  }

  double current = inc.objective(obj);
  double best_value = current;
  std::vector<std::int8_t> best_signs = inc.signs();
  std::uint64_t visited = 1, evaluations = 1, since_refresh = 0;

  for (unsigned epoch = 0; epoch < schedule.epochs; ++epoch) {
    for (std::size_t attempt = 0; attempt < n; ++attempt) {
      const std::size_t k = gen.below(n);
      const double proposed = inc.objective_if_flipped(k, obj);
      ++evaluations;
      bool accept;
      if (std::isinf(proposed)) {
        accept = std::isinf(current);
      } else if (std::isinf(current) || proposed <= current) {
        accept = true;
      } else {
        accept = gen.uniform() < std::exp(-(proposed - current) / temperature);
      }
      if (!accept) continue;
      inc.flip(k);
      ++visited;
      current = proposed;
      if (++since_refresh == block_size) {
        check_drift(inc);
        inc.refresh();
        current = inc.objective(obj);
        since_refresh = 0;
      }
      if (clearly_better(current, best_value)) {
        best_value = current;
        best_signs = inc.signs();
      }
    }
    temperature *= schedule.cooling;
  }
  return finish(SignVector(best_signs), obj, visited, evaluations, seed);
}

}  // namespace circhad
