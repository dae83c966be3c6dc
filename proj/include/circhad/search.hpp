#ifndef CIRCHAD_SEARCH_HPP
#define CIRCHAD_SEARCH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "circhad/sign_vector.hpp"
#include "circhad/spectrum.hpp"

namespace circhad {

enum class Objective { condition, deviation };

std::string_view to_string(Objective obj) noexcept;
std::optional<Objective> parse_objective(std::string_view name) noexcept;

/// Value to minimize. A singular circulant scores +infinity under the
/// condition objective, which is worse than every finite value.
double objective_value(const SpectralReport& r, Objective obj) noexcept;

struct SearchOutcome {
  SignVector best{1};  // canonical representative
  SpectralReport report;
  Objective objective = Objective::condition;
  bool exact = false;
  std::uint64_t orbits_visited = 0;
  std::uint64_t evaluations = 0;
  std::optional<std::uint64_t> seed;
  /// Sum of orbit sizes over visited orbits; 2^n for a complete enumeration.
  std::uint64_t orbit_mass = 0;
};

inline constexpr std::size_t default_exhaustive_cap = 24;

struct ExhaustiveOptions {
  std::size_t cap = default_exhaustive_cap;
  unsigned threads = 1;
  SymmetryOptions symmetry;
};

/// Gray-code enumeration of the 2^{n-1} vectors with a_0 = +1, evaluating
/// one representative per orbit. Spectra are updated by rank-one corrections
/// and recomputed from scratch at every 4096-step block boundary. The result
/// does not depend on the thread count.
SearchOutcome exhaustive_search(std::size_t n, Objective obj, ExhaustiveOptions opts = {});

struct LocalSearchOptions {
  std::uint64_t seed = 0;
  unsigned restarts = 16;
  unsigned max_iters = 1000;
  unsigned threads = 1;
};

/// Steepest descent over single sign flips from seeded random starts.
SearchOutcome local_search(std::size_t n, Objective obj, LocalSearchOptions opts);

struct AnnealSchedule {
  /// Defaults to the start's deviation (deviation objective) or kappa - 1
  /// (condition objective; 1 when the start is singular).
  std::optional<double> initial_temperature;
  double cooling = 0.98;
  unsigned epochs = 500;
};

/// Metropolis annealing over single flips, n attempts per epoch. Returns the
/// best vector visited; `start` replaces the seeded random start.
SearchOutcome anneal(std::size_t n, Objective obj, std::uint64_t seed, AnnealSchedule schedule = {},
                     std::optional<SignVector> start = std::nullopt);

}  // namespace circhad

#endif
