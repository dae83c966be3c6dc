#ifndef CIRCHAD_CONSTRUCTIONS_HPP
#define CIRCHAD_CONSTRUCTIONS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "circhad/sign_vector.hpp"

namespace circhad {

inline constexpr unsigned max_rudin_shapiro_order = 24;

/// Length-2^k Rudin-Shapiro sequence: a_m = (-1)^(number of "11" blocks in
/// the binary expansion of m).
SignVector rudin_shapiro(unsigned k);

/// Independent fair signs from SplitMix64(seed), one draw per entry.
SignVector random_signs(std::size_t n, std::uint64_t seed);

struct LegendreParams {
  std::uint64_t q = 0;
  std::uint64_t seed = 0;
  /// Number of -1 -> +1 flips; defaults to ceil((sqrt(q) - 1) / 2).
  std::optional<std::uint64_t> flips;
};

/// Smallest f with 2f + 1 >= sqrt(q), i.e. ceil((sqrt(q) - 1) / 2).
std::uint64_t default_flips(std::uint64_t q);

/// a_0 = +1, a_j = (j | q) for j >= 1, then `flips` distinct non-residue
/// positions drawn uniformly without replacement are set to +1. The zero
/// frequency ends up at p(1) = 1 + 2 * flips.
SignVector legendre_modified(const LegendreParams& params);

// Carroll-Eustice-Figiel squaring: Q(z) = P(z) P(z^{d+1}).

inline constexpr std::size_t default_cef_cap = std::size_t{1} << 26;
/// Circle grid used to track minimum modulus: this many points per coefficient.
inline constexpr std::size_t cef_grid_factor = 64;

struct CefState {
  SignVector coefficients;
  std::size_t generation = 0;
  std::vector<double> min_modulus_history;

  std::size_t degree() const noexcept { return coefficients.size() - 1; }
};

/// min |P| over 64 * (deg P + 1) equispaced points on the unit circle.
double cef_grid_min(const SignVector& p);

CefState cef_start(const SignVector& p);
CefState cef_iterate(const CefState& state, std::size_t cap = default_cef_cap);

/// Coefficients of P(z) P(z^{d+1}); no grid evaluation.
SignVector cef_product(const SignVector& p, std::size_t cap = default_cef_cap);

/// Grid used by the degree-12 seed search.
inline constexpr std::size_t seed12_grid = 4096;

/// The stored degree-12 seed: the length-13 vector with a_12 = +1 maximizing
/// min |P| over the 4096-point circle grid (ties to the lex-smallest vector).
SignVector cef_seed12();

/// Re-runs the exhaustive seed search over all 2^12 candidates.
SignVector search_cef_seed12(unsigned threads = 1);

}  // namespace circhad

#endif
