#ifndef CIRCHAD_NUMBER_THEORY_HPP
#define CIRCHAD_NUMBER_THEORY_HPP

#include <cstdint>

namespace circhad {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Legendre symbol (a | p) for an odd prime p, via Euler's criterion.
int legendre_symbol(std::uint64_t a, std::uint64_t p);

}  // namespace circhad

#endif
