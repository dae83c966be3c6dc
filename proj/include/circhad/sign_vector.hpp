#ifndef CIRCHAD_SIGN_VECTOR_HPP
#define CIRCHAD_SIGN_VECTOR_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace circhad {

/// A vector with entries in {-1, +1}. It is at the same time the first column
/// of a circulant matrix and the coefficient list a_0..a_{n-1} of a
/// Littlewood polynomial. Immutable once built.
class SignVector {
public:
  explicit SignVector(std::vector<std::int8_t> signs);
  SignVector(std::initializer_list<int> signs);

  std::size_t size() const noexcept { return signs_.size(); }
  int operator[](std::size_t i) const noexcept { return signs_[i]; }
  std::span<const std::int8_t> signs() const noexcept { return signs_; }

  /// Sum of the entries, i.e. p(1).
  std::int64_t sum() const noexcept;

  SignVector negated() const;
  SignVector reversed() const;
  /// Entry i of the result is entry (i + shift) mod n of this vector.
  SignVector rotated(std::size_t shift) const;
  /// Entry i of the result is entry (u * i) mod n; u must be a unit mod n.
  SignVector decimated(std::size_t u) const;
  /// Flip the entry at index i.
  SignVector flipped(std::size_t i) const;

  friend bool operator==(const SignVector&, const SignVector&) = default;

private:
  std::vector<std::int8_t> signs_;
};

/// Lexicographic order with +1 sorting before -1.
bool lex_less(const SignVector& a, const SignVector& b) noexcept;

struct CanonicalForm {
  SignVector representative;
  std::uint64_t orbit_size;
};

struct SymmetryOptions {
  /// Also identify s with its decimations i -> u*i, gcd(u, n) = 1.
  bool decimation = false;
};

std::int64_t periodic_autocorrelation(const SignVector& s, std::size_t lag);

bool is_circulant_hadamard(const SignVector& s);

/// Minimal member of the orbit under negation x rotation x reversal
/// (optionally x decimation), together with the orbit's cardinality.
CanonicalForm canonicalize(const SignVector& s, SymmetryOptions opts = {});

/// Every distinct image of s under the symmetry group, sorted by lex_less.
std::vector<SignVector> orbit(const SignVector& s, SymmetryOptions opts = {});

// Packed form for n <= 63: bit (n-1-i) is set iff entry i is -1, so integer
// order on codes coincides with lex_less and entry 0 is the most significant
// bit. The exhaustive enumerator works on this representation.
namespace packed {

inline constexpr std::size_t max_length = 63;

std::uint64_t encode(const SignVector& s);
SignVector decode(std::uint64_t code, std::size_t n);

/// True iff no image of code under the group is numerically smaller.
bool is_canonical(std::uint64_t code, std::size_t n, SymmetryOptions opts = {});
std::uint64_t canonical(std::uint64_t code, std::size_t n, SymmetryOptions opts = {});
std::uint64_t orbit_size(std::uint64_t code, std::size_t n, SymmetryOptions opts = {});

}  // namespace packed

/// Units of Z_n in increasing order, excluding 1.
std::vector<std::size_t> nontrivial_units(std::size_t n);

}  // namespace circhad

#endif
