#include "circhad/sign_vector.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "circhad/error.hpp"

namespace circhad {

namespace {

std::vector<std::int8_t> checked(std::vector<std::int8_t> v) {
  if (v.empty()) fail(ErrorKind::argument, "sign vector must have length n >= 1");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 1 && v[i] != -1) {
      fail(ErrorKind::argument, "entry " + std::to_string(i) + " is " +
                                    std::to_string(int(v[i])) + ", expected -1 or +1");
    }
  }
  return v;
}

std::vector<std::int8_t> from_ints(std::initializer_list<int> xs) {
  std::vector<std::int8_t> v;
  v.reserve(xs.size());
  for (int x : xs) {
    if (x != 1 && x != -1) fail(ErrorKind::argument, "entries must be -1 or +1");
    v.push_back(static_cast<std::int8_t>(x));
  }
  return v;
}

}  // namespace

SignVector::SignVector(std::vector<std::int8_t> signs) : signs_(checked(std::move(signs))) {}

SignVector::SignVector(std::initializer_list<int> signs) : SignVector(from_ints(signs)) {}

std::int64_t SignVector::sum() const noexcept {
  return std::accumulate(signs_.begin(), signs_.end(), std::int64_t{0});
}

SignVector SignVector::negated() const {
  std::vector<std::int8_t> v(signs_);
  for (auto& x : v) x = static_cast<std::int8_t>(-x);
  return SignVector(std::move(v));
}

SignVector SignVector::reversed() const {
  return SignVector(std::vector<std::int8_t>(signs_.rbegin(), signs_.rend()));
}

SignVector SignVector::rotated(std::size_t shift) const {
  std::vector<std::int8_t> v(signs_);
  std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(shift % v.size()), v.end());
  return SignVector(std::move(v));
}

SignVector SignVector::decimated(std::size_t u) const {
  const std::size_t n = size();
  if (std::gcd(u % n, n) != 1) fail(ErrorKind::argument, "decimation factor must be a unit mod n");
  std::vector<std::int8_t> v(n);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = signs_[idx];
    idx = (idx + u) % n;
  }
  return SignVector(std::move(v));
}

SignVector SignVector::flipped(std::size_t i) const {
  if (i >= size()) fail(ErrorKind::argument, "flip index out of range");
  std::vector<std::int8_t> v(signs_);
  v[i] = static_cast<std::int8_t>(-v[i]);
  return SignVector(std::move(v));
}

bool lex_less(const SignVector& a, const SignVector& b) noexcept {
  // +1 before -1 is the reverse of the natural integer order.
  return std::lexicographical_compare(a.signs().begin(), a.signs().end(), b.signs().begin(),
                                      b.signs().end(), [](auto x, auto y) { return x > y; });
}

std::int64_t periodic_autocorrelation(const SignVector& s, std::size_t lag) {
  const std::size_t n = s.size();
  if (lag >= n) {
    fail(ErrorKind::argument,
         "lag " + std::to_string(lag) + " out of range 0.." + std::to_string(n - 1));
  }
  std::int64_t acc = 0;
  for (std::size_t i = 0, j = lag; i < n; ++i) {
    acc += s[i] * s[j];
    if (++j == n) j = 0;
  }
  return acc;
}

bool is_circulant_hadamard(const SignVector& s) {
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (periodic_autocorrelation(s, k) != 0) return false;
  }
  return true;
}

std::vector<std::size_t> nontrivial_units(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t u = 2; u < n; ++u) {
    if (std::gcd(u, n) == 1) out.push_back(u);
  }
  return out;
}

std::vector<SignVector> orbit(const SignVector& s, SymmetryOptions opts) {
  std::vector<SignVector> bases{s, s.reversed()};
  if (opts.decimation) {
    for (std::size_t u : nontrivial_units(s.size())) {
      bases.push_back(s.decimated(u));
      bases.push_back(s.reversed().decimated(u));
    }
  }
  std::vector<SignVector> images;
  images.reserve(bases.size() * s.size() * 2);
  for (const auto& b : bases) {
    for (std::size_t r = 0; r < s.size(); ++r) {
      auto img = b.rotated(r);
      images.push_back(img.negated());
      images.push_back(std::move(img));
    }
  }
  std::sort(images.begin(), images.end(), lex_less);
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return images;
}

CanonicalForm canonicalize(const SignVector& s, SymmetryOptions opts) {
  auto images = orbit(s, opts);
  return CanonicalForm{images.front(), images.size()};
}

namespace packed {

namespace {

std::uint64_t mask_of(std::size_t n) { return (std::uint64_t{1} << n) - 1; }

std::uint64_t rotl1(std::uint64_t x, std::size_t n) {
  return ((x << 1) | (x >> (n - 1))) & mask_of(n);
}

std::uint64_t reverse_bits(std::uint64_t x, std::size_t n) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    r = (r << 1) | (x & 1);
    x >>= 1;
  }
  return r;
}

// Entry i of the result is entry (u*i) mod n of x.
std::uint64_t decimate(std::uint64_t x, std::size_t n, std::size_t u) {
  std::uint64_t r = 0;
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t bit = (x >> (n - 1 - idx)) & 1;
    r |= bit << (n - 1 - i);
    idx = (idx + u) % n;
  }
  return r;
}

void check_length(std::size_t n) {
  if (n == 0 || n > max_length) {
    fail(ErrorKind::size, "packed form supports 1 <= n <= " + std::to_string(max_length));
  }
}

std::vector<std::uint64_t> bases_of(std::uint64_t code, std::size_t n, SymmetryOptions opts) {
  const std::uint64_t rev = reverse_bits(code, n);
  std::vector<std::uint64_t> bases{code, rev};
  if (opts.decimation) {
    for (std::size_t u : nontrivial_units(n)) {
      bases.push_back(decimate(code, n, u));
      bases.push_back(decimate(rev, n, u));
    }
  }
  return bases;
}

// Calls visit(image) for every group image; stops early when visit returns false.
template <class Visit>
void for_each_image(std::uint64_t code, std::size_t n, SymmetryOptions opts, Visit&& visit) {
  const std::uint64_t mask = mask_of(n);
  for (std::uint64_t b : bases_of(code, n, opts)) {
    std::uint64_t x = b;
    for (std::size_t r = 0; r < n; ++r) {
      if (!visit(x) || !visit(x ^ mask)) return;
      x = rotl1(x, n);
    }
  }
}

}  // namespace

std::uint64_t encode(const SignVector& s) {
  const std::size_t n = s.size();
  check_length(n);
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i] < 0) code |= std::uint64_t{1} << (n - 1 - i);
  }
  return code;
}

SignVector decode(std::uint64_t code, std::size_t n) {
  check_length(n);
  std::vector<std::int8_t> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = ((code >> (n - 1 - i)) & 1) ? std::int8_t{-1} : std::int8_t{1};
  }
  return SignVector(std::move(v));
}

bool is_canonical(std::uint64_t code, std::size_t n, SymmetryOptions opts) {
  bool minimal = true;
  for_each_image(code, n, opts, [&](std::uint64_t img) {
    if (img < code) minimal = false;
    return minimal;
  });
  return minimal;
}

std::uint64_t canonical(std::uint64_t code, std::size_t n, SymmetryOptions opts) {
  std::uint64_t best = code;
  for_each_image(code, n, opts, [&](std::uint64_t img) {
    best = std::min(best, img);
    return true;
  });
  return best;
}

std::uint64_t orbit_size(std::uint64_t code, std::size_t n, SymmetryOptions opts) {
  std::vector<std::uint64_t> images;
  for_each_image(code, n, opts, [&](std::uint64_t img) {
    images.push_back(img);
    return true;
  });
  std::sort(images.begin(), images.end());
  return static_cast<std::uint64_t>(std::unique(images.begin(), images.end()) - images.begin());
}

}  // namespace packed

}  // namespace circhad
