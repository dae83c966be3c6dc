#ifndef CIRCHAD_SERIALIZE_HPP
#define CIRCHAD_SERIALIZE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "circhad/conjecture.hpp"
#include "circhad/search.hpp"
#include "circhad/sign_vector.hpp"
#include "circhad/spectrum.hpp"

// Text formats. Floats are written with 17 significant digits, so every
// emitted value parses back to the same double and re-serializes to the same
// bytes. An infinite condition number is the JSON string "inf".

namespace circhad {

/// Method tag plus integer parameters, e.g. {"method":"legendre","q":3571,"seed":7,"flips":30}.
struct Provenance {
  std::string method;
  std::vector<std::pair<std::string, std::uint64_t>> params;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct TaggedSignVector {
  SignVector signs;
  std::optional<Provenance> provenance;
};

std::string format_double(double x);

/// Hex form: bit 1 = +1, entry 0 is the most significant bit, left-padded
/// with zero bits to a whole number of hex digits.
std::string to_hex(const SignVector& s);
SignVector from_hex(std::string_view hex, std::size_t n);

std::string sign_vector_json(const SignVector& s, const std::optional<Provenance>& prov = std::nullopt,
                             bool hex = false);
/// Accepts both {"n", "signs"} and {"n", "bits"}; throws a parse error that
/// names the byte offset or offending field.
TaggedSignVector parse_sign_vector_json(std::string_view text);

std::string report_json(const SpectralReport& r);
SpectralReport parse_report_json(std::string_view text);

std::string search_outcome_json(const SearchOutcome& o);

std::string scan_csv(std::span<const ScanRecord> records);
std::string ryser_csv(std::span<const std::pair<std::size_t, bool>> rows);
std::string stats_json(const SeedStats& s);
std::string histogram_csv(std::span<const HistogramBin> bins);
std::string profile_csv(std::span<const ProfilePoint> points);

}  // namespace circhad

#endif
