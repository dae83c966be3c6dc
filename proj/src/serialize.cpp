#include "circhad/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include <json.hpp>

#include "circhad/error.hpp"

namespace circhad {

using json = nlohmann::ordered_json;

std::string format_double(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::string quoted(std::string_view s) { return json(std::string(s)).dump(); }

// Minimal ordered JSON object writer; nlohmann cannot pin float formatting.
class ObjectWriter {
public:
  ObjectWriter& raw(std::string_view key, std::string_view value) {
    out_ += first_ ? "{" : ",";
    first_ = false;
    out_ += quoted(key);
    out_ += ':';
    out_ += value;
    return *this;
  }
  ObjectWriter& num(std::string_view key, double v) { return raw(key, format_double(v)); }
  ObjectWriter& num(std::string_view key, std::uint64_t v) { return raw(key, std::to_string(v)); }
  ObjectWriter& str(std::string_view key, std::string_view v) { return raw(key, quoted(v)); }
  ObjectWriter& boolean(std::string_view key, bool v) { return raw(key, v ? "true" : "false"); }
  std::string done() { return first_ ? "{}" : out_ + "}"; }

private:
  std::string out_;
  bool first_ = true;
};

std::string provenance_json(const Provenance& p) {
  ObjectWriter w;
  w.str("method", p.method);
  for (const auto& [k, v] : p.params) w.num(k, v);
  return w.done();
}

std::string sign_vector_object(const SignVector& s, const std::optional<Provenance>& prov, bool hex) {
  ObjectWriter w;
  w.num("n", std::uint64_t{s.size()});
  if (hex) {
    w.str("bits", to_hex(s));
  } else {
    std::string arr = "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) arr += ',';
      arr += s[i] > 0 ? "1" : "-1";
    }
    arr += ']';
    w.raw("signs", arr);
  }
  if (prov) w.raw("provenance", provenance_json(*prov));
  return w.done();
}

[[noreturn]] void parse_fail(const std::string& what) { fail(ErrorKind::parse, what); }

json parse_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

SignVector sign_vector_from(const json& j) {
  if (!j.is_object()) parse_fail("expected a JSON object for a sign vector");
  if (!j.contains("n") || !j["n"].is_number_unsigned()) parse_fail("field \"n\" must be a positive integer");
  const auto n = j["n"].get<std::uint64_t>();
  if (n == 0) parse_fail("field \"n\" must be a positive integer");
  if (j.contains("signs")) {
    const auto& arr = j["signs"];
    if (!arr.is_array()) parse_fail("field \"signs\" must be an array");
    if (arr.size() != n) {
      parse_fail("field \"signs\" has " + std::to_string(arr.size()) + " entries but n = " + std::to_string(n));
    }
    std::vector<std::int8_t> v(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!arr[i].is_number_integer() || (arr[i] != 1 && arr[i] != -1)) {
        parse_fail("signs[" + std::to_string(i) + "] must be -1 or 1");
      }
      v[i] = static_cast<std::int8_t>(arr[i].get<int>());
    }
    return SignVector(std::move(v));
  }
  if (j.contains("bits")) {
    if (!j["bits"].is_string()) parse_fail("field \"bits\" must be a hex string");
    return from_hex(j["bits"].get<std::string>(), n);
  }
  parse_fail("sign vector needs a \"signs\" array or a \"bits\" hex string");
}

double number_field(const json& j, const char* key) {
  if (!j.contains(key)) parse_fail(std::string("missing field \"") + key + "\"");
  const auto& v = j[key];
  if (v.is_string() && v.get<std::string>() == "inf") return std::numeric_limits<double>::infinity();
  if (!v.is_number()) parse_fail(std::string("field \"") + key + "\" must be a number");
  return v.get<double>();
}

}  // namespace

std::string to_hex(const SignVector& s) {
  const std::size_t n = s.size();
  const std::size_t digits = (n + 3) / 4;
  const std::size_t pad = digits * 4 - n;
  std::string out(digits, '0');
  for (std::size_t d = 0; d < digits; ++d) {
    unsigned nibble = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t pos = d * 4 + b;  // position in the padded bitstring
      const bool bit = pos >= pad && s[pos - pad] > 0;
      nibble = (nibble << 1) | unsigned(bit);
    }
    out[d] = "0123456789abcdef"[nibble];
  }
  return out;
}

SignVector from_hex(std::string_view hex, std::size_t n) {
  const std::size_t digits = (n + 3) / 4;
  if (hex.size() != digits) {
    parse_fail("field \"bits\" needs " + std::to_string(digits) + " hex digits for n = " + std::to_string(n) +
               ", got " + std::to_string(hex.size()));
  }
  const std::size_t pad = digits * 4 - n;
  std::vector<std::int8_t> v(n);
  for (std::size_t d = 0; d < digits; ++d) {
    const char c = hex[d];
    unsigned nibble;
    if (c >= '0' && c <= '9') nibble = unsigned(c - '0');
    else if (c >= 'a' && c <= 'f') nibble = unsigned(c - 'a' + 10);
    else if (c >= 'A' && c <= 'F') nibble = unsigned(c - 'A' + 10);
    else parse_fail("invalid hex digit '" + std::string(1, c) + "' at offset " + std::to_string(d));
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t pos = d * 4 + b;
      const bool bit = (nibble >> (3 - b)) & 1;
      if (pos < pad) {
        if (bit) parse_fail("padding bits of field \"bits\" must be zero");
        continue;
      }
      v[pos - pad] = bit ? std::int8_t{1} : std::int8_t{-1};
    }
  }
  return SignVector(std::move(v));
}

std::string sign_vector_json(const SignVector& s, const std::optional<Provenance>& prov, bool hex) {
  return sign_vector_object(s, prov, hex) + "\n";
}

TaggedSignVector parse_sign_vector_json(std::string_view text) {
  const json j = parse_text(text);
  TaggedSignVector out{sign_vector_from(j), std::nullopt};
  if (j.contains("provenance")) {
    const auto& p = j["provenance"];
    if (!p.is_object() || !p.contains("method") || !p["method"].is_string()) {
      parse_fail("field \"provenance\" must be an object with a \"method\" string");
    }
    Provenance prov{p["method"].get<std::string>(), {}};
    for (const auto& [key, value] : p.items()) {
      if (key == "method") continue;
      if (!value.is_number_unsigned()) {
        parse_fail("provenance field \"" + key + "\" must be a non-negative integer");
      }
      prov.params.emplace_back(key, value.get<std::uint64_t>());
    }
    out.provenance = std::move(prov);
  }
  return out;
}

std::string report_json(const SpectralReport& r) {
  ObjectWriter w;
  w.num("n", std::uint64_t{r.n})
      .num("sigma_min", r.sigma_min)
      .num("sigma_max", r.sigma_max);
  if (r.singular()) w.str("kappa", "inf");
  else w.num("kappa", r.condition_number);
  w.num("sqrt_n", r.sqrt_n).num("deviation", r.deviation).num("deviation_normalized", r.deviation_normalized);
  return w.done();
}

SpectralReport parse_report_json(std::string_view text) {
  const json j = parse_text(text);
  if (!j.is_object()) parse_fail("expected a JSON object for a spectral report");
  SpectralReport r;
  if (!j.contains("n") || !j["n"].is_number_unsigned()) parse_fail("field \"n\" must be a positive integer");
  r.n = j["n"].get<std::size_t>();
  r.sigma_min = number_field(j, "sigma_min");
  r.sigma_max = number_field(j, "sigma_max");
  r.condition_number = number_field(j, "kappa");
  r.sqrt_n = number_field(j, "sqrt_n");
  r.deviation = number_field(j, "deviation");
  r.deviation_normalized = number_field(j, "deviation_normalized");
  return r;
}

std::string search_outcome_json(const SearchOutcome& o) {
  ObjectWriter w;
  w.num("n", std::uint64_t{o.best.size()})
      .str("objective", to_string(o.objective))
      .boolean("exact", o.exact)
      .raw("best", sign_vector_object(o.best, std::nullopt, false))
      .raw("report", report_json(o.report))
      .num("orbits_visited", o.orbits_visited)
      .num("evaluations", o.evaluations);
  if (o.seed) w.num("seed", *o.seed);
  else w.raw("seed", "null");
  return w.done() + "\n";
}

std::string scan_csv(std::span<const ScanRecord> records) {
  std::string out = "n,min_deviation,normalized,exact,method\n";
  for (const auto& r : records) {
    out += std::to_string(r.n) + "," + format_double(r.min_deviation) + "," + format_double(r.normalized) + "," +
           (r.exact ? "true" : "false") + "," + r.method + "\n";
  }
  return out;
}

std::string ryser_csv(std::span<const std::pair<std::size_t, bool>> rows) {
  std::string out = "n,hadamard_exists\n";
  for (const auto& [n, exists] : rows) out += std::to_string(n) + "," + (exists ? "true" : "false") + "\n";
  return out;
}

namespace {

std::string quantiles_json(const Quantiles& q) {
  auto v = [](double x) { return std::isinf(x) ? quoted("inf") : format_double(x); };
  return "[" + v(q.min) + "," + v(q.q25) + "," + v(q.median) + "," + v(q.q75) + "," + v(q.max) + "]";
}

}  // namespace

std::string stats_json(const SeedStats& s) {
  ObjectWriter w;
  w.num("q", s.q)
      .num("seeds", std::uint64_t{s.seeds})
      .num("flips", s.flips)
      .raw("kappa_quantiles", quantiles_json(s.kappa))
      .raw("deviation_quantiles", quantiles_json(s.deviation))
      .num("normalized_median", s.normalized_median)
      .num("moduli_stddev_median", s.moduli_stddev_median);
  return w.done() + "\n";
}

std::string histogram_csv(std::span<const HistogramBin> bins) {
  std::string out = "bin_lo,bin_hi,count\n";
  for (const auto& b : bins) out += format_double(b.lo) + "," + format_double(b.hi) + "," + std::to_string(b.count) + "\n";
  return out;
}

std::string profile_csv(std::span<const ProfilePoint> points) {
  std::string out = "t,re,im,abs\n";
  for (const auto& p : points) {
    out += format_double(p.t) + "," + format_double(p.value.real()) + "," + format_double(p.value.imag()) + "," +
           format_double(std::abs(p.value)) + "\n";
  }
  return out;
}

}  // namespace circhad
