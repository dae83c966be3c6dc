#include "circhad/circhad.h"

#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <new>
#include <sstream>
#include <string>

#include "circhad/conjecture.hpp"
#include "circhad/constructions.hpp"
#include "circhad/error.hpp"
#include "circhad/search.hpp"
#include "circhad/serialize.hpp"
#include "circhad/spectrum.hpp"

#ifndef CIRCHAD_VERSION
#define CIRCHAD_VERSION "0.0.0"
#endif

struct ch_sign_vector {
  circhad::TaggedSignVector value;
};

struct ch_search_outcome {
  circhad::SearchOutcome value;
};

namespace {

thread_local std::string last_error;

ch_status status_of(circhad::ErrorKind kind) {
  switch (kind) {
    case circhad::ErrorKind::argument: return CH_ERR_ARGUMENT;
    case circhad::ErrorKind::size: return CH_ERR_SIZE;
    case circhad::ErrorKind::parse: return CH_ERR_PARSE;
    case circhad::ErrorKind::io: return CH_ERR_IO;
    case circhad::ErrorKind::tolerance: return CH_ERR_TOLERANCE;
  }
  return CH_ERR_INTERNAL;
}

template <class F>
ch_status guarded(F&& f) {
  try {
    f();
    return CH_OK;
  } catch (const circhad::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CH_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CH_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return CH_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) circhad::fail(circhad::ErrorKind::argument, what);
}

char* dup_string(const std::string& s) {
  char* p = new char[s.size() + 1];
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

ch_sign_vector* wrap(circhad::SignVector v, std::optional<circhad::Provenance> prov = std::nullopt) {
  return new ch_sign_vector{{std::move(v), std::move(prov)}};
}

ch_report to_c(const circhad::SpectralReport& r) {
  return {r.n, r.sigma_min, r.sigma_max, r.condition_number, r.sqrt_n, r.deviation, r.deviation_normalized,
          r.singular() ? 1 : 0};
}

circhad::SpectralReport from_c(const ch_report& r) {
  circhad::SpectralReport out;
  out.n = r.n;
  out.sigma_min = r.sigma_min;
  out.sigma_max = r.sigma_max;
  out.condition_number = r.singular ? std::numeric_limits<double>::infinity() : r.kappa;
  out.sqrt_n = r.sqrt_n;
  out.deviation = r.deviation;
  out.deviation_normalized = r.deviation_normalized;
  return out;
}

circhad::Objective objective_of(ch_objective obj) {
  switch (obj) {
    case CH_OBJECTIVE_CONDITION: return circhad::Objective::condition;
    case CH_OBJECTIVE_DEVIATION: return circhad::Objective::deviation;
  }
  circhad::fail(circhad::ErrorKind::argument, "unknown objective");
}

std::string read_all(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) circhad::fail(circhad::ErrorKind::io, std::string("cannot open ") + path + " for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void copy_spectrum(const circhad::Spectrum& sp, double* re, double* im, size_t len) {
  require(len == sp.size(), "output buffers must have length n");
  for (size_t j = 0; j < len; ++j) {
    re[j] = sp.values[j].real();
    im[j] = sp.values[j].imag();
  }
}

}  // namespace

extern "C" {

const char* ch_version(void) { return CIRCHAD_VERSION; }

const char* ch_last_error(void) { return last_error.c_str(); }

void ch_string_free(char* s) { delete[] s; }

void ch_string_array_free(char** arr, size_t count) {
  if (!arr) return;
  for (size_t i = 0; i < count; ++i) delete[] arr[i];
  delete[] arr;
}

ch_status ch_sign_vector_create(const int8_t* signs, size_t n, ch_sign_vector** out) {
  return guarded([&] {
    require(out && (signs || n == 0), "null argument");
    *out = wrap(circhad::SignVector(std::vector<std::int8_t>(signs, signs + n)));
  });
}

ch_status ch_sign_vector_from_json(const char* text, ch_sign_vector** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new ch_sign_vector{circhad::parse_sign_vector_json(text)};
  });
}

ch_status ch_sign_vector_read(const char* path, ch_sign_vector** out) {
  return guarded([&] {
    require(path && out, "null argument");
    const auto text = read_all(path);
    try {
      *out = new ch_sign_vector{circhad::parse_sign_vector_json(text)};
    } catch (const circhad::Error& e) {
      circhad::fail(e.kind(), std::string(path) + ": " + e.what());
    }
  });
}

ch_status ch_sign_vector_to_json(const ch_sign_vector* v, int hex, char** out) {
  return guarded([&] {
    require(v && out, "null argument");
    *out = dup_string(circhad::sign_vector_json(v->value.signs, v->value.provenance, hex != 0));
  });
}

void ch_sign_vector_free(ch_sign_vector* v) { delete v; }

size_t ch_sign_vector_length(const ch_sign_vector* v) { return v ? v->value.signs.size() : 0; }

ch_status ch_sign_vector_signs(const ch_sign_vector* v, int8_t* buf, size_t len) {
  return guarded([&] {
    require(v && buf, "null argument");
    require(len == v->value.signs.size(), "buffer length must equal n");
    const auto s = v->value.signs.signs();
    std::copy(s.begin(), s.end(), buf);
  });
}

ch_status ch_periodic_autocorrelation(const ch_sign_vector* v, size_t lag, int64_t* out) {
  return guarded([&] {
    require(v && out, "null argument");
    *out = circhad::periodic_autocorrelation(v->value.signs, lag);
  });
}

ch_status ch_is_circulant_hadamard(const ch_sign_vector* v, int* out) {
  return guarded([&] {
    require(v && out, "null argument");
    *out = circhad::is_circulant_hadamard(v->value.signs) ? 1 : 0;
  });
}

ch_status ch_canonicalize(const ch_sign_vector* v, int decimation, ch_sign_vector** rep, uint64_t* orbit_size) {
  return guarded([&] {
    require(v && rep, "null argument");
    auto c = circhad::canonicalize(v->value.signs, {decimation != 0});
    if (orbit_size) *orbit_size = c.orbit_size;
    *rep = wrap(std::move(c.representative));
  });
}

ch_status ch_eigenvalues(const ch_sign_vector* v, double* re, double* im, size_t len) {
  return guarded([&] {
    require(v && re && im, "null argument");
    copy_spectrum(circhad::eigenvalues_fft(v->value.signs), re, im, len);
  });
}

ch_status ch_eigenvalues_naive(const ch_sign_vector* v, double* re, double* im, size_t len) {
  return guarded([&] {
    require(v && re && im, "null argument");
    copy_spectrum(circhad::eigenvalues_naive(v->value.signs), re, im, len);
  });
}

ch_status ch_analyze(const ch_sign_vector* v, ch_report* out) {
  return guarded([&] {
    require(v && out, "null argument");
    *out = to_c(circhad::analyze(v->value.signs));
  });
}

ch_status ch_report_to_json(const ch_report* r, char** out) {
  return guarded([&] {
    require(r && out, "null argument");
    *out = dup_string(circhad::report_json(from_c(*r)) + "\n");
  });
}

ch_status ch_apply_circulant(const ch_sign_vector* v, const double* x, double* y, size_t len) {
  return guarded([&] {
    require(v && x && y, "null argument");
    const auto r = circhad::apply_circulant(v->value.signs, std::span<const double>(x, len));
    std::copy(r.begin(), r.end(), y);
  });
}

ch_status ch_moduli_histogram_csv(const ch_sign_vector* v, size_t bins, char** out) {
  return guarded([&] {
    require(v && out, "null argument");
    const auto mod = circhad::eigenvalues_fft(v->value.signs).moduli();
    *out = dup_string(circhad::histogram_csv(circhad::histogram(mod, bins)));
  });
}

ch_status ch_circle_profile_csv(const ch_sign_vector* v, int full_circle, double t_lo, double t_hi, size_t samples,
                                char** out) {
  return guarded([&] {
    require(v && out, "null argument");
    std::optional<circhad::Window> window;
    if (!full_circle) window = circhad::Window{t_lo, t_hi};
    *out = dup_string(circhad::profile_csv(circhad::circle_profile(v->value.signs, samples, window)));
  });
}

ch_status ch_rudin_shapiro(unsigned k, ch_sign_vector** out) {
  return guarded([&] {
    require(out, "null argument");
    *out = wrap(circhad::rudin_shapiro(k), circhad::Provenance{"rudin-shapiro", {{"k", k}}});
  });
}

ch_status ch_random_signs(size_t n, uint64_t seed, ch_sign_vector** out) {
  return guarded([&] {
    require(out, "null argument");
    *out = wrap(circhad::random_signs(n, seed), circhad::Provenance{"random", {{"n", n}, {"seed", seed}}});
  });
}

ch_status ch_legendre_modified(uint64_t q, uint64_t seed, int64_t flips, ch_sign_vector** out) {
  return guarded([&] {
    require(out, "null argument");
    circhad::LegendreParams p{q, seed, {}};
    if (flips >= 0) p.flips = static_cast<std::uint64_t>(flips);
    auto v = circhad::legendre_modified(p);
    const std::uint64_t used = p.flips.value_or(circhad::default_flips(q));
    *out = wrap(std::move(v), circhad::Provenance{"legendre", {{"q", q}, {"seed", seed}, {"flips", used}}});
  });
}

ch_status ch_cef_seed12(ch_sign_vector** out) {
  return guarded([&] {
    require(out, "null argument");
    *out = wrap(circhad::cef_seed12(), circhad::Provenance{"cef", {{"generations", 0}}});
  });
}

ch_status ch_cef_iterate(const ch_sign_vector* seed, unsigned generations, ch_sign_vector** out, double* history,
                         size_t history_len) {
  return guarded([&] {
    require(seed && out, "null argument");
    require(!history || history_len >= generations + 1u, "history buffer too short");
    auto st = circhad::cef_start(seed->value.signs);
    for (unsigned g = 0; g < generations; ++g) st = circhad::cef_iterate(st);
    if (history) std::copy(st.min_modulus_history.begin(), st.min_modulus_history.end(), history);
    *out = wrap(std::move(st.coefficients), circhad::Provenance{"cef", {{"generations", generations}}});
  });
}

ch_status ch_exhaustive_search(size_t n, ch_objective obj, size_t cap, unsigned threads, ch_search_outcome** out) {
  return guarded([&] {
    require(out, "null argument");
    circhad::ExhaustiveOptions opts;
    opts.cap = cap;
    opts.threads = threads;
    *out = new ch_search_outcome{circhad::exhaustive_search(n, objective_of(obj), opts)};
  });
}

ch_status ch_local_search(size_t n, ch_objective obj, uint64_t seed, unsigned restarts, unsigned max_iters,
                          unsigned threads, ch_search_outcome** out) {
  return guarded([&] {
    require(out, "null argument");
    circhad::LocalSearchOptions opts{seed, restarts, max_iters, threads};
    *out = new ch_search_outcome{circhad::local_search(n, objective_of(obj), opts)};
  });
}

ch_status ch_anneal(size_t n, ch_objective obj, uint64_t seed, double t0, double cooling, unsigned epochs,
                    ch_search_outcome** out) {
  return guarded([&] {
    require(out, "null argument");
    circhad::AnnealSchedule sched;
    if (t0 > 0.0) sched.initial_temperature = t0;
    sched.cooling = cooling;
    sched.epochs = epochs;
    *out = new ch_search_outcome{circhad::anneal(n, objective_of(obj), seed, sched)};
  });
}

ch_status ch_search_outcome_to_json(const ch_search_outcome* o, char** out) {
  return guarded([&] {
    require(o && out, "null argument");
    *out = dup_string(circhad::search_outcome_json(o->value));
  });
}

ch_status ch_search_outcome_best(const ch_search_outcome* o, ch_sign_vector** out) {
  return guarded([&] {
    require(o && out, "null argument");
    *out = wrap(o->value.best);
  });
}

ch_status ch_search_outcome_report(const ch_search_outcome* o, ch_report* out) {
  return guarded([&] {
    require(o && out, "null argument");
    *out = to_c(o->value.report);
  });
}

void ch_search_outcome_free(ch_search_outcome* o) { delete o; }

ch_status ch_scan_deviation(size_t n_lo, size_t n_hi, size_t exact_cap, uint64_t seed, unsigned restarts,
                            unsigned threads, char** csv, double* envelope) {
  return guarded([&] {
    require(csv, "null argument");
    circhad::ScanOptions opts;
    opts.exact_cap = exact_cap;
    opts.seed = seed;
    opts.restarts = restarts;
    opts.threads = threads;
    const auto records = circhad::scan_deviation(n_lo, n_hi, opts);
    if (envelope) *envelope = circhad::epsilon_envelope(records).value_or(std::nan(""));
    *csv = dup_string(circhad::scan_csv(records));
  });
}

ch_status ch_ryser_verify(size_t n_hi, size_t cap, unsigned threads, char** csv) {
  return guarded([&] {
    require(csv, "null argument");
    *csv = dup_string(circhad::ryser_csv(circhad::ryser_verify(n_hi, cap, threads)));
  });
}

ch_status ch_legendre_statistics(uint64_t q, unsigned seeds, unsigned threads, size_t hist_bins, char** json,
                                 char*** hist_csvs) {
  return guarded([&] {
    require(json, "null argument");
    circhad::StatsOptions opts{threads, hist_csvs ? hist_bins : 0};
    const auto stats = circhad::legendre_statistics(q, seeds, opts);
    std::string text = circhad::stats_json(stats);
    char** arr = nullptr;
    if (hist_csvs && hist_bins > 0) {
      arr = new char*[stats.histograms.size()]();
      for (size_t s = 0; s < stats.histograms.size(); ++s) arr[s] = dup_string(circhad::histogram_csv(stats.histograms[s]));
      *hist_csvs = arr;
    } else if (hist_csvs) {
      *hist_csvs = nullptr;
    }
    *json = dup_string(text);
  });
}

ch_status ch_write_file(const char* path, const char* contents) {
  return guarded([&] {
    require(path && contents, "null argument");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) circhad::fail(circhad::ErrorKind::io, std::string("cannot open ") + path + " for writing");
    out << contents;
    out.close();
    if (!out) circhad::fail(circhad::ErrorKind::io, std::string("failed writing ") + path);
  });
}

ch_status ch_read_file(const char* path, char** contents) {
  return guarded([&] {
    require(path && contents, "null argument");
    *contents = dup_string(read_all(path));
  });
}

}  // extern "C"
