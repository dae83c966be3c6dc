// circhad command-line tool. Talks to the library only through circhad.h.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "circhad/circhad.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_io = 2;
constexpr int exit_internal = 3;

struct Failure {
  int code;
  std::string message;
};

int exit_code_for(ch_status st) {
  switch (st) {
    case CH_OK: return exit_ok;
    case CH_ERR_ARGUMENT:
    case CH_ERR_SIZE:
    case CH_ERR_PARSE: return exit_usage;
    case CH_ERR_IO: return exit_io;
    case CH_ERR_TOLERANCE:
    case CH_ERR_INTERNAL: return exit_internal;
  }
  return exit_internal;
}

void check(ch_status st) {
  if (st != CH_OK) throw Failure{exit_code_for(st), ch_last_error()};
}

struct StringDeleter {
  void operator()(char* p) const { ch_string_free(p); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct VectorDeleter {
  void operator()(ch_sign_vector* p) const { ch_sign_vector_free(p); }
};
using Vector = std::unique_ptr<ch_sign_vector, VectorDeleter>;

struct OutcomeDeleter {
  void operator()(ch_search_outcome* p) const { ch_search_outcome_free(p); }
};
using Outcome = std::unique_ptr<ch_search_outcome, OutcomeDeleter>;

template <class F>
CString text_from(F&& f) {
  char* raw = nullptr;
  check(f(&raw));
  return CString(raw);
}

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Records how every output of one invocation was produced.
class Manifest {
public:
  Manifest(int argc, char** argv) : command_(argv, argv + argc) {}

  void input(const std::string& path) { inputs_.push_back(path); }
  template <class T>
  void param(const std::string& key, const T& value) { params_[key] = value; }

  void write(const std::string& path, const std::string& contents) {
    check(ch_write_file(path.c_str(), contents.c_str()));
    outputs_.push_back(path);
  }

  void note(const std::string& text) { notes_.push_back(text); }

  // One manifest per output file, next to it.
  void finish() const {
    nlohmann::ordered_json j;
    j["tool"] = "circhad";
    j["version"] = ch_version();
    j["timestamp"] = iso_timestamp();
    j["cwd"] = std::filesystem::current_path().string();
    j["command"] = command_;
    j["inputs"] = inputs_;
    j["outputs"] = outputs_;
    j["parameters"] = params_;
    if (!notes_.empty()) j["notes"] = notes_;
    const std::string text = j.dump(2) + "\n";
    for (const auto& out : outputs_) check(ch_write_file((out + ".manifest.json").c_str(), text.c_str()));
  }

private:
  std::vector<std::string> command_;
  std::vector<std::string> inputs_;
  std::vector<std::string> outputs_;
  nlohmann::ordered_json params_ = nlohmann::ordered_json::object();
  std::vector<std::string> notes_;
};

ch_objective objective_from(const std::string& name) {
  return name == "condition" ? CH_OBJECTIVE_CONDITION : CH_OBJECTIVE_DEVIATION;
}

void require_seed(const std::optional<std::uint64_t>& seed, const std::string& what) {
  if (!seed) throw Failure{exit_usage, what + " needs an explicit --seed"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Circulant approximate-Hadamard toolkit: constructions, spectra, searches and scans."};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(ch_version()));
  unsigned threads = 1;
  app.add_option("--threads", threads, "Worker threads for search/scan/stats (results do not depend on it)")
      ->check(CLI::Range(1u, 1024u));

  // construct
  auto* construct = app.add_subcommand("construct", "Build a sign vector and write it as JSON");
  std::string method, construct_out;
  unsigned k = 0, generations = 1;
  std::uint64_t q = 0, n_random = 0;
  std::optional<std::uint64_t> seed;
  std::int64_t flips = -1;
  bool hex = false;
  construct->add_option("--method", method, "rudin-shapiro | legendre | cef | random")
      ->required()
      ->check(CLI::IsMember({"rudin-shapiro", "legendre", "cef", "random"}));
  construct->add_option("--k", k, "Rudin-Shapiro order (length 2^k)");
  construct->add_option("--q", q, "Prime dimension for the Legendre construction");
  construct->add_option("--flips", flips, "Legendre flip count (default ceil((sqrt(q)-1)/2))");
  construct->add_option("--n", n_random, "Length for the random construction");
  construct->add_option("--generations", generations, "CEF squaring steps applied to the degree-12 seed");
  construct->add_option("--seed", seed, "Generator seed (legendre, random)");
  construct->add_flag("--hex", hex, "Write the compact {\"n\",\"bits\"} form");
  construct->add_option("--out", construct_out, "Output JSON path")->required();

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Spectral report of a sign vector file");
  std::string analyze_in, report_out, hist_out, trace_out;
  std::size_t bins = 60;
  std::vector<double> window{1.0, 1.05, 5000};
  analyze->add_option("--in", analyze_in, "Sign vector JSON")->required();
  analyze->add_option("--report", report_out, "SpectralReport JSON output")->required();
  analyze->add_option("--hist", hist_out, "Histogram CSV of |lambda_j| (bin_lo,bin_hi,count)");
  analyze->add_option("--bins", bins, "Histogram bin count")->check(CLI::PositiveNumber);
  analyze->add_option("--trace", trace_out, "Circle profile CSV (t,re,im,abs)");
  analyze->add_option("--window", window, "Trace window: t0 t1 samples")->expected(3);

  // search
  auto* search = app.add_subcommand("search", "Find an extremal circulant");
  std::size_t n_search = 0, cap = 24;
  std::string objective = "condition", mode = "exhaustive", search_out;
  unsigned restarts = 16, max_iters = 1000, epochs = 500;
  double cooling = 0.98, t0 = 0.0;
  search->add_option("--n", n_search, "Dimension")->required()->check(CLI::PositiveNumber);
  search->add_option("--objective", objective, "condition | deviation")
      ->check(CLI::IsMember({"condition", "deviation"}));
  search->add_option("--mode", mode, "exhaustive | local | anneal")->check(CLI::IsMember({"exhaustive", "local", "anneal"}));
  search->add_option("--seed", seed, "Generator seed (local, anneal)");
  search->add_option("--cap", cap, "Largest n accepted by exhaustive mode");
  search->add_option("--restarts", restarts, "Local-search restarts");
  search->add_option("--max-iters", max_iters, "Local-search steps per restart");
  search->add_option("--epochs", epochs, "Annealing epochs");
  search->add_option("--cooling", cooling, "Annealing cooling factor per epoch");
  search->add_option("--t0", t0, "Annealing start temperature (default: scale of the start)");
  search->add_option("--out", search_out, "SearchOutcome JSON output")->required();

  // scan
  auto* scan = app.add_subcommand("scan", "Minimal deviation per n");
  std::size_t n_lo = 1, n_hi = 1, exact_cap = 16;
  std::string scan_out;
  scan->add_option("--n-lo", n_lo, "First n")->required();
  scan->add_option("--n-hi", n_hi, "Last n")->required();
  scan->add_option("--exact-cap", exact_cap, "Exhaustive search up to this n");
  scan->add_option("--seed", seed, "Seed for rows above the exact cap");
  scan->add_option("--restarts", restarts, "Local-search restarts above the exact cap");
  scan->add_option("--out", scan_out, "Scan CSV output")->required();

  // ryser
  auto* ryser = app.add_subcommand("ryser", "Exact circulant-Hadamard existence for n = 1..n-hi");
  std::size_t ryser_hi = 12;
  std::string ryser_out;
  ryser->add_option("--n-hi", ryser_hi, "Largest n")->required();
  ryser->add_option("--cap", cap, "Largest n accepted");
  ryser->add_option("--out", ryser_out, "CSV output")->required();

  // stats
  auto* stats = app.add_subcommand("stats", "Multi-seed statistics of the Legendre construction");
  unsigned seeds = 50;
  std::string stats_out, hist_prefix;
  stats->add_option("--q", q, "Prime dimension")->required();
  stats->add_option("--seeds", seeds, "Seeds 0..seeds-1")->check(CLI::PositiveNumber);
  stats->add_option("--hist-prefix", hist_prefix, "Write <prefix>_seed<k>.csv moduli histograms");
  stats->add_option("--bins", bins, "Histogram bin count")->check(CLI::PositiveNumber);
  stats->add_option("--out", stats_out, "SeedStats JSON output")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_usage;
  }

  Manifest manifest(argc, argv);
  manifest.param("threads", threads);
  try {
    if (*construct) {
      Vector v;
      ch_sign_vector* raw = nullptr;
      manifest.param("method", method);
      if (method == "rudin-shapiro") {
        manifest.param("k", k);
        check(ch_rudin_shapiro(k, &raw));
      } else if (method == "legendre") {
        require_seed(seed, "legendre");
        manifest.param("q", q);
        manifest.param("seed", *seed);
        check(ch_legendre_modified(q, *seed, flips, &raw));
      } else if (method == "random") {
        require_seed(seed, "random");
        manifest.param("n", n_random);
        manifest.param("seed", *seed);
        check(ch_random_signs(n_random, *seed, &raw));
      } else {
        Vector base;
        ch_sign_vector* s = nullptr;
        check(ch_cef_seed12(&s));
        base.reset(s);
        manifest.param("generations", generations);
        std::vector<double> history(generations + 1);
        check(ch_cef_iterate(base.get(), generations, &raw, history.data(), history.size()));
        manifest.param("grid_min_history", history);
      }
      v.reset(raw);
      manifest.write(construct_out, text_from([&](char** o) { return ch_sign_vector_to_json(v.get(), hex, o); }).get());
    } else if (*analyze) {
      ch_sign_vector* raw = nullptr;
      check(ch_sign_vector_read(analyze_in.c_str(), &raw));
      Vector v(raw);
      manifest.input(analyze_in);
      ch_report rep{};
      check(ch_analyze(v.get(), &rep));
      manifest.write(report_out, text_from([&](char** o) { return ch_report_to_json(&rep, o); }).get());
      if (!hist_out.empty()) {
        manifest.param("bins", bins);
        manifest.write(hist_out, text_from([&](char** o) { return ch_moduli_histogram_csv(v.get(), bins, o); }).get());
      }
      if (!trace_out.empty()) {
        if (!(window[2] >= 2 && window[2] == std::floor(window[2]))) {
          throw Failure{exit_usage, "--window samples must be an integer >= 2"};
        }
        manifest.param("window", window);
        const auto samples = static_cast<std::size_t>(window[2]);
        manifest.write(trace_out, text_from([&](char** o) {
                         return ch_circle_profile_csv(v.get(), 0, window[0], window[1], samples, o);
                       }).get());
      }
    } else if (*search) {
      manifest.param("n", n_search);
      manifest.param("objective", objective);
      manifest.param("mode", mode);
      ch_search_outcome* raw = nullptr;
      const auto obj = objective_from(objective);
      if (mode == "exhaustive") {
        manifest.param("cap", cap);
        check(ch_exhaustive_search(n_search, obj, cap, threads, &raw));
      } else if (mode == "local") {
        require_seed(seed, "local search");
        manifest.param("seed", *seed);
        manifest.param("restarts", restarts);
        manifest.param("max_iters", max_iters);
        check(ch_local_search(n_search, obj, *seed, restarts, max_iters, threads, &raw));
      } else {
        require_seed(seed, "annealing");
        manifest.param("seed", *seed);
        manifest.param("epochs", epochs);
        manifest.param("cooling", cooling);
        manifest.param("t0", t0);
        check(ch_anneal(n_search, obj, *seed, t0, cooling, epochs, &raw));
      }
      Outcome out(raw);
      manifest.write(search_out, text_from([&](char** o) { return ch_search_outcome_to_json(out.get(), o); }).get());
    } else if (*scan) {
      if (n_hi > exact_cap) require_seed(seed, "scan rows above --exact-cap");
      const std::uint64_t s = seed.value_or(0);
      manifest.param("n_lo", n_lo);
      manifest.param("n_hi", n_hi);
      manifest.param("exact_cap", exact_cap);
      if (seed) manifest.param("seed", *seed);
      manifest.param("restarts", restarts);
      double envelope = std::nan("");
      auto csv = text_from([&](char** o) {
        return ch_scan_deviation(n_lo, n_hi, exact_cap, s, restarts, threads, o, &envelope);
      });
      manifest.write(scan_out, csv.get());
      if (n_hi > exact_cap) manifest.note("rows with exact=false are upper bounds on the true minimum");
      if (!std::isnan(envelope)) {
        manifest.param("epsilon_envelope", envelope);
        std::printf("empirical envelope min normalized deviation over exact rows with n > 4: %.17g\n", envelope);
      }
      if (n_hi > exact_cap) std::printf("rows above n = %zu are upper bounds on the true minimum\n", exact_cap);
    } else if (*ryser) {
      manifest.param("n_hi", ryser_hi);
      manifest.param("cap", cap);
      manifest.write(ryser_out, text_from([&](char** o) { return ch_ryser_verify(ryser_hi, cap, threads, o); }).get());
    } else if (*stats) {
      manifest.param("q", q);
      manifest.param("seeds", seeds);
      char** hists = nullptr;
      const bool want_hist = !hist_prefix.empty();
      if (want_hist) manifest.param("bins", bins);
      auto json = text_from([&](char** o) {
        return ch_legendre_statistics(q, seeds, threads, bins, o, want_hist ? &hists : nullptr);
      });
      manifest.write(stats_out, json.get());
      if (hists) {
        for (unsigned s = 0; s < seeds; ++s) {
          manifest.write(hist_prefix + "_seed" + std::to_string(s) + ".csv", hists[s]);
        }
        ch_string_array_free(hists, seeds);
      }
    }
    manifest.finish();
  } catch (const Failure& f) {
    std::fprintf(stderr, "circhad: error: %s\n", f.message.c_str());
    return f.code;
  }
  return exit_ok;
}
