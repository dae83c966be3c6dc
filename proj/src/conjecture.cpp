#include "circhad/conjecture.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "circhad/constructions.hpp"
#include "circhad/error.hpp"
#include "circhad/number_theory.hpp"
#include "circhad/rng.hpp"
#include "circhad/spectrum.hpp"
#include "parallel.hpp"

namespace circhad {

std::vector<ScanRecord> scan_deviation(std::size_t n_lo, std::size_t n_hi, ScanOptions opts) {
  if (n_lo < 1 || n_hi < n_lo) fail(ErrorKind::argument, "scan needs 1 <= n_lo <= n_hi");
  std::vector<ScanRecord> out;
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    ScanRecord rec;
    rec.n = n;
    if (n <= opts.exact_cap) {
      ExhaustiveOptions ex;
      ex.cap = opts.exact_cap;
      ex.threads = opts.threads;
      const auto res = exhaustive_search(n, Objective::deviation, ex);
      rec.min_deviation = res.report.deviation;
      rec.exact = true;
      rec.method = "exhaustive";
      rec.witness = res.best;
    } else {
      const std::uint64_t seed = derive_seed(opts.seed, n);
      std::vector<std::pair<std::string, SignVector>> tried;
      if (n >= 3 && is_prime(n)) tried.emplace_back("legendre", legendre_modified({n, seed, {}}));
      if (std::has_single_bit(n)) {
        tried.emplace_back("rudin-shapiro", rudin_shapiro(static_cast<unsigned>(std::countr_zero(n))));
      }
      LocalSearchOptions ls;
      ls.seed = seed;
      ls.restarts = opts.restarts;
      ls.threads = opts.threads;
      tried.emplace_back("local-search", local_search(n, Objective::deviation, ls).best);
      rec.min_deviation = std::numeric_limits<double>::infinity();
      for (auto& [method, v] : tried) {
        const double d = analyze(v).deviation;
        if (d < rec.min_deviation) {
          rec.min_deviation = d;
          rec.method = method;
          rec.witness = v;
        }
      }
      rec.exact = false;
    }
    rec.normalized = rec.min_deviation / std::pow(static_cast<double>(n), 0.25);
    out.push_back(std::move(rec));
  }
  return out;
}

std::optional<double> epsilon_envelope(std::span<const ScanRecord> records) {
  std::optional<double> env;
  for (const auto& r : records) {
    if (r.exact && r.n > 4) env = std::min(env.value_or(r.normalized), r.normalized);
  }
  return env;
}

std::vector<std::pair<std::size_t, bool>> ryser_verify(std::size_t n_hi, std::size_t cap,
                                                       unsigned threads) {
  cap = std::min(cap, packed::max_length);
  if (n_hi > cap) {
    fail(ErrorKind::size,
         "ryser_verify: n = " + std::to_string(n_hi) + " exceeds the exhaustive cap " + std::to_string(cap));
  }
  std::vector<std::pair<std::size_t, bool>> out;
  for (std::size_t n = 1; n <= n_hi; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    constexpr std::uint64_t block = 4096;
    const std::uint64_t blocks = (total + block - 1) / block;
    std::vector<char> found(blocks, 0);
    parallel_for(blocks, threads, [&](std::size_t b) {
      const std::uint64_t last = std::min<std::uint64_t>(total, (b + 1) * block);
      for (std::uint64_t code = b * block; code < last && !found[b]; ++code) {
        if (packed::is_canonical(code, n) && is_circulant_hadamard(packed::decode(code, n))) found[b] = 1;
      }
    });
    out.emplace_back(n, std::any_of(found.begin(), found.end(), [](char c) { return c != 0; }));
  }
  return out;
}

double bridge_deviation(const SignVector& s) {
  const std::size_t n = s.size();
  const double root_n = std::sqrt(static_cast<double>(n));
  double dev = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    for (auto part : {FourierPart::real, FourierPart::imag}) {
      const auto x = fourier_unit_vector(n, j, part);
      if (x.empty()) continue;
      dev = std::max(dev, std::abs(euclidean_norm(apply_circulant(s, x)) - root_n));
    }
  }
  return dev;
}

Quantiles quantiles(std::vector<double> values) {
  if (values.empty()) fail(ErrorKind::argument, "quantiles of an empty sample");
  std::sort(values.begin(), values.end());
  auto at = [&](double p) {
    const double pos = p * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const double frac = pos - static_cast<double>(lo);
    if (frac == 0.0 || values[lo] == values[lo + 1]) return values[lo];
    return values[lo] + frac * (values[lo + 1] - values[lo]);
  };
  return {values.front(), at(0.25), at(0.5), at(0.75), values.back()};
}

double sample_stddev(std::span<const double> values) {
  if (values.size() < 2) return 0.0;
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

std::vector<HistogramBin> histogram(std::span<const double> values, std::size_t bins) {
  if (values.empty()) fail(ErrorKind::argument, "histogram of an empty sample");
  if (bins == 0) fail(ErrorKind::argument, "histogram needs at least one bin");
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it, hi = *hi_it;
  const double width = (hi - lo) / static_cast<double>(bins);
  std::vector<HistogramBin> out(bins);
  for (std::size_t b = 0; b < bins; ++b) {
    out[b].lo = lo + width * static_cast<double>(b);
    out[b].hi = b + 1 == bins ? hi : lo + width * static_cast<double>(b + 1);
  }
  for (double v : values) {
    std::size_t b = width > 0.0 ? static_cast<std::size_t>((v - lo) / width) : 0;
    out[std::min(b, bins - 1)].count++;
  }
  return out;
}

SeedStats legendre_statistics(std::uint64_t q, unsigned seeds, StatsOptions opts) {
  if (q < 3 || !is_prime(q)) fail(ErrorKind::argument, "q must be prime (and at least 3), got " + std::to_string(q));
  if (seeds == 0) fail(ErrorKind::argument, "seeds must be at least 1");
  std::vector<SpectralReport> reports(seeds);
  std::vector<double> stddevs(seeds);
  SeedStats stats;
  stats.q = q;
  stats.seeds = seeds;
  stats.flips = default_flips(q);
  if (opts.histogram_bins > 0) stats.histograms.resize(seeds);
  parallel_for(seeds, opts.threads, [&](std::size_t s) {
    const auto v = legendre_modified({q, s, {}});
    const auto sp = eigenvalues_fft(v);
    reports[s] = report(sp);
    const auto mod = sp.moduli();
    stddevs[s] = sample_stddev(std::span(mod).subspan(1));
    if (opts.histogram_bins > 0) stats.histograms[s] = histogram(mod, opts.histogram_bins);
  });
  std::vector<double> kappas, devs;
  for (const auto& r : reports) {
    kappas.push_back(r.condition_number);
    devs.push_back(r.deviation);
  }
  stats.kappa = quantiles(kappas);
  stats.deviation = quantiles(devs);
  const double qd = static_cast<double>(q);
  stats.normalized_median = stats.deviation.median / (std::pow(qd, 0.25) * std::sqrt(std::log(qd)));
  stats.moduli_stddev_median = quantiles(stddevs).median;
  return stats;
}

}  // namespace circhad
