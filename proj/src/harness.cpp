#include "hfcur/harness.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "hfcur/errors.hpp"
#include "hfcur/rng.hpp"

namespace hfcur {

namespace {

std::atomic<unsigned> g_max_threads{0};

// Index-based parallel loop; each index is handled exactly once and workers
// write only to their own slots, so scheduling cannot change the result.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  unsigned workers = g_max_threads.load();
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

PowerSpectrum reference_spectrum(const SimParams& params) {
  const double df =
      1.0 / (static_cast<double>(params.n_samples) * params.radar.dt);
  const auto grid = full_band_grid(params.n_samples, params.radar.dt);
  return build_reference_spectrum(params.spectrum.resolved(df), params.radar, grid);
}

ComplexTimeSeries make_trial_series(const SimParams& params,
                                    const PowerSpectrum& sigma0, double alpha,
                                    std::uint64_t master_seed, std::size_t trial) {
  ComplexTimeSeries s0 = synthesize_signal(sigma0, params.radar, params.u_r,
                                           params.n_samples,
                                           mix_seed(master_seed, 2 * trial));
  NoiseSource noise = params.noise;
  noise.seed = mix_seed(master_seed, 2 * trial + 1);
  return add_noise(s0, noise, alpha);
}

double nrmse_pct(const std::vector<double>& estimates, double truth) {
  if (estimates.empty()) return std::nan("");
  double acc = 0.0;
  for (double e : estimates) acc += (e - truth) * (e - truth);
  const double denom = std::abs(truth) > 0.0 ? std::abs(truth) : 1.0;
  return 100.0 * std::sqrt(acc / static_cast<double>(estimates.size())) / denom;
}

}  // namespace

void set_max_threads(unsigned count) { g_max_threads.store(count); }

unsigned max_threads() { return g_max_threads.load(); }

SweepReport order_sweep(const SimParams& params, std::span<const std::size_t> orders,
                        std::size_t trials, std::uint64_t seed) {
  if (orders.empty()) throw std::invalid_argument("order_sweep: no orders given");
  if (trials == 0) throw std::invalid_argument("order_sweep: need trials >= 1");
  for (std::size_t p : orders)
    if (p == 0 || p >= params.n_samples)
      throw std::invalid_argument("order_sweep: order must be in [1, n_samples)");

  const PowerSpectrum sigma0 = reference_spectrum(params);

  // results[t][o]: (passed, estimate)
  std::vector<std::vector<std::optional<double>>> results(
      trials, std::vector<std::optional<double>>(orders.size()));
  parallel_for(trials, [&](std::size_t t) {
    const ComplexTimeSeries s =
        make_trial_series(params, sigma0, params.alpha, seed, t);
    for (std::size_t o = 0; o < orders.size(); ++o) {
      EstimateOptions options;
      options.method = SpectralMethod::ar_mem;
      options.ar_order = orders[o];
      options.eval_bins = params.eval_bins;
      const BraggEstimate est =
          estimate_current(s, params.radar, params.policy, options);
      if (est.qc.pass) results[t][o] = est.u_r;
    }
  });

  SweepReport report;
  report.method = SpectralMethod::ar_mem;
  report.trials = trials;
  for (std::size_t o = 0; o < orders.size(); ++o) {
    std::vector<double> passing;
    for (std::size_t t = 0; t < trials; ++t)
      if (results[t][o]) passing.push_back(*results[t][o]);
    report.axis.push_back(static_cast<double>(orders[o]));
    report.success_rate_pct.push_back(100.0 * static_cast<double>(passing.size()) /
                                      static_cast<double>(trials));
    report.nrmse_pct.push_back(nrmse_pct(passing, params.u_r));
  }
  return report;
}

std::pair<SweepReport, SweepReport> noise_sweep(const SimParams& params,
                                                std::span<const double> alphas,
                                                std::size_t trials,
                                                std::uint64_t seed) {
  if (alphas.empty()) throw std::invalid_argument("noise_sweep: no alphas given");
  if (trials == 0) throw std::invalid_argument("noise_sweep: need trials >= 1");
  for (double a : alphas)
    if (a < 0.0) throw std::invalid_argument("noise_sweep: alpha must be >= 0");

  const PowerSpectrum sigma0 = reference_spectrum(params);
  constexpr std::size_t kMethods = 2;  // periodogram, ar-mem

  std::vector<std::vector<std::optional<double>>> results(
      trials, std::vector<std::optional<double>>(alphas.size() * kMethods));
  parallel_for(trials, [&](std::size_t t) {
    for (std::size_t a = 0; a < alphas.size(); ++a) {
      const ComplexTimeSeries s =
          make_trial_series(params, sigma0, alphas[a], seed, t);
      for (std::size_t m = 0; m < kMethods; ++m) {
        EstimateOptions options;
        options.method =
            m == 0 ? SpectralMethod::periodogram : SpectralMethod::ar_mem;
        options.eval_bins = params.eval_bins;
        const BraggEstimate est =
            estimate_current(s, params.radar, params.policy, options);
        if (est.qc.pass) results[t][a * kMethods + m] = est.u_r;
      }
    }
  });

  auto assemble = [&](std::size_t m) {
    SweepReport report;
    report.method = m == 0 ? SpectralMethod::periodogram : SpectralMethod::ar_mem;
    report.trials = trials;
    for (std::size_t a = 0; a < alphas.size(); ++a) {
      std::vector<double> passing;
      for (std::size_t t = 0; t < trials; ++t)
        if (results[t][a * kMethods + m])
          passing.push_back(*results[t][a * kMethods + m]);
      report.axis.push_back(alphas[a]);
      report.success_rate_pct.push_back(
          100.0 * static_cast<double>(passing.size()) / static_cast<double>(trials));
      report.nrmse_pct.push_back(nrmse_pct(passing, params.u_r));
    }
    return report;
  };
  return {assemble(0), assemble(1)};
}

CurrentMap estimate_grid(std::span<const GridCell> cells, const RadarConfig& config,
                         const QcPolicy& policy, const EstimateOptions& options) {
  if (cells.empty()) throw std::invalid_argument("estimate_grid: no cells");
  const double dt = cells.front().series.dt;
  for (const auto& cell : cells)
    if (cell.series.dt != dt)
      throw std::invalid_argument("estimate_grid: cells have heterogeneous dt");

  CurrentMap map;
  map.cells.resize(cells.size());
  parallel_for(cells.size(), [&](std::size_t i) {
    map.cells[i].range_idx = cells[i].range_idx;
    map.cells[i].azimuth_idx = cells[i].azimuth_idx;
    map.cells[i].estimate = estimate_current(cells[i].series, config, policy, options);
  });
  std::size_t passes = 0;
  for (const auto& cell : map.cells)
    if (cell.estimate.qc.pass) ++passes;
  map.coverage_pct =
      100.0 * static_cast<double>(passes) / static_cast<double>(map.cells.size());
  return map;
}

std::vector<GridCell> synthesize_grid(const SimParams& params, std::size_t ranges,
                                      std::size_t azimuths,
                                      double noise_cell_fraction,
                                      std::uint64_t seed) {
  if (ranges == 0 || azimuths == 0)
    throw std::invalid_argument("synthesize_grid: empty grid");
  if (noise_cell_fraction < 0.0 || noise_cell_fraction > 1.0)
    throw std::invalid_argument("synthesize_grid: fraction must be in [0, 1]");
  const PowerSpectrum sigma0 = reference_spectrum(params);
  const std::size_t total = ranges * azimuths;
  const std::size_t noise_cells =
      static_cast<std::size_t>(noise_cell_fraction * static_cast<double>(total));

  std::vector<GridCell> cells(total);
  parallel_for(total, [&](std::size_t i) {
    cells[i].range_idx = i / azimuths;
    cells[i].azimuth_idx = i % azimuths;
    NoiseSource noise = params.noise;
    noise.seed = mix_seed(seed, 2 * i + 1);
    if (i < noise_cells) {
      // Pure-noise cell: no sea echo at all.
      ComplexTimeSeries empty;
      empty.dt = params.radar.dt;
      empty.samples.assign(params.n_samples, std::complex<double>(0.0, 0.0));
      cells[i].series = add_noise(empty, noise, 1.0);
    } else {
      const ComplexTimeSeries s0 =
          synthesize_signal(sigma0, params.radar, params.u_r, params.n_samples,
                            mix_seed(seed, 2 * i));
      cells[i].series = add_noise(s0, noise, params.alpha);
    }
  });
  return cells;
}

CurrentTrack track_current(const ComplexTimeSeries& series, std::size_t window_len,
                           std::size_t hop, const RadarConfig& config,
                           const QcPolicy& policy, const EstimateOptions& options) {
  if (window_len == 0 || window_len > series.size())
    throw std::invalid_argument("track_current: window longer than series");
  if (hop == 0) hop = window_len;

  std::vector<std::size_t> offsets;
  for (std::size_t off = 0; off + window_len <= series.size(); off += hop)
    offsets.push_back(off);

  CurrentTrack track;
  track.window_len = window_len;
  track.hop = hop;
  track.method = options.method;
  track.times.resize(offsets.size());
  track.u_r.resize(offsets.size());
  track.qc_reason.assign(offsets.size(), QcReason::none);

  parallel_for(offsets.size(), [&](std::size_t w) {
    const std::size_t off = offsets[w];
    ComplexTimeSeries chunk;
    chunk.dt = series.dt;
    chunk.t0 = series.t0 + static_cast<double>(off) * series.dt;
    chunk.samples.assign(series.samples.begin() + static_cast<std::ptrdiff_t>(off),
                         series.samples.begin() +
                             static_cast<std::ptrdiff_t>(off + window_len));
    track.times[w] =
        chunk.t0 + 0.5 * static_cast<double>(window_len) * series.dt;
    const BraggEstimate est = estimate_current(chunk, config, policy, options);
    if (est.qc.pass) {
      track.u_r[w] = est.u_r;
    } else {
      track.qc_reason[w] = est.qc.reason;
    }
  });
  return track;
}

SlopeFit fluctuation_spectrum(const CurrentTrack& track, double fit_lo_cph,
                              double fit_hi_cph) {
  const std::size_t n = track.u_r.size();
  std::size_t present = 0;
  for (const auto& u : track.u_r)
    if (u) ++present;
  if (present < 32)
    throw InsufficientDataError(
        "fluctuation_spectrum: need at least 32 passing track entries");
  if (static_cast<double>(n - present) > 0.2 * static_cast<double>(n))
    throw InsufficientDataError(
        "fluctuation_spectrum: more than 20% of the track is missing");
  if (n < 2 || track.times.size() != n)
    throw std::invalid_argument("fluctuation_spectrum: malformed track");

  // Gap filling: linear interpolation between passing neighbors, nearest
  // value at the edges.
  std::vector<double> u(n, 0.0);
  std::ptrdiff_t prev = -1;
  for (std::size_t i = 0; i < n; ++i) {
    if (!track.u_r[i]) continue;
    u[i] = *track.u_r[i];
    const auto cur = static_cast<std::ptrdiff_t>(i);
    if (prev < 0) {
      for (std::ptrdiff_t j = 0; j < cur; ++j) u[static_cast<std::size_t>(j)] = u[i];
    } else {
      for (std::ptrdiff_t j = prev + 1; j < cur; ++j) {
        const double frac = static_cast<double>(j - prev) /
                            static_cast<double>(cur - prev);
        u[static_cast<std::size_t>(j)] =
            u[static_cast<std::size_t>(prev)] +
            frac * (u[i] - u[static_cast<std::size_t>(prev)]);
      }
    }
    prev = cur;
  }
  for (std::size_t j = static_cast<std::size_t>(prev) + 1; j < n; ++j)
    u[j] = u[static_cast<std::size_t>(prev)];

  double mean = 0.0;
  for (double x : u) mean += x;
  mean /= static_cast<double>(n);

  ComplexTimeSeries ts;
  ts.dt = track.times[1] - track.times[0];
  ts.samples.reserve(n);
  for (double x : u) ts.samples.emplace_back(x - mean, 0.0);

  SlopeFit fit;
  fit.spectrum = periodogram(ts);

  const double f_lo = fit_lo_cph / 3600.0;
  const double f_hi = fit_hi_cph / 3600.0;
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < fit.spectrum.freqs.size(); ++i) {
    const double f = fit.spectrum.freqs[i];
    if (f < f_lo || f > f_hi) continue;
    if (fit.spectrum.values[i] <= 0.0) continue;
    xs.push_back(std::log10(f));
    ys.push_back(std::log10(fit.spectrum.values[i]));
  }
  if (xs.size() < 4)
    throw InsufficientDataError(
        "fluctuation_spectrum: fewer than 4 spectral bins in the fit band");

  const double m = static_cast<double>(xs.size());
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
  }
  const double xbar = sx / m;
  const double ybar = sy / m;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - xbar) * (xs[i] - xbar);
    sxy += (xs[i] - xbar) * (ys[i] - ybar);
  }
  fit.slope = sxy / sxx;
  double ssr = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - ybar - fit.slope * (xs[i] - xbar);
    ssr += r * r;
  }
  fit.slope_stderr = std::sqrt(ssr / ((m - 2.0) * sxx));
  return fit;
}

}  // namespace hfcur
