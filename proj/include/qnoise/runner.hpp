#pragma once

#include <cmath>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qnoise/csv.hpp"
#include "qnoise/ensemble.hpp"
#include "qnoise/estimators.hpp"
#include "qnoise/manifest.hpp"
#include "qnoise/mmfbm.hpp"
#include "qnoise/scenario.hpp"
#include "qnoise/spectrum.hpp"
#include "qnoise/svg_plot.hpp"
#include "qnoise/version.hpp"

namespace qnoise {

struct RunOptions {
  std::filesystem::path out_dir;
  std::vector<std::pair<std::string, std::string>> overrides;
  bool emit_plots = false;
  unsigned threads = 0;
};

struct RunReport {
  Scenario scenario;
  Manifest manifest;
  std::vector<std::filesystem::path> files;
};

namespace detail {

inline std::string sweep_label(const std::string& parameter, double value) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%g", value);
  return parameter + "_" + buf;
}

inline void manifest_config(Manifest& m, const Scenario& s) {
  m.put("config.scenario.name", s.name);
  m.put("config.scenario.pipeline", std::string(pipeline_name(s.pipeline)));
  m.put("config.grid.total_time", s.total_time);
  m.put("config.grid.steps", s.steps);
  m.put("config.noise.kernel", std::string(kernel_name(s.noise.kernel)));
  if (s.noise.kernel == MemoryKernel::Kind::Mmfbm) {
    m.put("config.noise.hurst", std::string(hurst_kind_name(s.noise.hurst_kind)));
    m.put("config.noise.h0", s.noise.h0);
    if (s.noise.hurst_kind == HurstProfile::Kind::Sinusoidal) {
      m.put("config.noise.amplitude", s.noise.amplitude);
      m.put("config.noise.period", s.noise.period);
    }
  } else {
    m.put("config.noise.beta", s.noise.beta);
  }
  if (s.noise.cutoff) m.put("config.noise.cutoff", *s.noise.cutoff);
  if (s.sde) {
    m.put("config.sde.integrator", std::string(integrator_name(s.sde->integrator)));
    m.put("config.sde.drift", std::string(drift_name(s.sde->drift_kind)));
    m.put(s.sde->drift_kind == DriftSpec::Kind::Relaxation ? "config.sde.lambda"
                                                           : "config.sde.mu",
          s.sde->drift_value);
    m.put("config.sde.sigma", s.sde->sigma);
    m.put("config.sde.chi0", s.sde->chi0);
  }
  if (s.sweep) {
    m.put("config.sweep.parameter", s.sweep->parameter);
    std::string values;
    for (std::size_t i = 0; i < s.sweep->values.size(); ++i) {
      if (i) values += ", ";
      values += format_double(s.sweep->values[i]);
    }
    m.put("config.sweep.values", values);
  }
  if (s.qubit) {
    m.put("config.qubit.omega0_over_2pi", s.qubit->omega0_over_2pi);
    m.put("config.qubit.delta", s.qubit->delta);
    m.put("config.qubit.frame", std::string(frame_name(s.qubit->frame)));
    m.put("config.qubit.initial_state", std::string(initial_state_name(s.qubit->initial_state)));
    m.put("config.qubit.ej_ec_ratio", s.qubit->ej_ec_ratio);
    m.put("config.qubit.delta_ng", s.qubit->delta_ng);
  }
  if (s.lindblad) {
    m.put("config.lindblad.t1", s.lindblad->t1);
    m.put("config.lindblad.t2", s.lindblad->t2);
  }
  m.put("config.ensemble.n_traj", s.n_traj);
  m.put("config.ensemble.base_seed", s.base_seed);
  if (s.analysis.fit_t2 || s.analysis.psd) {
    m.put("config.analysis.fit_t2", s.analysis.fit_t2);
    if (s.analysis.fit_t2) {
      m.put("config.analysis.fit_window_lo", s.analysis.fit_window_lo);
      m.put("config.analysis.fit_window_hi", s.analysis.fit_window_hi);
    }
    m.put("config.analysis.psd", s.analysis.psd);
    if (s.analysis.segment_length)
      m.put("config.analysis.psd_segment_length", *s.analysis.segment_length);
  }
  m.put("config.outputs.stats", s.outputs.stats);
  m.put("config.outputs.metrics", s.outputs.metrics);
  m.put("config.outputs.spectra", s.outputs.spectra);
  m.put("config.outputs.paths", s.outputs.paths);
}

inline CsvTable stats_table(const EnsembleStats& stats) {
  CsvTable t;
  t.columns = {"t", "mean", "std", "n_traj"};
  const std::vector<double>& times = stats.grid.times();
  t.rows.reserve(times.size());
  for (std::size_t i = 0; i < times.size(); ++i)
    t.rows.push_back({times[i], stats.mean[i], stats.std[i],
                      static_cast<double>(stats.n_traj)});
  return t;
}

inline CsvTable metrics_table(const MetricsEnsemble& m) {
  CsvTable t;
  t.columns = {"t", "fidelity_mean", "fidelity_std", "coherence_mean", "coherence_std",
               "pe_mean", "pe_std"};
  const std::vector<double>& times = m.grid.times();
  for (std::size_t i = 0; i < times.size(); ++i)
    t.rows.push_back({times[i], m.fidelity_mean[i], m.fidelity_std[i],
                      m.coherence_mean[i], m.coherence_std[i], m.pe_mean[i], m.pe_std[i]});
  return t;
}

inline CsvTable spectrum_table(const std::vector<double>& freqs,
                               const std::vector<double>& psd) {
  CsvTable t;
  t.columns = {"f", "psd"};
  for (std::size_t i = 0; i < freqs.size(); ++i) t.rows.push_back({freqs[i], psd[i]});
  return t;
}

inline CsvTable path_table(const NoisePath& path) {
  CsvTable t;
  t.columns = {"t", "value"};
  for (std::size_t i = 0; i < path.values.size(); ++i)
    t.rows.push_back({path.grid.time_at(i), path.values[i]});
  return t;
}

/// Local maxima of the mean coherence, flagged as candidate revivals.
inline std::size_t count_local_maxima(const std::vector<double>& xs, double min_rise) {
  std::size_t count = 0;
  for (std::size_t i = 1; i + 1 < xs.size(); ++i)
    if (xs[i] > xs[i - 1] + min_rise && xs[i] > xs[i + 1] + min_rise) ++count;
  return count;
}

struct QubitTrajectory {
  std::vector<double> chi;
  QubitMetrics metrics;
  std::vector<double> psd_path;
  std::vector<double> psd_increments;
  std::vector<double> freq_path;
  std::vector<double> freq_increments;
};

}  // namespace detail

/// Resolves a builtin name or a config-file path into a validated Scenario,
/// with --set overrides applied through the same strict parser.
inline Scenario resolve_scenario(
    const std::string& name_or_path,
    const std::vector<std::pair<std::string, std::string>>& overrides) {
  std::string text;
  std::string origin;
  if (std::filesystem::exists(name_or_path) &&
      std::filesystem::is_regular_file(name_or_path)) {
    std::ifstream in(name_or_path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
    origin = name_or_path;
  } else if (auto builtin = find_builtin_scenario(name_or_path)) {
    text = scenario_to_config_text(*builtin);
    origin = "builtin:" + name_or_path;
  } else {
    throw ConfigError("'" + name_or_path + "' is neither a builtin scenario nor a config file");
  }
  ConfigFile cfg = ConfigFile::parse_text(text, origin);
  for (const auto& [key, value] : overrides) cfg.set_override(key, value);
  return scenario_from_config(cfg);
}

inline RunReport run_scenario(const std::string& name_or_path, const RunOptions& options) {
  Scenario scenario = resolve_scenario(name_or_path, options.overrides);

  RunReport report{scenario, Manifest{}, {}};
  Manifest& manifest = report.manifest;
  manifest.put("software.name", std::string("qnoise"));
  manifest.put("software.version", std::string(version));
  detail::manifest_config(manifest, scenario);
  for (const auto& [key, value] : options.overrides)
    manifest.put("override." + key, value);

  std::filesystem::create_directories(options.out_dir);
  auto write_table = [&](const std::string& filename, const CsvTable& table) {
    const std::filesystem::path p = options.out_dir / filename;
    write_csv(p, table);
    report.files.push_back(p);
    return p;
  };

  const TimeGrid grid = make_grid(scenario);
  std::vector<std::filesystem::path> band_plots;
  std::optional<std::filesystem::path> metrics_csv_path;

  if (scenario.pipeline == Pipeline::Sde) {
    std::vector<std::pair<std::string, Scenario>> runs;
    if (scenario.sweep) {
      for (double v : scenario.sweep->values)
        runs.emplace_back(detail::sweep_label(scenario.sweep->parameter, v),
                          with_sweep_value(scenario, scenario.sweep->parameter, v));
    } else {
      runs.emplace_back("", scenario);
    }
    for (const auto& [label, variant] : runs) {
      const SdeSpec spec = make_sde_spec(variant);
      EnsembleOptions opts;
      opts.n_traj = variant.n_traj;
      opts.base_seed = variant.base_seed;
      opts.keep_paths = variant.outputs.paths;
      opts.threads = options.threads;
      const EnsembleResult result = run_ensemble(spec, variant.sde->integrator, opts);
      const std::string suffix = label.empty() ? "" : "_" + label;
      if (variant.outputs.stats) {
        const auto p = write_table("ensemble_stats" + suffix + ".csv",
                                   detail::stats_table(result.stats));
        band_plots.push_back(p);
        manifest.put("output.stats" + suffix, p.filename().string());
      }
      if (variant.outputs.paths) {
        for (std::size_t k = 0; k < result.paths.size(); ++k)
          write_table("chi_path" + suffix + "_" + std::to_string(k) + ".csv",
                      detail::path_table(result.paths[k]));
      }
    }
  } else {
    const MemoryKernel kernel = make_kernel(scenario.noise);
    const QubitParams params = make_qubit_params(*scenario.qubit);
    const QuantumState psi0 = make_initial_state(scenario.qubit->initial_state);
    const Frame frame = scenario.qubit->frame;
    const bool lindblad = scenario.pipeline == Pipeline::QubitLindblad;
    std::optional<LindbladParams> lb;
    if (lindblad) lb = LindbladParams(scenario.lindblad->t1, scenario.lindblad->t2);
    const bool want_psd = scenario.analysis.psd;

    WelfordAccumulator noise_acc(grid.steps() + 1);
    std::vector<QubitMetrics> runs;
    runs.reserve(scenario.n_traj);
    std::vector<double> psd_path_accum, psd_inc_accum;
    std::vector<double> freq_path, freq_inc;

    ordered_parallel_map<detail::QubitTrajectory>(
        scenario.n_traj, options.threads,
        [&](std::size_t k) {
          const NoisePath chi =
              generate_mmfbm(kernel, grid, scenario.base_seed + static_cast<std::uint64_t>(k));
          detail::QubitTrajectory traj;
          if (lindblad) {
            LindbladResult r = evolve_lindblad(params, *lb, chi,
                                               DensityMatrix::pure(psi0), frame, psi0);
            traj.metrics = std::move(r.metrics);
          } else {
            UnitaryResult r = evolve_unitary(params, chi, psi0, frame);
            traj.metrics = std::move(r.metrics);
          }
          if (want_psd) {
            const SpectrumEstimate sp = estimate_psd(chi, PsdMethod::SegmentAveraged,
                                                     scenario.analysis.segment_length);
            traj.psd_path = sp.psd;
            std::vector<double> increments(chi.values.size() - 1);
            for (std::size_t i = 0; i + 1 < chi.values.size(); ++i)
              increments[i] = chi.values[i + 1] - chi.values[i];
            const SpectrumEstimate si =
                estimate_psd_series(increments, grid.dt(), PsdMethod::SegmentAveraged,
                                    scenario.analysis.segment_length);
            traj.psd_increments = si.psd;
            traj.freq_path = sp.frequencies;  // identical across trajectories
            traj.freq_increments = si.frequencies;
          }
          traj.chi = chi.values;
          return traj;
        },
        [&](std::size_t, detail::QubitTrajectory&& traj) {
          noise_acc.add(traj.chi);
          runs.push_back(std::move(traj.metrics));
          if (want_psd) {
            if (freq_path.empty()) {
              freq_path = std::move(traj.freq_path);
              freq_inc = std::move(traj.freq_increments);
            }
            if (psd_path_accum.empty()) {
              psd_path_accum.assign(traj.psd_path.size(), 0.0);
              psd_inc_accum.assign(traj.psd_increments.size(), 0.0);
            }
            for (std::size_t i = 0; i < traj.psd_path.size(); ++i)
              psd_path_accum[i] += traj.psd_path[i];
            for (std::size_t i = 0; i < traj.psd_increments.size(); ++i)
              psd_inc_accum[i] += traj.psd_increments[i];
          }
        });

    EnsembleStats noise_stats{grid, noise_acc.mean(), noise_acc.sample_std(),
                              scenario.n_traj};
    const MetricsEnsemble metrics = ensemble_metrics(runs);

    if (scenario.outputs.stats) {
      const auto p = write_table("noise_stats.csv", detail::stats_table(noise_stats));
      band_plots.push_back(p);
      manifest.put("output.noise_stats", p.filename().string());
    }
    if (scenario.outputs.metrics) {
      const auto p = write_table("qubit_metrics.csv", detail::metrics_table(metrics));
      metrics_csv_path = p;
      manifest.put("output.metrics", p.filename().string());
    }
    manifest.put("qubit.frame", std::string(frame_name(frame)));
    if (lb) manifest.put("lindblad.pure_dephasing_rate", lb->pure_dephasing_rate());
    manifest.put("coherence.revival_count",
                 detail::count_local_maxima(metrics.coherence_mean, 1e-6));

    if (want_psd) {
      const double inv_n = 1.0 / static_cast<double>(scenario.n_traj);
      for (double& v : psd_path_accum) v *= inv_n;
      for (double& v : psd_inc_accum) v *= inv_n;
      SpectrumEstimate mean_path_psd{freq_path, psd_path_accum,
                                     PsdMethod::SegmentAveraged, std::nullopt};
      SpectrumEstimate mean_inc_psd{freq_inc, psd_inc_accum, PsdMethod::SegmentAveraged,
                                    std::nullopt};
      if (scenario.outputs.spectra) {
        report.files.push_back(write_table(
            "spectrum_path.csv", detail::spectrum_table(freq_path, psd_path_accum)));
        report.files.push_back(write_table(
            "spectrum_increments.csv", detail::spectrum_table(freq_inc, psd_inc_accum)));
        manifest.put("output.spectrum_path", "spectrum_path.csv");
        manifest.put("output.spectrum_increments", "spectrum_increments.csv");
      }
      manifest.put("psd.method", std::string(psd_method_name(PsdMethod::SegmentAveraged)));
      auto fit_and_record = [&](SpectrumEstimate& sp, const std::string& tag) {
        const auto [flo, fhi] = default_fit_band(sp);
        const SpectralFit fit = fit_spectral_exponent(sp, flo, fhi);
        sp.fit = fit;
        manifest.put("psd.beta_hat_" + tag, fit.beta_hat);
        manifest.put("psd.beta_hat_" + tag + ".stderr", fit.stderr);
        manifest.put("psd.beta_hat_" + tag + ".f_lo", fit.f_lo);
        manifest.put("psd.beta_hat_" + tag + ".f_hi", fit.f_hi);
        return fit.beta_hat;
      };
      const double beta_path = fit_and_record(mean_path_psd, "path");
      const double beta_inc = fit_and_record(mean_inc_psd, "increments");
      // Which estimate lands in the reported 1/f^beta band (1.4 +/- 0.1).
      const bool path_in = std::abs(beta_path - 1.4) <= 0.1;
      const bool inc_in = std::abs(beta_inc - 1.4) <= 0.1;
      manifest.put("psd.reference_band_match",
                   std::string(path_in ? (inc_in ? "both" : "path")
                                       : (inc_in ? "increments" : "none")));
    }

    if (scenario.analysis.fit_t2) {
      try {
        const DecayFit fit =
            fit_gaussian_decay(grid, metrics.fidelity_mean, scenario.analysis.fit_window_lo,
                               scenario.analysis.fit_window_hi);
        manifest.put("fit.t2_star", fit.t2_star);
        manifest.put("fit.t2_star.stderr", fit.stderr);
        manifest.put("fit.t2_star.window_lo", fit.window_lo);
        manifest.put("fit.t2_star.window_hi", fit.window_hi);
      } catch (const FitRejectedError& e) {
        manifest.put("fit.t2_star.error", std::string(e.what()));
      }
    }
  }

  if (options.emit_plots) {
    for (const std::filesystem::path& csv : band_plots) {
      PlotSpec spec;
      spec.kind = PlotSpec::Kind::MeanBand;
      spec.title = scenario.name + ": " + csv.stem().string();
      std::filesystem::path out = csv;
      out.replace_extension(".svg");
      emit_plot(csv, spec, out);
      report.files.push_back(out);
    }
    if (metrics_csv_path) {
      PlotSpec spec;
      spec.kind = PlotSpec::Kind::MetricsLog;
      spec.title = scenario.name + ": qubit metrics";
      spec.log_y = true;
      std::filesystem::path out = *metrics_csv_path;
      out.replace_extension(".svg");
      emit_plot(*metrics_csv_path, spec, out);
      report.files.push_back(out);
    }
  }

  const std::filesystem::path manifest_path = options.out_dir / "manifest.txt";
  manifest.write(manifest_path);
  report.files.push_back(manifest_path);
  return report;
}

}  // namespace qnoise
