#include "hfcur/io.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hfcur/errors.hpp"

namespace hfcur {

namespace {

constexpr double kDegToRad = 3.1415926535897932384626433832795 / 180.0;

std::string fmt_num(double v) {
  // 12 significant digits; comfortably inside the 1e-9 round-trip contract.
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& value, const std::string& key, int line) {
  std::size_t pos = 0;
  double out = 0.0;
  try {
    out = std::stod(value, &pos);
  } catch (const std::exception&) {
    pos = std::string::npos;
  }
  if (pos != value.size())
    throw ConfigParseError("line " + std::to_string(line) + ": key '" + key +
                           "': expected a number, got '" + value + "'");
  return out;
}

std::size_t parse_size(const std::string& value, const std::string& key, int line) {
  const double d = parse_double(value, key, line);
  if (d < 0.0 || d != std::floor(d))
    throw ConfigParseError("line " + std::to_string(line) + ": key '" + key +
                           "': expected a nonnegative integer, got '" + value + "'");
  return static_cast<std::size_t>(d);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

std::string method_name(SpectralMethod m) {
  return m == SpectralMethod::periodogram ? "fft" : "armem";
}

SpectralMethod parse_method(const std::string& value, const std::string& key,
                            int line) {
  if (value == "fft" || value == "periodogram") return SpectralMethod::periodogram;
  if (value == "armem" || value == "ar-mem") return SpectralMethod::ar_mem;
  throw ConfigParseError("line " + std::to_string(line) + ": key '" + key +
                         "': expected fft or armem, got '" + value + "'");
}

QcReason parse_reason(const std::string& name) {
  if (name == "snr") return QcReason::snr;
  if (name == "symmetry") return QcReason::symmetry;
  if (name == "range") return QcReason::range;
  return QcReason::none;
}

void apply_key(RunConfig& config, const std::string& section,
               const std::string& key, const std::string& value, int line) {
  const std::string full = section.empty() ? key : section + "." + key;
  auto unknown = [&] {
    throw ConfigParseError("line " + std::to_string(line) + ": unknown key '" +
                           full + "'");
  };

  if (section == "radar") {
    if (key == "carrier_freq") config.radar.carrier_freq = parse_double(value, full, line);
    else if (key == "bistatic_angle") config.radar.bistatic_angle = parse_double(value, full, line) * kDegToRad;
    else if (key == "dt") config.radar.dt = parse_double(value, full, line);
    else unknown();
  } else if (section == "spectrum") {
    if (key == "bragg_amplitude_pos") config.spectrum.bragg_amplitude_pos = parse_double(value, full, line);
    else if (key == "bragg_amplitude_neg") config.spectrum.bragg_amplitude_neg = parse_double(value, full, line);
    else if (key == "line_width") config.spectrum.line_width = parse_double(value, full, line);
    else if (key == "continuum_db") config.spectrum.continuum_db = parse_double(value, full, line);
    else if (key == "bumps") {
      config.spectrum.bumps.clear();
      for (const std::string& entry : split(value, ';')) {
        if (entry.empty()) continue;
        const auto parts = split(entry, '/');
        if (parts.size() != 3)
          throw ConfigParseError("line " + std::to_string(line) + ": key '" + full +
                                 "': bump entries are offset/width/level_db");
        config.spectrum.bumps.push_back({parse_double(parts[0], full, line),
                                         parse_double(parts[1], full, line),
                                         parse_double(parts[2], full, line)});
      }
    } else unknown();
  } else if (section == "estimation") {
    if (key == "method") config.method = parse_method(value, full, line);
    else if (key == "snr_threshold") config.policy.snr_threshold_db = parse_double(value, full, line);
    else if (key == "symmetry_tolerance") config.policy.symmetry_tolerance = parse_double(value, full, line);
    else if (key == "max_abs_current") config.policy.max_abs_current = parse_double(value, full, line);
    else if (key == "eval_bins") config.eval_bins = parse_size(value, full, line);
    else if (key == "ar_order") config.ar_order = parse_size(value, full, line);
    else if (key == "window_len") config.window_len = parse_size(value, full, line);
    else if (key == "hop") config.hop = parse_size(value, full, line);
    else if (key == "fit_lo_cph") config.fit_lo_cph = parse_double(value, full, line);
    else if (key == "fit_hi_cph") config.fit_hi_cph = parse_double(value, full, line);
    else unknown();
  } else if (section == "sweep") {
    if (key == "orders") {
      config.orders.clear();
      for (const std::string& entry : split(value, ','))
        if (!entry.empty()) config.orders.push_back(parse_size(entry, full, line));
    } else if (key == "alphas") {
      config.alphas.clear();
      for (const std::string& entry : split(value, ','))
        if (!entry.empty()) config.alphas.push_back(parse_double(entry, full, line));
    }
    else if (key == "trials") config.trials = parse_size(value, full, line);
    else if (key == "seed") config.seed = parse_size(value, full, line);
    else if (key == "ur") config.u_r = parse_double(value, full, line);
    else if (key == "alpha") config.alpha = parse_double(value, full, line);
    else if (key == "n") config.n_samples = parse_size(value, full, line);
    else if (key == "grid_ranges") config.grid_ranges = parse_size(value, full, line);
    else if (key == "grid_azimuths") config.grid_azimuths = parse_size(value, full, line);
    else if (key == "noise_cell_fraction") config.noise_cell_fraction = parse_double(value, full, line);
    else unknown();
  } else if (section == "io") {
    if (key == "input") config.input = value;
    else if (key == "output") config.output = value;
    else if (key == "format") {
      if (value == "csv") config.format = IqFormat::csv;
      else if (value == "raw-f32") config.format = IqFormat::raw_f32;
      else throw ConfigParseError("line " + std::to_string(line) + ": key '" + full +
                                  "': expected csv or raw-f32, got '" + value + "'");
    } else unknown();
  } else {
    unknown();
  }
}

void validate(const RunConfig& config) {
  auto fail = [](const std::string& msg) { throw ConfigParseError(msg); };
  if (config.radar.carrier_freq <= 0.0) fail("radar.carrier_freq must be > 0");
  if (std::cos(config.radar.bistatic_angle) <= 0.0)
    fail("radar.bistatic_angle must lie in [0, 90) degrees");
  if (config.radar.dt <= 0.0) fail("radar.dt must be > 0");
  if (config.spectrum.bragg_amplitude_pos <= 0.0 ||
      config.spectrum.bragg_amplitude_neg <= 0.0)
    fail("spectrum.bragg_amplitude_* must be > 0");
  if (config.spectrum.line_width < 0.0) fail("spectrum.line_width must be >= 0");
  for (const auto& bump : config.spectrum.bumps) {
    if (bump.level_db >= 0.0) fail("spectrum.bumps levels must be < 0 dB");
    if (bump.width_hz <= 0.0) fail("spectrum.bumps widths must be > 0");
  }
  if (config.policy.snr_threshold_db <= 0.0) fail("estimation.snr_threshold must be > 0");
  if (config.policy.symmetry_tolerance <= 0.0)
    fail("estimation.symmetry_tolerance must be > 0");
  if (config.policy.max_abs_current <= 0.0)
    fail("estimation.max_abs_current must be > 0");
  if (config.eval_bins < 16) fail("estimation.eval_bins must be >= 16");
  if (config.fit_lo_cph <= 0.0 || config.fit_hi_cph <= config.fit_lo_cph)
    fail("estimation.fit_lo_cph/fit_hi_cph must satisfy 0 < lo < hi");
  if (config.trials == 0) fail("sweep.trials must be >= 1");
  if (config.n_samples == 0) fail("sweep.n must be >= 1");
  if (config.noise_cell_fraction < 0.0 || config.noise_cell_fraction > 1.0)
    fail("sweep.noise_cell_fraction must be in [0, 1]");
  if (config.grid_ranges == 0 || config.grid_azimuths == 0)
    fail("sweep.grid_ranges and sweep.grid_azimuths must be >= 1");
}

void write_lines(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw FormatError("write failure on '" + path + "'");
}

std::string config_header(const RunConfig& config) {
  std::ostringstream out;
  std::istringstream in(format_config(config));
  std::string line;
  while (std::getline(in, line)) out << "# " << line << "\n";
  return out.str();
}

struct CsvFile {
  std::vector<std::string> header_meta;  // '#'-prefixed lines, stripped
  std::vector<std::vector<std::string>> rows;
  std::string columns;
};

CsvFile read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'");
  CsvFile file;
  std::string line;
  bool have_columns = false;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    if (line[0] == '#') {
      file.header_meta.push_back(trim(line.substr(1)));
      continue;
    }
    if (!have_columns) {
      file.columns = line;
      have_columns = true;
      continue;
    }
    file.rows.push_back(split(line, ','));
  }
  return file;
}

double row_num(const std::vector<std::string>& row, std::size_t col,
               const std::string& path) {
  if (col >= row.size()) throw FormatError(path + ": missing column");
  try {
    return std::stod(row[col]);
  } catch (const std::exception&) {
    throw FormatError(path + ": bad numeric field '" + row[col] + "'");
  }
}

// Pulls "key = value" out of the stripped header lines.
std::string header_value(const CsvFile& file, const std::string& key) {
  for (const auto& line : file.header_meta) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    if (trim(line.substr(0, eq)) == key) return trim(line.substr(eq + 1));
  }
  return "";
}

}  // namespace

SimParams RunConfig::sim_params() const {
  SimParams params;
  params.radar = radar;
  params.spectrum = spectrum;
  params.u_r = u_r;
  params.n_samples = n_samples;
  params.alpha = alpha;
  params.policy = policy;
  params.eval_bins = eval_bins;
  return params;
}

EstimateOptions RunConfig::estimate_options() const {
  EstimateOptions options;
  options.method = method;
  options.eval_bins = eval_bins;
  options.ar_order = ar_order;
  return options;
}

RunConfig parse_config(const std::string& text) {
  RunConfig config;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigParseError("line " + std::to_string(line_no) +
                               ": unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "radar" && section != "spectrum" && section != "estimation" &&
          section != "sweep" && section != "io")
        throw ConfigParseError("line " + std::to_string(line_no) +
                               ": unknown section '" + section + "'");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigParseError("line " + std::to_string(line_no) +
                             ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigParseError("line " + std::to_string(line_no) + ": empty key");
    apply_key(config, section, key, value, line_no);
  }
  validate(config);
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigParseError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string format_config(const RunConfig& config) {
  std::ostringstream out;
  out << "[radar]\n";
  out << "carrier_freq = " << fmt_num(config.radar.carrier_freq) << "\n";
  out << "bistatic_angle = " << fmt_num(config.radar.bistatic_angle / kDegToRad)
      << "\n";
  out << "dt = " << fmt_num(config.radar.dt) << "\n";
  out << "[spectrum]\n";
  out << "bragg_amplitude_pos = " << fmt_num(config.spectrum.bragg_amplitude_pos)
      << "\n";
  out << "bragg_amplitude_neg = " << fmt_num(config.spectrum.bragg_amplitude_neg)
      << "\n";
  out << "line_width = " << fmt_num(config.spectrum.line_width) << "\n";
  out << "continuum_db = " << fmt_num(config.spectrum.continuum_db) << "\n";
  out << "bumps = ";
  for (std::size_t i = 0; i < config.spectrum.bumps.size(); ++i) {
    const auto& bump = config.spectrum.bumps[i];
    if (i) out << "; ";
    out << fmt_num(bump.offset_hz) << "/" << fmt_num(bump.width_hz) << "/"
        << fmt_num(bump.level_db);
  }
  out << "\n";
  out << "[estimation]\n";
  out << "method = " << method_name(config.method) << "\n";
  out << "snr_threshold = " << fmt_num(config.policy.snr_threshold_db) << "\n";
  out << "symmetry_tolerance = " << fmt_num(config.policy.symmetry_tolerance)
      << "\n";
  out << "max_abs_current = " << fmt_num(config.policy.max_abs_current) << "\n";
  out << "eval_bins = " << config.eval_bins << "\n";
  out << "ar_order = " << config.ar_order << "\n";
  out << "window_len = " << config.window_len << "\n";
  out << "hop = " << config.hop << "\n";
  out << "fit_lo_cph = " << fmt_num(config.fit_lo_cph) << "\n";
  out << "fit_hi_cph = " << fmt_num(config.fit_hi_cph) << "\n";
  out << "[sweep]\n";
  out << "orders = ";
  for (std::size_t i = 0; i < config.orders.size(); ++i)
    out << (i ? ", " : "") << config.orders[i];
  out << "\n";
  out << "alphas = ";
  for (std::size_t i = 0; i < config.alphas.size(); ++i)
    out << (i ? ", " : "") << fmt_num(config.alphas[i]);
  out << "\n";
  out << "trials = " << config.trials << "\n";
  out << "seed = " << config.seed << "\n";
  out << "ur = " << fmt_num(config.u_r) << "\n";
  out << "alpha = " << fmt_num(config.alpha) << "\n";
  out << "n = " << config.n_samples << "\n";
  out << "grid_ranges = " << config.grid_ranges << "\n";
  out << "grid_azimuths = " << config.grid_azimuths << "\n";
  out << "noise_cell_fraction = " << fmt_num(config.noise_cell_fraction) << "\n";
  out << "[io]\n";
  out << "input = " << config.input << "\n";
  out << "output = " << config.output << "\n";
  out << "format = " << (config.format == IqFormat::csv ? "csv" : "raw-f32")
      << "\n";
  return out.str();
}

ComplexTimeSeries read_iq(const std::string& path, IqFormat format, double raw_dt) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'");

  ComplexTimeSeries series;
  if (format == IqFormat::raw_f32) {
    static_assert(std::endian::native == std::endian::little,
                  "raw-f32 reader assumes a little-endian host");
    if (raw_dt <= 0.0) throw FormatError("raw-f32: dt must be > 0");
    series.dt = raw_dt;
    std::vector<char> bytes((std::istreambuf_iterator<char>(in)),
                            std::istreambuf_iterator<char>());
    if (bytes.size() % 8 != 0)
      throw FormatError(path + ": truncated I/Q pair at byte " +
                        std::to_string(bytes.size() - bytes.size() % 8));
    const std::size_t pairs = bytes.size() / 8;
    series.samples.reserve(pairs);
    for (std::size_t i = 0; i < pairs; ++i) {
      float re = 0.0f;
      float im = 0.0f;
      std::memcpy(&re, bytes.data() + 8 * i, 4);
      std::memcpy(&im, bytes.data() + 8 * i + 4, 4);
      if (!std::isfinite(re) || !std::isfinite(im))
        throw FormatError(path + ": non-finite sample at byte " +
                          std::to_string(8 * i));
      series.samples.emplace_back(re, im);
    }
    if (series.samples.empty()) throw FormatError(path + ": empty IQ file");
    return series;
  }

  std::string line;
  if (!std::getline(in, line) || trim(line) != "t,i,q")
    throw FormatError(path + ": line 1: expected header 't,i,q'");
  std::vector<double> times;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split(trim(line), ',');
    if (fields.size() != 3)
      throw FormatError(path + ": line " + std::to_string(line_no) +
                        ": expected 3 fields");
    double t = 0.0, re = 0.0, im = 0.0;
    try {
      t = std::stod(fields[0]);
      re = std::stod(fields[1]);
      im = std::stod(fields[2]);
    } catch (const std::exception&) {
      throw FormatError(path + ": line " + std::to_string(line_no) +
                        ": bad numeric field");
    }
    if (!std::isfinite(t) || !std::isfinite(re) || !std::isfinite(im))
      throw FormatError(path + ": line " + std::to_string(line_no) +
                        ": non-finite sample");
    times.push_back(t);
    series.samples.emplace_back(re, im);
  }
  if (series.samples.size() < 2)
    throw FormatError(path + ": need at least 2 rows to infer dt");
  series.t0 = times.front();
  series.dt = times[1] - times[0];
  if (series.dt <= 0.0)
    throw FormatError(path + ": timestamps must be strictly increasing");
  for (std::size_t k = 1; k < times.size(); ++k) {
    const double step = times[k] - times[k - 1];
    if (std::abs(step - series.dt) > 1e-6 * series.dt)
      throw FormatError(path + ": line " + std::to_string(k + 2) +
                        ": non-uniform timestamp");
  }
  return series;
}

void write_iq(const ComplexTimeSeries& series, const std::string& path,
              IqFormat format) {
  if (format == IqFormat::raw_f32) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot open '" + path + "' for writing");
    for (const auto& s : series.samples) {
      const float re = static_cast<float>(s.real());
      const float im = static_cast<float>(s.imag());
      out.write(reinterpret_cast<const char*>(&re), 4);
      out.write(reinterpret_cast<const char*>(&im), 4);
    }
    if (!out) throw FormatError("write failure on '" + path + "'");
    return;
  }
  std::ostringstream out;
  out << "t,i,q\n";
  for (std::size_t k = 0; k < series.samples.size(); ++k) {
    const double t = series.t0 + static_cast<double>(k) * series.dt;
    out << fmt_num(t) << "," << fmt_num(series.samples[k].real()) << ","
        << fmt_num(series.samples[k].imag()) << "\n";
  }
  write_lines(path, out.str());
}

void write_report(const SweepReport& report, const RunConfig& config,
                  const std::string& path) {
  std::ostringstream out;
  out << config_header(config);
  out << "# report.method = " << method_name(report.method) << "\n";
  out << "axis,success_rate_pct,nrmse_pct,trials\n";
  for (std::size_t i = 0; i < report.axis.size(); ++i)
    out << fmt_num(report.axis[i]) << "," << fmt_num(report.success_rate_pct[i])
        << "," << fmt_num(report.nrmse_pct[i]) << "," << report.trials << "\n";
  write_lines(path, out.str());
}

void write_report(const CurrentMap& map, const RunConfig& config,
                  const std::string& path) {
  std::ostringstream out;
  out << config_header(config);
  out << "# report.coverage_pct = " << fmt_num(map.coverage_pct) << "\n";
  out << "range_idx,azimuth_idx,u_r,qc,snr_plus,snr_minus\n";
  for (const auto& cell : map.cells) {
    const auto& est = cell.estimate;
    out << cell.range_idx << "," << cell.azimuth_idx << ",";
    if (est.qc.pass)
      out << fmt_num(*est.u_r) << ",pass,";
    else
      out << "," << qc_reason_name(est.qc.reason) << ",";
    out << fmt_num(est.snr_plus_db) << "," << fmt_num(est.snr_minus_db) << "\n";
  }
  write_lines(path, out.str());
}

void write_report(const CurrentTrack& track, const RunConfig& config,
                  const std::string& path) {
  std::ostringstream out;
  out << config_header(config);
  out << "# track.window_len = " << track.window_len << "\n";
  out << "# track.hop = " << track.hop << "\n";
  out << "# track.method = " << method_name(track.method) << "\n";
  out << "t_s,u_r,qc\n";
  for (std::size_t i = 0; i < track.times.size(); ++i) {
    out << fmt_num(track.times[i]) << ",";
    if (track.u_r[i])
      out << fmt_num(*track.u_r[i]) << ",pass\n";
    else
      out << "," << qc_reason_name(track.qc_reason[i]) << "\n";
  }
  write_lines(path, out.str());
}

void write_report(const PowerSpectrum& spectrum, const RunConfig& config,
                  const std::string& path) {
  std::ostringstream out;
  out << config_header(config);
  out << "# spectrum.estimator = " << method_name(spectrum.estimator) << "\n";
  out << "freq_hz,psd\n";
  for (std::size_t i = 0; i < spectrum.freqs.size(); ++i)
    out << fmt_num(spectrum.freqs[i]) << "," << fmt_num(spectrum.values[i]) << "\n";
  write_lines(path, out.str());
}

SweepReport read_sweep_report(const std::string& path) {
  const CsvFile file = read_csv(path);
  SweepReport report;
  report.method = header_value(file, "report.method") == "fft"
                      ? SpectralMethod::periodogram
                      : SpectralMethod::ar_mem;
  for (const auto& row : file.rows) {
    report.axis.push_back(row_num(row, 0, path));
    report.success_rate_pct.push_back(row_num(row, 1, path));
    report.nrmse_pct.push_back(row_num(row, 2, path));
    report.trials = static_cast<std::size_t>(row_num(row, 3, path));
  }
  return report;
}

CurrentMap read_map_report(const std::string& path) {
  const CsvFile file = read_csv(path);
  CurrentMap map;
  std::size_t passes = 0;
  for (const auto& row : file.rows) {
    if (row.size() != 6) throw FormatError(path + ": expected 6 columns");
    CurrentMap::Cell cell;
    cell.range_idx = static_cast<std::size_t>(row_num(row, 0, path));
    cell.azimuth_idx = static_cast<std::size_t>(row_num(row, 1, path));
    cell.estimate.qc.pass = row[3] == "pass";
    cell.estimate.qc.reason = parse_reason(row[3]);
    if (cell.estimate.qc.pass) {
      cell.estimate.u_r = row_num(row, 2, path);
      ++passes;
    } else if (!row[2].empty()) {
      throw FormatError(path + ": u_r must be empty for QC-failed cells");
    }
    cell.estimate.snr_plus_db = row_num(row, 4, path);
    cell.estimate.snr_minus_db = row_num(row, 5, path);
    map.cells.push_back(cell);
  }
  map.coverage_pct = map.cells.empty()
                         ? 0.0
                         : 100.0 * static_cast<double>(passes) /
                               static_cast<double>(map.cells.size());
  return map;
}

CurrentTrack read_track_report(const std::string& path) {
  const CsvFile file = read_csv(path);
  CurrentTrack track;
  const std::string wl = header_value(file, "track.window_len");
  const std::string hop = header_value(file, "track.hop");
  if (!wl.empty()) track.window_len = static_cast<std::size_t>(std::stoull(wl));
  if (!hop.empty()) track.hop = static_cast<std::size_t>(std::stoull(hop));
  track.method = header_value(file, "track.method") == "fft"
                     ? SpectralMethod::periodogram
                     : SpectralMethod::ar_mem;
  for (const auto& row : file.rows) {
    if (row.size() != 3) throw FormatError(path + ": expected 3 columns");
    track.times.push_back(row_num(row, 0, path));
    if (row[2] == "pass") {
      track.u_r.push_back(row_num(row, 1, path));
      track.qc_reason.push_back(QcReason::none);
    } else {
      track.u_r.push_back(std::nullopt);
      track.qc_reason.push_back(parse_reason(row[2]));
    }
  }
  return track;
}

PowerSpectrum read_spectrum_report(const std::string& path) {
  const CsvFile file = read_csv(path);
  PowerSpectrum spectrum;
  spectrum.estimator = header_value(file, "spectrum.estimator") == "armem"
                           ? SpectralMethod::ar_mem
                           : SpectralMethod::periodogram;
  for (const auto& row : file.rows) {
    spectrum.freqs.push_back(row_num(row, 0, path));
    spectrum.values.push_back(row_num(row, 1, path));
  }
  return spectrum;
}

}  // namespace hfcur
