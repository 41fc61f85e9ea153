// io.hpp — CSV, JSON, and binary persistence for trajectories, spectra, and
// synchronization reports. Doubles are printed with 17 significant digits so
// seeded runs are byte-reproducible.

#pragma once

#include <bit>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ctc/liouvillian.hpp"
#include "ctc/sync.hpp"

namespace ctc {

using json = nlohmann::json;

namespace detail {

// Shortest representation that round-trips exactly.
inline std::string fmt(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline std::ofstream open_out(const std::string& path, std::ios_base::openmode mode = {}) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, mode | std::ios_base::out);
  if (!out) throw ValidationError("cannot open for writing: " + path);
  return out;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  return fields;
}

}  // namespace detail

// ------------------------------------------------------- trajectories ------

// Columns: t, then mx_a, my_a, mz_a for each CTC a.
inline void write_trajectory_csv(const std::string& path, const TrajectoryRecord& rec) {
  auto out = detail::open_out(path);
  out << "t";
  for (int a = 0; a < rec.n_ctc; ++a)
    out << ",mx_" << a << ",my_" << a << ",mz_" << a;
  out << "\n";
  for (long i = 0; i < rec.samples(); ++i) {
    out << detail::fmt(rec.times(i));
    for (int a = 0; a < rec.n_ctc; ++a)
      out << ',' << detail::fmt(rec.states(i, a)) << ','
          << detail::fmt(rec.states(i, rec.n_ctc + a)) << ','
          << detail::fmt(rec.states(i, 2 * rec.n_ctc + a));
    out << "\n";
  }
}

// Accepts the full layout above or a reduced "t,mz_0,mz_1,..." layout; in the
// reduced form mx/my are filled with zeros.
inline TrajectoryRecord read_trajectory_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open trajectory file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw ValidationError("empty trajectory file: " + path);
  const auto header = detail::split_csv_line(line);
  if (header.empty() || header[0] != "t")
    throw ValidationError("trajectory file must start with a 't' column: " + path);

  bool full = false;
  int n = 0;
  if (header.size() >= 4 && header[1].rfind("mx_", 0) == 0) {
    if ((header.size() - 1) % 3 != 0)
      throw ValidationError("malformed trajectory header in " + path);
    full = true;
    n = static_cast<int>((header.size() - 1) / 3);
  } else {
    n = static_cast<int>(header.size() - 1);
    if (n < 1) throw ValidationError("trajectory file has no data columns: " + path);
  }

  std::vector<double> times;
  std::vector<double> values;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = detail::split_csv_line(line);
    if (fields.size() != header.size())
      throw ValidationError("ragged row in trajectory file: " + path);
    times.push_back(std::stod(fields[0]));
    for (std::size_t k = 1; k < fields.size(); ++k) values.push_back(std::stod(fields[k]));
  }
  if (times.size() < 2) throw ValidationError("trajectory file has fewer than 2 rows: " + path);

  TrajectoryRecord rec;
  rec.n_ctc = n;
  rec.times = Eigen::Map<const VectorXd>(times.data(), static_cast<long>(times.size()));
  rec.states = MatrixXd::Zero(static_cast<long>(times.size()), 3 * n);
  const std::size_t stride = header.size() - 1;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (full) {
      for (int a = 0; a < n; ++a) {
        rec.states(static_cast<long>(i), a) = values[i * stride + 3 * a];
        rec.states(static_cast<long>(i), n + a) = values[i * stride + 3 * a + 1];
        rec.states(static_cast<long>(i), 2 * n + a) = values[i * stride + 3 * a + 2];
      }
    } else {
      for (int a = 0; a < n; ++a)
        rec.states(static_cast<long>(i), 2 * n + a) = values[i * stride + static_cast<std::size_t>(a)];
    }
  }
  rec.norm_drift = VectorXd::Zero(n);
  return rec;
}

// Compact columnar dump: 8-byte magic "CTCTRJ1\0", then uint64 n_ctc and
// uint64 n_samples, then little-endian float64 arrays: t, and per CTC mx, my,
// mz (each of length n_samples).
inline constexpr char kTrajectoryMagic[8] = {'C', 'T', 'C', 'T', 'R', 'J', '1', '\0'};

inline void write_trajectory_binary(const std::string& path, const TrajectoryRecord& rec) {
  static_assert(std::endian::native == std::endian::little,
                "binary trajectory layout assumes a little-endian host");
  auto out = detail::open_out(path, std::ios_base::binary);
  out.write(kTrajectoryMagic, 8);
  const std::uint64_t n = static_cast<std::uint64_t>(rec.n_ctc);
  const std::uint64_t samples = static_cast<std::uint64_t>(rec.samples());
  out.write(reinterpret_cast<const char*>(&n), 8);
  out.write(reinterpret_cast<const char*>(&samples), 8);
  auto write_col = [&out, samples](const VectorXd& v) {
    out.write(reinterpret_cast<const char*>(v.data()),
              static_cast<std::streamsize>(samples * sizeof(double)));
  };
  write_col(rec.times);
  for (int a = 0; a < rec.n_ctc; ++a) {
    write_col(rec.mx_series(a).eval());
    write_col(rec.my_series(a).eval());
    write_col(rec.mz_series(a).eval());
  }
}

inline TrajectoryRecord read_trajectory_binary(const std::string& path) {
  std::ifstream in(path, std::ios_base::binary);
  if (!in) throw ValidationError("cannot open trajectory file: " + path);
  char magic[8];
  in.read(magic, 8);
  if (!in || std::string(magic, 8) != std::string(kTrajectoryMagic, 8))
    throw ValidationError("bad magic in binary trajectory: " + path);
  std::uint64_t n = 0, samples = 0;
  in.read(reinterpret_cast<char*>(&n), 8);
  in.read(reinterpret_cast<char*>(&samples), 8);
  if (!in || n == 0 || samples < 2)
    throw ValidationError("bad header in binary trajectory: " + path);

  TrajectoryRecord rec;
  rec.n_ctc = static_cast<int>(n);
  rec.times.resize(static_cast<long>(samples));
  rec.states.resize(static_cast<long>(samples), static_cast<long>(3 * n));
  auto read_col = [&in, samples, &path](double* dst) {
    in.read(reinterpret_cast<char*>(dst),
            static_cast<std::streamsize>(samples * sizeof(double)));
    if (!in) throw ValidationError("truncated binary trajectory: " + path);
  };
  read_col(rec.times.data());
  VectorXd col(static_cast<long>(samples));
  for (std::uint64_t a = 0; a < n; ++a) {
    read_col(col.data());
    rec.states.col(static_cast<long>(a)) = col;
    read_col(col.data());
    rec.states.col(static_cast<long>(n + a)) = col;
    read_col(col.data());
    rec.states.col(static_cast<long>(2 * n + a)) = col;
  }
  rec.norm_drift = VectorXd::Zero(static_cast<long>(n));
  return rec;
}

// ------------------------------------------------------------ spectra ------

// One row per eigenvalue: N, J, m, Re, Im, is_dominant. The dominant flag
// marks the globally dominant nonzero eigenvalue.
inline void write_spectrum_csv(const std::string& path, const SpaceSpectrum& space) {
  auto out = detail::open_out(path);
  out << "N,J,m,re_lambda,im_lambda,is_dominant\n";
  for (std::size_t s = 0; s < space.per_sector.size(); ++s) {
    const SpectralResult& res = space.per_sector[s];
    bool marked = false;
    for (long k = 0; k < res.eigenvalues.size(); ++k) {
      const cxd ev = res.eigenvalues(k);
      const bool dominant = !marked && s == space.dominant_index && res.lambda1 &&
                            ev == *res.lambda1;
      if (dominant) marked = true;
      out << res.sector.n_particles << ',' << detail::fmt(res.sector.j()) << ','
          << detail::fmt(res.sector.m()) << ',' << detail::fmt(ev.real()) << ','
          << detail::fmt(ev.imag()) << ',' << (dominant ? 1 : 0) << "\n";
    }
  }
}

// Per-sector summary table: one row per spin-J block.
inline void write_sector_summary_csv(const std::string& path, const SpaceSpectrum& space) {
  auto out = detail::open_out(path);
  out << "N,J,m,multiplicity,re_lambda1,im_lambda1,gap,n_stationary,is_dominant_sector\n";
  for (std::size_t s = 0; s < space.per_sector.size(); ++s) {
    const SpectralResult& res = space.per_sector[s];
    out << res.sector.n_particles << ',' << detail::fmt(res.sector.j()) << ','
        << detail::fmt(res.sector.m()) << ','
        << (res.sector.multiplicity ? std::to_string(*res.sector.multiplicity) : "")
        << ',' << (res.lambda1 ? detail::fmt(res.lambda1->real()) : "")
        << ',' << (res.lambda1 ? detail::fmt(res.lambda1->imag()) : "")
        << ',' << (res.lambda1 ? detail::fmt(res.gap()) : "")
        << ',' << res.n_stationary << ',' << (s == space.dominant_index ? 1 : 0) << "\n";
  }
}

inline json spectral_summary_json(const std::vector<SpaceSpectrum>& scans) {
  json points = json::array();
  for (const auto& space : scans) {
    const SpectralResult& dom = space.dominant();
    points.push_back({{"N", dom.sector.n_particles},
                      {"two_j", dom.sector.two_j},
                      {"m", dom.sector.m()},
                      {"re_lambda1", dom.lambda1->real()},
                      {"im_lambda1", dom.lambda1->imag()},
                      {"gap", dom.gap()}});
  }
  return json{{"points", points}};
}

// ------------------------------------------------------------ matrices -----

// Matrix with axis headers: first row is the column axis, first column the
// row axis; the top-left cell holds "row_label\col_label".
inline void write_matrix_csv(const std::string& path, const MatrixXd& m,
                             const std::vector<double>& row_axis,
                             const std::vector<double>& col_axis,
                             const std::string& row_label, const std::string& col_label) {
  if (m.rows() != static_cast<long>(row_axis.size()) ||
      m.cols() != static_cast<long>(col_axis.size()))
    throw ValidationError("write_matrix_csv: axis lengths do not match the matrix");
  auto out = detail::open_out(path);
  out << row_label << '\\' << col_label;
  for (double c : col_axis) out << ',' << detail::fmt(c);
  out << "\n";
  for (long i = 0; i < m.rows(); ++i) {
    out << detail::fmt(row_axis[static_cast<std::size_t>(i)]);
    for (long j = 0; j < m.cols(); ++j) out << ',' << detail::fmt(m(i, j));
    out << "\n";
  }
}

inline void write_plain_matrix_csv(const std::string& path, const MatrixXd& m) {
  auto out = detail::open_out(path);
  for (long i = 0; i < m.rows(); ++i) {
    for (long j = 0; j < m.cols(); ++j) out << (j ? "," : "") << detail::fmt(m(i, j));
    out << "\n";
  }
}

// Per-CTC FFT magnitude spectra: freq column then one column per CTC.
inline void write_spectra_csv(const std::string& path,
                              const std::vector<FrequencySpectrum>& freqs) {
  if (freqs.empty()) throw ValidationError("write_spectra_csv: no spectra");
  auto out = detail::open_out(path);
  out << "freq";
  for (std::size_t a = 0; a < freqs.size(); ++a) out << ",mag_" << a;
  out << "\n";
  const long bins = freqs[0].freq.size();
  for (long k = 0; k < bins; ++k) {
    out << detail::fmt(freqs[0].freq(k));
    for (const auto& fs : freqs) out << ',' << detail::fmt(fs.magnitude(k));
    out << "\n";
  }
}

// ------------------------------------------------------------- reports -----

inline json thresholds_to_json(const SyncThresholds& th) {
  return json{{"eps_lambda", th.eps_lambda},
              {"edge", th.edge},
              {"complete_cbar", th.complete_cbar},
              {"unsync_cbar", th.unsync_cbar},
              {"dead_var", th.dead_var},
              {"cluster_cover", th.cluster_cover},
              {"min_cluster_size", th.min_cluster_size}};
}

inline SyncThresholds thresholds_from_json(const json& j) {
  SyncThresholds th;
  th.eps_lambda = j.value("eps_lambda", th.eps_lambda);
  th.edge = j.value("edge", th.edge);
  th.complete_cbar = j.value("complete_cbar", th.complete_cbar);
  th.unsync_cbar = j.value("unsync_cbar", th.unsync_cbar);
  th.dead_var = j.value("dead_var", th.dead_var);
  th.cluster_cover = j.value("cluster_cover", th.cluster_cover);
  th.min_cluster_size = j.value("min_cluster_size", th.min_cluster_size);
  return th;
}

// Row-major Pearson matrix plus window metadata and the thresholds used.
// Spectra are bulky and are exported separately as CSV when needed.
inline json sync_report_to_json(const SyncReport& report, bool include_spectra = false) {
  const long n = report.pearson.rows();
  json pearson = json::array();
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) pearson.push_back(report.pearson(i, j));

  json f_peaks = json::array();
  for (const auto& fs : report.freqs) f_peaks.push_back(fs.f_peak);

  json dead = json::array();
  for (bool d : report.dead) dead.push_back(d);

  json j{{"n_ctc", n},
         {"pearson_row_major", pearson},
         {"mean_pearson", report.cbar},
         {"f_peaks", f_peaks},
         {"dead", dead},
         {"lambda", report.lambda},
         {"regime", regime_name(report.regime)},
         {"clusters", report.clusters},
         {"window", {{"t0", report.window_t0}, {"t1", report.window_t1}}},
         {"thresholds", thresholds_to_json(report.thresholds)},
         {"version", kVersion}};
  if (include_spectra) {
    json spectra = json::array();
    for (const auto& fs : report.freqs) {
      json mag = json::array();
      for (long k = 0; k < fs.magnitude.size(); ++k) mag.push_back(fs.magnitude(k));
      spectra.push_back(mag);
    }
    json axis = json::array();
    if (!report.freqs.empty())
      for (long k = 0; k < report.freqs[0].freq.size(); ++k)
        axis.push_back(report.freqs[0].freq(k));
    j["spectra"] = spectra;
    j["freq_axis"] = axis;
  }
  return j;
}

inline void write_json(const std::string& path, const json& j) {
  auto out = detail::open_out(path);
  out << j.dump(2) << "\n";
}

inline json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open JSON file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ValidationError("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace ctc
