// Copyright 2026 The eigenfid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "eigenfid/io.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "eigenfid/error.hpp"

#ifndef EIGENFID_VERSION
#define EIGENFID_VERSION "0.1.0"
#endif

namespace eigenfid {

namespace {

using nlohmann::json;

[[noreturn]] void fail(ErrorCode code, const std::string& ptr, const std::string& what) {
  throw Error(code, (ptr.empty() ? std::string("/") : ptr) + ": " + what);
}

json parse_json(const std::string& text, ErrorCode code) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(code, std::string("/: invalid JSON (") + e.what() + ")");
  }
}

void reject_unknown(const json& obj, const std::string& ptr, std::initializer_list<const char*> known,
                    ErrorCode code) {
  if (!obj.is_object()) fail(code, ptr, "expected an object");
  for (const auto& item : obj.items()) {
    bool found = false;
    for (const char* k : known) found = found || item.key() == k;
    if (!found) fail(code, ptr + "/" + item.key(), "unknown field");
  }
}

double as_number(const json& j, const std::string& ptr, ErrorCode code) {
  if (!j.is_number()) fail(code, ptr, "expected a number");
  return j.get<double>();
}

long long as_integer(const json& j, const std::string& ptr, ErrorCode code) {
  if (!j.is_number_integer()) fail(code, ptr, "expected an integer");
  return j.get<long long>();
}

std::string as_string(const json& j, const std::string& ptr, ErrorCode code) {
  if (!j.is_string()) fail(code, ptr, "expected a string");
  return j.get<std::string>();
}

std::vector<double> as_number_grid(const json& j, const std::string& ptr, ErrorCode code) {
  if (j.is_number()) return {j.get<double>()};
  if (!j.is_array()) fail(code, ptr, "expected a number or an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_number(j[i], ptr + "/" + std::to_string(i), code));
  return out;
}

std::vector<int> as_integer_grid(const json& j, const std::string& ptr, ErrorCode code) {
  if (j.is_number_integer()) return {j.get<int>()};
  if (!j.is_array()) fail(code, ptr, "expected an integer or an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(static_cast<int>(as_integer(j[i], ptr + "/" + std::to_string(i), code)));
  }
  return out;
}

cplx as_complex(const json& j, const std::string& ptr, ErrorCode code) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) fail(code, ptr, "expected [re, im] or a real number");
  return {as_number(j[0], ptr + "/0", code), as_number(j[1], ptr + "/1", code)};
}

CVector as_complex_vector(const json& j, const std::string& ptr, ErrorCode code) {
  if (!j.is_array() || j.empty()) fail(code, ptr, "expected a non-empty array");
  CVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = as_complex(j[i], ptr + "/" + std::to_string(i), code);
  return v;
}

CMatrix as_complex_matrix(const json& j, const std::string& ptr, ErrorCode code) {
  if (!j.is_array() || j.empty()) fail(code, ptr, "expected a non-empty array of rows");
  const auto n = j.size();
  CMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < n; ++r) {
    const std::string rp = ptr + "/" + std::to_string(r);
    if (!j[r].is_array() || j[r].size() != n) fail(code, rp, "expected a row of length " + std::to_string(n));
    for (std::size_t c = 0; c < n; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = as_complex(j[r][c], rp + "/" + std::to_string(c), code);
    }
  }
  return m;
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

void check_schema(const json& root, ErrorCode code) {
  if (!root.is_object()) fail(code, "", "expected a JSON object");
  if (!root.contains("schema")) fail(code, "/schema", "missing (expected 1)");
  if (!root["schema"].is_number_integer() || root["schema"].get<long long>() != 1) {
    fail(code, "/schema", "unsupported schema version (expected 1)");
  }
}

SweepMode mode_from_string(const std::string& s, const std::string& ptr) {
  if (s == "scaling") return SweepMode::Scaling;
  if (s == "concat") return SweepMode::Concat;
  if (s == "split") return SweepMode::Split;
  fail(ErrorCode::ConfigError, ptr, "unknown mode '" + s + "'");
}

DriveKind kind_from_string(const std::string& s, const std::string& ptr) {
  if (s == "poisson") return DriveKind::Poisson;
  if (s == "binomial") return DriveKind::Binomial;
  if (s == "fock") return DriveKind::Fock;
  if (s == "custom") return DriveKind::Custom;
  fail(ErrorCode::ConfigError, ptr, "unknown drive kind '" + s + "'");
}

json config_json(const SweepConfig& cfg) {
  json drive = {{"kind", std::string(to_string(cfg.drive.kind))}};
  if (cfg.drive.kind == DriveKind::Binomial) {
    drive["binomial_mode"] =
        cfg.drive.binomial_mode == BinomialMode::MomentMatched ? "moment_matched" : "literal";
  }
  if (cfg.drive.fock_n) drive["N"] = *cfg.drive.fock_n;
  if (cfg.drive.kind == DriveKind::Custom) {
    drive["n_min"] = cfg.drive.custom_n_min;
    json coeffs = json::array();
    for (Eigen::Index i = 0; i < cfg.drive.custom_coefficients.size(); ++i) {
      coeffs.push_back(complex_json(cfg.drive.custom_coefficients[i]));
    }
    drive["coeffs"] = coeffs;
  }
  json conventions = json::array();
  for (SplitConvention c : cfg.split_conventions) conventions.push_back(std::string(to_string(c)));
  return json{{"schema", 1},
              {"mode", std::string(to_string(cfg.mode))},
              {"drive", drive},
              {"nbar", cfg.nbar},
              {"fano", cfg.fano},
              {"tau", cfg.tau},
              {"concat", cfg.concat},
              {"ctau", cfg.ctau},
              {"split_convention", conventions},
              {"coupling", cfg.coupling},
              {"carrier", cfg.carrier},
              {"seed", cfg.seed},
              {"mc_samples", cfg.mc_samples},
              {"jobs", cfg.jobs},
              {"timing", cfg.timing},
              {"output", cfg.output}};
}

}  // namespace

const char* version_string() noexcept { return EIGENFID_VERSION; }

SweepConfig parse_sweep_config(const std::string& json_text, SweepMode mode) {
  constexpr ErrorCode kCode = ErrorCode::ConfigError;
  const json root = parse_json(json_text, kCode);
  check_schema(root, kCode);
  reject_unknown(root, "",
                 {"schema", "mode", "drive", "nbar", "fano", "tau", "concat", "ctau",
                  "split_convention", "coupling", "carrier", "seed", "mc_samples", "jobs",
                  "timing", "output"},
                 kCode);
  if (root.contains("mode") && mode_from_string(as_string(root["mode"], "/mode", kCode), "/mode") != mode) {
    fail(kCode, "/mode", "config is for '" + root["mode"].get<std::string>() + "' but the command is '" +
                             std::string(to_string(mode)) + "'");
  }
  SweepConfig cfg = default_config(mode);

  if (root.contains("drive")) {
    const json& d = root["drive"];
    reject_unknown(d, "/drive", {"kind", "nbar", "fano", "N", "n_min", "coeffs", "binomial_mode"}, kCode);
    if (!d.contains("kind")) fail(kCode, "/drive/kind", "missing");
    cfg.drive = DriveSpec{};
    cfg.drive.kind = kind_from_string(as_string(d["kind"], "/drive/kind", kCode), "/drive/kind");
    if (cfg.drive.kind == DriveKind::Poisson || cfg.drive.kind == DriveKind::Fock) cfg.fano = {1.0};
    if (d.contains("binomial_mode")) {
      const std::string m = as_string(d["binomial_mode"], "/drive/binomial_mode", kCode);
      if (m == "moment_matched") cfg.drive.binomial_mode = BinomialMode::MomentMatched;
      else if (m == "literal") cfg.drive.binomial_mode = BinomialMode::Literal;
      else fail(kCode, "/drive/binomial_mode", "expected 'moment_matched' or 'literal'");
    }
    if (d.contains("N")) {
      if (cfg.drive.kind != DriveKind::Fock) fail(kCode, "/drive/N", "only valid for fock drives");
      const long long n = as_integer(d["N"], "/drive/N", kCode);
      if (n < 0) fail(kCode, "/drive/N", "must be >= 0");
      cfg.drive.fock_n = static_cast<int>(n);
      cfg.nbar = {static_cast<double>(n)};
    }
    if (d.contains("coeffs") || d.contains("n_min")) {
      if (cfg.drive.kind != DriveKind::Custom) fail(kCode, "/drive/coeffs", "only valid for custom drives");
    }
    if (cfg.drive.kind == DriveKind::Custom) {
      if (!d.contains("coeffs")) fail(kCode, "/drive/coeffs", "missing (required for custom drives)");
      cfg.drive.custom_coefficients = as_complex_vector(d["coeffs"], "/drive/coeffs", kCode);
      if (d.contains("n_min")) {
        const long long n = as_integer(d["n_min"], "/drive/n_min", kCode);
        if (n < 0) fail(kCode, "/drive/n_min", "must be >= 0");
        cfg.drive.custom_n_min = static_cast<int>(n);
      }
      cfg.nbar = {1.0};  // placeholder: one grid point, the drive fixes its own mean
    }
    if (d.contains("nbar")) {
      if (root.contains("nbar")) fail(kCode, "/drive/nbar", "given together with /nbar");
      cfg.nbar = {as_number(d["nbar"], "/drive/nbar", kCode)};
    }
    if (d.contains("fano")) {
      if (root.contains("fano")) fail(kCode, "/drive/fano", "given together with /fano");
      cfg.fano = {as_number(d["fano"], "/drive/fano", kCode)};
    }
  }
  if (root.contains("nbar")) cfg.nbar = as_number_grid(root["nbar"], "/nbar", kCode);
  if (root.contains("fano")) cfg.fano = as_number_grid(root["fano"], "/fano", kCode);
  if (root.contains("tau")) cfg.tau = as_number_grid(root["tau"], "/tau", kCode);
  if (root.contains("concat")) cfg.concat = as_integer_grid(root["concat"], "/concat", kCode);
  if (root.contains("ctau")) cfg.ctau = as_number_grid(root["ctau"], "/ctau", kCode);
  if (root.contains("split_convention")) {
    const json& sc = root["split_convention"];
    std::vector<std::string> names;
    if (sc.is_string()) {
      names.push_back(sc.get<std::string>());
    } else if (sc.is_array()) {
      for (std::size_t i = 0; i < sc.size(); ++i) {
        names.push_back(as_string(sc[i], "/split_convention/" + std::to_string(i), kCode));
      }
    } else {
      fail(kCode, "/split_convention", "expected a string or an array of strings");
    }
    cfg.split_conventions.clear();
    for (const auto& n : names) {
      if (n == "shared_time") cfg.split_conventions.push_back(SplitConvention::SharedTime);
      else if (n == "per_pulse") cfg.split_conventions.push_back(SplitConvention::PerPulse);
      else if (n == "both") cfg.split_conventions = {SplitConvention::SharedTime, SplitConvention::PerPulse};
      else fail(kCode, "/split_convention", "expected 'shared_time', 'per_pulse' or 'both'");
    }
  }
  if (root.contains("coupling")) cfg.coupling = as_number(root["coupling"], "/coupling", kCode);
  if (root.contains("carrier")) cfg.carrier = as_number(root["carrier"], "/carrier", kCode);
  if (root.contains("seed")) {
    if (!root["seed"].is_number_unsigned() && !(root["seed"].is_number_integer() && root["seed"].get<long long>() >= 0)) {
      fail(kCode, "/seed", "expected a non-negative integer");
    }
    cfg.seed = root["seed"].get<std::uint64_t>();
  }
  if (root.contains("mc_samples")) {
    const long long n = as_integer(root["mc_samples"], "/mc_samples", kCode);
    if (n < 0) fail(kCode, "/mc_samples", "must be >= 0");
    cfg.mc_samples = static_cast<std::size_t>(n);
  }
  if (root.contains("jobs")) cfg.jobs = static_cast<int>(as_integer(root["jobs"], "/jobs", kCode));
  if (root.contains("timing")) {
    if (!root["timing"].is_boolean()) fail(kCode, "/timing", "expected true or false");
    cfg.timing = root["timing"].get<bool>();
  }
  if (root.contains("output")) cfg.output = as_string(root["output"], "/output", kCode);

  try {
    validate(cfg);
  } catch (const Error& e) {
    throw Error(ErrorCode::ConfigError, std::string("/") + e.what());
  }
  return cfg;
}

SweepConfig load_sweep_config(const std::string& path, SweepMode mode) {
  std::string text;
  try {
    text = read_text_file(path);
  } catch (const Error& e) {
    throw Error(ErrorCode::ConfigError, e.what());
  }
  return parse_sweep_config(text, mode);
}

std::string sweep_config_to_json(const SweepConfig& cfg) { return config_json(cfg).dump(2); }

std::string sidecar_json(const SweepResult& result) {
  const json j = {{"version", version_string()},
                  {"config", config_json(result.config)},
                  {"rows", result.rows.size()}};
  return j.dump(2) + "\n";
}

void write_sidecar(const SweepResult& result, const std::string& path) {
  write_text_file_atomic(path, sidecar_json(result));
}

LoadedObject parse_object(const std::string& json_text) {
  constexpr ErrorCode kCode = ErrorCode::SchemaError;
  const json root = parse_json(json_text, kCode);
  check_schema(root, kCode);
  if (!root.contains("type")) fail(kCode, "/type", "missing ('state' or 'channel')");
  const std::string type = as_string(root["type"], "/type", kCode);
  LoadedObject obj;

  if (type == "state") {
    reject_unknown(root, "", {"schema", "type", "matrix", "amplitudes", "energies"}, kCode);
    const bool has_m = root.contains("matrix");
    const bool has_a = root.contains("amplitudes");
    if (has_m == has_a) fail(kCode, "/matrix", "exactly one of 'matrix' and 'amplitudes' is required");
    try {
      if (has_m) {
        obj.state = DensityMatrix(as_complex_matrix(root["matrix"], "/matrix", kCode));
      } else {
        obj.state = DensityMatrix::from_pure(PureState(as_complex_vector(root["amplitudes"], "/amplitudes", kCode)));
      }
    } catch (const Error& e) {
      if (e.code() == kCode) throw;
      fail(kCode, has_m ? "/matrix" : "/amplitudes", e.what());
    }
    if (root.contains("energies")) {
      const std::vector<double> e = as_number_grid(root["energies"], "/energies", kCode);
      if (static_cast<int>(e.size()) != obj.state->dim()) {
        fail(kCode, "/energies", "expected one energy per level");
      }
      obj.energies = Eigen::Map<const RVector>(e.data(), static_cast<Eigen::Index>(e.size()));
    }
    return obj;
  }
  if (type == "channel") {
    reject_unknown(root, "", {"schema", "type", "E00", "E01", "E10", "E11"}, kCode);
    Mat2 e[4];
    const char* names[] = {"E00", "E01", "E10", "E11"};
    for (int k = 0; k < 4; ++k) {
      const std::string ptr = std::string("/") + names[k];
      if (!root.contains(names[k])) fail(kCode, ptr, "missing");
      const CMatrix m = as_complex_matrix(root[names[k]], ptr, kCode);
      if (m.rows() != 2) fail(kCode, ptr, "expected a 2x2 matrix");
      e[k] = m;
    }
    try {
      obj.channel = QubitChannel(e[0], e[1], e[2], e[3]);
    } catch (const Error& err) {
      fail(kCode, "", err.what());
    }
    return obj;
  }
  fail(kCode, "/type", "expected 'state' or 'channel'");
}

LoadedObject load_object(const std::string& path) {
  std::string text;
  try {
    text = read_text_file(path);
  } catch (const Error& e) {
    throw Error(ErrorCode::SchemaError, e.what());
  }
  return parse_object(text);
}

std::string dump_state(const DensityMatrix& rho, const std::optional<RVector>& energies) {
  json j = {{"schema", 1}, {"type", "state"}, {"matrix", matrix_json(rho.matrix())}};
  if (energies) j["energies"] = std::vector<double>(energies->data(), energies->data() + energies->size());
  return j.dump(2) + "\n";
}

std::string dump_channel(const QubitChannel& channel) {
  const json j = {{"schema", 1},
                  {"type", "channel"},
                  {"E00", matrix_json(channel.image(0, 0))},
                  {"E01", matrix_json(channel.image(0, 1))},
                  {"E10", matrix_json(channel.image(1, 0))},
                  {"E11", matrix_json(channel.image(1, 1))}};
  return j.dump(2) + "\n";
}

std::string dump_object(const LoadedObject& obj) {
  if (obj.channel) return dump_channel(*obj.channel);
  if (obj.state) return dump_state(*obj.state, obj.energies);
  throw Error(ErrorCode::InvalidArgument, "nothing to dump");
}

std::string inspect_report(const LoadedObject& obj) {
  std::ostringstream os;
  auto line = [&os](const char* key, double v) { os << key << ' ' << format_number(v) << '\n'; };
  if (obj.state) {
    const DensityMatrix& rho = *obj.state;
    const Eigenfidelity top = eigenfidelity(rho);
    const Interval b = eigenfidelity_bounds(rho);
    os << "type state\n" << "dim " << rho.dim() << '\n';
    line("eigenfidelity", top.value);
    line("eigenerror", 1.0 - top.value);
    line("purity", purity(rho));
    line("linear_entropy", linear_entropy(rho));
    line("eigenfidelity_lower", b.lower);
    line("eigenfidelity_upper", b.upper);
    line("schatten_2", schatten_norm(rho, 2.0));
    if (obj.energies && rho.dim() == 2) {
      line("effective_temperature", effective_temperature(rho, EnergyBasis::canonical(*obj.energies)));
    }
  }
  if (obj.channel) {
    const QubitChannel& ch = *obj.channel;
    const Interval f = channel_eigenfidelity_bounds(ch);
    const Interval e = channel_eigenerror_bounds(ch);
    os << "type channel\n";
    line("average_purity", average_purity(ch));
    line("eigenfidelity_lower", f.lower);
    line("eigenfidelity_upper", f.upper);
    line("eigenerror_lower", e.lower);
    line("eigenerror_upper", e.upper);
    line("channel_eigenfidelity", channel_eigenfidelity(ch));
    line("tp_residual", ch.tp_residual());
    line("cp_min_eigenvalue", ch.cp_min_eigenvalue());
  }
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IOError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file_atomic(const std::string& path, const std::string& text) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << text;
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw Error(ErrorCode::IOError, "cannot write " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::IOError, "cannot move output into place at " + path);
  }
}

}  // namespace eigenfid
