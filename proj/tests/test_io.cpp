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

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <random>
#include <string>

#include "eigenfid/error.hpp"
#include "eigenfid/io.hpp"
#include "support/random_objects.hpp"

using namespace eigenfid;

namespace {

// Returns the error message, or "" when parsing succeeds.
std::string config_error(const std::string& text, SweepMode mode = SweepMode::Scaling) {
  try {
    parse_sweep_config(text, mode);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConfigError);
    return e.what();
  }
  return "";
}

std::string schema_error(const std::string& text) {
  try {
    parse_object(text);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SchemaError);
    return e.what();
  }
  return "";
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("sweep config parsing") {
  const SweepConfig c = parse_sweep_config(
      R"({"schema": 1, "mode": "concat", "drive": {"kind": "binomial"}, "nbar": 36,
          "fano": [0.25], "tau": [0.5, 1.0], "concat": [1, 2], "seed": 5, "jobs": 3})",
      SweepMode::Concat);
  CHECK(c.mode == SweepMode::Concat);
  CHECK(c.nbar == std::vector<double>{36.0});
  CHECK(c.tau.size() == 2);
  CHECK(c.concat == std::vector<int>{1, 2});
  CHECK(c.seed == 5);
  CHECK(c.jobs == 3);
  // untouched fields keep the mode defaults
  CHECK(c.ctau.size() == 3);

  const SweepConfig s = parse_sweep_config(R"({"schema": 1, "drive": {"kind": "poisson", "nbar": 64}})",
                                           SweepMode::Scaling);
  CHECK(s.nbar == std::vector<double>{64.0});

  const SweepConfig l = parse_sweep_config(
      R"({"schema": 1, "drive": {"kind": "binomial", "binomial_mode": "literal"}, "fano": 0.2, "nbar": 25})",
      SweepMode::Scaling);
  CHECK(l.drive.binomial_mode == BinomialMode::Literal);
}

TEST_CASE("sweep config errors carry a JSON pointer") {
  CHECK(contains(config_error(R"({"schema": 1, "nbar": [100, -3]})"), "/nbar"));
  CHECK(contains(config_error(R"({"schema": 1, "bogus": 1})"), "/bogus"));
  CHECK(contains(config_error(R"({"schema": 1, "drive": {"kind": "laser"}})"), "/drive/kind"));
  CHECK(contains(config_error(R"({"schema": 2})"), "/schema"));
  CHECK(contains(config_error(R"({"mode": "scaling"})"), "schema"));
  CHECK(contains(config_error(R"({"schema": 1, "mode": "split"})"), "/mode"));
  CHECK(contains(config_error(R"({"schema": 1, "drive": {"kind": "poisson", "nbar": 10}, "nbar": [20]})"), "/drive/nbar"));
  CHECK(contains(config_error(R"({"schema": 1, "tau": "fast"})"), "/tau"));
  CHECK(contains(config_error(R"({"schema": 1, "drive": {"nbar": 10}})"), "/drive/kind"));
  CHECK_FALSE(config_error("{not json").empty());
}

TEST_CASE("config JSON round trip") {
  SweepConfig c = default_config(SweepMode::Split);
  c.seed = 99;
  c.mc_samples = 10;
  const SweepConfig back = parse_sweep_config(sweep_config_to_json(c), SweepMode::Split);
  CHECK(back.nbar == c.nbar);
  CHECK(back.concat == c.concat);
  CHECK(back.seed == 99);
  CHECK(back.mc_samples == 10);
  CHECK(back.split_conventions == c.split_conventions);
  CHECK(sweep_config_to_json(back) == sweep_config_to_json(c));
}

TEST_CASE("state and channel files") {
  const LoadedObject s = parse_object(
      R"({"schema": 1, "type": "state", "matrix": [[0.75, 0], [0, 0.25]], "energies": [0, 1]})");
  REQUIRE(s.state.has_value());
  CHECK(s.energies.has_value());
  const std::string report = inspect_report(s);
  CHECK(contains(report, "eigenfidelity 7.50000000000e-01"));
  CHECK(contains(report, "effective_temperature"));

  const LoadedObject a = parse_object(R"({"schema": 1, "type": "state", "amplitudes": [[0.6, 0], [0, 0.8]]})");
  REQUIRE(a.state.has_value());
  CHECK(std::abs((*a.state)(1, 1).real() - 0.64) < 1e-15);

  const LoadedObject ch = parse_object(
      R"({"schema": 1, "type": "channel", "E00": [[0.5, 0], [0, 0.5]], "E01": [[0, 0], [0, 0]],
          "E10": [[0, 0], [0, 0]], "E11": [[0.5, 0], [0, 0.5]]})");
  REQUIRE(ch.channel.has_value());
  CHECK(contains(inspect_report(ch), "average_purity 5.00000000000e-01"));
}

TEST_CASE("object schema errors") {
  CHECK(contains(schema_error(R"({"schema": 1, "type": "state", "matrix": [[1, 0], [0, 1]]})"), "/matrix"));
  CHECK(contains(schema_error(R"({"schema": 1, "type": "widget"})"), "/type"));
  CHECK(contains(schema_error(R"({"schema": 1, "type": "state", "matrix": [[1, 0], [0]]})"), "/matrix"));
  CHECK(contains(schema_error(R"({"schema": 1, "type": "channel", "E00": [[1, 0], [0, 0]]})"), "/E01"));
  CHECK(contains(schema_error(R"({"schema": 1, "type": "state", "amplitudes": [[1, 0], "x"]})"),
                 "/amplitudes/1"));
}

TEST_CASE("dump and reload round trip") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityMatrix rho(testsupport::random_density(rng, 2 + trial % 3, 2));
    const LoadedObject back = parse_object(dump_state(rho));
    CHECK((back.state->matrix() - rho.matrix()).cwiseAbs().maxCoeff() <= 1e-12);

    const QubitChannel ch = testsupport::random_channel(rng, 3);
    const LoadedObject again = parse_object(dump_channel(ch));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        CHECK((again.channel->image(i, j) - ch.image(i, j)).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("files") {
  const auto dir = std::filesystem::temp_directory_path() / "eigenfid_test_io";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "x.json").string();
  write_text_file_atomic(path, "{\"schema\": 1, \"seed\": 4}");
  CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
  CHECK(load_sweep_config(path, SweepMode::Scaling).seed == 4);
  try {
    read_text_file((dir / "missing.json").string());
    FAIL("missing file read");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IOError);
  }
  std::filesystem::remove_all(dir);
  CHECK(std::string(version_string()).size() > 0);
}
