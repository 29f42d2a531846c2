// Copyright 2026 The Friendfoe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef FRIENDFOE_TOOLS_RUN_RECORD_H_
#define FRIENDFOE_TOOLS_RUN_RECORD_H_

#include <chrono>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace friendfoe::cli {

// Hex SHA-256 of a byte string.
std::string Sha256Hex(const std::string& bytes);

// Collects one command's inputs and outputs and writes them, together with
// manifest.json, only when Commit() is called. A run that fails before
// committing leaves the output directory untouched.
class RunRecord {
 public:
  RunRecord(std::string command, std::filesystem::path out_dir);

  nlohmann::ordered_json& config() { return config_; }

  // Reads an input file and records its digest. Throws ParseError when the
  // file cannot be read.
  std::string ReadInput(const std::string& path);

  void AddOutput(const std::string& name, std::string contents);

  // Writes the outputs and the manifest; returns the exit code unchanged.
  int Commit(const std::string& status, int exit_code);

 private:
  std::string command_;
  std::filesystem::path out_dir_;
  std::chrono::steady_clock::time_point start_;
  nlohmann::ordered_json config_ = nlohmann::ordered_json::object();
  std::map<std::string, std::string> input_digests_;
  std::vector<std::pair<std::string, std::string>> outputs_;
};

}  // namespace friendfoe::cli

#endif  // FRIENDFOE_TOOLS_RUN_RECORD_H_
