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


#include "run_record.h"

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "friendfoe/error.h"

#ifndef FRIENDFOE_VERSION
#define FRIENDFOE_VERSION "unknown"
#endif

namespace friendfoe::cli {

std::string Sha256Hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(),
                 nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < length; ++i) {
    std::snprintf(buf, sizeof(buf), "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

RunRecord::RunRecord(std::string command, std::filesystem::path out_dir)
    : command_(std::move(command)),
      out_dir_(std::move(out_dir)),
      start_(std::chrono::steady_clock::now()) {}

std::string RunRecord::ReadInput(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string bytes = buffer.str();
  input_digests_[path] = Sha256Hex(bytes);
  return bytes;
}

void RunRecord::AddOutput(const std::string& name, std::string contents) {
  outputs_.emplace_back(name, std::move(contents));
}

int RunRecord::Commit(const std::string& status, int exit_code) {
  std::filesystem::create_directories(out_dir_);
  nlohmann::ordered_json manifest;
  manifest["command"] = command_;
  manifest["config"] = config_;
  manifest["inputs"] = nlohmann::ordered_json::object();
  for (const auto& [path, digest] : input_digests_) {
    manifest["inputs"][path] = {{"sha256", digest}};
  }
  manifest["outputs"] = nlohmann::ordered_json::array();
  for (const auto& [name, contents] : outputs_) {
    std::ofstream out(out_dir_ / name, std::ios::binary);
    out << contents;
    if (!out) throw Error("cannot write output file '" + name + "'");
    manifest["outputs"].push_back(
        {{"file", name}, {"sha256", Sha256Hex(contents)}});
  }
  manifest["status"] = status;
  manifest["exit_code"] = exit_code;
  manifest["duration_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
          .count();
  manifest["version"] = FRIENDFOE_VERSION;
  std::ofstream out(out_dir_ / "manifest.json", std::ios::binary);
  out << manifest.dump(2) << "\n";
  if (!out) throw Error("cannot write manifest.json");
  return exit_code;
}

}  // namespace friendfoe::cli
