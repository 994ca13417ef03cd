// Copyright 2026 The aqsim Authors
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

#include "artifacts.hpp"

#include <fstream>

#ifndef AQSIM_VERSION
#define AQSIM_VERSION "0.0.0"
#endif

namespace aqsim {

namespace {

void write_file(const std::filesystem::path &path, const std::string &content) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    os << content;
    if (!os) {
        throw IoError("write failed for " + path.string());
    }
}

}  // namespace

void write_artifacts(const std::filesystem::path &out_dir,
                     const std::string &subcommand,
                     const std::map<std::string, std::string> &params,
                     const std::vector<Artifact> &artifacts) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw IoError("cannot create output directory " + out_dir.string());
    }

    std::string manifest;
    manifest += "version " AQSIM_VERSION "\n";
    manifest += "subcommand " + subcommand + "\n";
    char hash[24];
    std::snprintf(hash, sizeof(hash), "%016llx",
                  static_cast<unsigned long long>(config_hash(params)));
    manifest += "config_hash " + std::string(hash) + "\n";
    for (const auto &[k, v] : params) {
        manifest += "param " + k + " " + v + "\n";
    }
    for (const auto &a : artifacts) {
        manifest += "artifact " + a.name + "\n";
    }

    for (const auto &a : artifacts) {
        write_file(out_dir / a.name, a.content);
    }
    write_file(out_dir / "manifest", manifest);
}

}  // namespace aqsim
