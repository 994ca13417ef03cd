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

#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "aqs/errors.hpp"

namespace aqsim {

struct IoError : aqs::Error {
    using aqs::Error::Error;
};

/// Fixed-width round-trip formatting so identical doubles always yield
/// identical CSV bytes.
inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string fmt(int v) { return std::to_string(v); }
inline std::string fmt(long long v) { return std::to_string(v); }
inline std::string fmt(unsigned long long v) { return std::to_string(v); }
inline std::string fmt(long v) { return std::to_string(v); }
inline std::string fmt(unsigned long v) { return std::to_string(v); }

/// One output file, buffered in memory; nothing touches the filesystem
/// until the whole run has succeeded, so failed runs leave no partial
/// artifacts behind.
struct Artifact {
    std::string name;
    std::string content;
};

/// FNV-1a 64-bit hash over the canonical "key=value" parameter listing.
inline std::uint64_t config_hash(const std::map<std::string, std::string> &params) {
    std::uint64_t h = 1469598103934665603ull;
    auto feed = [&h](const std::string &s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
    };
    for (const auto &[k, v] : params) {
        feed(k);
        feed("=");
        feed(v);
        feed("\n");
    }
    return h;
}

/// Writes every artifact plus a `manifest` recording the config hash, the
/// seed, and the library version.
void write_artifacts(const std::filesystem::path &out_dir,
                     const std::string &subcommand,
                     const std::map<std::string, std::string> &params,
                     const std::vector<Artifact> &artifacts);

}  // namespace aqsim
