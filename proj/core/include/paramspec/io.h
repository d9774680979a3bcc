// Copyright 2026 The paramspec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Small file and hashing helpers shared by the stages.

#ifndef PARAMSPEC_IO_H_
#define PARAMSPEC_IO_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace paramspec {

std::string ReadFile(const std::filesystem::path& path);
// Writes atomically (temp file + rename) and creates parent directories.
void WriteFile(const std::filesystem::path& path, std::string_view contents);

uint64_t Fnv1a64(std::string_view data);
std::string HexDigest(uint64_t digest);
// Digest of a file's bytes, "" if the file cannot be read.
std::string FileDigest(const std::filesystem::path& path);

// Byte-stable rendering used for every artifact: two-space indent, keys in
// sorted order (nlohmann::json objects are std::map backed), trailing newline.
std::string CanonicalDump(const nlohmann::json& j);

// Parses JSON and rethrows parse failures as SchemaError("line N").
nlohmann::json ParseJson(std::string_view text, std::string_view what);

}  // namespace paramspec

#endif  // PARAMSPEC_IO_H_
