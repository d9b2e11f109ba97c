/*
 * Copyright 2026 The hss Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// On-disk formats. Both files are JSON with a fixed field order, canonical
// entry order and lowercase hex, so emit(parse(text)) == text for any file
// this module wrote.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "hss/random.hpp"
#include "hss/scheme.hpp"

namespace hss::storage {

/// The public area plus the identifier that binds share files to it.
struct ControlAreaFile {
  std::string scheme_id;
  PublicControlArea area;

  friend bool operator==(const ControlAreaFile&, const ControlAreaFile&) = default;
};

struct ShareFile {
  std::string scheme_id;
  std::uint32_t version = 1;
  Share share;

  friend bool operator==(const ShareFile&, const ShareFile&) = default;
};

/// 128 random bits as 32 lowercase hex characters.
std::string new_scheme_id(RandomSource& rng);

std::string emit(const ControlAreaFile& file);
std::string emit(const ShareFile& file);

/// Both parsers throw FormatError on any schema violation: unknown or
/// missing fields, non-canonical hex, wrong lengths, keys not matching the
/// basis.
ControlAreaFile parse_control_area(std::string_view text);
ShareFile parse_share_file(std::string_view text);

/// Throws VersionMismatch when the share belongs to another scheme or
/// version, FormatError when its length disagrees with the area.
void check_binding(const ShareFile& share, const ControlAreaFile& control);

std::string read_file(const std::filesystem::path& path);
/// Writes to a temporary sibling, then renames over the target.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace hss::storage
