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

#include "hss/storage.hpp"

#include <array>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "hss/error.hpp"

namespace hss::storage {

namespace {

using nlohmann::json;

std::string json_string(std::string_view s) { return json(std::string(s)).dump(); }

Bytes strict_hex(const json& v, std::size_t expected, const std::string& what) {
  if (!v.is_string()) {
    throw FormatError(what + " must be a hex string");
  }
  const auto& text = v.get_ref<const std::string&>();
  for (char c : text) {
    if (c >= 'A' && c <= 'F') {
      throw FormatError(what + " must be lowercase hex");
    }
  }
  Bytes out = from_hex(text);
  if (out.size() != expected) {
    throw FormatError(what + " must decode to " + std::to_string(expected) + " bytes");
  }
  return out;
}

std::uint64_t strict_uint(const json& v, const std::string& what) {
  if (!v.is_number_unsigned()) {
    throw FormatError(what + " must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

void require_fields(const json& doc, std::initializer_list<std::string_view> required,
                    std::initializer_list<std::string_view> optional) {
  if (!doc.is_object()) {
    throw FormatError("top-level JSON value must be an object");
  }
  for (std::string_view f : required) {
    if (!doc.contains(std::string(f))) {
      throw FormatError("missing field '" + std::string(f) + "'");
    }
  }
  for (const auto& [key, value] : doc.items()) {
    const bool known = std::find(required.begin(), required.end(), key) != required.end() ||
                       std::find(optional.begin(), optional.end(), key) != optional.end();
    if (!known) {
      throw FormatError("unknown field '" + key + "'");
    }
  }
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

void check_scheme_id(const std::string& id) {
  if (id.size() != 32 || id.find_first_not_of("0123456789abcdef") != std::string::npos) {
    throw FormatError("scheme_id must be 32 lowercase hex characters");
  }
}

}  // namespace

std::string new_scheme_id(RandomSource& rng) {
  std::array<std::uint8_t, 16> raw{};
  rng.fill(raw);
  return to_hex(raw);
}

std::string emit(const ControlAreaFile& file) {
  const PublicControlArea& a = file.area;
  validate(a);
  std::ostringstream os;
  os << "{\n";
  os << "  \"version\": " << a.version << ",\n";
  os << "  \"scheme_id\": " << json_string(file.scheme_id) << ",\n";
  os << "  \"hash\": " << json_string(a.hash.algorithm) << ",\n";
  if (a.hash.truncation_bits) {
    os << "  \"truncation_bits\": " << *a.hash.truncation_bits << ",\n";
  }
  os << "  \"n\": " << a.n() << ",\n";
  os << "  \"digest_len\": " << digest_length(a.hash) << ",\n";
  os << "  \"basis\": " << basis_to_json(a.basis) << ",\n";
  os << "  \"entries\": {";
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    os << (i == 0 ? "\n" : ",\n") << "    " << json_string(a.entries[i].key) << ": " << json_string(to_hex(a.entries[i].value));
  }
  os << "\n  }";
  if (a.commitments) {
    os << ",\n  \"commitments\": {";
    bool first = true;
    for (const auto& [id, g] : *a.commitments) {
      os << (first ? "\n" : ",\n") << "    " << json_string(std::to_string(id)) << ": " << json_string(to_hex(g));
      first = false;
    }
    os << (first ? "}" : "\n  }");
  }
  os << "\n}\n";
  return os.str();
}

std::string emit(const ShareFile& file) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"participant\": " << file.share.participant << ",\n";
  os << "  \"version\": " << file.version << ",\n";
  os << "  \"scheme_id\": " << json_string(file.scheme_id) << ",\n";
  os << "  \"share\": " << json_string(to_hex(file.share.bytes)) << "\n";
  os << "}\n";
  return os.str();
}

ControlAreaFile parse_control_area(std::string_view text) {
  const json doc = parse_json(text);
  require_fields(doc, {"version", "scheme_id", "hash", "n", "digest_len", "basis", "entries"},
                 {"truncation_bits", "commitments"});
  try {
    HashSpec hash;
    if (!doc["hash"].is_string()) throw FormatError("hash must be a string");
    hash.algorithm = doc["hash"].get<std::string>();
    if (doc.contains("truncation_bits")) {
      hash.truncation_bits = static_cast<unsigned>(strict_uint(doc["truncation_bits"], "truncation_bits"));
    }
    validate(hash);
    const std::size_t len = digest_length(hash);
    if (strict_uint(doc["digest_len"], "digest_len") != len) {
      throw FormatError("digest_len does not match the hash");
    }
    const std::uint64_t version = strict_uint(doc["version"], "version");
    if (version < 1 || version > 0xffffffffu) {
      throw FormatError("version out of range");
    }
    const std::uint64_t n = strict_uint(doc["n"], "n");
    if (n < 1 || n > 0xffffffffu) {
      throw FormatError("n out of range");
    }
    if (!doc["scheme_id"].is_string()) throw FormatError("scheme_id must be a string");
    std::string scheme_id = doc["scheme_id"].get<std::string>();
    check_scheme_id(scheme_id);

    Basis basis = basis_from_json(doc["basis"].dump(), static_cast<unsigned>(n));
    if (basis_to_json(basis) != doc["basis"].dump()) {
      throw FormatError("basis is not in canonical order");
    }

    const json& entries = doc["entries"];
    if (!entries.is_object() || entries.size() != basis.size()) {
      throw FormatError("entries must hold exactly one value per basis element");
    }
    PublicControlArea area{.version = static_cast<std::uint32_t>(version), .hash = hash, .basis = basis};
    for (const auto& subset : basis.subsets()) {
      const std::string key = subset.key();
      if (!entries.contains(key)) {
        throw FormatError("missing control entry for '" + key + "'");
      }
      area.entries.push_back({key, strict_hex(entries[key], len, "entry '" + key + "'")});
    }
    if (doc.contains("commitments")) {
      const json& c = doc["commitments"];
      if (!c.is_object()) throw FormatError("commitments must be an object");
      Commitments commitments;
      for (const auto& [key, value] : c.items()) {
        const Subset id = Subset::from_key(key);
        if (id.size() != 1) throw FormatError("commitment key must be one participant id");
        commitments.emplace(id.max_id(), strict_hex(value, len, "commitment '" + key + "'"));
      }
      area.commitments = std::move(commitments);
    }
    validate(area);
    return {std::move(scheme_id), std::move(area)};
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(std::string("invalid control area: ") + e.what());
  }
}

ShareFile parse_share_file(std::string_view text) {
  const json doc = parse_json(text);
  require_fields(doc, {"participant", "version", "scheme_id", "share"}, {});
  ShareFile out;
  const std::uint64_t participant = strict_uint(doc["participant"], "participant");
  if (participant < 1 || participant > 0xffffffffu) throw FormatError("participant out of range");
  const std::uint64_t version = strict_uint(doc["version"], "version");
  if (version < 1 || version > 0xffffffffu) throw FormatError("version out of range");
  if (!doc["scheme_id"].is_string()) throw FormatError("scheme_id must be a string");
  out.scheme_id = doc["scheme_id"].get<std::string>();
  check_scheme_id(out.scheme_id);
  out.version = static_cast<std::uint32_t>(version);
  out.share.participant = static_cast<ParticipantId>(participant);
  if (!doc["share"].is_string()) throw FormatError("share must be a hex string");
  const std::size_t hex_len = doc["share"].get_ref<const std::string&>().size();
  if (hex_len == 0) throw FormatError("share must not be empty");
  out.share.bytes = strict_hex(doc["share"], hex_len / 2, "share");
  return out;
}

void check_binding(const ShareFile& share, const ControlAreaFile& control) {
  if (share.scheme_id != control.scheme_id) {
    throw VersionMismatch("share of participant " + std::to_string(share.share.participant) +
                          " belongs to another scheme");
  }
  if (share.version != control.area.version) {
    throw VersionMismatch("share of participant " + std::to_string(share.share.participant) + " is version " +
                          std::to_string(share.version) + ", control area is version " +
                          std::to_string(control.area.version));
  }
  if (share.share.participant > control.area.n()) {
    throw FormatError("participant " + std::to_string(share.share.participant) + " not in scheme");
  }
  if (share.share.bytes.size() != digest_length(control.area.hash)) {
    throw FormatError("share length does not match the control area digest length");
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::filesystem::filesystem_error("cannot open file", path, std::make_error_code(std::errc::io_error));
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::filesystem::filesystem_error("cannot write file", tmp, std::make_error_code(std::errc::io_error));
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      throw std::filesystem::filesystem_error("write failed", tmp, std::make_error_code(std::errc::io_error));
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace hss::storage
