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

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hss/bytes.hpp"

namespace hss {

/// Selects the hash used by a scheme. Algorithms are identified by short
/// lowercase names ("sha256", "sha512", "sha3-256", "blake2b512").
///
/// truncation_bits keeps only the leading bits of the digest. It exists for
/// desk-scale demonstrations and brute-force tests; real schemes leave it
/// unset.
struct HashSpec {
  std::string algorithm = "sha256";
  std::optional<unsigned> truncation_bits;

  friend bool operator==(const HashSpec&, const HashSpec&) = default;
};

/// Throws InvalidArgument for an unknown algorithm, a digest shorter than
/// 16 bytes, or a truncation that is odd, below 8 or above 32 bits.
void validate(const HashSpec& spec);

/// Output length in bytes, after truncation.
std::size_t digest_length(const HashSpec& spec);

std::vector<std::string> supported_algorithms();

/// Reusable hashing context. Not thread-safe; create one per thread.
class Hasher {
 public:
  explicit Hasher(const HashSpec& spec);
  ~Hasher();
  Hasher(Hasher&&) noexcept;
  Hasher& operator=(Hasher&&) noexcept;
  Hasher(const Hasher&) = delete;
  Hasher& operator=(const Hasher&) = delete;

  std::size_t length() const { return length_; }

  /// Hash of the concatenation of all parts.
  Bytes digest(std::initializer_list<ByteView> parts);
  Bytes digest(ByteView data) { return digest({data}); }

  /// Writes the (truncated) digest into out, which must hold length() bytes.
  void digest_into(std::initializer_list<ByteView> parts, std::span<std::uint8_t> out);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::size_t length_ = 0;
  std::optional<unsigned> truncation_bits_;
};

/// One-shot convenience wrapper around Hasher.
Bytes hash_bytes(const HashSpec& spec, ByteView data);

}  // namespace hss
