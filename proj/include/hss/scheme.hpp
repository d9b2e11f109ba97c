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

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hss/access_structure.hpp"
#include "hss/bytes.hpp"
#include "hss/hash.hpp"
#include "hss/random.hpp"

namespace hss {

/// A participant's private share. Its length equals the scheme's digest
/// length.
struct Share {
  ParticipantId participant = 0;
  Bytes bytes;

  friend bool operator==(const Share&, const Share&) = default;
};

struct SecretDigest {
  Bytes bytes;

  friend bool operator==(const SecretDigest&, const SecretDigest&) = default;
};

/// Public mask for one minimal authorized subset: value = H(M_priv) xor h.
struct ControlEntry {
  std::string key;
  Bytes value;

  friend bool operator==(const ControlEntry&, const ControlEntry&) = default;
};

using Commitments = std::map<ParticipantId, Bytes>;

/// Everything the dealer publishes. Entries follow the basis order, one per
/// basis element.
struct PublicControlArea {
  std::uint32_t version = 1;
  HashSpec hash;
  Basis basis;
  std::vector<ControlEntry> entries;
  std::optional<Commitments> commitments;

  unsigned n() const { return basis.n(); }
  const ControlEntry* find(std::string_view key) const;

  friend bool operator==(const PublicControlArea&, const PublicControlArea&) = default;
};

/// Throws FormatError if entries do not match the basis one-to-one or any
/// stored value has the wrong length.
void validate(const PublicControlArea& area);

struct DealerOutput {
  std::vector<Share> shares;
  PublicControlArea public_area;
  SecretDigest secret;
  std::vector<std::string> warnings;
};

enum class Execution { serial, parallel };

struct SetupOptions {
  /// Must be exactly digest-length bytes. When absent the secret becomes
  /// H(M_priv) of the first basis element, which makes its control value
  /// all zeros.
  std::optional<Bytes> fixed_secret;
  /// Publish a hash commitment per share for verify_share().
  bool commitments = false;
  Execution execution = Execution::serial;
};

/// Draws n shares from rng, then computes one control value per basis
/// element. Randomness is consumed only before the hashing stage, so the
/// result does not depend on options.execution.
DealerOutput setup(const Basis& basis, const HashSpec& hash, RandomSource& rng, const SetupOptions& options = {});

/// s_{i1} || s_{i2} || ... for the subset's members in ascending order.
/// Shares may be given in any order but must cover the subset exactly.
Bytes private_message(std::span<const Share> shares, const Subset& subset);

/// H(private_message) xor c_i. The subset must be exactly a basis element;
/// throws Unauthorized otherwise.
SecretDigest recover(std::span<const Share> shares, const Subset& subset, const PublicControlArea& area);

/// Lexicographically first basis element contained in s. Throws
/// Unauthorized when s is not authorized.
Subset reduce_to_basis(const Subset& s, const Basis& basis);

/// Recovers the secret from an authorized basis element, then deals fresh
/// shares for the same basis and secret at version + 1. Commitments are
/// republished when the input area carried them.
DealerOutput refresh(const PublicControlArea& area, std::span<const Share> shares, const Subset& subset,
                     RandomSource& rng, Execution execution = Execution::serial);

/// Domain-separation byte prepended to a share before hashing it as a
/// commitment.
inline constexpr std::uint8_t kCommitmentPrefix = 0x02;

/// g_i = H(0x02 || s_i) for each share.
Commitments commit_shares(std::span<const Share> shares, const HashSpec& hash);

/// Compares the share's commitment with the published one. Throws
/// CommitmentsUnavailable when the area has no commitment for the
/// participant.
bool verify_share(const Share& share, const PublicControlArea& area);

}  // namespace hss
