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

#include "hss/scheme.hpp"

#include <algorithm>
#include <limits>

#include "hss/error.hpp"
#include "hss/kernels.hpp"

namespace hss {

const ControlEntry* PublicControlArea::find(std::string_view key) const {
  for (const auto& e : entries) {
    if (e.key == key) return &e;
  }
  return nullptr;
}

void validate(const PublicControlArea& area) {
  validate(area.hash);
  const std::size_t len = digest_length(area.hash);
  if (area.version < 1) {
    throw FormatError("control area version must be at least 1");
  }
  if (area.entries.size() != area.basis.size()) {
    throw FormatError("control area must hold exactly one entry per basis element");
  }
  for (std::size_t i = 0; i < area.entries.size(); ++i) {
    if (area.entries[i].key != area.basis.subsets()[i].key()) {
      throw FormatError("control entry key '" + area.entries[i].key + "' does not match basis element {" +
                        area.basis.subsets()[i].key() + "}");
    }
    if (area.entries[i].value.size() != len) {
      throw FormatError("control value for '" + area.entries[i].key + "' has wrong length");
    }
  }
  if (area.commitments) {
    for (const auto& [id, g] : *area.commitments) {
      if (id == 0 || id > area.n()) {
        throw FormatError("commitment for unknown participant " + std::to_string(id));
      }
      if (g.size() != len) {
        throw FormatError("commitment for participant " + std::to_string(id) + " has wrong length");
      }
    }
  }
}

DealerOutput setup(const Basis& basis, const HashSpec& hash, RandomSource& rng, const SetupOptions& options) {
  const std::size_t len = digest_length(hash);
  if (options.fixed_secret && options.fixed_secret->size() != len) {
    throw InvalidArgument("fixed secret must be exactly " + std::to_string(len) + " bytes");
  }

  DealerOutput out{.shares = {}, .public_area = {.version = 1, .hash = hash, .basis = basis}, .secret = {}};

  std::vector<Bytes> share_bytes(basis.n(), Bytes(len));
  for (auto& s : share_bytes) rng.fill(s);

  std::vector<Bytes> intermediate = options.execution == Execution::parallel
                                        ? kernels::intermediate_hashes_parallel(basis, share_bytes, hash)
                                        : kernels::intermediate_hashes_serial(basis, share_bytes, hash);

  if (options.fixed_secret) {
    out.secret.bytes = *options.fixed_secret;
  } else {
    out.secret.bytes = intermediate.front();
    out.warnings.push_back("no secret supplied: secret set to H(M_priv) of {" + basis.subsets().front().key() +
                           "}, whose public control value is all zeros");
  }

  out.public_area.entries.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    out.public_area.entries.push_back({basis.subsets()[i].key(), xor_bytes(intermediate[i], out.secret.bytes)});
    secure_wipe(intermediate[i]);
  }

  out.shares.reserve(basis.n());
  for (ParticipantId id = 1; id <= basis.n(); ++id) {
    out.shares.push_back({id, std::move(share_bytes[id - 1])});
  }
  if (options.commitments) {
    out.public_area.commitments = commit_shares(out.shares, hash);
  }
  return out;
}

Bytes private_message(std::span<const Share> shares, const Subset& subset) {
  std::vector<const Share*> ordered;
  ordered.reserve(shares.size());
  for (const auto& s : shares) ordered.push_back(&s);
  std::sort(ordered.begin(), ordered.end(),
            [](const Share* a, const Share* b) { return a->participant < b->participant; });
  for (std::size_t i = 1; i < ordered.size(); ++i) {
    if (ordered[i]->participant == ordered[i - 1]->participant) {
      throw InvalidArgument("duplicate share for participant " + std::to_string(ordered[i]->participant));
    }
  }
  if (ordered.size() != subset.size()) {
    throw InvalidArgument("share count does not match subset {" + subset.key() + "}");
  }
  Bytes message;
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    if (ordered[i]->participant != subset.members()[i]) {
      throw InvalidArgument("shares do not cover subset {" + subset.key() + "}");
    }
    if (ordered[i]->bytes.empty() || ordered[i]->bytes.size() != ordered.front()->bytes.size()) {
      throw InvalidArgument("shares must share one non-zero length");
    }
    message.insert(message.end(), ordered[i]->bytes.begin(), ordered[i]->bytes.end());
  }
  return message;
}

SecretDigest recover(std::span<const Share> shares, const Subset& subset, const PublicControlArea& area) {
  const ControlEntry* entry = area.find(subset.key());
  if (entry == nullptr) {
    throw Unauthorized("{" + subset.key() + "} is not a minimal authorized subset of this scheme");
  }
  const std::size_t len = digest_length(area.hash);
  for (const auto& s : shares) {
    if (s.bytes.size() != len) {
      throw InvalidArgument("share of participant " + std::to_string(s.participant) + " has wrong length");
    }
  }
  Bytes message = private_message(shares, subset);
  Hasher hasher(area.hash);
  Bytes h_i = hasher.digest(message);
  secure_wipe(message);
  SecretDigest out{xor_bytes(h_i, entry->value)};
  secure_wipe(h_i);
  return out;
}

Subset reduce_to_basis(const Subset& s, const Basis& basis) {
  if (s.max_id() > basis.n()) {
    throw InvalidArgument("participant id " + std::to_string(s.max_id()) + " exceeds n = " +
                          std::to_string(basis.n()));
  }
  for (const auto& b : basis.subsets()) {
    if (b.is_subset_of(s)) return b;
  }
  throw Unauthorized("{" + s.key() + "} is not authorized");
}

DealerOutput refresh(const PublicControlArea& area, std::span<const Share> shares, const Subset& subset,
                     RandomSource& rng, Execution execution) {
  if (area.version == std::numeric_limits<std::uint32_t>::max()) {
    throw InvalidArgument("control area version would overflow");
  }
  SecretDigest secret = recover(shares, subset, area);
  SetupOptions options{.fixed_secret = std::move(secret.bytes),
                       .commitments = area.commitments.has_value(),
                       .execution = execution};
  DealerOutput out = setup(area.basis, area.hash, rng, options);
  secure_wipe(*options.fixed_secret);
  out.public_area.version = area.version + 1;
  return out;
}

Commitments commit_shares(std::span<const Share> shares, const HashSpec& hash) {
  const std::size_t len = digest_length(hash);
  Hasher hasher(hash);
  const std::uint8_t prefix[1] = {kCommitmentPrefix};
  Commitments out;
  for (const auto& s : shares) {
    if (s.participant == 0) {
      throw InvalidArgument("participant ids are 1-based");
    }
    if (s.bytes.size() != len) {
      throw InvalidArgument("share of participant " + std::to_string(s.participant) + " has wrong length");
    }
    if (!out.emplace(s.participant, hasher.digest({prefix, s.bytes})).second) {
      throw InvalidArgument("duplicate share for participant " + std::to_string(s.participant));
    }
  }
  return out;
}

bool verify_share(const Share& share, const PublicControlArea& area) {
  if (!area.commitments) {
    throw CommitmentsUnavailable("control area carries no commitments");
  }
  const auto it = area.commitments->find(share.participant);
  if (it == area.commitments->end()) {
    throw CommitmentsUnavailable("no commitment for participant " + std::to_string(share.participant));
  }
  if (share.bytes.size() != digest_length(area.hash)) {
    return false;
  }
  const Commitments mine = commit_shares(std::span<const Share>(&share, 1), area.hash);
  return mine.begin()->second == it->second;
}

}  // namespace hss
