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

#include "hss/access_structure.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <functional>

#include "json.hpp"

#include "hss/error.hpp"

namespace hss {

Subset::Subset(std::vector<ParticipantId> ids) : members_(std::move(ids)) {
  if (members_.empty()) {
    throw InvalidArgument("subset must not be empty");
  }
  std::sort(members_.begin(), members_.end());
  if (members_.front() == 0) {
    throw InvalidArgument("participant ids are 1-based");
  }
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw InvalidArgument("duplicate participant in subset");
  }
}

bool Subset::contains(ParticipantId id) const {
  return std::binary_search(members_.begin(), members_.end(), id);
}

bool Subset::is_subset_of(const Subset& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

std::string Subset::key() const {
  std::string out;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(members_[i]);
  }
  return out;
}

Subset Subset::from_key(std::string_view key) {
  std::vector<ParticipantId> ids;
  std::size_t pos = 0;
  while (pos <= key.size()) {
    const std::size_t end = std::min(key.find(',', pos), key.size());
    const std::string_view token = key.substr(pos, end - pos);
    ParticipantId id = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), id);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || token[0] == '0') {
      throw FormatError("malformed subset key: " + std::string(key));
    }
    if (!ids.empty() && id <= ids.back()) {
      throw FormatError("subset key not strictly ascending: " + std::string(key));
    }
    ids.push_back(id);
    pos = end + 1;
  }
  return Subset(std::move(ids));
}

Basis Basis::from_antichain(unsigned n, std::vector<Subset> subsets) {
  if (subsets.empty()) {
    throw InvalidArgument("access structure basis is empty");
  }
  for (const auto& s : subsets) {
    if (s.max_id() > n) {
      throw InvalidArgument("participant id " + std::to_string(s.max_id()) + " exceeds n = " + std::to_string(n));
    }
  }
  std::sort(subsets.begin(), subsets.end());
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t j = 0; j < subsets.size(); ++j) {
      if (i != j && subsets[i].is_subset_of(subsets[j])) {
        throw InvalidArgument("basis is not an antichain: {" + subsets[i].key() + "} is contained in {" +
                              subsets[j].key() + "}");
      }
    }
  }
  return Basis(n, std::move(subsets));
}

std::optional<std::size_t> Basis::index_of(const Subset& s) const {
  const auto it = std::lower_bound(subsets_.begin(), subsets_.end(), s);
  if (it == subsets_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - subsets_.begin());
}

Basis minimize(std::span<const Subset> family, unsigned n) {
  if (family.empty()) {
    throw InvalidArgument("cannot minimize an empty family");
  }
  std::vector<Subset> sorted(family.begin(), family.end());
  for (const auto& s : sorted) {
    if (s.max_id() > n) {
      throw InvalidArgument("participant id " + std::to_string(s.max_id()) + " exceeds n = " + std::to_string(n));
    }
  }
  // Ascending size first, so every candidate is only compared against
  // already-accepted sets that could be contained in it.
  std::sort(sorted.begin(), sorted.end(), [](const Subset& a, const Subset& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<Subset> kept;
  for (const auto& s : sorted) {
    const bool dominated =
        std::any_of(kept.begin(), kept.end(), [&](const Subset& k) { return k.is_subset_of(s); });
    if (!dominated) kept.push_back(s);
  }
  return Basis::from_antichain(n, std::move(kept));
}

bool is_authorized(const Subset& s, const Basis& basis) {
  if (s.max_id() > basis.n()) {
    throw InvalidArgument("participant id " + std::to_string(s.max_id()) + " exceeds n = " +
                          std::to_string(basis.n()));
  }
  return std::any_of(basis.subsets().begin(), basis.subsets().end(),
                     [&](const Subset& b) { return b.is_subset_of(s); });
}

Basis threshold_basis(unsigned k, unsigned n) {
  if (k < 1 || k > n) {
    throw InvalidArgument("threshold must satisfy 1 <= t+1 <= n");
  }
  std::vector<Subset> out;
  std::vector<ParticipantId> combo(k);
  for (unsigned i = 0; i < k; ++i) combo[i] = i + 1;
  // Lexicographic successor over k-combinations of 1..n.
  for (;;) {
    out.emplace_back(combo);
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - k + static_cast<unsigned>(i) + 1) --i;
    if (i < 0) break;
    ++combo[static_cast<std::size_t>(i)];
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
  }
  return Basis::from_antichain(n, std::move(out));
}

namespace {

using Mask = std::uint32_t;

Mask mask_of(const std::vector<ParticipantId>& ids) {
  Mask m = 0;
  for (ParticipantId id : ids) m |= Mask{1} << (id - 1);
  return m;
}

Subset subset_of(Mask m) {
  std::vector<ParticipantId> ids;
  for (unsigned bit = 0; m != 0; ++bit, m >>= 1) {
    if (m & 1u) ids.push_back(bit + 1);
  }
  return Subset(std::move(ids));
}

// Minimal sets of a monotone predicate: V qualifies iff it satisfies the
// predicate and removing any single member breaks it.
Basis minimal_sets(unsigned n, const std::function<bool(Mask)>& authorized) {
  if (n > kMaxBuilderParticipants) {
    throw InvalidArgument("exhaustive builders support at most " + std::to_string(kMaxBuilderParticipants) +
                          " participants");
  }
  std::vector<Subset> out;
  const Mask limit = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  for (Mask v = 1; v != 0 && v <= limit; ++v) {
    if (!authorized(v)) continue;
    bool minimal = true;
    for (Mask rest = v; rest != 0 && minimal; rest &= rest - 1) {
      const Mask low = rest & (~rest + 1);
      if (authorized(v & ~low)) minimal = false;
    }
    if (minimal) out.push_back(subset_of(v));
  }
  if (out.empty()) {
    throw InvalidArgument("access structure has no authorized subsets");
  }
  return Basis::from_antichain(n, std::move(out));
}

void check_partition(const std::vector<std::vector<ParticipantId>>& groups, unsigned n, const char* what) {
  if (groups.empty()) {
    throw InvalidArgument(std::string("at least one ") + what + " required");
  }
  std::vector<ParticipantId> seen;
  for (const auto& g : groups) {
    for (ParticipantId id : g) {
      if (id == 0 || id > n) {
        throw InvalidArgument(std::string(what) + " member " + std::to_string(id) + " outside 1.." +
                              std::to_string(n));
      }
      seen.push_back(id);
    }
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw InvalidArgument(std::string(what) + "s are not pairwise disjoint");
  }
}

unsigned resolve_n(const std::vector<std::vector<ParticipantId>>& groups, std::optional<unsigned> n) {
  if (n) return *n;
  ParticipantId max_id = 0;
  for (const auto& g : groups) {
    for (ParticipantId id : g) max_id = std::max(max_id, id);
  }
  return max_id;
}

}  // namespace

std::vector<std::string> validate(const HierarchicalSpec& spec) {
  const unsigned n = resolve_n(spec.levels, spec.n);
  check_partition(spec.levels, n, "level");
  if (spec.thresholds.size() != spec.levels.size()) {
    throw InvalidArgument("one threshold per level required");
  }
  if (spec.thresholds.front() == 0) {
    throw InvalidArgument("level thresholds must be positive");
  }
  for (std::size_t i = 1; i < spec.thresholds.size(); ++i) {
    if (spec.thresholds[i] <= spec.thresholds[i - 1]) {
      throw InvalidArgument("level thresholds must be strictly increasing");
    }
  }
  std::vector<std::string> warnings;
  for (std::size_t i = 0; i < spec.levels.size(); ++i) {
    if (spec.levels[i].empty()) {
      warnings.push_back("level " + std::to_string(i + 1) + " is empty");
    }
  }
  return warnings;
}

void validate(const CompartmentSpec& spec) {
  const unsigned n = resolve_n(spec.compartments, spec.n);
  check_partition(spec.compartments, n, "compartment");
  if (spec.per_thresholds.size() != spec.compartments.size()) {
    throw InvalidArgument("one threshold per compartment required");
  }
  unsigned sum = 0;
  for (std::size_t i = 0; i < spec.compartments.size(); ++i) {
    if (spec.compartments[i].empty()) {
      throw InvalidArgument("compartment " + std::to_string(i + 1) + " is empty");
    }
    if (spec.per_thresholds[i] > spec.compartments[i].size()) {
      throw InvalidArgument("compartment " + std::to_string(i + 1) + " threshold exceeds its size");
    }
    sum += spec.per_thresholds[i];
  }
  if (spec.overall < sum) {
    throw InvalidArgument("overall threshold below the sum of compartment thresholds");
  }
  if (spec.overall > n) {
    throw InvalidArgument("overall threshold exceeds participant count");
  }
  if (spec.overall == 0) {
    throw InvalidArgument("overall threshold must be positive");
  }
}

Basis hierarchical_basis(const HierarchicalSpec& spec) {
  validate(spec);
  const unsigned n = resolve_n(spec.levels, spec.n);
  std::vector<Mask> cumulative;
  Mask acc = 0;
  for (const auto& level : spec.levels) {
    acc |= mask_of(level);
    cumulative.push_back(acc);
  }
  const bool conjunctive = spec.mode == HierarchyMode::conjunctive;
  return minimal_sets(n, [&](Mask v) {
    for (std::size_t i = 0; i < cumulative.size(); ++i) {
      const bool ok = static_cast<unsigned>(std::popcount(v & cumulative[i])) >= spec.thresholds[i];
      if (conjunctive && !ok) return false;
      if (!conjunctive && ok) return true;
    }
    return conjunctive;
  });
}

Basis compartment_basis(const CompartmentSpec& spec) {
  validate(spec);
  const unsigned n = resolve_n(spec.compartments, spec.n);
  std::vector<Mask> masks;
  for (const auto& c : spec.compartments) masks.push_back(mask_of(c));
  return minimal_sets(n, [&](Mask v) {
    if (static_cast<unsigned>(std::popcount(v)) < spec.overall) return false;
    for (std::size_t i = 0; i < masks.size(); ++i) {
      if (static_cast<unsigned>(std::popcount(v & masks[i])) < spec.per_thresholds[i]) return false;
    }
    return true;
  });
}

std::string basis_to_json(const Basis& basis) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : basis.subsets()) arr.push_back(s.members());
  return arr.dump();
}

Basis basis_from_json(std::string_view text, std::optional<unsigned> n) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("basis is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) {
    throw FormatError("basis must be a JSON array of arrays");
  }
  std::vector<Subset> family;
  ParticipantId max_id = 0;
  for (const auto& item : doc) {
    if (!item.is_array()) {
      throw FormatError("basis element must be an array of integers");
    }
    std::vector<ParticipantId> ids;
    for (const auto& v : item) {
      if (!v.is_number_unsigned()) {
        throw FormatError("participant ids must be positive integers");
      }
      ids.push_back(v.get<ParticipantId>());
    }
    family.emplace_back(std::move(ids));
    max_id = std::max(max_id, family.back().max_id());
  }
  return Basis::from_antichain(n.value_or(max_id), std::move(family));
}

}  // namespace hss
