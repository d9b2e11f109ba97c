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

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hss {

/// 1-based participant index, P_1..P_n.
using ParticipantId = std::uint32_t;

/// A non-empty set of participants, stored strictly ascending.
class Subset {
 public:
  /// Sorts the ids. Throws InvalidArgument on an empty list, a zero id or a
  /// duplicate.
  explicit Subset(std::vector<ParticipantId> ids);
  Subset(std::initializer_list<ParticipantId> ids) : Subset(std::vector<ParticipantId>(ids)) {}

  const std::vector<ParticipantId>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  ParticipantId max_id() const { return members_.back(); }

  bool contains(ParticipantId id) const;
  bool is_subset_of(const Subset& other) const;

  /// Canonical key: ascending decimal ids joined by ",", e.g. "1,3,5".
  std::string key() const;
  /// Inverse of key(). Throws FormatError unless the text is exactly a
  /// canonical key.
  static Subset from_key(std::string_view key);

  friend bool operator==(const Subset&, const Subset&) = default;
  friend auto operator<=>(const Subset& a, const Subset& b) { return a.members_ <=> b.members_; }

 private:
  std::vector<ParticipantId> members_;
};

/// The minimal authorized subsets of a monotone access structure over
/// participants 1..n. Always a non-empty antichain in lexicographic order.
class Basis {
 public:
  /// Rejects (InvalidArgument) anything that is not already an antichain
  /// over 1..n; use minimize() to normalize an arbitrary family.
  static Basis from_antichain(unsigned n, std::vector<Subset> subsets);

  unsigned n() const { return n_; }
  const std::vector<Subset>& subsets() const { return subsets_; }
  std::size_t size() const { return subsets_.size(); }

  /// Position of an exact basis element, if present.
  std::optional<std::size_t> index_of(const Subset& s) const;

  friend bool operator==(const Basis&, const Basis&) = default;

 private:
  Basis(unsigned n, std::vector<Subset> subsets) : n_(n), subsets_(std::move(subsets)) {}

  unsigned n_ = 0;
  std::vector<Subset> subsets_;
};

/// Inclusion-minimal elements of a family, deduplicated and sorted.
Basis minimize(std::span<const Subset> family, unsigned n);

/// True iff s contains some element of the basis.
bool is_authorized(const Subset& s, const Basis& basis);

/// All C(n, k) subsets of size k, for 1 <= k <= n.
Basis threshold_basis(unsigned k, unsigned n);

enum class HierarchyMode { conjunctive, disjunctive };

/// Levels U_1..U_m with cumulative thresholds k_1 < ... < k_m. A set V
/// satisfies level i when |V ∩ (U_1 ∪ ... ∪ U_i)| >= k_i. Conjunctive mode
/// requires every level, disjunctive mode any one.
struct HierarchicalSpec {
  std::vector<std::vector<ParticipantId>> levels;
  std::vector<unsigned> thresholds;
  HierarchyMode mode = HierarchyMode::conjunctive;
  /// Participant count; defaults to the largest id in any level.
  std::optional<unsigned> n;
};

/// Compartments U_1..U_m, each needing at least t_i members, plus an
/// overall threshold t.
struct CompartmentSpec {
  std::vector<std::vector<ParticipantId>> compartments;
  std::vector<unsigned> per_thresholds;
  unsigned overall = 0;
  std::optional<unsigned> n;
};

/// Throws InvalidArgument on an invalid spec. Returns non-fatal warnings
/// (currently: empty levels).
std::vector<std::string> validate(const HierarchicalSpec& spec);
void validate(const CompartmentSpec& spec);

Basis hierarchical_basis(const HierarchicalSpec& spec);
Basis compartment_basis(const CompartmentSpec& spec);

/// Largest n the exhaustive builders accept.
inline constexpr unsigned kMaxBuilderParticipants = 24;

/// Canonical JSON text, e.g. [[1,2],[1,3],[2,3]].
std::string basis_to_json(const Basis& basis);
/// Parses a JSON array of arrays. n defaults to the largest id present.
/// Throws FormatError on malformed text and InvalidArgument when the family
/// is not an antichain.
Basis basis_from_json(std::string_view text, std::optional<unsigned> n = std::nullopt);

}  // namespace hss
