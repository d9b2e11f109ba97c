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

// Desk-scale iterative hashing: birthday collisions, Joux multicollisions,
// diamond structures and prefix herding on a truncated compression function.

#include <atomic>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hss/bytes.hpp"
#include "hss/hash.hpp"
#include "hss/random.hpp"
#include "hss/scheme.hpp"

namespace hss {

/// Iterated compression h_i = C(h_{i-1}, m_i) with u-bit chaining values
/// and 64-bit message blocks. C(h, m) is the leading u bits of
/// H(be32(h) || be64(m)). No padding or length strengthening.
///
/// Every call to compress() increments an atomic counter, so cost figures
/// reported by the searches are exact.
class TruncatedIterativeHash {
 public:
  static constexpr unsigned kBlockBits = 64;

  /// u must be even and within [8, 32]; the base hash is used untruncated.
  explicit TruncatedIterativeHash(unsigned u, std::uint32_t iv = 0, HashSpec base = {});
  TruncatedIterativeHash(const TruncatedIterativeHash& other);
  TruncatedIterativeHash& operator=(const TruncatedIterativeHash& other);

  unsigned width() const { return u_; }
  std::uint32_t iv() const { return iv_; }
  const HashSpec& base() const { return base_; }
  std::uint32_t mask() const { return u_ == 32 ? 0xffffffffu : (1u << u_) - 1; }

  std::uint32_t compress(std::uint32_t chaining, std::uint64_t block) const;

  std::uint32_t iterate(std::uint32_t chaining, std::span<const std::uint64_t> blocks) const;
  std::uint32_t hash(std::span<const std::uint64_t> blocks) const { return iterate(iv_, blocks); }

  std::uint64_t calls() const { return calls_.load(std::memory_order_relaxed); }

 private:
  unsigned u_;
  std::uint32_t iv_;
  HashSpec base_;
  mutable std::atomic<std::uint64_t> calls_{0};
};

/// Splits bytes into big-endian 64-bit blocks, zero-filling the last one.
std::vector<std::uint64_t> to_blocks(ByteView bytes);

struct CollisionPair {
  std::uint32_t chaining_in = 0;
  std::uint64_t block_a = 0;
  std::uint64_t block_b = 0;
  std::uint32_t chaining_out = 0;

  friend bool operator==(const CollisionPair&, const CollisionPair&) = default;
};

struct CollisionResult {
  CollisionPair pair;
  std::uint64_t calls = 0;
};

/// Budget for one birthday search: 64 * 2^(u/2) compression calls.
std::uint64_t collision_budget(unsigned u);

/// Birthday search over random blocks, indexing outputs in a table.
/// Throws BudgetExceeded when collision_budget(u) calls pass without a hit.
CollisionResult find_collision(std::uint32_t chaining_in, const TruncatedIterativeHash& hash, RandomSource& rng);

/// b chained collision pairs starting at the IV. Choosing block_a or
/// block_b independently at each step gives 2^b messages with one hash.
class Multicollision {
 public:
  explicit Multicollision(std::vector<CollisionPair> pairs, std::uint64_t calls)
      : pairs_(std::move(pairs)), calls_(calls) {}

  const std::vector<CollisionPair>& pairs() const { return pairs_; }
  std::size_t length() const { return pairs_.size(); }
  std::uint64_t message_count() const { return std::uint64_t{1} << pairs_.size(); }
  std::uint32_t final_hash() const { return pairs_.back().chaining_out; }
  std::uint64_t calls() const { return calls_; }

  /// Bit j of index picks block_b (1) or block_a (0) for pair j.
  std::vector<std::uint64_t> message(std::uint64_t index) const;

 private:
  std::vector<CollisionPair> pairs_;
  std::uint64_t calls_;
};

/// 1 <= b <= 20.
Multicollision build_multicollision(unsigned b, const TruncatedIterativeHash& hash, RandomSource& rng);

/// Binary tree of chaining values. levels[0] holds the w leaves; each
/// higher level halves the count down to the single root. links[l][j] is
/// the block that carries node j of level l to its parent at level l + 1.
struct DiamondStructure {
  std::vector<std::vector<std::uint32_t>> levels;
  std::vector<std::vector<std::uint64_t>> links;
  std::uint64_t calls = 0;

  std::size_t width() const { return levels.front().size(); }
  std::size_t level_count() const { return levels.size(); }
  std::uint32_t final_hash() const { return levels.back().front(); }

  /// Linking blocks from the given leaf to the root.
  std::vector<std::uint64_t> suffix(std::size_t leaf) const;
};

/// w must be a power of two, at most 64. Leaves are distinct random
/// chaining values; sibling pairs are merged by a two-sided birthday search
/// budgeted at collision_budget(u) calls each.
DiamondStructure build_diamond(std::size_t w, const TruncatedIterativeHash& hash, RandomSource& rng);

struct HerdedMessage {
  Bytes prefix;
  std::vector<std::uint64_t> prefix_blocks;
  std::uint64_t linking_block = 0;
  std::size_t leaf = 0;
  std::vector<std::uint64_t> suffix;
  std::uint64_t trials = 0;

  /// prefix_blocks || linking_block || suffix.
  std::vector<std::uint64_t> blocks() const;
};

/// Budget for one linking search: 64 * 2^u / w trials.
std::uint64_t linking_budget(unsigned u, std::size_t w);

/// Finds M* linking the prefix's chaining value to some leaf, then appends
/// that leaf's suffix. The result hashes to diamond.final_hash().
HerdedMessage herd_prefix(ByteView prefix, const DiamondStructure& diamond, const TruncatedIterativeHash& hash,
                          RandomSource& rng, Execution execution = Execution::serial);

}  // namespace hss
