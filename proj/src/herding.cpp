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

#include "hss/herding.hpp"

#include <array>
#include <memory>
#include <unordered_map>
#include <unordered_set>

#include "hss/error.hpp"
#include "hss/kernels.hpp"

namespace hss {

namespace {

Hasher& thread_hasher(const HashSpec& spec) {
  thread_local std::unique_ptr<Hasher> hasher;
  thread_local HashSpec cached;
  if (!hasher || cached != spec) {
    hasher = std::make_unique<Hasher>(spec);
    cached = spec;
  }
  return *hasher;
}

std::uint32_t random_chaining(const TruncatedIterativeHash& hash, RandomSource& rng) {
  return static_cast<std::uint32_t>(rng.next_u64()) & hash.mask();
}

}  // namespace

TruncatedIterativeHash::TruncatedIterativeHash(unsigned u, std::uint32_t iv, HashSpec base)
    : u_(u), iv_(iv), base_(std::move(base)) {
  if (u_ % 2 != 0 || u_ < 8 || u_ > 32) {
    throw InvalidArgument("truncated width u must be even and within [8, 32]");
  }
  if (base_.truncation_bits) {
    throw InvalidArgument("base hash of the iterative construction must be untruncated");
  }
  validate(base_);
  iv_ &= mask();
}

TruncatedIterativeHash::TruncatedIterativeHash(const TruncatedIterativeHash& other)
    : u_(other.u_), iv_(other.iv_), base_(other.base_), calls_(other.calls()) {}

TruncatedIterativeHash& TruncatedIterativeHash::operator=(const TruncatedIterativeHash& other) {
  u_ = other.u_;
  iv_ = other.iv_;
  base_ = other.base_;
  calls_.store(other.calls(), std::memory_order_relaxed);
  return *this;
}

std::uint32_t TruncatedIterativeHash::compress(std::uint32_t chaining, std::uint64_t block) const {
  std::array<std::uint8_t, 12> input{};
  for (int i = 0; i < 4; ++i) input[i] = static_cast<std::uint8_t>(chaining >> (24 - 8 * i));
  for (int i = 0; i < 8; ++i) input[4 + i] = static_cast<std::uint8_t>(block >> (56 - 8 * i));
  Hasher& hasher = thread_hasher(base_);
  std::array<std::uint8_t, 64> digest{};
  const std::span<std::uint8_t> out(digest.data(), hasher.length());
  hasher.digest_into({input}, out);
  calls_.fetch_add(1, std::memory_order_relaxed);
  const std::uint32_t lead = (std::uint32_t{digest[0]} << 24) | (std::uint32_t{digest[1]} << 16) |
                             (std::uint32_t{digest[2]} << 8) | std::uint32_t{digest[3]};
  return u_ == 32 ? lead : lead >> (32 - u_);
}

std::uint32_t TruncatedIterativeHash::iterate(std::uint32_t chaining, std::span<const std::uint64_t> blocks) const {
  for (std::uint64_t m : blocks) chaining = compress(chaining, m);
  return chaining;
}

std::vector<std::uint64_t> to_blocks(ByteView bytes) {
  std::vector<std::uint64_t> out((bytes.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    out[i / 8] |= std::uint64_t{bytes[i]} << (56 - 8 * (i % 8));
  }
  return out;
}

std::uint64_t collision_budget(unsigned u) { return std::uint64_t{64} << (u / 2); }

CollisionResult find_collision(std::uint32_t chaining_in, const TruncatedIterativeHash& hash, RandomSource& rng) {
  const std::uint64_t budget = collision_budget(hash.width());
  std::unordered_map<std::uint32_t, std::uint64_t> seen;
  seen.reserve(static_cast<std::size_t>(4) << (hash.width() / 2));
  for (std::uint64_t calls = 1; calls <= budget; ++calls) {
    const std::uint64_t block = rng.next_u64();
    const std::uint32_t out = hash.compress(chaining_in, block);
    const auto [it, inserted] = seen.emplace(out, block);
    if (!inserted && it->second != block) {
      return {CollisionPair{chaining_in, it->second, block, out}, calls};
    }
  }
  throw BudgetExceeded("collision search exceeded " + std::to_string(budget) + " compression calls");
}

std::vector<std::uint64_t> Multicollision::message(std::uint64_t index) const {
  if (index >= message_count()) {
    throw InvalidArgument("multicollision message index out of range");
  }
  std::vector<std::uint64_t> blocks;
  blocks.reserve(pairs_.size());
  for (std::size_t j = 0; j < pairs_.size(); ++j) {
    blocks.push_back((index >> j) & 1u ? pairs_[j].block_b : pairs_[j].block_a);
  }
  return blocks;
}

Multicollision build_multicollision(unsigned b, const TruncatedIterativeHash& hash, RandomSource& rng) {
  if (b < 1 || b > 20) {
    throw InvalidArgument("multicollision length b must be within [1, 20]");
  }
  std::vector<CollisionPair> pairs;
  std::uint64_t calls = 0;
  std::uint32_t chaining = hash.iv();
  for (unsigned i = 0; i < b; ++i) {
    const CollisionResult r = find_collision(chaining, hash, rng);
    pairs.push_back(r.pair);
    calls += r.calls;
    chaining = r.pair.chaining_out;
  }
  return Multicollision(std::move(pairs), calls);
}

std::vector<std::uint64_t> DiamondStructure::suffix(std::size_t leaf) const {
  if (leaf >= width()) {
    throw InvalidArgument("diamond leaf index out of range");
  }
  std::vector<std::uint64_t> out;
  for (std::size_t l = 0; l + 1 < levels.size(); ++l) {
    out.push_back(links[l][leaf >> l]);
  }
  return out;
}

namespace {

struct Merge {
  std::uint64_t block_left = 0;
  std::uint64_t block_right = 0;
  std::uint32_t parent = 0;
  std::uint64_t calls = 0;
};

// Two-sided birthday search: blocks m, m' with C(left, m) = C(right, m').
Merge merge_pair(std::uint32_t left, std::uint32_t right, const TruncatedIterativeHash& hash, RandomSource& rng) {
  if (left == right) {
    const std::uint64_t block = rng.next_u64();
    return {block, block, hash.compress(left, block), 1};
  }
  const std::uint64_t budget = collision_budget(hash.width());
  std::unordered_map<std::uint32_t, std::uint64_t> from_left;
  std::unordered_map<std::uint32_t, std::uint64_t> from_right;
  std::uint64_t calls = 0;
  while (calls < budget) {
    const std::uint64_t a = rng.next_u64();
    const std::uint32_t out_a = hash.compress(left, a);
    ++calls;
    if (const auto it = from_right.find(out_a); it != from_right.end()) {
      return {a, it->second, out_a, calls};
    }
    from_left.emplace(out_a, a);

    const std::uint64_t b = rng.next_u64();
    const std::uint32_t out_b = hash.compress(right, b);
    ++calls;
    if (const auto it = from_left.find(out_b); it != from_left.end()) {
      return {it->second, b, out_b, calls};
    }
    from_right.emplace(out_b, b);
  }
  throw BudgetExceeded("diamond merge exceeded " + std::to_string(budget) + " compression calls");
}

}  // namespace

DiamondStructure build_diamond(std::size_t w, const TruncatedIterativeHash& hash, RandomSource& rng) {
  if (w == 0 || w > 64 || (w & (w - 1)) != 0) {
    throw InvalidArgument("diamond width must be a power of two no larger than 64");
  }
  DiamondStructure d;
  std::vector<std::uint32_t> leaves;
  std::unordered_set<std::uint32_t> used;
  while (leaves.size() < w) {
    const std::uint32_t v = random_chaining(hash, rng);
    if (used.insert(v).second) leaves.push_back(v);
  }
  d.levels.push_back(std::move(leaves));

  while (d.levels.back().size() > 1) {
    const auto& current = d.levels.back();
    std::vector<std::uint32_t> parents;
    std::vector<std::uint64_t> links;
    for (std::size_t j = 0; j < current.size(); j += 2) {
      const Merge m = merge_pair(current[j], current[j + 1], hash, rng);
      links.push_back(m.block_left);
      links.push_back(m.block_right);
      parents.push_back(m.parent);
      d.calls += m.calls;
    }
    d.links.push_back(std::move(links));
    d.levels.push_back(std::move(parents));
  }
  return d;
}

std::vector<std::uint64_t> HerdedMessage::blocks() const {
  std::vector<std::uint64_t> out = prefix_blocks;
  out.push_back(linking_block);
  out.insert(out.end(), suffix.begin(), suffix.end());
  return out;
}

std::uint64_t linking_budget(unsigned u, std::size_t w) {
  return std::max<std::uint64_t>(1, (std::uint64_t{64} << u) / w);
}

HerdedMessage herd_prefix(ByteView prefix, const DiamondStructure& diamond, const TruncatedIterativeHash& hash,
                          RandomSource& rng, Execution execution) {
  if (diamond.levels.empty() || diamond.levels.back().size() != 1 ||
      diamond.links.size() + 1 != diamond.levels.size()) {
    throw InvalidArgument("malformed diamond structure");
  }
  HerdedMessage out;
  out.prefix.assign(prefix.begin(), prefix.end());
  out.prefix_blocks = to_blocks(prefix);
  const std::uint32_t chaining = hash.hash(out.prefix_blocks);

  const std::uint64_t budget = linking_budget(hash.width(), diamond.width());
  const std::uint64_t seed = rng.next_u64();
  const auto& leaves = diamond.levels.front();
  const auto hit = execution == Execution::parallel
                       ? kernels::find_link_parallel(hash, chaining, leaves, seed, budget)
                       : kernels::find_link_serial(hash, chaining, leaves, seed, budget);
  if (!hit) {
    throw BudgetExceeded("linking search exceeded " + std::to_string(budget) + " trials");
  }
  out.linking_block = hit->block;
  out.leaf = hit->target_index;
  out.trials = hit->trials;
  out.suffix = diamond.suffix(out.leaf);
  return out;
}

}  // namespace hss
