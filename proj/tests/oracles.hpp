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

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check.

#include <openssl/sha.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace hss::oracle {

using IdSet = std::vector<std::uint32_t>;
using Family = std::set<IdSet>;

inline IdSet ids_of(std::uint32_t mask) {
  IdSet out;
  for (std::uint32_t bit = 0; bit < 32; ++bit) {
    if (mask & (1u << bit)) out.push_back(bit + 1);
  }
  return out;
}

inline std::uint32_t mask_of(const IdSet& ids) {
  std::uint32_t m = 0;
  for (auto id : ids) m |= 1u << (id - 1);
  return m;
}

/// Every subset of {1..n} satisfying pred that has no proper subset also
/// satisfying it. Walks all proper submasks, so it does not rely on
/// monotonicity.
inline Family brute_force_minimal(unsigned n, const std::function<bool(std::uint32_t)>& pred) {
  Family out;
  for (std::uint32_t v = 1; v < (1u << n); ++v) {
    if (!pred(v)) continue;
    bool minimal = true;
    for (std::uint32_t sub = (v - 1) & v; sub != 0 && minimal; sub = (sub - 1) & v) {
      if (pred(sub)) minimal = false;
    }
    if (minimal) out.insert(ids_of(v));
  }
  return out;
}

inline unsigned popcount(std::uint32_t v) { return static_cast<unsigned>(std::popcount(v)); }

inline std::uint64_t binomial(unsigned n, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline std::vector<std::uint8_t> sha256(const std::vector<std::uint8_t>& data) {
  std::vector<std::uint8_t> out(SHA256_DIGEST_LENGTH);
  SHA256(data.data(), data.size(), out.data());
  return out;
}

/// Square-and-multiply by repeated multiplication, for tiny moduli only.
inline std::uint64_t naive_pow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  for (std::uint64_t i = 0; i < e; ++i) r = r * b % m;
  return r;
}

/// Truncated compression recomputed from scratch: leading u bits of
/// SHA-256(be32(h) || be64(m)).
inline std::uint32_t compress_sha256(unsigned u, std::uint32_t h, std::uint64_t m) {
  std::vector<std::uint8_t> in;
  for (int i = 3; i >= 0; --i) in.push_back(static_cast<std::uint8_t>(h >> (8 * i)));
  for (int i = 7; i >= 0; --i) in.push_back(static_cast<std::uint8_t>(m >> (8 * i)));
  const auto d = sha256(in);
  const std::uint32_t lead = (std::uint32_t{d[0]} << 24) | (std::uint32_t{d[1]} << 16) |
                             (std::uint32_t{d[2]} << 8) | d[3];
  return u == 32 ? lead : lead >> (32 - u);
}

inline std::uint32_t replay(unsigned u, std::uint32_t iv, const std::vector<std::uint64_t>& blocks) {
  std::uint32_t h = iv;
  for (auto m : blocks) h = compress_sha256(u, h, m);
  return h;
}

}  // namespace hss::oracle
