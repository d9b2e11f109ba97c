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

#include <array>
#include <cstdint>
#include <span>

namespace hss {

/// Source of random bytes. Every randomized operation takes one by
/// reference and owns it for the duration of the call.
class RandomSource {
 public:
  virtual ~RandomSource() = default;

  virtual void fill(std::span<std::uint8_t> out) = 0;

  std::uint64_t next_u64();

  /// Uniform integer in [0, bound) by rejection sampling. bound must be > 0.
  virtual std::uint64_t uniform(std::uint64_t bound);
};

/// Deterministic generator for reproducible runs: SHA-256 over
/// (seed || counter), one 32-byte block per counter value.
class SeededRandom final : public RandomSource {
 public:
  explicit SeededRandom(std::uint64_t seed);

  void fill(std::span<std::uint8_t> out) override;

 private:
  void refill();

  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
  std::array<std::uint8_t, 32> block_{};
  std::size_t used_ = 32;
};

/// Operating-system entropy via the OpenSSL DRBG.
class SystemRandom final : public RandomSource {
 public:
  void fill(std::span<std::uint8_t> out) override;
};

}  // namespace hss
