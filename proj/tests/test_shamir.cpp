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

#include <deque>
#include <random>

#include <gtest/gtest.h>

#include "hss/error.hpp"
#include "hss/shamir.hpp"
#include "oracles.hpp"

namespace hss::shamir {
namespace {

/// Hands out queued values from uniform(); anything else is a test bug.
class ScriptedRandom final : public RandomSource {
 public:
  explicit ScriptedRandom(std::deque<std::uint64_t> values) : values_(std::move(values)) {}
  void fill(std::span<std::uint8_t>) override { throw std::logic_error("unexpected fill()"); }
  std::uint64_t uniform(std::uint64_t bound) override {
    const std::uint64_t v = values_.front();
    values_.pop_front();
    EXPECT_LT(v, bound);
    return v;
  }

 private:
  std::deque<std::uint64_t> values_;
};

// Constant term of the unique polynomial of degree <= t through the shares,
// found by enumerating all q^(t+1) coefficient vectors.
std::uint64_t enumerate_secret(const std::vector<Share>& shares, unsigned t, std::uint64_t q) {
  std::vector<std::uint64_t> coeff(t + 1, 0);
  std::optional<std::uint64_t> found;
  int matches = 0;
  for (;;) {
    bool ok = true;
    for (const auto& s : shares) {
      std::uint64_t y = 0, xp = 1;
      for (auto a : coeff) {
        y = (y + a * xp) % q;
        xp = xp * s.x % q;
      }
      ok = ok && y == s.y;
    }
    if (ok) {
      found = coeff[0];
      ++matches;
    }
    std::size_t i = 0;
    while (i < coeff.size() && ++coeff[i] == q) coeff[i++] = 0;
    if (i == coeff.size()) break;
  }
  EXPECT_EQ(matches, 1);
  return found.value_or(q);
}

std::vector<std::vector<Share>> subsets_of_size(const std::vector<Share>& all, std::size_t k) {
  std::vector<std::vector<Share>> out;
  const auto n = static_cast<std::uint32_t>(all.size());
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (oracle::popcount(m) != k) continue;
    std::vector<Share> pick;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (m & (1u << i)) pick.push_back(all[i]);
    }
    out.push_back(pick);
  }
  return out;
}

TEST(Primality, AgreesWithTrialDivision) {
  for (std::uint64_t v = 0; v < 5000; ++v) {
    bool prime = v >= 2;
    for (std::uint64_t d = 2; d * d <= v && prime; ++d) prime = v % d != 0;
    EXPECT_EQ(is_prime(v), prime) << v;
  }
  EXPECT_TRUE(is_prime((std::uint64_t{1} << 61) - 1));
  EXPECT_FALSE(is_prime(561));                      // Carmichael
  EXPECT_FALSE(is_prime(3215031751ull));            // strong pseudoprime to bases 2, 3, 5, 7
  EXPECT_FALSE(is_prime(((std::uint64_t{1} << 31) - 1) * ((std::uint64_t{1} << 31) - 1)));
  EXPECT_THROW(PrimeField(15), InvalidArgument);
}

TEST(Split, ForcedCoefficients) {
  ScriptedRandom rng({2});
  const Sharing s = split(5, 1, 3, PrimeField(7), rng);
  EXPECT_EQ(s.polynomial.coefficients, (std::vector<std::uint64_t>{5, 2}));
  EXPECT_EQ(s.shares, (std::vector<Share>{{1, 0}, {2, 2}, {3, 4}}));
}

TEST(Split, ConstantPolynomial) {
  SeededRandom rng(1);
  const Sharing s = split(9, 0, 5, PrimeField(11), rng);
  for (const auto& share : s.shares) EXPECT_EQ(share.y, 9u);
}

TEST(Split, ParameterErrors) {
  SeededRandom rng(1);
  EXPECT_THROW(split(1, 1, 7, PrimeField(7), rng), InvalidArgument);   // q > n violated
  EXPECT_THROW(split(1, 3, 3, PrimeField(7), rng), InvalidArgument);   // n >= t+1 violated
  EXPECT_THROW(split(7, 1, 3, PrimeField(7), rng), InvalidArgument);   // secret >= q
}

TEST(Recover, HandExamples) {
  EXPECT_EQ(recover(std::vector<Share>{{1, 0}, {2, 2}}, 1, PrimeField(7)), 5u);
  EXPECT_EQ(recover(std::vector<Share>{{3, 9}}, 0, PrimeField(11)), 9u);
}

TEST(Recover, Errors) {
  const PrimeField f(11);
  EXPECT_THROW(recover(std::vector<Share>{{1, 2}, {1, 3}}, 1, f), InvalidArgument);
  EXPECT_THROW(recover(std::vector<Share>{{1, 2}}, 1, f), InvalidArgument);
  EXPECT_THROW(recover(std::vector<Share>{{0, 2}, {1, 3}}, 1, f), InvalidArgument);
  EXPECT_THROW(recover(std::vector<Share>{{1, 11}, {2, 3}}, 1, f), InvalidArgument);
}

TEST(Recover, AllSubsetsMatchEnumerationOracle) {
  SeededRandom rng(2);
  const Sharing s = split(6, 2, 4, PrimeField(11), rng);
  for (const auto& subset : subsets_of_size(s.shares, 3)) {
    EXPECT_EQ(enumerate_secret(subset, 2, 11), 6u);
    EXPECT_EQ(recover(subset, 2, PrimeField(11)), 6u);
  }
}

TEST(Recover, RoundTripLargeField) {
  const PrimeField f((std::uint64_t{1} << 61) - 1);
  SeededRandom rng(3);
  for (unsigned n = 1; n <= 8; ++n) {
    for (unsigned t = 0; t < n; ++t) {
      const std::uint64_t secret = rng.uniform(f.modulus());
      const Sharing s = split(secret, t, n, f, rng);
      for (const auto& subset : subsets_of_size(s.shares, t + 1)) {
        ASSERT_EQ(recover(subset, t, f), secret);
      }
    }
  }
}

TEST(Perfectness, SingleShareIsConsistentWithEverySecretEqually) {
  const std::uint64_t q = 7;
  for (std::uint64_t x = 1; x < q; ++x) {
    for (std::uint64_t y = 0; y < q; ++y) {
      std::vector<int> per_secret(q, 0);
      int total = 0;
      for (std::uint64_t a0 = 0; a0 < q; ++a0) {
        for (std::uint64_t a1 = 0; a1 < q; ++a1) {
          if ((a0 + a1 * x) % q == y) {
            ++per_secret[a0];
            ++total;
          }
        }
      }
      EXPECT_EQ(total, static_cast<int>(q));
      for (int c : per_secret) EXPECT_EQ(c, 1);
    }
  }
}

TEST(Renew, PreservesSecretAndChangesShares) {
  const PrimeField f(7);
  SeededRandom rng(4);
  const Sharing old = split(5, 1, 3, f, rng);
  const Sharing fresh = renew(old.polynomial, 3, rng);
  EXPECT_EQ(fresh.polynomial.coefficients[0], 5u);
  ASSERT_NE(fresh.polynomial.coefficients[1], old.polynomial.coefficients[1]) << "pick another seed";
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NE(fresh.shares[i].y, old.shares[i].y);
  for (const auto& subset : subsets_of_size(fresh.shares, 2)) EXPECT_EQ(recover(subset, 1, f), 5u);
}

TEST(Renew, ZeroUpdateIsIdentity) {
  const PrimeField f(11);
  const Polynomial p{f, {4, 7, 1}};
  ScriptedRandom zeros({0, 0});
  const Sharing same = renew(p, 5, zeros);
  EXPECT_EQ(same.shares, evaluate_shares(p, 5));
}

TEST(Feldman, CommitExamples) {
  const FeldmanParams params(23, 11, 2);
  EXPECT_EQ(feldman_commit(Polynomial{PrimeField(11), {3, 5}}, params), (std::vector<std::uint64_t>{8, 9}));
  EXPECT_EQ(oracle::naive_pow(2, 3, 23), 8u);
  EXPECT_EQ(oracle::naive_pow(2, 5, 23), 9u);
  EXPECT_EQ(feldman_commit(Polynomial{PrimeField(11), {0, 0, 0}}, params), (std::vector<std::uint64_t>{1, 1, 1}));
  EXPECT_THROW(feldman_commit(Polynomial{PrimeField(7), {3, 5}}, params), InvalidArgument);
}

TEST(Feldman, VerifyExamples) {
  const FeldmanParams params(23, 11, 2);
  const std::vector<std::uint64_t> c{8, 9};
  // g^8 = 3 = 8 * 9 mod 23
  EXPECT_EQ(oracle::naive_pow(2, 8, 23), 3u);
  EXPECT_EQ(8 * 9 % 23, 3);
  EXPECT_TRUE(feldman_verify({1, 8}, c, params));
  EXPECT_EQ(oracle::naive_pow(2, 7, 23), 13u);
  EXPECT_FALSE(feldman_verify({1, 7}, c, params));
}

TEST(Feldman, ExhaustiveSoundnessSmallGroup) {
  const FeldmanParams params(23, 11, 2);
  const PrimeField f(11);
  for (std::uint64_t a0 = 0; a0 < 11; ++a0) {
    for (std::uint64_t a1 = 0; a1 < 11; ++a1) {
      const Polynomial p{f, {a0, a1}};
      const auto c = feldman_commit(p, params);
      for (std::uint64_t i = 1; i <= 10; ++i) {
        int accepted = 0;
        for (std::uint64_t y = 0; y < 11; ++y) {
          if (feldman_verify({i, y}, c, params)) {
            ++accepted;
            EXPECT_EQ(y, p.evaluate(i));
          }
        }
        EXPECT_EQ(accepted, 1);
      }
    }
  }
}

TEST(Feldman, CompletenessSeededTrials) {
  const FeldmanParams params(2039, 1019, 4);
  const PrimeField f(1019);
  SeededRandom rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned t = static_cast<unsigned>(trial % 5);
    const Sharing s = split(rng.uniform(1019), t, 12, f, rng);
    const auto c = feldman_commit(s.polynomial, params);
    for (const auto& share : s.shares) EXPECT_TRUE(feldman_verify(share, c, params));
  }
}

TEST(Feldman, ParameterValidation) {
  EXPECT_THROW(FeldmanParams(23, 7, 2), InvalidArgument);   // 7 does not divide 22
  EXPECT_THROW(FeldmanParams(23, 11, 5), InvalidArgument);  // 5 has order 22
  EXPECT_THROW(FeldmanParams(23, 11, 1), InvalidArgument);
  EXPECT_THROW(FeldmanParams(21, 5, 2), InvalidArgument);
  EXPECT_NO_THROW(FeldmanParams(23, 11, 2));
}

}  // namespace
}  // namespace hss::shamir
