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

// Polynomial baseline: Shamir (t+1, n) sharing over Z_q, additive proactive
// renewal and Feldman commitments. Moduli up to 2^63 are exact.

#include <cstdint>
#include <span>
#include <vector>

#include "hss/random.hpp"

namespace hss::shamir {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t v);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Z_q for a prime q < 2^63.
class PrimeField {
 public:
  /// Throws InvalidArgument unless q is prime.
  explicit PrimeField(std::uint64_t q);

  std::uint64_t modulus() const { return q_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return mul_mod(a, b, q_); }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const { return pow_mod(a, e, q_); }
  /// Throws InvalidArgument for zero.
  std::uint64_t inv(std::uint64_t a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t q_;
};

/// a_0 + a_1 x + ... + a_t x^t; a_0 is the secret.
struct Polynomial {
  PrimeField field;
  std::vector<std::uint64_t> coefficients;

  std::size_t degree_bound() const { return coefficients.size() - 1; }
  std::uint64_t evaluate(std::uint64_t x) const;
};

struct Share {
  std::uint64_t x = 0;
  std::uint64_t y = 0;

  friend bool operator==(const Share&, const Share&) = default;
};

struct Sharing {
  Polynomial polynomial;
  std::vector<Share> shares;
};

/// Shares at x = 1..n of the polynomial with coefficients. Requires
/// q > n >= t + 1 where t = coefficients.size() - 1.
std::vector<Share> evaluate_shares(const Polynomial& polynomial, unsigned n);

/// Random a_1..a_t, a_0 = secret. Requires q > n >= t + 1 and secret < q.
Sharing split(std::uint64_t secret, unsigned t, unsigned n, const PrimeField& field, RandomSource& rng);

/// Lagrange interpolation at zero. Exactly t + 1 shares with distinct
/// non-zero x are required.
std::uint64_t recover(std::span<const Share> shares, unsigned t, const PrimeField& field);

/// R = P + Q where Q has a zero constant term and random b_1..b_t; returns
/// R and its shares at x = 1..n.
Sharing renew(const Polynomial& polynomial, unsigned n, RandomSource& rng);

/// Subgroup of Z_p^* of prime order q generated by g.
class FeldmanParams {
 public:
  /// Validates p, q prime, q | p - 1, g != 1 and g^q = 1 mod p.
  FeldmanParams(std::uint64_t p, std::uint64_t q, std::uint64_t g);

  std::uint64_t p() const { return p_; }
  std::uint64_t q() const { return q_; }
  std::uint64_t g() const { return g_; }

 private:
  std::uint64_t p_;
  std::uint64_t q_;
  std::uint64_t g_;
};

/// g^{a_0}, ..., g^{a_t} mod p. The polynomial's field must be Z_q.
std::vector<std::uint64_t> feldman_commit(const Polynomial& polynomial, const FeldmanParams& params);

/// g^y == prod_j C_j^{x^j mod q} (mod p).
bool feldman_verify(const Share& share, std::span<const std::uint64_t> commitments, const FeldmanParams& params);

}  // namespace hss::shamir
