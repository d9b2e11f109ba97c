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

#include "hss/shamir.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "hss/error.hpp"

namespace hss::shamir {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1u) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  constexpr std::array<std::uint64_t, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kBases) {
    if (v % p == 0) return v == p;
  }
  std::uint64_t d = v - 1;
  unsigned r = 0;
  while ((d & 1u) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = pow_mod(a, d, v);
    if (x == 1 || x == v - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < r && composite; ++i) {
      x = mul_mod(x, x, v);
      if (x == v - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t q) : q_(q) {
  if (q >= (std::uint64_t{1} << 63) || !is_prime(q)) {
    throw InvalidArgument("field modulus " + std::to_string(q) + " is not a prime below 2^63");
  }
}

std::uint64_t PrimeField::add(std::uint64_t a, std::uint64_t b) const {
  const std::uint64_t s = a + b;
  return s >= q_ ? s - q_ : s;
}

std::uint64_t PrimeField::sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + (q_ - b); }

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % q_ == 0) {
    throw InvalidArgument("zero has no inverse");
  }
  return pow_mod(a, q_ - 2, q_);
}

std::uint64_t Polynomial::evaluate(std::uint64_t x) const {
  std::uint64_t acc = 0;
  x %= field.modulus();
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    acc = field.add(field.mul(acc, x), *it);
  }
  return acc;
}

namespace {

void check_polynomial(const Polynomial& polynomial) {
  if (polynomial.coefficients.empty()) {
    throw InvalidArgument("polynomial needs at least the constant coefficient");
  }
  for (std::uint64_t a : polynomial.coefficients) {
    if (a >= polynomial.field.modulus()) {
      throw InvalidArgument("coefficient not reduced modulo q");
    }
  }
}

void check_parameters(unsigned t, unsigned n, const PrimeField& field) {
  if (!(field.modulus() > n && n >= t + 1)) {
    throw InvalidArgument("parameters must satisfy q > n >= t + 1");
  }
}

}  // namespace

std::vector<Share> evaluate_shares(const Polynomial& polynomial, unsigned n) {
  check_polynomial(polynomial);
  check_parameters(static_cast<unsigned>(polynomial.degree_bound()), n, polynomial.field);
  std::vector<Share> out;
  out.reserve(n);
  for (std::uint64_t x = 1; x <= n; ++x) out.push_back({x, polynomial.evaluate(x)});
  return out;
}

Sharing split(std::uint64_t secret, unsigned t, unsigned n, const PrimeField& field, RandomSource& rng) {
  check_parameters(t, n, field);
  if (secret >= field.modulus()) {
    throw InvalidArgument("secret must be below q");
  }
  Polynomial poly{field, {secret}};
  for (unsigned i = 1; i <= t; ++i) poly.coefficients.push_back(rng.uniform(field.modulus()));
  auto shares = evaluate_shares(poly, n);
  return {std::move(poly), std::move(shares)};
}

std::uint64_t recover(std::span<const Share> shares, unsigned t, const PrimeField& field) {
  if (shares.size() != std::size_t{t} + 1) {
    throw InvalidArgument("recovery needs exactly t + 1 = " + std::to_string(t + 1) + " shares");
  }
  const std::uint64_t q = field.modulus();
  for (std::size_t i = 0; i < shares.size(); ++i) {
    if (shares[i].x % q == 0) {
      throw InvalidArgument("share at x = 0 is not allowed");
    }
    if (shares[i].y >= q) {
      throw InvalidArgument("share value not reduced modulo q");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (shares[i].x % q == shares[j].x % q) {
        throw InvalidArgument("duplicate evaluation point x = " + std::to_string(shares[i].x));
      }
    }
  }
  // P(0) = sum_i y_i * prod_{j != i} x_j / (x_j - x_i)
  std::uint64_t secret = 0;
  for (std::size_t i = 0; i < shares.size(); ++i) {
    std::uint64_t num = 1;
    std::uint64_t den = 1;
    for (std::size_t j = 0; j < shares.size(); ++j) {
      if (i == j) continue;
      const std::uint64_t xj = shares[j].x % q;
      num = field.mul(num, xj);
      den = field.mul(den, field.sub(xj, shares[i].x % q));
    }
    secret = field.add(secret, field.mul(shares[i].y, field.mul(num, field.inv(den))));
  }
  return secret;
}

Sharing renew(const Polynomial& polynomial, unsigned n, RandomSource& rng) {
  check_polynomial(polynomial);
  check_parameters(static_cast<unsigned>(polynomial.degree_bound()), n, polynomial.field);
  Polynomial renewed = polynomial;
  for (std::size_t i = 1; i < renewed.coefficients.size(); ++i) {
    const std::uint64_t b = rng.uniform(polynomial.field.modulus());
    renewed.coefficients[i] = polynomial.field.add(renewed.coefficients[i], b);
  }
  auto shares = evaluate_shares(renewed, n);
  return {std::move(renewed), std::move(shares)};
}

FeldmanParams::FeldmanParams(std::uint64_t p, std::uint64_t q, std::uint64_t g) : p_(p), q_(q), g_(g) {
  if (p >= (std::uint64_t{1} << 63) || !is_prime(p)) {
    throw InvalidArgument("Feldman p must be a prime below 2^63");
  }
  if (!is_prime(q) || (p - 1) % q != 0) {
    throw InvalidArgument("Feldman q must be a prime dividing p - 1");
  }
  if (g <= 1 || g >= p || pow_mod(g, q, p) != 1) {
    throw InvalidArgument("Feldman g must have order q in Z_p^*");
  }
}

std::vector<std::uint64_t> feldman_commit(const Polynomial& polynomial, const FeldmanParams& params) {
  check_polynomial(polynomial);
  if (polynomial.field.modulus() != params.q()) {
    throw InvalidArgument("polynomial field does not match the group order q");
  }
  std::vector<std::uint64_t> out;
  out.reserve(polynomial.coefficients.size());
  for (std::uint64_t a : polynomial.coefficients) out.push_back(pow_mod(params.g(), a, params.p()));
  return out;
}

bool feldman_verify(const Share& share, std::span<const std::uint64_t> commitments, const FeldmanParams& params) {
  if (share.x == 0) {
    throw InvalidArgument("share index must be at least 1");
  }
  if (commitments.empty()) {
    throw InvalidArgument("no commitments supplied");
  }
  const std::uint64_t p = params.p();
  const std::uint64_t q = params.q();
  const std::uint64_t lhs = pow_mod(params.g(), share.y % q, p);
  std::uint64_t rhs = 1;
  std::uint64_t x_pow = 1;  // x^j mod q
  for (std::uint64_t c : commitments) {
    rhs = mul_mod(rhs, pow_mod(c, x_pow, p), p);
    x_pow = mul_mod(x_pow, share.x % q, q);
  }
  return lhs == rhs;
}

}  // namespace hss::shamir
