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

#include "hss/hash.hpp"

#include <openssl/evp.h>

#include <array>
#include <string_view>

#include "hss/error.hpp"

namespace hss {

namespace {

struct Algorithm {
  std::string_view id;
  const char* openssl_name;
};

constexpr std::array<Algorithm, 4> kAlgorithms{{
    {"sha256", "SHA256"},
    {"sha512", "SHA512"},
    {"sha3-256", "SHA3-256"},
    {"blake2b512", "BLAKE2B512"},
}};

const EVP_MD* lookup(const std::string& id) {
  for (const auto& a : kAlgorithms) {
    if (a.id == id) {
      const EVP_MD* md = EVP_get_digestbyname(a.openssl_name);
      if (md != nullptr) return md;
    }
  }
  throw InvalidArgument("unsupported hash algorithm: " + id);
}

}  // namespace

void validate(const HashSpec& spec) {
  const EVP_MD* md = lookup(spec.algorithm);
  if (spec.truncation_bits) {
    const unsigned bits = *spec.truncation_bits;
    if (bits % 2 != 0 || bits < 8 || bits > 32) {
      throw InvalidArgument("truncation_bits must be even and within [8, 32]");
    }
  } else if (EVP_MD_get_size(md) < 16) {
    throw InvalidArgument("digest shorter than 16 bytes");
  }
}

std::size_t digest_length(const HashSpec& spec) {
  validate(spec);
  if (spec.truncation_bits) {
    return (*spec.truncation_bits + 7) / 8;
  }
  return static_cast<std::size_t>(EVP_MD_get_size(lookup(spec.algorithm)));
}

std::vector<std::string> supported_algorithms() {
  std::vector<std::string> out;
  for (const auto& a : kAlgorithms) out.emplace_back(a.id);
  return out;
}

struct Hasher::Impl {
  const EVP_MD* md = nullptr;
  EVP_MD_CTX* ctx = nullptr;
  ~Impl() { EVP_MD_CTX_free(ctx); }
};

Hasher::Hasher(const HashSpec& spec)
    : impl_(std::make_unique<Impl>()),
      length_(digest_length(spec)),
      truncation_bits_(spec.truncation_bits) {
  impl_->md = lookup(spec.algorithm);
  impl_->ctx = EVP_MD_CTX_new();
  if (impl_->ctx == nullptr) {
    throw Error("EVP_MD_CTX_new failed");
  }
}

Hasher::~Hasher() = default;
Hasher::Hasher(Hasher&&) noexcept = default;
Hasher& Hasher::operator=(Hasher&&) noexcept = default;

void Hasher::digest_into(std::initializer_list<ByteView> parts, std::span<std::uint8_t> out) {
  if (out.size() != length_) {
    throw InvalidArgument("digest output buffer has wrong length");
  }
  if (EVP_DigestInit_ex(impl_->ctx, impl_->md, nullptr) != 1) {
    throw Error("EVP_DigestInit_ex failed");
  }
  for (ByteView part : parts) {
    if (!part.empty() && EVP_DigestUpdate(impl_->ctx, part.data(), part.size()) != 1) {
      throw Error("EVP_DigestUpdate failed");
    }
  }
  std::array<std::uint8_t, EVP_MAX_MD_SIZE> full{};
  unsigned int full_len = 0;
  if (EVP_DigestFinal_ex(impl_->ctx, full.data(), &full_len) != 1) {
    throw Error("EVP_DigestFinal_ex failed");
  }
  std::copy_n(full.begin(), length_, out.begin());
  if (truncation_bits_ && *truncation_bits_ % 8 != 0) {
    const unsigned spare = 8 - *truncation_bits_ % 8;
    out[length_ - 1] &= static_cast<std::uint8_t>(0xff << spare);
  }
}

Bytes Hasher::digest(std::initializer_list<ByteView> parts) {
  Bytes out(length_);
  digest_into(parts, out);
  return out;
}

Bytes hash_bytes(const HashSpec& spec, ByteView data) {
  Hasher hasher(spec);
  return hasher.digest(data);
}

}  // namespace hss
