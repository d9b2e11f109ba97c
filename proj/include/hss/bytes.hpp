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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hss {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

/// Lowercase hex, two characters per byte.
std::string to_hex(ByteView data);

/// Accepts upper or lower case; throws FormatError on odd length or a
/// non-hex character.
Bytes from_hex(std::string_view hex);

/// Element-wise XOR. Throws InvalidArgument on length mismatch.
Bytes xor_bytes(ByteView a, ByteView b);

/// Overwrites the buffer with zeros in a way the optimizer may not elide,
/// then clears it.
void secure_wipe(Bytes& data);

}  // namespace hss
