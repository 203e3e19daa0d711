// Copyright 2026 The OrbitPKI Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "orbitpki/pki/bytes.h"

#include <sodium.h>

#include <bit>
#include <cstring>

#include "orbitpki/error.h"
#include "orbitpki/pki/sodium_init.h"

namespace orbitpki::pki {

Digest Blake2b(ByteView data) {
  EnsureSodium();
  Digest out{};
  crypto_generichash(out.data(), out.size(), data.data(), data.size(),
                     nullptr, 0);
  return out;
}

Digest KeyedBlake2b(ByteView key, ByteView data) {
  EnsureSodium();
  Digest out{};
  crypto_generichash(out.data(), out.size(), data.data(), data.size(),
                     key.data(), key.size());
  return out;
}

std::string ToHex(ByteView data) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(data.size() * 2);
  for (std::uint8_t b : data) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0x0f]);
  }
  return out;
}

Bytes FromHex(std::string_view hex) {
  if (hex.size() % 2 != 0) {
    throw Error(ErrorCode::kParse, "hex string has odd length");
  }
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw Error(ErrorCode::kParse, std::string("invalid hex digit '") + c + "'");
  };
  Bytes out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    out.push_back(static_cast<std::uint8_t>(nibble(hex[i]) << 4 |
                                            nibble(hex[i + 1])));
  }
  return out;
}

void ByteWriter::PutU32(std::uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) {
    out_.push_back(static_cast<std::uint8_t>(v >> shift));
  }
}

void ByteWriter::PutU64(std::uint64_t v) {
  for (int shift = 56; shift >= 0; shift -= 8) {
    out_.push_back(static_cast<std::uint8_t>(v >> shift));
  }
}

void ByteWriter::PutDouble(double v) {
  PutU64(std::bit_cast<std::uint64_t>(v));
}

void ByteWriter::PutBytes(ByteView v) {
  if (v.size() > UINT32_MAX) {
    throw Error(ErrorCode::kEncoding, "field exceeds 4 GiB");
  }
  PutU32(static_cast<std::uint32_t>(v.size()));
  out_.insert(out_.end(), v.begin(), v.end());
}

void ByteReader::Need(std::size_t n) const {
  if (in_.size() - pos_ < n) {
    throw Error(ErrorCode::kEncoding, "truncated encoding");
  }
}

std::uint8_t ByteReader::GetU8() {
  Need(1);
  return in_[pos_++];
}

std::uint32_t ByteReader::GetU32() {
  Need(4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v = (v << 8) | in_[pos_++];
  return v;
}

std::uint64_t ByteReader::GetU64() {
  Need(8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = (v << 8) | in_[pos_++];
  return v;
}

double ByteReader::GetDouble() { return std::bit_cast<double>(GetU64()); }

Bytes ByteReader::GetBytes() {
  const std::uint32_t n = GetU32();
  Need(n);
  Bytes out(in_.begin() + pos_, in_.begin() + pos_ + n);
  pos_ += n;
  return out;
}

std::string ByteReader::GetString() {
  const std::uint32_t n = GetU32();
  Need(n);
  std::string out(reinterpret_cast<const char*>(in_.data() + pos_), n);
  pos_ += n;
  return out;
}

}  // namespace orbitpki::pki
