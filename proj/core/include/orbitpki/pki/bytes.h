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

#ifndef ORBITPKI_PKI_BYTES_H_
#define ORBITPKI_PKI_BYTES_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orbitpki::pki {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

// 32-byte BLAKE2b digest.
using Digest = std::array<std::uint8_t, 32>;

Digest Blake2b(ByteView data);
Digest KeyedBlake2b(ByteView key, ByteView data);

std::string ToHex(ByteView data);
// Throws Error(kParse) on odd length or non-hex characters.
Bytes FromHex(std::string_view hex);

inline ByteView AsBytes(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

// Appends big-endian, length-prefixed fields. Used for every canonical
// encoding in the library.
class ByteWriter {
 public:
  void PutU8(std::uint8_t v) { out_.push_back(v); }
  void PutU32(std::uint32_t v);
  void PutU64(std::uint64_t v);
  void PutDouble(double v);
  void PutBytes(ByteView v);
  void PutString(std::string_view v) { PutBytes(AsBytes(v)); }

  const Bytes& bytes() const& { return out_; }
  Bytes bytes() && { return std::move(out_); }

 private:
  Bytes out_;
};

// Mirror of ByteWriter. Every getter throws Error(kEncoding) on truncation.
class ByteReader {
 public:
  explicit ByteReader(ByteView in) : in_(in) {}

  std::uint8_t GetU8();
  std::uint32_t GetU32();
  std::uint64_t GetU64();
  double GetDouble();
  Bytes GetBytes();
  std::string GetString();

  bool AtEnd() const { return pos_ == in_.size(); }

 private:
  void Need(std::size_t n) const;

  ByteView in_;
  std::size_t pos_ = 0;
};

}  // namespace orbitpki::pki

#endif  // ORBITPKI_PKI_BYTES_H_
