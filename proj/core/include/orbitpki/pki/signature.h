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

#ifndef ORBITPKI_PKI_SIGNATURE_H_
#define ORBITPKI_PKI_SIGNATURE_H_

#include <cstdint>
#include <string_view>

#include "orbitpki/pki/bytes.h"

namespace orbitpki::pki {

enum class SignatureAlgorithm : std::uint8_t {
  kMock = 1,     // keyed BLAKE2b, fast and deterministic, NOT secure
  kEd25519 = 2,  // libsodium Ed25519
};

std::string_view AlgorithmName(SignatureAlgorithm alg);
// Accepts "mock" and "ed25519". Throws Error(kParse).
SignatureAlgorithm ParseAlgorithm(std::string_view name);

struct PublicKey {
  SignatureAlgorithm algorithm = SignatureAlgorithm::kMock;
  Bytes bytes;

  bool operator==(const PublicKey&) const = default;
};

using KeyId = Digest;

// Digest of (algorithm, key bytes).
KeyId ComputeKeyId(const PublicKey& key);

struct KeyPair {
  KeyId public_key_id{};
  PublicKey public_key;
  Bytes private_key;
};

// Signatures produced by any scheme are prefixed with the algorithm byte so
// that verification can dispatch on the public key alone.
class SignatureScheme {
 public:
  virtual ~SignatureScheme() = default;

  virtual SignatureAlgorithm algorithm() const = 0;
  // Deterministic in `seed`.
  virtual KeyPair KeyGen(ByteView seed) const = 0;
  virtual Bytes Sign(ByteView private_key, ByteView message) const = 0;
  virtual bool Verify(ByteView public_key, ByteView message,
                      ByteView signature) const = 0;
};

// The mock scheme's public key equals its private key; signatures are a
// keyed digest of the message. It exists for bulk simulation only.
class MockSignatureScheme final : public SignatureScheme {
 public:
  SignatureAlgorithm algorithm() const override {
    return SignatureAlgorithm::kMock;
  }
  KeyPair KeyGen(ByteView seed) const override;
  Bytes Sign(ByteView private_key, ByteView message) const override;
  bool Verify(ByteView public_key, ByteView message,
              ByteView signature) const override;
};

class Ed25519SignatureScheme final : public SignatureScheme {
 public:
  SignatureAlgorithm algorithm() const override {
    return SignatureAlgorithm::kEd25519;
  }
  KeyPair KeyGen(ByteView seed) const override;
  Bytes Sign(ByteView private_key, ByteView message) const override;
  bool Verify(ByteView public_key, ByteView message,
              ByteView signature) const override;
};

const SignatureScheme& SchemeFor(SignatureAlgorithm alg);

Bytes Sign(const KeyPair& keys, ByteView message);
bool Verify(const PublicKey& key, ByteView message, ByteView signature);

// Convenience for deriving per-entity keys from a scenario seed.
KeyPair DeriveKeyPair(SignatureAlgorithm alg, std::uint64_t seed,
                      std::string_view label);

}  // namespace orbitpki::pki

#endif  // ORBITPKI_PKI_SIGNATURE_H_
