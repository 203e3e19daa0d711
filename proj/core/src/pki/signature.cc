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

#include "orbitpki/pki/signature.h"

#include <sodium.h>

#include <string>

#include "orbitpki/error.h"
#include "orbitpki/pki/sodium_init.h"

namespace orbitpki::pki {

namespace {

constexpr std::string_view kMockKeygenDomain = "orbitpki/mock-keygen/v1";

Bytes Tagged(SignatureAlgorithm alg, ByteView raw) {
  Bytes out;
  out.reserve(raw.size() + 1);
  out.push_back(static_cast<std::uint8_t>(alg));
  out.insert(out.end(), raw.begin(), raw.end());
  return out;
}

}  // namespace

std::string_view AlgorithmName(SignatureAlgorithm alg) {
  switch (alg) {
    case SignatureAlgorithm::kMock: return "mock";
    case SignatureAlgorithm::kEd25519: return "ed25519";
  }
  return "unknown";
}

SignatureAlgorithm ParseAlgorithm(std::string_view name) {
  if (name == "mock") return SignatureAlgorithm::kMock;
  if (name == "ed25519") return SignatureAlgorithm::kEd25519;
  throw Error(ErrorCode::kParse,
              "unknown signature scheme '" + std::string(name) + "'");
}

KeyId ComputeKeyId(const PublicKey& key) {
  ByteWriter w;
  w.PutU8(static_cast<std::uint8_t>(key.algorithm));
  w.PutBytes(key.bytes);
  return Blake2b(w.bytes());
}

KeyPair MockSignatureScheme::KeyGen(ByteView seed) const {
  const Digest secret = KeyedBlake2b(AsBytes(kMockKeygenDomain), seed);
  KeyPair kp;
  kp.private_key.assign(secret.begin(), secret.end());
  kp.public_key = PublicKey{SignatureAlgorithm::kMock, kp.private_key};
  kp.public_key_id = ComputeKeyId(kp.public_key);
  return kp;
}

Bytes MockSignatureScheme::Sign(ByteView private_key, ByteView message) const {
  const Digest mac = KeyedBlake2b(private_key, message);
  return Tagged(SignatureAlgorithm::kMock, mac);
}

bool MockSignatureScheme::Verify(ByteView public_key, ByteView message,
                                 ByteView signature) const {
  if (signature.size() != 1 + sizeof(Digest) ||
      signature[0] != static_cast<std::uint8_t>(SignatureAlgorithm::kMock)) {
    return false;
  }
  const Digest mac = KeyedBlake2b(public_key, message);
  return sodium_memcmp(mac.data(), signature.data() + 1, mac.size()) == 0;
}

KeyPair Ed25519SignatureScheme::KeyGen(ByteView seed) const {
  EnsureSodium();
  static_assert(crypto_sign_SEEDBYTES == sizeof(Digest));
  const Digest sk_seed = Blake2b(seed);
  KeyPair kp;
  Bytes pk(crypto_sign_PUBLICKEYBYTES);
  kp.private_key.resize(crypto_sign_SECRETKEYBYTES);
  crypto_sign_seed_keypair(pk.data(), kp.private_key.data(), sk_seed.data());
  kp.public_key = PublicKey{SignatureAlgorithm::kEd25519, std::move(pk)};
  kp.public_key_id = ComputeKeyId(kp.public_key);
  return kp;
}

Bytes Ed25519SignatureScheme::Sign(ByteView private_key,
                                   ByteView message) const {
  EnsureSodium();
  if (private_key.size() != crypto_sign_SECRETKEYBYTES) {
    throw Error(ErrorCode::kSecurity, "malformed Ed25519 private key");
  }
  std::array<std::uint8_t, crypto_sign_BYTES> sig{};
  crypto_sign_detached(sig.data(), nullptr, message.data(), message.size(),
                       private_key.data());
  return Tagged(SignatureAlgorithm::kEd25519, sig);
}

bool Ed25519SignatureScheme::Verify(ByteView public_key, ByteView message,
                                    ByteView signature) const {
  EnsureSodium();
  if (public_key.size() != crypto_sign_PUBLICKEYBYTES ||
      signature.size() != 1 + crypto_sign_BYTES ||
      signature[0] != static_cast<std::uint8_t>(SignatureAlgorithm::kEd25519)) {
    return false;
  }
  return crypto_sign_verify_detached(signature.data() + 1, message.data(),
                                     message.size(), public_key.data()) == 0;
}

const SignatureScheme& SchemeFor(SignatureAlgorithm alg) {
  static const MockSignatureScheme kMock;
  static const Ed25519SignatureScheme kEd25519;
  switch (alg) {
    case SignatureAlgorithm::kMock: return kMock;
    case SignatureAlgorithm::kEd25519: return kEd25519;
  }
  throw Error(ErrorCode::kSecurity, "unsupported signature algorithm");
}

Bytes Sign(const KeyPair& keys, ByteView message) {
  return SchemeFor(keys.public_key.algorithm).Sign(keys.private_key, message);
}

bool Verify(const PublicKey& key, ByteView message, ByteView signature) {
  if (key.algorithm != SignatureAlgorithm::kMock &&
      key.algorithm != SignatureAlgorithm::kEd25519) {
    return false;
  }
  return SchemeFor(key.algorithm).Verify(key.bytes, message, signature);
}

KeyPair DeriveKeyPair(SignatureAlgorithm alg, std::uint64_t seed,
                      std::string_view label) {
  ByteWriter w;
  w.PutU64(seed);
  w.PutString(label);
  return SchemeFor(alg).KeyGen(w.bytes());
}

}  // namespace orbitpki::pki
