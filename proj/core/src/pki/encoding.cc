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

#include "orbitpki/pki/encoding.h"

#include "orbitpki/error.h"

namespace orbitpki::pki {

namespace {

constexpr std::uint8_t kCertMagic[] = {'O', 'P', 'K', 'C'};
constexpr std::uint8_t kCrlMagic[] = {'O', 'P', 'K', 'R'};
constexpr std::uint8_t kMapMagic[] = {'O', 'P', 'K', 'M'};
constexpr std::uint8_t kFormatVersion = 1;

void PutMagic(ByteWriter& w, const std::uint8_t (&magic)[4]) {
  for (std::uint8_t b : magic) w.PutU8(b);
  w.PutU8(kFormatVersion);
}

void ExpectMagic(ByteReader& r, const std::uint8_t (&magic)[4]) {
  for (std::uint8_t b : magic) {
    if (r.GetU8() != b) throw Error(ErrorCode::kEncoding, "bad magic");
  }
  if (r.GetU8() != kFormatVersion) {
    throw Error(ErrorCode::kEncoding, "unsupported encoding version");
  }
}

void RequireField(bool present, const char* field) {
  if (!present) {
    throw Error(ErrorCode::kEncoding,
                std::string("missing mandatory field: ") + field);
  }
}

void WriteBody(ByteWriter& w, const Certificate& c) {
  RequireField(!c.subject_name.empty(), "subject_name");
  RequireField(!c.issuer_name.empty(), "issuer_name");
  RequireField(!c.subject_public_key.bytes.empty(), "subject_public_key");

  PutMagic(w, kCertMagic);
  w.PutU64(c.serial);
  w.PutString(c.subject_name);
  w.PutString(c.issuer_name);
  w.PutU8(static_cast<std::uint8_t>(c.subject_public_key.algorithm));
  w.PutBytes(c.subject_public_key.bytes);
  w.PutBytes(c.subject_public_key_id);
  w.PutDouble(c.not_before_s);
  w.PutDouble(c.not_after_s);
  w.PutU8(c.is_ca ? 1 : 0);
  w.PutU8(c.path_len_constraint.has_value() ? 1 : 0);
  if (c.path_len_constraint) w.PutU32(*c.path_len_constraint);
  w.PutU32(static_cast<std::uint32_t>(c.policy_ids.size()));
  for (const auto& p : c.policy_ids) w.PutString(p);
  w.PutU32(static_cast<std::uint32_t>(c.policy_mappings.size()));
  for (const auto& m : c.policy_mappings) {
    w.PutString(m.issuer_policy);
    w.PutString(m.subject_policy);
  }
  w.PutU8(c.orbital_binding.has_value() ? 1 : 0);
  if (c.orbital_binding) {
    const auto& b = *c.orbital_binding;
    w.PutDouble(b.altitude_km);
    w.PutDouble(b.inclination_deg);
    w.PutDouble(b.raan_deg);
    w.PutDouble(b.phase_deg);
    w.PutDouble(b.epoch_s);
  }
}

}  // namespace

Bytes CanonicalEncode(const Certificate& cert) {
  ByteWriter w;
  WriteBody(w, cert);
  return std::move(w).bytes();
}

Bytes EncodeCertificate(const Certificate& cert) {
  ByteWriter w;
  WriteBody(w, cert);
  w.PutBytes(cert.signature);
  return std::move(w).bytes();
}

Certificate DecodeCertificate(ByteView encoded) {
  ByteReader r(encoded);
  ExpectMagic(r, kCertMagic);
  Certificate c;
  c.serial = r.GetU64();
  c.subject_name = r.GetString();
  c.issuer_name = r.GetString();
  c.subject_public_key.algorithm = static_cast<SignatureAlgorithm>(r.GetU8());
  c.subject_public_key.bytes = r.GetBytes();
  const Bytes key_id = r.GetBytes();
  if (key_id.size() != c.subject_public_key_id.size()) {
    throw Error(ErrorCode::kEncoding, "key id has wrong length");
  }
  std::copy(key_id.begin(), key_id.end(), c.subject_public_key_id.begin());
  c.not_before_s = r.GetDouble();
  c.not_after_s = r.GetDouble();
  c.is_ca = r.GetU8() != 0;
  if (r.GetU8() != 0) c.path_len_constraint = r.GetU32();
  const std::uint32_t n_policies = r.GetU32();
  for (std::uint32_t i = 0; i < n_policies; ++i) {
    c.policy_ids.insert(r.GetString());
  }
  const std::uint32_t n_mappings = r.GetU32();
  for (std::uint32_t i = 0; i < n_mappings; ++i) {
    PolicyMapping m;
    m.issuer_policy = r.GetString();
    m.subject_policy = r.GetString();
    c.policy_mappings.push_back(std::move(m));
  }
  if (r.GetU8() != 0) {
    OrbitalBinding b;
    b.altitude_km = r.GetDouble();
    b.inclination_deg = r.GetDouble();
    b.raan_deg = r.GetDouble();
    b.phase_deg = r.GetDouble();
    b.epoch_s = r.GetDouble();
    c.orbital_binding = b;
  }
  c.signature = r.GetBytes();
  if (!r.AtEnd()) throw Error(ErrorCode::kEncoding, "trailing bytes");
  RequireField(!c.subject_name.empty(), "subject_name");
  RequireField(!c.issuer_name.empty(), "issuer_name");
  return c;
}

Bytes CanonicalEncode(const RevocationList& crl) {
  RequireField(!crl.issuer_name.empty(), "issuer_name");
  ByteWriter w;
  PutMagic(w, kCrlMagic);
  w.PutString(crl.issuer_name);
  w.PutU64(crl.crl_number);
  w.PutDouble(crl.this_update_s);
  w.PutDouble(crl.next_update_s);
  w.PutU32(static_cast<std::uint32_t>(crl.entries.size()));
  for (const auto& e : crl.entries) {
    w.PutU64(e.serial);
    w.PutDouble(e.revocation_time_s);
    w.PutU8(static_cast<std::uint8_t>(e.reason));
  }
  return std::move(w).bytes();
}

Bytes CanonicalEncode(const PolicyMappingTable& table) {
  RequireField(!table.publisher.empty(), "publisher");
  ByteWriter w;
  PutMagic(w, kMapMagic);
  w.PutString(table.publisher);
  w.PutU64(table.version);
  w.PutU32(static_cast<std::uint32_t>(table.entries.size()));
  for (const auto& [from, to] : table.entries) {
    w.PutString(from);
    w.PutString(to);
  }
  return std::move(w).bytes();
}

}  // namespace orbitpki::pki
