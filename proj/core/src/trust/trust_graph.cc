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

#include "orbitpki/trust/trust_graph.h"

#include <algorithm>

#include "orbitpki/error.h"
#include "orbitpki/pki/ca.h"

namespace orbitpki::trust {

void TrustGraph::AddAnchor(const Certificate& cert) {
  if (!cert.IsSelfIssued() || !cert.is_ca ||
      !pki::VerifySignature(cert, cert.subject_public_key)) {
    throw Error(ErrorCode::kAnchor, "anchor '" + cert.subject_name +
                                        "' is not a valid self-signed CA");
  }
  if (IsAnchor(cert)) return;
  anchors_.push_back(cert);
  AddCertificate(cert);
}

bool TrustGraph::IssuerKnownFor(const Certificate& cert) const {
  if (cert.IsSelfIssued() &&
      pki::VerifySignature(cert, cert.subject_public_key)) {
    return true;
  }
  for (const Certificate* issuer : ForSubject(cert.issuer_name)) {
    if (pki::VerifySignature(cert, issuer->subject_public_key)) return true;
  }
  return false;
}

bool TrustGraph::AddCertificate(const Certificate& cert) {
  if (const Certificate* existing = Find(cert.key())) {
    return *existing == cert;
  }
  if (!IssuerKnownFor(cert)) return false;
  certs_.emplace(cert.key(), cert);
  auto& keys = by_issuer_[cert.issuer_name];
  keys.insert(std::upper_bound(keys.begin(), keys.end(), cert.key()),
              cert.key());
  return true;
}

std::vector<Certificate> TrustGraph::AddAll(std::span<const Certificate> certs) {
  std::vector<Certificate> pending(certs.begin(), certs.end());
  bool progress = true;
  while (progress && !pending.empty()) {
    progress = false;
    std::vector<Certificate> rest;
    for (const auto& cert : pending) {
      if (AddCertificate(cert)) {
        progress = true;
      } else {
        rest.push_back(cert);
      }
    }
    pending = std::move(rest);
  }
  return pending;
}

const Certificate* TrustGraph::Find(const CertKey& key) const {
  auto it = certs_.find(key);
  return it == certs_.end() ? nullptr : &it->second;
}

std::vector<const Certificate*> TrustGraph::IssuedBy(
    std::string_view issuer) const {
  std::vector<const Certificate*> out;
  auto it = by_issuer_.find(issuer);
  if (it == by_issuer_.end()) return out;
  for (const auto& key : it->second) out.push_back(&certs_.at(key));
  return out;
}

std::vector<const Certificate*> TrustGraph::ForSubject(
    std::string_view subject) const {
  std::vector<const Certificate*> out;
  for (const auto& [key, cert] : certs_) {
    if (cert.subject_name == subject) out.push_back(&cert);
  }
  return out;
}

bool TrustGraph::IsAnchor(const Certificate& cert) const {
  return std::find(anchors_.begin(), anchors_.end(), cert) != anchors_.end();
}

const Certificate* TrustGraph::FindAnchor(std::string_view subject) const {
  for (const auto& anchor : anchors_) {
    if (anchor.subject_name == subject) return &anchor;
  }
  return nullptr;
}

}  // namespace orbitpki::trust
