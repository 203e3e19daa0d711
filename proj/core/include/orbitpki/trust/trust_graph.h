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

#ifndef ORBITPKI_TRUST_TRUST_GRAPH_H_
#define ORBITPKI_TRUST_TRUST_GRAPH_H_

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orbitpki/pki/certificate.h"

namespace orbitpki::trust {

using pki::Certificate;
using pki::CertKey;

// Issuer -> subject edge store. A TrustGraph is a plain value: copying it
// takes a snapshot, and readers holding a copy never observe later writes.
class TrustGraph {
 public:
  // Throws Error(kAnchor) unless `cert` is a self-issued CA certificate that
  // verifies under its own key.
  void AddAnchor(const Certificate& cert);

  // Accepts `cert` only if its signature verifies under the key of some
  // stored certificate whose subject is cert.issuer_name (or under its own
  // key when self-issued). Returns false when rejected.
  bool AddCertificate(const Certificate& cert);

  // Inserts in dependency order until no more certificates can be placed.
  // Returns the certificates that never verified.
  std::vector<Certificate> AddAll(std::span<const Certificate> certs);

  const Certificate* Find(const CertKey& key) const;
  // Certificates whose issuer_name is `issuer`, ordered by serial.
  std::vector<const Certificate*> IssuedBy(std::string_view issuer) const;
  // Certificates whose subject_name is `subject`, ordered by (issuer, serial).
  std::vector<const Certificate*> ForSubject(std::string_view subject) const;

  bool IsAnchor(const Certificate& cert) const;
  const std::vector<Certificate>& anchors() const { return anchors_; }
  const Certificate* FindAnchor(std::string_view subject) const;

  std::size_t size() const { return certs_.size(); }
  const std::map<CertKey, Certificate>& certificates() const { return certs_; }

 private:
  bool IssuerKnownFor(const Certificate& cert) const;

  std::map<CertKey, Certificate> certs_;
  std::map<std::string, std::vector<CertKey>, std::less<>> by_issuer_;
  std::vector<Certificate> anchors_;
};

}  // namespace orbitpki::trust

#endif  // ORBITPKI_TRUST_TRUST_GRAPH_H_
