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

#ifndef ORBITPKI_ACTORS_REPOSITORY_H_
#define ORBITPKI_ACTORS_REPOSITORY_H_

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "orbitpki/actors/messages.h"
#include "orbitpki/pki/ca.h"
#include "orbitpki/trust/trust_graph.h"

namespace orbitpki::actors {

struct RepositoryState {
  std::map<pki::CertKey, Certificate> certificates;
  std::map<std::string, pki::RevocationList> crls;               // by issuer
  std::map<std::string, pki::PolicyMappingTable> mapping_tables;  // by publisher
  std::map<ActorId, std::uint64_t> last_version;                 // by publisher
  double last_update_s = 0.0;

  std::vector<Certificate> CertificateList() const;
  std::vector<pki::RevocationList> CrlList() const;
  const pki::PolicyMappingTable* MappingTable(const std::string& publisher) const;
  // Graph anchored at `anchor` holding every stored certificate that chains.
  trust::TrustGraph Graph(const Certificate& anchor) const;
  // Compares certificates, CRLs, and mapping tables only.
  bool SameContent(const RepositoryState& other) const;
};

// Merges `update` into a copy of `repo`. CRLs and mapping tables never
// regress. Throws Error(kSecurity) when the signature does not verify and
// Error(kStaleVersion) when the version is not newer than the last one seen
// from the same publisher.
RepositoryState RepositoryApply(const RepositoryState& repo,
                                const RepositoryUpdateMsg& update,
                                const pki::PublicKey& publisher_key,
                                double delivered_s);

// Issues the certificate that lets an in-space authority chain directly to a
// ground root. Throws Error(kAuthority) unless `root` is a self-signed CA.
Certificate BcaBootstrap(pki::CaState& root, const std::string& subject_name,
                         const pki::PublicKey& subject_key, bool is_ca,
                         double now_s);

struct AddressedUpdate {
  ActorId destination;
  RepositoryUpdateMsg update;
};

// Publisher-side synchronization. Keeps the ground truth and, per replica,
// the items that have not been acknowledged yet.
class RepositoryPublisher {
 public:
  RepositoryPublisher(ActorId id, pki::KeyPair keys);

  // Everything already published becomes pending for the new replica.
  void AddReplica(ActorId replica);

  void StageCertificate(const Certificate& cert);
  // Ignored when not newer than the stored list for the same issuer.
  void StageCrl(const pki::RevocationList& crl);
  void StageMappingTable(const pki::PolicyMappingTable& table);

  // One message per reachable replica carrying exactly its unsent delta. All
  // messages of one call share a version number.
  std::vector<AddressedUpdate> PublishDelta(
      double now_s, const std::function<bool(const ActorId&)>& reachable = {});
  void Acknowledge(const ActorId& replica, std::uint64_t version);
  // Marks everything unacknowledged for `replica` as unsent again.
  void Requeue(const ActorId& replica);

  bool HasPending(const ActorId& replica) const;
  const RepositoryState& ground_truth() const { return truth_; }
  const ActorId& id() const { return id_; }
  const pki::PublicKey& public_key() const { return keys_.public_key; }
  std::uint64_t version() const { return version_; }

 private:
  // Value is the version an item was last sent in, 0 when unsent.
  struct ReplicaSync {
    std::map<pki::CertKey, std::uint64_t> certificates;
    std::map<std::string, std::uint64_t> crls;
    std::map<std::string, std::uint64_t> mapping_tables;
  };

  ActorId id_;
  pki::KeyPair keys_;
  std::uint64_t version_ = 0;
  RepositoryState truth_;
  std::map<ActorId, ReplicaSync> replicas_;
};

}  // namespace orbitpki::actors

#endif  // ORBITPKI_ACTORS_REPOSITORY_H_
