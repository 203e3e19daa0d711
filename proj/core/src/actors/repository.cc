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

#include "orbitpki/actors/repository.h"

#include "orbitpki/error.h"

namespace orbitpki::actors {

std::vector<Certificate> RepositoryState::CertificateList() const {
  std::vector<Certificate> out;
  out.reserve(certificates.size());
  for (const auto& [key, cert] : certificates) out.push_back(cert);
  return out;
}

std::vector<pki::RevocationList> RepositoryState::CrlList() const {
  std::vector<pki::RevocationList> out;
  out.reserve(crls.size());
  for (const auto& [issuer, crl] : crls) out.push_back(crl);
  return out;
}

const pki::PolicyMappingTable* RepositoryState::MappingTable(
    const std::string& publisher) const {
  const auto it = mapping_tables.find(publisher);
  return it == mapping_tables.end() ? nullptr : &it->second;
}

trust::TrustGraph RepositoryState::Graph(const Certificate& anchor) const {
  trust::TrustGraph graph;
  graph.AddAnchor(anchor);
  graph.AddAll(CertificateList());
  return graph;
}

bool RepositoryState::SameContent(const RepositoryState& other) const {
  return certificates == other.certificates && crls == other.crls &&
         mapping_tables == other.mapping_tables;
}

RepositoryState RepositoryApply(const RepositoryState& repo,
                                const RepositoryUpdateMsg& update,
                                const pki::PublicKey& publisher_key,
                                double delivered_s) {
  if (!VerifyUpdate(update, publisher_key)) {
    throw Error(ErrorCode::kSecurity,
                "repository update from " + update.publisher.ToString() +
                    " has a bad signature");
  }
  const auto last = repo.last_version.find(update.publisher);
  if (last != repo.last_version.end() && update.version <= last->second) {
    throw Error(ErrorCode::kStaleVersion,
                "repository update version " + std::to_string(update.version) +
                    " from " + update.publisher.ToString() +
                    " is not newer than " + std::to_string(last->second));
  }
  RepositoryState next = repo;
  for (const auto& cert : update.payload.certificates) {
    next.certificates[cert.key()] = cert;
  }
  for (const auto& crl : update.payload.crls) {
    auto [it, inserted] = next.crls.try_emplace(crl.issuer_name, crl);
    if (!inserted && it->second.IsOlderThan(crl)) it->second = crl;
  }
  for (const auto& table : update.payload.mapping_tables) {
    auto [it, inserted] = next.mapping_tables.try_emplace(table.publisher, table);
    if (!inserted && it->second.version < table.version) it->second = table;
  }
  next.last_version[update.publisher] = update.version;
  next.last_update_s = delivered_s;
  return next;
}

Certificate BcaBootstrap(pki::CaState& root, const std::string& subject_name,
                         const pki::PublicKey& subject_key, bool is_ca,
                         double now_s) {
  if (!root.IsRoot()) {
    throw Error(ErrorCode::kAuthority,
                "bootstrap issuer '" + root.name + "' is not a self-signed root");
  }
  pki::CertificateRequest req;
  req.subject_name = subject_name;
  req.subject_public_key = subject_key;
  req.is_ca = is_ca;
  req.policy_ids = root.certificate.policy_ids;
  return pki::IssueCertificate(root, req, now_s);
}

RepositoryPublisher::RepositoryPublisher(ActorId id, pki::KeyPair keys)
    : id_(id), keys_(std::move(keys)) {}

void RepositoryPublisher::AddReplica(ActorId replica) {
  ReplicaSync& sync = replicas_[replica];
  for (const auto& [key, cert] : truth_.certificates) sync.certificates[key] = 0;
  for (const auto& [issuer, crl] : truth_.crls) sync.crls[issuer] = 0;
  for (const auto& [pub, table] : truth_.mapping_tables) {
    sync.mapping_tables[pub] = 0;
  }
}

void RepositoryPublisher::StageCertificate(const Certificate& cert) {
  const auto it = truth_.certificates.find(cert.key());
  if (it != truth_.certificates.end() && it->second == cert) return;
  truth_.certificates[cert.key()] = cert;
  for (auto& [replica, sync] : replicas_) sync.certificates[cert.key()] = 0;
}

void RepositoryPublisher::StageCrl(const pki::RevocationList& crl) {
  const auto it = truth_.crls.find(crl.issuer_name);
  if (it != truth_.crls.end() && !it->second.IsOlderThan(crl)) return;
  truth_.crls[crl.issuer_name] = crl;
  for (auto& [replica, sync] : replicas_) sync.crls[crl.issuer_name] = 0;
}

void RepositoryPublisher::StageMappingTable(
    const pki::PolicyMappingTable& table) {
  const auto it = truth_.mapping_tables.find(table.publisher);
  if (it != truth_.mapping_tables.end() && it->second.version >= table.version) {
    return;
  }
  truth_.mapping_tables[table.publisher] = table;
  for (auto& [replica, sync] : replicas_) {
    sync.mapping_tables[table.publisher] = 0;
  }
}

std::vector<AddressedUpdate> RepositoryPublisher::PublishDelta(
    double now_s, const std::function<bool(const ActorId&)>& reachable) {
  std::vector<AddressedUpdate> out;
  const std::uint64_t version = version_ + 1;
  for (auto& [replica, sync] : replicas_) {
    if (reachable && !reachable(replica)) continue;
    RepositoryUpdateMsg msg;
    msg.publisher = id_;
    msg.version = version;
    for (auto& [key, sent] : sync.certificates) {
      if (sent != 0) continue;
      msg.payload.certificates.push_back(truth_.certificates.at(key));
      sent = version;
    }
    for (auto& [issuer, sent] : sync.crls) {
      if (sent != 0) continue;
      msg.payload.crls.push_back(truth_.crls.at(issuer));
      sent = version;
    }
    for (auto& [pub, sent] : sync.mapping_tables) {
      if (sent != 0) continue;
      msg.payload.mapping_tables.push_back(truth_.mapping_tables.at(pub));
      sent = version;
    }
    if (msg.payload.empty()) continue;
    SignUpdate(msg, keys_);
    out.push_back({replica, std::move(msg)});
  }
  if (!out.empty()) {
    version_ = version;
    truth_.last_update_s = now_s;
  }
  return out;
}

namespace {

template <typename Map>
void EraseAcked(Map& items, std::uint64_t version) {
  std::erase_if(items, [version](const auto& kv) {
    return kv.second != 0 && kv.second <= version;
  });
}

template <typename Map>
void MarkUnsent(Map& items) {
  for (auto& [key, sent] : items) sent = 0;
}

}  // namespace

void RepositoryPublisher::Acknowledge(const ActorId& replica,
                                      std::uint64_t version) {
  const auto it = replicas_.find(replica);
  if (it == replicas_.end()) return;
  EraseAcked(it->second.certificates, version);
  EraseAcked(it->second.crls, version);
  EraseAcked(it->second.mapping_tables, version);
}

void RepositoryPublisher::Requeue(const ActorId& replica) {
  const auto it = replicas_.find(replica);
  if (it == replicas_.end()) return;
  MarkUnsent(it->second.certificates);
  MarkUnsent(it->second.crls);
  MarkUnsent(it->second.mapping_tables);
}

bool RepositoryPublisher::HasPending(const ActorId& replica) const {
  const auto it = replicas_.find(replica);
  if (it == replicas_.end()) return false;
  return !it->second.certificates.empty() || !it->second.crls.empty() ||
         !it->second.mapping_tables.empty();
}

}  // namespace orbitpki::actors
