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

#include "orbitpki/scenarios/world.h"

#include "orbitpki/actors/authority.h"
#include "orbitpki/actors/repository.h"
#include "orbitpki/error.h"
#include "orbitpki/trust/cross_cert.h"

namespace orbitpki::scenarios {

namespace {

class WorldBuilder {
 public:
  explicit WorldBuilder(const Scenario& s) : s_(s) {}

  World Build() && {
    for (const auto& n : s_.nodes) world_.nodes[n.name].keys = Key(n.name);
    const auto bcas = s_.NodesWithRole(Role::kGrdBca);
    if (!bcas.empty()) BuildIpki(bcas.front()->name);
    const auto grd = s_.NodesWithRole(Role::kGrdCa);
    const auto spc = s_.NodesWithRole(Role::kSpcCa);
    if (!grd.empty() && !spc.empty()) {
      BuildSpcpki(grd.front()->name, spc.front()->name);
    }
    return std::move(world_);
  }

 private:
  pki::KeyPair Key(const std::string& label) const {
    return pki::DeriveKeyPair(s_.trust.algorithm, s_.seed, label);
  }

  pki::CaState Root(const std::string& name, std::set<pki::PolicyId> policies) {
    pki::CaState ca = pki::MakeRootCa(name, Key(name), 0.0, kRootLifetimeS,
                                      std::move(policies));
    ca.crl_interval_s = s_.trust.crl_interval_s;
    ca.crl = pki::RefreshCrl(ca, 0.0);
    return ca;
  }

  void BuildIpki(const std::string& bridge_name) {
    world_.bridge = bridge_name;
    world_.ipki_cas.emplace(bridge_name, Root(bridge_name, {}));
    std::map<pki::PolicyId, pki::PolicyId> table;
    for (const auto& m : s_.trust.policy_mappings) table[m.from] = m.to;

    for (const auto& d : s_.trust.domains) {
      world_.ipki_cas.emplace(d.pca, Root(d.pca, {d.policy}));
      std::vector<pki::PolicyMapping> mappings;
      for (const auto& [from, to] : table) {
        if (from == d.policy) mappings.push_back({to, from});
      }
      const auto pair = trust::CrossCertify(world_.ipki_cas.at(bridge_name),
                                            world_.ipki_cas.at(d.pca), 0.0,
                                            std::move(mappings));
      world_.ipki_certificates.push_back(pair.forward);
      world_.ipki_certificates.push_back(pair.reverse);

      std::string issuer = d.pca;
      for (const auto& name : d.intermediates) {
        pki::CertificateRequest req;
        req.subject_name = name;
        req.subject_public_key = Key(name).public_key;
        req.is_ca = true;
        req.policy_ids = {d.policy};
        req.not_before_s = 0.0;
        req.not_after_s = kCaLifetimeS;
        const auto cert =
            pki::IssueCertificate(world_.ipki_cas.at(issuer), req, 0.0);
        pki::CaState ca = pki::MakeSubordinateCa(name, Key(name), cert, 0.0);
        ca.crl_interval_s = s_.trust.crl_interval_s;
        ca.crl = pki::RefreshCrl(ca, 0.0);
        world_.ipki_cas.emplace(name, std::move(ca));
        world_.ipki_certificates.push_back(cert);
        issuer = name;
      }
      for (const auto* rp : s_.NodesWithRole(Role::kSpcRp)) {
        if (rp->domain != d.name) continue;
        pki::CertificateRequest req;
        req.subject_name = rp->name;
        req.subject_public_key = world_.nodes.at(rp->name).keys.public_key;
        req.policy_ids = {d.policy};
        const auto cert =
            pki::IssueCertificate(world_.ipki_cas.at(issuer), req, 0.0);
        world_.nodes.at(rp->name).ipki_cert = cert;
        world_.ipki_certificates.push_back(cert);
      }
    }

    auto& bridge = world_.ipki_cas.at(bridge_name);
    for (Role role : {Role::kSpcVa, Role::kGroundStation}) {
      for (const auto* n : s_.NodesWithRole(role)) {
        auto& creds = world_.nodes.at(n->name);
        creds.ipki_cert = actors::BcaBootstrap(bridge, n->name,
                                               creds.keys.public_key, false, 0.0);
        world_.ipki_certificates.push_back(*creds.ipki_cert);
      }
    }
    if (!table.empty()) {
      world_.mapping_table = pki::PublishMappingTable(bridge, table, 1);
    }
  }

  void BuildSpcpki(const std::string& grd_name, const std::string& spc_name) {
    const pki::PolicyId& policy = s_.trust.spc_policy;
    world_.grd_ca = Root(grd_name, {policy});
    const auto spc_keys = world_.nodes.at(spc_name).keys;
    const auto spc_cert = actors::BcaBootstrap(*world_.grd_ca, spc_name,
                                               spc_keys.public_key, true, 0.0);
    world_.spc_ca = pki::MakeSubordinateCa(spc_name, spc_keys, spc_cert, 0.0);
    world_.spc_ca->crl_interval_s = s_.trust.crl_interval_s;
    world_.spc_ca->crl = pki::RefreshCrl(*world_.spc_ca, 0.0);

    for (const auto* rp : s_.NodesWithRole(Role::kSpcRp)) {
      auto& creds = world_.nodes.at(rp->name);
      pki::CertificateRequest req;
      req.subject_name = rp->name;
      req.subject_public_key = creds.keys.public_key;
      req.policy_ids = {policy};
      creds.spc_id_cert = pki::IssueCertificate(*world_.grd_ca, req, 0.0);
      creds.spc_keys = Key(rp->name + "/operational");
      const auto proof =
          actors::MakeProofOfPossession(creds.spc_keys, pki::AsBytes(rp->name));
      const pki::RevocationList ground_crls[] = {world_.grd_ca->crl};
      creds.spc_cert =
          actors::SpcCaEnroll(*world_.spc_ca, world_.grd_ca->certificate,
                              ground_crls, *creds.spc_id_cert, proof, 0.0,
                              {policy});
    }
  }

  const Scenario& s_;
  World world_;
};

}  // namespace

std::vector<pki::RevocationList> World::IpkiCrls() const {
  std::vector<pki::RevocationList> out;
  for (const auto& [name, ca] : ipki_cas) out.push_back(ca.crl);
  return out;
}

std::vector<pki::RevocationList> World::SpcCrls() const {
  std::vector<pki::RevocationList> out;
  if (grd_ca) out.push_back(grd_ca->crl);
  if (spc_ca) out.push_back(spc_ca->crl);
  return out;
}

World BuildWorld(const Scenario& scenario) {
  scenario.Validate();
  return WorldBuilder(scenario).Build();
}

std::optional<pki::RevocationList> RevokeSubject(World& world, SchemeId scheme,
                                                 const std::string& subject,
                                                 double now_s) {
  const auto reason = pki::RevocationReason::kKeyCompromise;
  if (IsSpcpki(scheme)) {
    const auto it = world.nodes.find(subject);
    if (!world.spc_ca || it == world.nodes.end() || !it->second.spc_cert) {
      return std::nullopt;
    }
    return pki::RevokeCertificate(*world.spc_ca, it->second.spc_cert->serial,
                                  reason, now_s);
  }

  // Certificate whose subject is `subject`, preferring the one issued by the
  // bridge so that revoking a principal CA cuts its cross-certificate.
  const pki::Certificate* victim = nullptr;
  for (const auto& cert : world.ipki_certificates) {
    if (cert.subject_name != subject) continue;
    if (victim == nullptr || cert.issuer_name == world.bridge) victim = &cert;
  }
  if (victim == nullptr) return std::nullopt;
  return pki::RevokeCertificate(world.ipki_cas.at(victim->issuer_name),
                                victim->serial, reason, now_s);
}

}  // namespace orbitpki::scenarios
