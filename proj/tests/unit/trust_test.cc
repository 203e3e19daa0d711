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

#include <gtest/gtest.h>

#include <random>

#include "orbitpki/error.h"
#include "orbitpki/trust/cross_cert.h"
#include "orbitpki/trust/path_builder.h"
#include "orbitpki/trust/validator.h"
#include "support/fixtures.h"
#include "support/oracles.h"

namespace orbitpki::trust {
namespace {

using orbitpki::testing::BridgeWorld;
using orbitpki::testing::MakeBridgeWorld;

class BridgeTest : public ::testing::Test {
 protected:
  BridgeWorld world_ = MakeBridgeWorld();
};

TEST_F(BridgeTest, BridgePathIsUniqueAndHasLengthFour) {
  const TrustGraph graph = world_.Graph();
  const auto chains =
      DiscoverPaths(graph, world_.sat_a, world_.bca.certificate, 6);
  ASSERT_EQ(chains.size(), 1u);
  EXPECT_EQ(chains[0], world_.SatAChain());
  EXPECT_EQ(chains[0].front(), world_.bca.certificate);
}

TEST_F(BridgeTest, TargetEqualToAnchor) {
  const TrustGraph graph = world_.Graph();
  const auto chains = DiscoverPaths(graph, world_.bca.certificate,
                                    world_.bca.certificate, 6);
  ASSERT_EQ(chains.size(), 1u);
  EXPECT_EQ(chains[0].size(), 1u);
}

TEST_F(BridgeTest, UnknownAnchorIsRejected) {
  const TrustGraph graph = world_.Graph();
  try {
    DiscoverPaths(graph, world_.sat_a, world_.pca2.certificate, 6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAnchor);
  }
}

TEST_F(BridgeTest, DepthLimitPrunes) {
  const TrustGraph graph = world_.Graph();
  EXPECT_TRUE(
      DiscoverPaths(graph, world_.sat_a, world_.bca.certificate, 3).empty());
  EXPECT_EQ(
      DiscoverPaths(graph, world_.sat_a, world_.bca.certificate, 4).size(), 1u);
}

TEST_F(BridgeTest, FullChainValidatesWithPolicyMapping) {
  const auto crls = world_.Crls();
  const auto r = ValidateChain(world_.SatAChain(), 10.0, crls,
                               world_.Pki1Context());
  EXPECT_EQ(r.status, ValidationStatus::kValid) << r.detail;
  EXPECT_EQ(r.path.size(), 4u);
  EXPECT_EQ(r.checks.size(), 6u);
}

TEST_F(BridgeTest, WithoutMappingTheForeignPolicyIsRejected) {
  auto ctx = world_.Pki1Context();
  ctx.mapping_table.reset();
  const auto crls = world_.Crls();
  EXPECT_EQ(ValidateChain(world_.SatAChain(), 10.0, crls, ctx).status,
            ValidationStatus::kPolicyViolation);
}

TEST_F(BridgeTest, ForgedMappingTableIsPolicyViolation) {
  auto ctx = world_.Pki1Context();
  ctx.publisher_key = world_.pca2.keys.public_key;
  const auto crls = world_.Crls();
  EXPECT_EQ(ValidateChain(world_.SatAChain(), 10.0, crls, ctx).status,
            ValidationStatus::kPolicyViolation);
}

TEST_F(BridgeTest, RevokedIntermediate) {
  pki::RevokeCertificate(world_.pca2, world_.ica2_cert.serial,
                         pki::RevocationReason::kCaCompromise, 5.0);
  const auto crls = world_.Crls();
  const auto ctx = world_.Pki1Context();
  const auto r = ValidateChain(world_.SatAChain(), 10.0, crls, ctx);
  EXPECT_EQ(r.status, ValidationStatus::kRevoked);
  const auto flags = orbitpki::testing::RecomputeChecks(
      world_.SatAChain(), 10.0, crls, ctx, kDefaultStalenessLimitS);
  EXPECT_EQ(orbitpki::testing::ExpectedStatus(flags), r.status);
  // Not yet revoked before the revocation time.
  EXPECT_EQ(ValidateChain(world_.SatAChain(), 4.0, crls, ctx).status,
            ValidationStatus::kValid);
}

TEST_F(BridgeTest, ExpiredTarget) {
  const double after = world_.sat_a.not_after_s + 1.0;
  const auto crls = world_.Crls();
  EXPECT_EQ(ValidateChain(world_.SatAChain(), after, crls,
                          world_.Pki1Context(),
                          ValidationOptions{.staleness_limit_s = 1e12})
                .status,
            ValidationStatus::kExpired);
}

TEST_F(BridgeTest, ExpiryTakesPrecedenceOverRevocation) {
  pki::RevokeCertificate(world_.ica2, world_.sat_a.serial,
                         pki::RevocationReason::kKeyCompromise, 1.0);
  const auto crls = world_.Crls();
  EXPECT_EQ(ValidateChain(world_.SatAChain(), world_.sat_a.not_after_s + 1,
                          crls, world_.Pki1Context())
                .status,
            ValidationStatus::kExpired);
}

TEST_F(BridgeTest, StaleAndMissingRevocationData) {
  auto crls = world_.Crls();
  const auto ctx = world_.Pki1Context();
  // CRLs next_update at 24 h; staleness limit 24 h.
  EXPECT_EQ(ValidateChain(world_.SatAChain(), 2 * 86400.0 - 1, crls, ctx).status,
            ValidationStatus::kValid);
  EXPECT_EQ(ValidateChain(world_.SatAChain(), 2 * 86400.0 + 1, crls, ctx).status,
            ValidationStatus::kStaleRevocationData);
  crls.pop_back();  // drop ICA-2's CRL
  EXPECT_EQ(ValidateChain(world_.SatAChain(), 10, crls, ctx).status,
            ValidationStatus::kStaleRevocationData);
}

TEST_F(BridgeTest, CrlSignedByWrongKeyIsIgnored) {
  pki::CaState forger = world_.pca1;
  forger.name = "ICA-2";
  forger.issued[world_.sat_a.serial] = "Sat-A";
  forger.crl.issuer_name = "ICA-2";
  pki::RevokeCertificate(forger, world_.sat_a.serial,
                         pki::RevocationReason::kUnspecified, 1.0);
  auto crls = world_.Crls();
  crls.push_back(forger.crl);
  EXPECT_EQ(ValidateChain(world_.SatAChain(), 10, crls, world_.Pki1Context())
                .status,
            ValidationStatus::kValid);
}

TEST_F(BridgeTest, MalformedChainIsNoPath) {
  Chain chain = world_.SatAChain();
  std::swap(chain[1], chain[2]);
  const auto crls = world_.Crls();
  EXPECT_EQ(ValidateChain(chain, 10, crls, world_.Pki1Context()).status,
            ValidationStatus::kNoPath);
  EXPECT_EQ(ValidateChain(Chain{}, 10, crls, world_.Pki1Context()).status,
            ValidationStatus::kNoPath);
}

TEST_F(BridgeTest, TamperedTargetIsBadSignature) {
  Chain chain = world_.SatAChain();
  chain.back().subject_name = "Sat-B";
  const auto crls = world_.Crls();
  EXPECT_EQ(ValidateChain(chain, 10, crls, world_.Pki1Context()).status,
            ValidationStatus::kBadSignature);
}

TEST_F(BridgeTest, PathLengthConstraint) {
  pki::CertificateRequest req;
  req.subject_name = "ICA-2";
  req.subject_public_key = world_.ica2.keys.public_key;
  req.is_ca = true;
  req.policy_ids = {orbitpki::testing::kPolicy2};
  // Forward cross-certificate that forbids any intermediate below PCA-2.
  pki::CertificateRequest fwd;
  fwd.subject_name = "Grd-PCA-2";
  fwd.subject_public_key = world_.pca2.keys.public_key;
  fwd.is_ca = true;
  fwd.path_len_constraint = 0;
  Chain chain = world_.SatAChain();
  chain[1] = pki::IssueCertificate(world_.bca, fwd, 0.0);
  const auto crls = world_.Crls();
  const auto r = ValidateChain(chain, 10, crls, world_.Pki1Context());
  EXPECT_EQ(r.status, ValidationStatus::kNoPath);
  EXPECT_EQ(r.checks.back().name, "constraints");
}

TEST_F(BridgeTest, OrbitalBindingMismatchIsAdvisoryByDefault) {
  pki::CertificateRequest req;
  req.subject_name = "Sat-A";
  req.subject_public_key = world_.sat_a_keys.public_key;
  req.policy_ids = {orbitpki::testing::kPolicy2};
  req.orbital_binding = pki::OrbitalBinding{550, 53, 0, 0, 0};
  Chain chain = world_.SatAChain();
  chain.back() = pki::IssueCertificate(world_.ica2, req, 0.0);
  const auto crls = world_.Crls();
  ValidationOptions opts;
  opts.observed_target_position = geometry::EciPosition{0, 0, 42164};
  auto r = ValidateChain(chain, 10, crls, world_.Pki1Context(), opts);
  EXPECT_EQ(r.status, ValidationStatus::kValid);
  EXPECT_EQ(r.warnings.size(), 1u);
  opts.binding_fatal = true;
  r = ValidateChain(chain, 10, crls, world_.Pki1Context(), opts);
  EXPECT_EQ(r.status, ValidationStatus::kPolicyViolation);
}

TEST(PolicyMappingTest, Examples) {
  pki::PolicyMappingTable table;
  table.entries = {{"P_a", "P_b"}};
  EXPECT_EQ(ApplyPolicyMapping(table, {"P_a"}), std::set<PolicyId>{"P_b"});
  EXPECT_EQ(ApplyPolicyMapping(table, {"P_a", "P_c"}),
            (std::set<PolicyId>{"P_b", "P_c"}));
  EXPECT_EQ(ApplyPolicyMapping(pki::PolicyMappingTable{}, {"P_a", "P_c"}),
            (std::set<PolicyId>{"P_a", "P_c"}));
}

TEST(PolicyMappingTest, UnmappedIdsAreFixedPoints) {
  pki::PolicyMappingTable table;
  table.entries = {{"m1", "x"}, {"m2", "y"}};
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    std::set<PolicyId> in;
    for (int k = 0; k < 5; ++k) in.insert("u" + std::to_string(rng() % 20));
    EXPECT_EQ(ApplyPolicyMapping(table, in), in);
  }
}

TEST_F(BridgeTest, CrossCertificatePairVerifiesBothWays) {
  const auto& pair = world_.pair1;
  EXPECT_TRUE(pki::VerifySignature(pair.forward, world_.bca.keys.public_key));
  EXPECT_TRUE(pki::VerifySignature(pair.reverse, world_.pca1.keys.public_key));
  EXPECT_EQ(pair.forward.subject_name, pair.reverse.issuer_name);
  EXPECT_EQ(pair.reverse.subject_name, pair.forward.issuer_name);
  EXPECT_TRUE(pair.forward.is_ca);
  EXPECT_TRUE(pair.reverse.is_ca);
  EXPECT_EQ(world_.pair2.forward.policy_mappings.size(), 1u);
}

TEST_F(BridgeTest, RelyingPartyAnchoredAtOwnPcaReachesForeignSubject) {
  TrustGraph graph;
  graph.AddAnchor(world_.pca1.certificate);
  const auto certs = world_.Certificates();
  graph.AddAnchor(world_.pca1.certificate);
  graph.AddAll(certs);
  graph.AddCertificate(world_.bca.certificate);
  const auto chains =
      DiscoverPaths(graph, world_.sat_a, world_.pca1.certificate, 6);
  const auto oracle = orbitpki::testing::BruteForcePaths(
      graph, world_.sat_a, world_.pca1.certificate, 6);
  EXPECT_EQ(chains, oracle);
  ASSERT_FALSE(chains.empty());
  EXPECT_GE(chains.front().size(), 4u);
}

TEST_F(BridgeTest, CrossCertifyWithEndEntityIsAuthorityError) {
  pki::CaState ee;
  ee.name = "Spc-RP";
  ee.keys = world_.rp_keys;
  ee.certificate = world_.rp;
  try {
    CrossCertify(world_.bca, ee, 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAuthority);
  }
}

TEST(MeshTest, TwoDisjointRoutesShorterFirst) {
  const auto alg = pki::SignatureAlgorithm::kMock;
  std::vector<pki::CaState> m;
  for (int i = 0; i < 4; ++i) {
    const std::string name = "M" + std::to_string(i);
    m.push_back(pki::MakeRootCa(name, pki::DeriveKeyPair(alg, 2, name), 0, 1e9));
  }
  const auto p01 = CrossCertify(m[0], m[1], 0);
  const auto p12 = CrossCertify(m[1], m[2], 0);
  const auto p23 = CrossCertify(m[2], m[3], 0);
  const auto p03 = CrossCertify(m[0], m[3], 0);
  pki::CertificateRequest req;
  req.subject_name = "leaf";
  req.subject_public_key = pki::DeriveKeyPair(alg, 2, "leaf").public_key;
  const auto leaf = pki::IssueCertificate(m[3], req, 0);

  TrustGraph graph;
  graph.AddAnchor(m[0].certificate);
  std::vector<pki::Certificate> certs = {
      p01.forward, p01.reverse, p12.forward, p12.reverse,
      p23.forward, p23.reverse, p03.forward, p03.reverse};
  EXPECT_TRUE(graph.AddAll(certs).empty());

  const auto chains = DiscoverPaths(graph, leaf, m[0].certificate, 6);
  ASSERT_EQ(chains.size(), 2u);
  EXPECT_EQ(chains[0].size(), 3u);  // M0 -> M3 -> leaf
  EXPECT_EQ(chains[1].size(), 5u);  // M0 -> M1 -> M2 -> M3 -> leaf
  EXPECT_EQ(chains, orbitpki::testing::BruteForcePaths(graph, leaf,
                                                       m[0].certificate, 6));
}

TEST(TrustGraphTest, RejectsCertificatesFromUnknownIssuers) {
  const auto world = MakeBridgeWorld();
  TrustGraph graph;
  graph.AddAnchor(world.bca.certificate);
  EXPECT_FALSE(graph.AddCertificate(world.sat_a));
  EXPECT_TRUE(graph.AddCertificate(world.pair2.forward));
  EXPECT_TRUE(graph.AddCertificate(world.ica2_cert));
  EXPECT_TRUE(graph.AddCertificate(world.sat_a));
  EXPECT_THROW(graph.AddAnchor(world.sat_a), Error);
}

TEST(TrustGraphTest, CopiesAreSnapshots) {
  const auto world = MakeBridgeWorld();
  TrustGraph graph;
  graph.AddAnchor(world.bca.certificate);
  const TrustGraph snapshot = graph;
  graph.AddCertificate(world.pair2.forward);
  EXPECT_EQ(snapshot.size(), 1u);
  EXPECT_EQ(graph.size(), 2u);
}

// Properties over random trust graphs.
TEST(TrustPropertyTest, DiscoveryMatchesBruteForceOracle) {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 200; ++trial) {
    const auto w = orbitpki::testing::MakeRandomTrustWorld(rng);
    ASSERT_LE(w.graph.size(), 12u);
    const int depth = 1 + static_cast<int>(rng() % 6);
    EXPECT_EQ(DiscoverPaths(w.graph, w.target, w.anchor, depth),
              orbitpki::testing::BruteForcePaths(w.graph, w.target, w.anchor,
                                                 depth))
        << "trial " << trial;
  }
}

TEST(TrustPropertyTest, ValidationMatchesRecomputedChecks) {
  std::mt19937_64 rng(778);
  int chains_checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto w = orbitpki::testing::MakeRandomTrustWorld(rng);
    const ValidationOptions opts{.staleness_limit_s = w.staleness_limit_s};
    for (const auto& chain : DiscoverPaths(w.graph, w.target, w.anchor, 6)) {
      const auto r = ValidateChain(chain, w.now_s, w.crls, w.ctx, opts);
      const auto expected = orbitpki::testing::ExpectedStatus(
          orbitpki::testing::RecomputeChecks(chain, w.now_s, w.crls, w.ctx,
                                             w.staleness_limit_s));
      EXPECT_EQ(r.status, expected) << "trial " << trial << ": " << r.detail;
      if (r.ok()) {
        EXPECT_TRUE(w.graph.IsAnchor(r.path.front()));
        EXPECT_TRUE(r.path.front().IsSelfIssued());
        EXPECT_EQ(r.path.back(), w.target);
      }
      ++chains_checked;
    }
  }
  EXPECT_GT(chains_checked, 50);
}

TEST(TrustPropertyTest, RevocationIsMonotone) {
  std::mt19937_64 rng(779);
  int revoked_seen = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto w = orbitpki::testing::MakeRandomTrustWorld(rng);
    const ValidationOptions opts{.staleness_limit_s = w.staleness_limit_s};
    for (const auto& chain : DiscoverPaths(w.graph, w.target, w.anchor, 6)) {
      if (ValidateChain(chain, w.now_s, w.crls, w.ctx, opts).status !=
          ValidationStatus::kRevoked) {
        continue;
      }
      ++revoked_seen;
      double latest = w.now_s;
      double horizon = 1e12;
      for (const auto& c : chain) horizon = std::min(horizon, c.not_after_s);
      auto superset = w.crls;
      superset.push_back(superset.front());
      for (double t = latest; t <= horizon; t += (horizon - latest) / 7 + 1) {
        EXPECT_EQ(ValidateChain(chain, t, superset, w.ctx, opts).status,
                  ValidationStatus::kRevoked);
      }
    }
  }
  EXPECT_GT(revoked_seen, 0);
}

}  // namespace
}  // namespace orbitpki::trust
