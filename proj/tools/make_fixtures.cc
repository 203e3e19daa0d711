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

// Writes offline validation fixtures for `orbitpki validate` from the trust
// material of an iPKI scenario.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "orbitpki/error.h"
#include "orbitpki/io/fixture_json.h"
#include "orbitpki/io/scenario_json.h"
#include "orbitpki/scenarios/world.h"

namespace {

namespace fs = std::filesystem;
using orbitpki::io::TrustFixture;
using orbitpki::scenarios::World;

TrustFixture FromWorld(const World& world, const std::string& rp_domain_policy) {
  TrustFixture f;
  f.anchors.push_back(world.Bridge().certificate);
  f.certificates = world.ipki_certificates;
  for (const auto& [name, creds] : world.nodes) {
    if (creds.ipki_cert) f.certificates.push_back(*creds.ipki_cert);
  }
  f.crls = world.IpkiCrls();
  if (world.mapping_table) f.mapping_tables.push_back(*world.mapping_table);
  if (!rp_domain_policy.empty()) f.required_policies.insert(rp_domain_policy);
  return f;
}

void Write(const fs::path& path, const TrustFixture& fixture) {
  std::ofstream out(path);
  out << orbitpki::io::FixtureToJson(fixture).dump(2) << "\n";
  if (!out) {
    throw orbitpki::Error(orbitpki::ErrorCode::kIo, "failed writing '" + path.string() + "'");
  }
  std::cout << path.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generate trust fixtures for offline validation"};
  std::string scenario_path;
  std::string out_dir = ".";
  std::string revoke = "ICA-2";
  std::string rp_domain = "pki-1";
  double revoke_at_s = 10.0;
  app.add_option("--scenario", scenario_path, "iPKI scenario JSON")
      ->required()
      ->check(CLI::ExistingFile);
  app.add_option("--out-dir", out_dir, "Output directory");
  app.add_option("--revoke", revoke, "Subject revoked in the second fixture");
  app.add_option("--revoke-at", revoke_at_s, "Revocation time in seconds");
  app.add_option("--rp-domain", rp_domain, "Domain whose policy is required");
  CLI11_PARSE(app, argc, argv);

  try {
    const auto scenario = orbitpki::io::LoadScenario(scenario_path);
    std::string policy;
    for (const auto& d : scenario.trust.domains) {
      if (d.name == rp_domain) policy = d.policy;
    }
    if (policy.empty()) {
      throw orbitpki::Error(orbitpki::ErrorCode::kNotFound, "unknown domain '" + rp_domain + "'");
    }
    World world = orbitpki::scenarios::BuildWorld(scenario);
    fs::create_directories(out_dir);
    Write(fs::path(out_dir) / "bridge_valid.json", FromWorld(world, policy));
    if (!orbitpki::scenarios::RevokeSubject(world, orbitpki::scenarios::SchemeId::kIpkiCase1,
                                            revoke, revoke_at_s)) {
      throw orbitpki::Error(orbitpki::ErrorCode::kNotFound,
                            "no certificate for '" + revoke + "'");
    }
    Write(fs::path(out_dir) / "bridge_revoked_intermediate.json", FromWorld(world, policy));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
