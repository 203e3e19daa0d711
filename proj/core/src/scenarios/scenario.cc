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

#include "orbitpki/scenarios/scenario.h"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <utility>

#include "orbitpki/error.h"

namespace orbitpki::scenarios {

namespace {

constexpr std::array<std::pair<SchemeId, std::string_view>, 6> kSchemeNames = {{
    {SchemeId::kDelayedGround, "DELAYED_GROUND"},
    {SchemeId::kRelayGeo, "RELAY_GEO"},
    {SchemeId::kIpkiCase1, "IPKI_CASE1"},
    {SchemeId::kIpkiCase2, "IPKI_CASE2"},
    {SchemeId::kSpcpkiLocal, "SPCPKI_LOCAL"},
    {SchemeId::kSpcpkiDelegated, "SPCPKI_DELEGATED"},
}};

bool IsGroundRole(Role role) {
  return role == Role::kGrdCa || role == Role::kGrdPca ||
         role == Role::kGrdBca || role == Role::kGroundStation;
}

class ProblemList {
 public:
  void Add(std::string problem) { problems_.push_back(std::move(problem)); }
  void Require(bool ok, std::string problem) {
    if (!ok) Add(std::move(problem));
  }
  std::vector<std::string> Take() && { return std::move(problems_); }

 private:
  std::vector<std::string> problems_;
};

}  // namespace

std::string_view SchemeName(SchemeId scheme) {
  for (const auto& [id, name] : kSchemeNames) {
    if (id == scheme) return name;
  }
  return "UNKNOWN";
}

SchemeId ParseScheme(std::string_view name) {
  for (const auto& [id, n] : kSchemeNames) {
    if (n == name) return id;
  }
  throw Error(ErrorCode::kParse, "unknown scheme '" + std::string(name) + "'");
}

bool IsIpki(SchemeId scheme) { return !IsSpcpki(scheme); }

bool IsSpcpki(SchemeId scheme) {
  return scheme == SchemeId::kSpcpkiLocal ||
         scheme == SchemeId::kSpcpkiDelegated;
}

const NodeSpec* Scenario::FindNode(std::string_view node_name) const {
  for (const auto& n : nodes) {
    if (n.name == node_name) return &n;
  }
  return nullptr;
}

const NodeSpec* Scenario::FindNode(const ActorId& id) const {
  for (const auto& n : nodes) {
    if (n.id == id) return &n;
  }
  return nullptr;
}

std::vector<const NodeSpec*> Scenario::NodesWithRole(Role role) const {
  std::vector<const NodeSpec*> out;
  for (const auto& n : nodes) {
    if (n.id.role == role) out.push_back(&n);
  }
  std::sort(out.begin(), out.end(), [](const NodeSpec* a, const NodeSpec* b) {
    return a->id < b->id;
  });
  return out;
}

std::vector<std::string> Scenario::Problems() const {
  ProblemList p;
  p.Require(schema_version == kSchemaVersion,
            "schema_version " + std::to_string(schema_version) +
                " is not supported (expected " +
                std::to_string(kSchemaVersion) + ")");
  p.Require(duration_s > 0.0, "duration_s must be positive");

  std::set<std::string> names;
  std::set<ActorId> ids;
  for (const auto& n : nodes) {
    const std::string where = "node '" + n.name + "'";
    p.Require(!n.name.empty(), "a node has an empty name");
    p.Require(names.insert(n.name).second, "duplicate node name '" + n.name + "'");
    p.Require(ids.insert(n.id).second,
              "duplicate actor id " + n.id.ToString() + " at " + where);
    try {
      std::visit([](const auto& g) { g.Validate(); }, n.geometry);
    } catch (const Error& e) {
      p.Add(where + ": " + e.what());
    }
    const bool ground = geometry::IsGround(n.geometry);
    if (n.id.role != Role::kRelay && n.id.role != Role::kRepository) {
      p.Require(ground == IsGroundRole(n.id.role),
                where + ": role " + std::string(actors::RoleName(n.id.role)) +
                    (ground ? " cannot be a ground site" : " needs a ground site"));
    } else {
      p.Require(!ground, where + ": relays and repositories are in orbit");
    }
    p.Require(n.processing_s >= 0.0, where + ": negative processing_s");
    if (!n.domain.empty() && n.id.role != Role::kSpcRp) {
      p.Add(where + ": only SPC_RP nodes belong to a domain");
    }
  }

  std::set<std::string> domain_names;
  std::set<std::string> ca_names;
  for (const auto& d : trust.domains) {
    p.Require(domain_names.insert(d.name).second,
              "duplicate domain '" + d.name + "'");
    p.Require(!d.policy.empty(), "domain '" + d.name + "' has no policy");
    std::vector<std::string> cas = {d.pca};
    cas.insert(cas.end(), d.intermediates.begin(), d.intermediates.end());
    for (const auto& ca : cas) {
      p.Require(!ca.empty(), "domain '" + d.name + "' has an unnamed CA");
      p.Require(ca_names.insert(ca).second, "duplicate CA name '" + ca + "'");
      p.Require(!names.contains(ca),
                "CA name '" + ca + "' collides with a node name");
    }
  }
  for (const auto& m : trust.policy_mappings) {
    p.Require(!m.from.empty() && !m.to.empty(),
              "policy mapping with an empty policy id");
  }
  p.Require(trust.crl_interval_s > 0.0, "trust.crl_interval_s must be positive");

  const auto count = [&](Role role) { return NodesWithRole(role).size(); };
  const std::string scheme_name(SchemeName(scheme));
  if (IsIpki(scheme)) {
    p.Require(count(Role::kGrdBca) == 1,
              scheme_name + " needs exactly one GRD_BCA node");
    p.Require(!trust.domains.empty(), scheme_name + " needs at least one domain");
    for (const auto* rp : NodesWithRole(Role::kSpcRp)) {
      p.Require(domain_names.contains(rp->domain),
                "node '" + rp->name + "' references unknown domain '" +
                    rp->domain + "'");
    }
  } else {
    p.Require(count(Role::kGrdCa) == 1,
              scheme_name + " needs exactly one GRD_CA node");
    p.Require(count(Role::kSpcCa) == 1,
              scheme_name + " needs exactly one SPC_CA node");
  }
  switch (scheme) {
    case SchemeId::kDelayedGround:
      p.Require(count(Role::kGroundStation) > 0,
                scheme_name + " needs a GROUND_STATION node");
      break;
    case SchemeId::kRelayGeo:
      p.Require(count(Role::kRelay) > 0, scheme_name + " needs a RELAY node");
      p.Require(count(Role::kGroundStation) > 0,
                scheme_name + " needs a GROUND_STATION node");
      break;
    case SchemeId::kIpkiCase1:
      p.Require(count(Role::kSpcVa) > 0, scheme_name + " needs a SPC_VA node");
      break;
    case SchemeId::kIpkiCase2:
      p.Require(count(Role::kSpcVa) > 0, scheme_name + " needs a SPC_VA node");
      p.Require(count(Role::kRepository) > 0,
                scheme_name + " needs a REPOSITORY node");
      break;
    case SchemeId::kSpcpkiLocal:
    case SchemeId::kSpcpkiDelegated:
      break;
  }

  const auto is_rp = [&](const std::string& name) {
    const NodeSpec* n = FindNode(name);
    return n != nullptr && n->id.role == Role::kSpcRp;
  };
  for (std::size_t i = 0; i < workload.requests.size(); ++i) {
    const auto& r = workload.requests[i];
    const std::string where = "workload.requests[" + std::to_string(i) + "]";
    p.Require(is_rp(r.requester),
              where + ": unknown actor reference '" + r.requester + "'");
    p.Require(is_rp(r.target),
              where + ": unknown actor reference '" + r.target + "'");
    p.Require(r.at_s >= 0.0 && r.at_s <= duration_s,
              where + ": at_s outside [0, duration_s]");
  }
  if (workload.generator) {
    const auto& g = *workload.generator;
    p.Require(g.rate_per_s > 0.0, "workload.generator.rate_per_s must be positive");
    p.Require(g.start_s >= 0.0, "workload.generator.start_s must be >= 0");
    if (g.count > 0 && g.rate_per_s > 0.0) {
      p.Require(g.start_s + static_cast<double>(g.count - 1) / g.rate_per_s <=
                    duration_s,
                "workload.generator arrivals extend past duration_s");
    }
    for (const auto* list : {&g.requesters, &g.targets}) {
      for (const auto& name : *list) {
        p.Require(is_rp(name), "workload.generator: unknown actor reference '" +
                                   name + "'");
      }
    }
    p.Require(g.count == 0 || !NodesWithRole(Role::kSpcRp).empty(),
              "workload.generator needs SPC_RP nodes");
  }

  for (std::size_t i = 0; i < trust.revocations.size(); ++i) {
    const auto& r = trust.revocations[i];
    const std::string where = "trust.revocations[" + std::to_string(i) + "]";
    const NodeSpec* n = FindNode(r.subject);
    const bool node_subject =
        n != nullptr &&
        (n->id.role == Role::kSpcRp || n->id.role == Role::kSpcVa ||
         n->id.role == Role::kGroundStation);
    p.Require(node_subject || ca_names.contains(r.subject),
              where + ": unknown actor reference '" + r.subject + "'");
    p.Require(r.at_s >= 0.0 && r.at_s <= duration_s,
              where + ": at_s outside [0, duration_s]");
  }

  p.Require(options.relay.capacity_slots > 0,
            "options.relay.capacity_slots must be positive");
  p.Require(options.relay.slot_service_s > 0.0,
            "options.relay.slot_service_s must be positive");
  p.Require(options.rp_cache_ttl_s >= 0.0, "options.rp_cache_ttl_s must be >= 0");
  p.Require(options.staleness_limit_s >= 0.0,
            "options.staleness_limit_s must be >= 0");
  p.Require(options.va_repository_cache_s >= 0.0,
            "options.va_repository_cache_s must be >= 0");
  p.Require(options.link.grazing_margin_km >= 0.0,
            "options.link.grazing_margin_km must be >= 0");
  p.Require(options.link.min_elevation_deg >= 0.0 &&
                options.link.min_elevation_deg < 90.0,
            "options.link.min_elevation_deg must be in [0, 90)");
  p.Require(options.search.step_s > 0.0 && options.search.refine_s > 0.0,
            "options.window_search step_s and refine_s must be positive");
  return std::move(p).Take();
}

void Scenario::Validate() const {
  const auto problems = Problems();
  if (problems.empty()) return;
  std::string msg = "scenario '" + name + "' has " +
                    std::to_string(problems.size()) + " problem(s):";
  for (const auto& problem : problems) msg += "\n  - " + problem;
  throw Error(ErrorCode::kConfiguration, msg);
}

std::vector<WorkloadRequest> ExpandWorkload(const Scenario& scenario) {
  std::vector<WorkloadRequest> out = scenario.workload.requests;
  if (scenario.workload.generator) {
    const auto& g = *scenario.workload.generator;
    std::vector<std::string> all;
    for (const auto* n : scenario.NodesWithRole(Role::kSpcRp)) {
      all.push_back(n->name);
    }
    const auto& requesters = g.requesters.empty() ? all : g.requesters;
    const auto& targets = g.targets.empty() ? all : g.targets;
    // Modulo keeps the draw identical across standard library versions.
    std::mt19937_64 rng(scenario.seed);
    for (std::size_t i = 0; i < g.count; ++i) {
      WorkloadRequest r;
      r.at_s = g.start_s + static_cast<double>(i) / g.rate_per_s;
      r.requester = requesters[rng() % requesters.size()];
      r.target = targets[rng() % targets.size()];
      out.push_back(std::move(r));
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const WorkloadRequest& a, const WorkloadRequest& b) {
                     return a.at_s < b.at_s;
                   });
  return out;
}

}  // namespace orbitpki::scenarios
