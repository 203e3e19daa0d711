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

#include "orbitpki/io/scenario_json.h"

#include <fstream>
#include <set>
#include <sstream>

#include "orbitpki/error.h"

namespace orbitpki::io {

namespace {

using nlohmann::json;
using scenarios::Scenario;

// Walks one JSON object, recording problems instead of throwing so that a
// document with several mistakes reports all of them.
class ObjectReader {
 public:
  ObjectReader(const json* j, std::string path, std::vector<std::string>* issues)
      : j_(j), path_(std::move(path)), issues_(issues) {
    if (j_ != nullptr && !j_->is_object()) {
      Issue(path_, "expected an object");
      j_ = nullptr;
    }
  }

  ~ObjectReader() {
    if (j_ == nullptr) return;
    for (const auto& [key, value] : j_->items()) {
      if (!seen_.contains(key)) Issue(Path(key), "unknown field");
    }
  }

  const std::string& path() const { return path_; }
  std::string Path(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

  const json* Find(const std::string& key) {
    seen_.insert(key);
    if (j_ == nullptr) return nullptr;
    const auto it = j_->find(key);
    return it == j_->end() ? nullptr : &*it;
  }

  template <typename T>
  T Get(const std::string& key, T fallback) {
    const json* v = Find(key);
    if (v == nullptr) return fallback;
    return Convert<T>(*v, Path(key), fallback);
  }

  template <typename T>
  T Require(const std::string& key, T fallback = T{}) {
    const json* v = Find(key);
    if (v == nullptr) {
      if (j_ != nullptr) Issue(Path(key), "missing required field");
      return fallback;
    }
    return Convert<T>(*v, Path(key), fallback);
  }

  ObjectReader Child(const std::string& key) {
    return ObjectReader(Find(key), Path(key), issues_);
  }

  // Calls fn(element_json, element_path) for each element of an array field.
  template <typename Fn>
  void ForEach(const std::string& key, Fn fn) {
    const json* v = Find(key);
    if (v == nullptr) return;
    if (!v->is_array()) {
      Issue(Path(key), "expected an array");
      return;
    }
    for (std::size_t i = 0; i < v->size(); ++i) {
      fn((*v)[i], Path(key) + "[" + std::to_string(i) + "]");
    }
  }

  void Issue(const std::string& where, const std::string& what) {
    issues_->push_back(where + ": " + what);
  }

  std::vector<std::string>* issues() const { return issues_; }

 private:
  template <typename T>
  T Convert(const json& v, const std::string& where, T fallback) {
    if constexpr (std::is_same_v<T, std::string>) {
      if (!v.is_string()) {
        Issue(where, "expected a string");
        return fallback;
      }
    } else if constexpr (std::is_same_v<T, bool>) {
      if (!v.is_boolean()) {
        Issue(where, "expected a boolean");
        return fallback;
      }
    } else if constexpr (std::is_integral_v<T>) {
      if (!v.is_number_integer() ||
          (std::is_unsigned_v<T> && v.get<std::int64_t>() < 0)) {
        Issue(where, std::is_unsigned_v<T> ? "expected a non-negative integer"
                                           : "expected an integer");
        return fallback;
      }
    } else if constexpr (std::is_floating_point_v<T>) {
      if (!v.is_number()) {
        Issue(where, "expected a number");
        return fallback;
      }
    } else if constexpr (std::is_same_v<T, std::vector<std::string>>) {
      if (!v.is_array() ||
          !std::all_of(v.begin(), v.end(),
                       [](const json& e) { return e.is_string(); })) {
        Issue(where, "expected an array of strings");
        return fallback;
      }
    }
    return v.get<T>();
  }

  const json* j_;
  std::string path_;
  std::vector<std::string>* issues_;
  std::set<std::string> seen_;
};

geometry::NodeGeometry ReadGeometry(ObjectReader& node) {
  const int kinds = (node.Find("orbit") != nullptr) +
                    (node.Find("geostationary") != nullptr) +
                    (node.Find("site") != nullptr);
  if (kinds != 1) {
    node.Issue(node.path(),
               "needs exactly one of 'orbit', 'geostationary', or 'site'");
    return geometry::GroundSite{};
  }
  if (node.Find("site") != nullptr) {
    ObjectReader r = node.Child("site");
    geometry::GroundSite site;
    site.latitude_deg = r.Require<double>("latitude_deg");
    site.longitude_deg = r.Require<double>("longitude_deg");
    return site;
  }
  if (node.Find("geostationary") != nullptr) {
    ObjectReader r = node.Child("geostationary");
    return geometry::CircularOrbit::Geostationary(
        r.Get<double>("longitude_deg", 0.0));
  }
  ObjectReader r = node.Child("orbit");
  geometry::CircularOrbit orbit;
  orbit.altitude_km = r.Require<double>("altitude_km");
  orbit.inclination_deg = r.Get<double>("inclination_deg", 0.0);
  orbit.raan_deg = r.Get<double>("raan_deg", 0.0);
  orbit.phase_deg = r.Get<double>("phase_deg", 0.0);
  orbit.epoch_s = r.Get<double>("epoch_s", 0.0);
  return orbit;
}

void ReadNodes(ObjectReader& root, Scenario& s) {
  std::map<actors::Role, int> next_index;
  root.ForEach("nodes", [&](const json& j, const std::string& path) {
    ObjectReader r(&j, path, root.issues());
    scenarios::NodeSpec n;
    n.name = r.Require<std::string>("name");
    const std::string role = r.Require<std::string>("role");
    try {
      n.id.role = actors::ParseRole(role);
    } catch (const Error&) {
      r.Issue(r.Path("role"), "unknown role '" + role + "'");
    }
    n.id.index = r.Get<int>("index", next_index[n.id.role]);
    next_index[n.id.role] = std::max(next_index[n.id.role], n.id.index + 1);
    n.domain = r.Get<std::string>("domain", "");
    n.processing_s = r.Get<double>("processing_s", 0.0);
    n.geometry = ReadGeometry(r);
    s.nodes.push_back(std::move(n));
  });
}

void ReadTrust(ObjectReader r, Scenario& s) {
  auto& t = s.trust;
  const std::string alg =
      r.Get<std::string>("signature_scheme", std::string(pki::AlgorithmName(t.algorithm)));
  try {
    t.algorithm = pki::ParseAlgorithm(alg);
  } catch (const Error&) {
    r.Issue(r.Path("signature_scheme"), "unknown signature scheme '" + alg + "'");
  }
  r.ForEach("domains", [&](const json& j, const std::string& path) {
    ObjectReader d(&j, path, r.issues());
    scenarios::DomainSpec spec;
    spec.name = d.Require<std::string>("name");
    spec.pca = d.Require<std::string>("pca");
    spec.policy = d.Require<std::string>("policy");
    spec.intermediates =
        d.Get<std::vector<std::string>>("intermediates", {});
    t.domains.push_back(std::move(spec));
  });
  r.ForEach("policy_mappings", [&](const json& j, const std::string& path) {
    ObjectReader m(&j, path, r.issues());
    scenarios::PolicyMappingSpec spec;
    spec.from = m.Require<std::string>("from");
    spec.to = m.Require<std::string>("to");
    t.policy_mappings.push_back(std::move(spec));
  });
  t.spc_policy = r.Get<std::string>("spc_policy", t.spc_policy);
  r.ForEach("revocations", [&](const json& j, const std::string& path) {
    ObjectReader v(&j, path, r.issues());
    scenarios::RevocationSpec spec;
    spec.at_s = v.Require<double>("at_s");
    spec.subject = v.Require<std::string>("subject");
    t.revocations.push_back(std::move(spec));
  });
  t.crl_interval_s = r.Get<double>("crl_interval_s", t.crl_interval_s);
}

void ReadWorkload(ObjectReader r, Scenario& s) {
  r.ForEach("requests", [&](const json& j, const std::string& path) {
    ObjectReader q(&j, path, r.issues());
    scenarios::WorkloadRequest req;
    req.at_s = q.Get<double>("at_s", 0.0);
    req.requester = q.Require<std::string>("requester");
    req.target = q.Require<std::string>("target");
    s.workload.requests.push_back(std::move(req));
  });
  if (r.Find("generator") != nullptr) {
    ObjectReader g = r.Child("generator");
    scenarios::WorkloadGenerator gen;
    gen.start_s = g.Get<double>("start_s", gen.start_s);
    gen.rate_per_s = g.Get<double>("rate_per_s", gen.rate_per_s);
    gen.count = g.Require<std::size_t>("count");
    gen.requesters = g.Get<std::vector<std::string>>("requesters", {});
    gen.targets = g.Get<std::vector<std::string>>("targets", {});
    s.workload.generator = std::move(gen);
  }
}

void ReadOptions(ObjectReader r, Scenario& s) {
  auto& o = s.options;
  {
    ObjectReader relay = r.Child("relay");
    o.relay.capacity_slots =
        relay.Get<int>("capacity_slots", o.relay.capacity_slots);
    o.relay.slot_service_s =
        relay.Get<double>("slot_service_s", o.relay.slot_service_s);
    const json* max_queue = relay.Find("max_queue");
    if (max_queue != nullptr && !max_queue->is_null()) {
      o.relay.max_queue = relay.Get<std::size_t>("max_queue", 0);
    }
  }
  o.rp_cache_ttl_s = r.Get<double>("rp_cache_ttl_s", o.rp_cache_ttl_s);
  o.staleness_limit_s = r.Get<double>("staleness_limit_s", o.staleness_limit_s);
  o.va_repository_cache_s =
      r.Get<double>("va_repository_cache_s", o.va_repository_cache_s);
  {
    ObjectReader link = r.Child("link");
    o.link.grazing_margin_km =
        link.Get<double>("grazing_margin_km", o.link.grazing_margin_km);
    o.link.min_elevation_deg =
        link.Get<double>("min_elevation_deg", o.link.min_elevation_deg);
  }
  {
    ObjectReader search = r.Child("window_search");
    o.search.step_s = search.Get<double>("step_s", o.search.step_s);
    o.search.refine_s = search.Get<double>("refine_s", o.search.refine_s);
  }
}

std::string LineColumn(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

[[noreturn]] void ThrowIssues(const std::string& source,
                              const std::vector<std::string>& issues) {
  std::string msg = source + ": " + std::to_string(issues.size()) +
                    " problem(s):";
  for (const auto& issue : issues) msg += "\n  - " + issue;
  throw Error(ErrorCode::kConfiguration, msg);
}

}  // namespace

scenarios::Scenario ParseScenario(std::string_view text,
                                  const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, source + ":" + LineColumn(text, e.byte) +
                                       ": " + e.what());
  }
  std::vector<std::string> issues;
  Scenario s;
  {
    ObjectReader root(&doc, "", &issues);
    s.schema_version = root.Require<int>("schema_version", s.schema_version);
    if (s.schema_version != scenarios::kSchemaVersion) {
      // Nothing else is meaningful under an unknown major version.
      ThrowIssues(source, {"schema_version: unsupported major version " +
                           std::to_string(s.schema_version)});
    }
    s.name = root.Get<std::string>("name", "");
    const std::string scheme = root.Require<std::string>("scheme");
    try {
      s.scheme = scenarios::ParseScheme(scheme);
    } catch (const Error&) {
      root.Issue("scheme", "unknown scheme '" + scheme + "'");
    }
    s.seed = root.Get<std::uint64_t>("seed", s.seed);
    s.duration_s = root.Get<double>("duration_s", s.duration_s);
    ReadNodes(root, s);
    ReadTrust(root.Child("trust"), s);
    ReadWorkload(root.Child("workload"), s);
    ReadOptions(root.Child("options"), s);
  }
  for (auto& p : s.Problems()) issues.push_back(std::move(p));
  if (!issues.empty()) ThrowIssues(source, issues);
  return s;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "cannot read '" + path.string() + "'");
  return ss.str();
}

scenarios::Scenario LoadScenario(const std::filesystem::path& path) {
  scenarios::Scenario s = ParseScenario(ReadFile(path), path.string());
  if (s.name.empty()) s.name = path.stem().string();
  return s;
}

nlohmann::json ScenarioToJson(const scenarios::Scenario& s) {
  json nodes = json::array();
  for (const auto& n : s.nodes) {
    json node = {{"name", n.name},
                 {"role", actors::RoleName(n.id.role)},
                 {"index", n.id.index},
                 {"domain", n.domain},
                 {"processing_s", n.processing_s}};
    if (const auto* site = std::get_if<geometry::GroundSite>(&n.geometry)) {
      node["site"] = {{"latitude_deg", site->latitude_deg},
                      {"longitude_deg", site->longitude_deg}};
    } else {
      const auto& o = std::get<geometry::CircularOrbit>(n.geometry);
      if (o.IsGeostationary()) {
        node["geostationary"] = {{"longitude_deg", o.phase_deg}};
      } else {
        node["orbit"] = {{"altitude_km", o.altitude_km},
                         {"inclination_deg", o.inclination_deg},
                         {"raan_deg", o.raan_deg},
                         {"phase_deg", o.phase_deg},
                         {"epoch_s", o.epoch_s}};
      }
    }
    nodes.push_back(std::move(node));
  }
  json domains = json::array();
  for (const auto& d : s.trust.domains) {
    domains.push_back({{"name", d.name},
                       {"pca", d.pca},
                       {"policy", d.policy},
                       {"intermediates", d.intermediates}});
  }
  json mappings = json::array();
  for (const auto& m : s.trust.policy_mappings) {
    mappings.push_back({{"from", m.from}, {"to", m.to}});
  }
  json revocations = json::array();
  for (const auto& r : s.trust.revocations) {
    revocations.push_back({{"at_s", r.at_s}, {"subject", r.subject}});
  }
  json requests = json::array();
  for (const auto& r : s.workload.requests) {
    requests.push_back(
        {{"at_s", r.at_s}, {"requester", r.requester}, {"target", r.target}});
  }
  json workload = {{"requests", requests}};
  if (s.workload.generator) {
    const auto& g = *s.workload.generator;
    workload["generator"] = {{"start_s", g.start_s},
                             {"rate_per_s", g.rate_per_s},
                             {"count", g.count},
                             {"requesters", g.requesters},
                             {"targets", g.targets}};
  }
  const auto& o = s.options;
  return {
      {"schema_version", s.schema_version},
      {"name", s.name},
      {"scheme", scenarios::SchemeName(s.scheme)},
      {"seed", s.seed},
      {"duration_s", s.duration_s},
      {"nodes", nodes},
      {"trust",
       {{"signature_scheme", pki::AlgorithmName(s.trust.algorithm)},
        {"domains", domains},
        {"policy_mappings", mappings},
        {"spc_policy", s.trust.spc_policy},
        {"revocations", revocations},
        {"crl_interval_s", s.trust.crl_interval_s}}},
      {"workload", workload},
      {"options",
       {{"relay",
         {{"capacity_slots", o.relay.capacity_slots},
          {"slot_service_s", o.relay.slot_service_s},
          {"max_queue", o.relay.max_queue ? json(*o.relay.max_queue)
                                          : json(nullptr)}}},
        {"rp_cache_ttl_s", o.rp_cache_ttl_s},
        {"staleness_limit_s", o.staleness_limit_s},
        {"va_repository_cache_s", o.va_repository_cache_s},
        {"link",
         {{"grazing_margin_km", o.link.grazing_margin_km},
          {"min_elevation_deg", o.link.min_elevation_deg}}},
        {"window_search",
         {{"step_s", o.search.step_s}, {"refine_s", o.search.refine_s}}}}}};
}

}  // namespace orbitpki::io
