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

#include "orbitpki/scenarios/runner.h"

#include <charconv>
#include <map>
#include <memory>
#include <optional>
#include <set>

#include "orbitpki/actors/authority.h"
#include "orbitpki/actors/message.h"
#include "orbitpki/actors/relying_party.h"
#include "orbitpki/actors/repository.h"
#include "orbitpki/error.h"
#include "orbitpki/geometry/constants.h"
#include "orbitpki/scenarios/world.h"
#include "orbitpki/version.h"

namespace orbitpki::scenarios {

namespace {

using actors::Message;
using pki::Certificate;
using sim::FromSeconds;
using sim::SimTime;
using sim::ToSeconds;

constexpr std::uint64_t kNoRequest = 0;
constexpr std::string_view kRequestNotePrefix = "request ";

std::string Num(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

sim::EngineOptions EngineOptionsFor(const Scenario& s) {
  sim::EngineOptions o;
  o.link = s.options.link;
  o.search = s.options.search;
  o.window_horizon_s = s.duration_s + 86400.0;
  return o;
}

class SchemeRun {
 public:
  explicit SchemeRun(const Scenario& s)
      : s_(s), world_(BuildWorld(s)), engine_(EngineOptionsFor(s)) {}

  LatencyReport Run() {
    AddNodes();
    if (IsIpki(s_.scheme)) {
      SetupIpki();
    } else {
      SetupSpcpki();
    }
    ScheduleWorkload();
    ScheduleRevocations();
    ScheduleCrlRefresh();
    const sim::RunStats stats = engine_.RunUntil(FromSeconds(s_.duration_s));
    return Finish(stats);
  }

 private:
  const NodeSpec& Node(const std::string& name) const {
    return *s_.FindNode(name);
  }
  double NowS() const { return ToSeconds(engine_.now()); }

  std::vector<ActorId> Ids(Role role) const {
    std::vector<ActorId> out;
    for (const auto* n : s_.NodesWithRole(role)) out.push_back(n->id);
    return out;
  }

  void AddNodes() {
    for (const auto& n : s_.nodes) {
      if (n.id.role == Role::kRelay) {
        engine_.AddRelay(n.id, n.geometry, s_.options.relay);
      } else {
        engine_.AddNode(n.id, n.geometry, n.processing_s);
      }
      engine_.SetHandler(n.id,
                         [this](const sim::Delivery& d) { OnDelivery(d); });
    }
    engine_.SetDropHandler([this](const sim::Delivery& d) { OnDrop(d); });
  }

  trust::ValidationOptions ValidationOpts() const {
    trust::ValidationOptions o;
    o.staleness_limit_s = s_.options.staleness_limit_s;
    return o;
  }

  void SetupIpki() {
    const pki::CaState& bridge = world_.Bridge();
    bca_id_ = s_.NodesWithRole(Role::kGrdBca).front()->id;
    publisher_.emplace(bca_id_, bridge.keys);
    for (const auto& cert : world_.ipki_certificates) {
      publisher_->StageCertificate(cert);
    }
    for (const auto& crl : world_.IpkiCrls()) publisher_->StageCrl(crl);
    if (world_.mapping_table) {
      publisher_->StageMappingTable(*world_.mapping_table);
    }

    if (s_.scheme == SchemeId::kIpkiCase1) replica_ids_ = Ids(Role::kSpcVa);
    if (s_.scheme == SchemeId::kIpkiCase2) replica_ids_ = Ids(Role::kRepository);
    for (const auto& id : replica_ids_) {
      publisher_->AddReplica(id);
      replicas_[id];
    }
    // Replicas start from the bootstrap state; later changes travel as
    // messages.
    for (const auto& u : publisher_->PublishDelta(0.0)) {
      replicas_[u.destination] = actors::RepositoryApply(
          replicas_[u.destination], u.update, publisher_->public_key(), 0.0);
      publisher_->Acknowledge(u.destination, u.update.version);
    }

    for (Role role : {Role::kSpcVa, Role::kGroundStation}) {
      for (const auto* n : s_.NodesWithRole(role)) {
        const auto& creds = world_.nodes.at(n->name);
        validators_[n->id] = actors::ValidatorState{
            n->id, creds.keys, *creds.ipki_cert, bridge.certificate,
            ValidationOpts(), trust::kDefaultMaxDepth};
      }
    }
    for (const auto* n : s_.NodesWithRole(Role::kSpcRp)) {
      const auto& creds = world_.nodes.at(n->name);
      actors::RpState rp;
      rp.id = n->id;
      rp.keys = creds.keys;
      rp.certificate = *creds.ipki_cert;
      rp.anchor = bridge.certificate;
      rp.cache_ttl_s = s_.options.rp_cache_ttl_s;
      for (const auto& [id, v] : validators_) rp.authorities[id] = v.certificate;
      rps_[n->id] = std::move(rp);
    }
  }

  void SetupSpcpki() {
    spc_id_ = s_.NodesWithRole(Role::kSpcCa).front()->id;
    const Certificate& anchor = world_.grd_ca->certificate;
    validators_[spc_id_] = actors::ValidatorState{
        spc_id_, world_.spc_ca->keys, world_.spc_ca->certificate, anchor,
        ValidationOpts(), trust::kDefaultMaxDepth};
    for (const auto* n : s_.NodesWithRole(Role::kSpcRp)) {
      const auto& creds = world_.nodes.at(n->name);
      actors::RpState rp;
      rp.id = n->id;
      rp.keys = creds.spc_keys;
      rp.certificate = *creds.spc_cert;
      rp.anchor = anchor;
      rp.cache_ttl_s = s_.options.rp_cache_ttl_s;
      rp.authorities[spc_id_] = world_.spc_ca->certificate;
      rps_[n->id] = std::move(rp);

      actors::RpCache cache;
      cache.anchor = anchor;
      cache.certificates = {world_.spc_ca->certificate};
      cache.crls = world_.SpcCrls();
      cache.policy.required_policies = creds.spc_cert->policy_ids;
      rp_caches_[n->id] = std::move(cache);
    }
  }

  // CA-Repository held by Spc-CA.
  actors::RepositoryState SpcView() const {
    actors::RepositoryState view;
    const auto& spc = world_.spc_ca->certificate;
    view.certificates[spc.key()] = spc;
    for (const auto& [name, creds] : world_.nodes) {
      if (creds.spc_cert) view.certificates[creds.spc_cert->key()] = *creds.spc_cert;
    }
    for (const auto& crl : world_.SpcCrls()) view.crls[crl.issuer_name] = crl;
    return view;
  }

  void ScheduleWorkload() {
    std::uint64_t id = 0;
    for (const auto& w : ExpandWorkload(s_)) {
      ++id;
      const std::string note = std::string(kRequestNotePrefix) +
                               std::to_string(id) + " " + w.requester + " -> " +
                               w.target;
      engine_.ScheduleTimer(FromSeconds(w.at_s),
                            [this, id, w] { Initiate(id, w); }, note);
    }
  }

  void ScheduleRevocations() {
    for (const auto& r : s_.trust.revocations) {
      engine_.ScheduleTimer(
          FromSeconds(r.at_s),
          [this, r] {
            if (auto crl = RevokeSubject(world_, s_.scheme, r.subject, NowS())) {
              Propagate(*crl);
            }
          },
          "revoke " + r.subject);
    }
  }

  void ScheduleCrlRefresh() {
    const double interval = s_.trust.crl_interval_s;
    for (double t = interval; t <= s_.duration_s; t += interval) {
      engine_.ScheduleTimer(
          FromSeconds(t),
          [this] {
            if (IsIpki(s_.scheme)) {
              for (auto& [name, ca] : world_.ipki_cas) {
                Propagate(pki::RefreshCrl(ca, NowS()));
              }
            } else {
              Propagate(pki::RefreshCrl(*world_.grd_ca, NowS()));
              Propagate(pki::RefreshCrl(*world_.spc_ca, NowS()));
            }
          },
          "crl-refresh");
    }
  }

  void Propagate(const pki::RevocationList& crl) {
    if (IsIpki(s_.scheme)) {
      publisher_->StageCrl(crl);
      SyncReplicas();
      return;
    }
    if (s_.scheme != SchemeId::kSpcpkiLocal) return;
    // Spc-CA pushes revocation data to every space entity.
    for (const auto& [rp, cache] : rp_caches_) {
      engine_.Send(spc_id_, rp, actors::CrlBroadcastMsg{spc_id_, crl},
                   kNoRequest);
    }
  }

  void SyncReplicas() {
    const SimTime now = engine_.now();
    const auto visible = [&](const ActorId& r) {
      return engine_.Visible(bca_id_, r, now);
    };
    for (auto& u : publisher_->PublishDelta(NowS(), visible)) {
      engine_.Send(bca_id_, u.destination, std::move(u.update), kNoRequest);
    }
    for (const auto& r : replica_ids_) {
      if (!publisher_->HasPending(r) || visible(r) || sync_wakeups_.contains(r)) {
        continue;
      }
      const auto window = geometry::NextVisibilityWindow(
          engine_.Geometry(bca_id_), engine_.Geometry(r), NowS(),
          NowS() + s_.duration_s + 86400.0, s_.options.link, s_.options.search);
      if (!window) continue;
      sync_wakeups_.insert(r);
      const SimTime at = std::max(sim::CeilFromSeconds(window->start_s), now + 1);
      engine_.ScheduleTimer(
          at,
          [this, r] {
            sync_wakeups_.erase(r);
            SyncReplicas();
          },
          "sync " + r.ToString());
    }
  }

  // Closest visible candidate, else the one whose window opens first.
  ActorId Choose(const ActorId& from, const std::vector<ActorId>& ids) const {
    std::vector<actors::AuthorityCandidate> cands;
    for (const auto& id : ids) cands.push_back({id, engine_.Geometry(id)});
    const auto& g = engine_.Geometry(from);
    if (auto best = actors::RpSelectAuthority(g, cands, NowS(), s_.options.link)) {
      return *best;
    }
    std::optional<std::pair<double, ActorId>> earliest;
    for (const auto& c : cands) {
      const auto w = geometry::NextVisibilityWindow(
          g, c.geometry, NowS(), NowS() + s_.duration_s + 86400.0,
          s_.options.link, s_.options.search);
      if (w && (!earliest || w->start_s < earliest->first)) {
        earliest = {w->start_s, c.id};
      }
    }
    return earliest ? earliest->second : ids.front();
  }

  pki::Bytes Nonce(std::uint64_t request_id) const {
    pki::ByteWriter w;
    w.PutString("nonce");
    w.PutU64(s_.seed);
    w.PutU64(request_id);
    const auto digest = pki::Blake2b(w.bytes());
    return pki::Bytes(digest.begin(), digest.begin() + 16);
  }

  void Initiate(std::uint64_t id, const WorkloadRequest& w) {
    sim::LatencyRecord& rec = records_[id];
    rec.request_id = id;
    rec.scheme = std::string(SchemeName(s_.scheme));
    rec.requester = w.requester;
    rec.target = w.target;
    rec.t_initiated = engine_.now();
    rec.t_completed = engine_.now();

    const ActorId rp_id = Node(w.requester).id;
    const auto& target_creds = world_.nodes.at(w.target);
    const Certificate& target = IsSpcpki(s_.scheme) ? *target_creds.spc_cert
                                                   : *target_creds.ipki_cert;
    if (s_.scheme == SchemeId::kSpcpkiLocal) {
      Complete(rec, actors::RpLocalValidate(rp_caches_.at(rp_id), target, NowS(),
                                            s_.options.staleness_limit_s));
      return;
    }
    actors::RpState& rp = rps_.at(rp_id);
    if (const auto* cached = actors::RpCachedResult(rp, target.key(), NowS())) {
      rec.cache_hit = true;
      Complete(rec, *cached);
      return;
    }
    Message req = actors::RpMakeRequest(rp, target, Nonce(id), NowS(), id);
    switch (s_.scheme) {
      case SchemeId::kDelayedGround:
        engine_.Send(rp_id, Choose(rp_id, Ids(Role::kGroundStation)),
                     std::move(req), id);
        break;
      case SchemeId::kRelayGeo: {
        const ActorId relay = Choose(rp_id, Ids(Role::kRelay));
        const ActorId ground = Choose(relay, Ids(Role::kGroundStation));
        relay_for_request_[id] = relay;
        engine_.SendViaRelay(rp_id, relay, ground, std::move(req), id);
        break;
      }
      case SchemeId::kIpkiCase1:
      case SchemeId::kIpkiCase2:
        engine_.Send(rp_id, Choose(rp_id, Ids(Role::kSpcVa)), std::move(req), id);
        break;
      case SchemeId::kSpcpkiDelegated:
        engine_.Send(rp_id, spc_id_, std::move(req), id);
        break;
      case SchemeId::kSpcpkiLocal:
        break;
    }
  }

  void Complete(sim::LatencyRecord& rec, const trust::ValidationResult& result) {
    rec.outcome = sim::Outcome::kCompleted;
    rec.status = result.status;
    rec.t_completed = engine_.now();
  }

  void Charge(const sim::Delivery& d) {
    const auto it = records_.find(d.request_id);
    if (it != records_.end()) it->second.cost += d.cost;
  }

  void Reply(const ActorId& from, const ActorId& to, Message msg,
             std::uint64_t request_id) {
    const auto relay = relay_for_request_.find(request_id);
    if (relay != relay_for_request_.end()) {
      engine_.SendViaRelay(from, relay->second, to, std::move(msg), request_id);
    } else {
      engine_.Send(from, to, std::move(msg), request_id);
    }
  }

  void OnDelivery(const sim::Delivery& d) {
    std::visit([&](const auto& msg) { Handle(d, msg); }, d.payload);
  }

  void Handle(const sim::Delivery& d, const actors::ValidationRequestMsg& req) {
    Charge(d);
    const ActorId self = d.to;
    const auto& va = validators_.at(self);
    switch (self.role) {
      case Role::kGroundStation:
        Reply(self, d.from,
              actors::VaHandleRequest(va, publisher_->ground_truth(), req, NowS()),
              d.request_id);
        return;
      case Role::kSpcCa:
        Reply(self, d.from, actors::VaHandleRequest(va, SpcView(), req, NowS()),
              d.request_id);
        return;
      default:
        break;
    }
    if (s_.scheme == SchemeId::kIpkiCase1) {
      Reply(self, d.from,
            actors::VaHandleRequest(va, replicas_.at(self), req, NowS()),
            d.request_id);
      return;
    }
    // Case 2: the repository lives elsewhere.
    const double ttl = s_.options.va_repository_cache_s;
    const auto cached = va_snapshots_.find(self);
    if (ttl > 0.0 && cached != va_snapshots_.end() &&
        NowS() - cached->second.first <= ttl) {
      Reply(self, d.from,
            actors::VaHandleRequest(va, *cached->second.second, req, NowS()),
            d.request_id);
      return;
    }
    const std::uint64_t qid = ++next_query_;
    queries_[qid] = PendingQuery{req, d.from};
    engine_.Send(self, Choose(self, replica_ids_), actors::RepositoryQueryMsg{qid},
                 d.request_id);
  }

  void Handle(const sim::Delivery& d, const actors::ValidationResponseMsg& resp) {
    const auto it = records_.find(d.request_id);
    const auto accepted = actors::RpAcceptResponse(rps_.at(d.to), resp, NowS());
    if (accepted.disposition != actors::ResponseDisposition::kAccepted ||
        it == records_.end() || accepted.request_id != d.request_id) {
      return;  // duplicate or unauthentic
    }
    it->second.cost += d.cost;
    Complete(it->second, resp.result);
  }

  void Handle(const sim::Delivery& d, const actors::RepositoryUpdateMsg& update) {
    auto& replica = replicas_.at(d.to);
    try {
      replica = actors::RepositoryApply(replica, update, publisher_->public_key(),
                                        NowS());
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kStaleVersion) throw;
      return;
    }
    engine_.Send(d.to, d.from, actors::RepositoryAckMsg{d.to, update.version},
                 kNoRequest);
  }

  void Handle(const sim::Delivery& d, const actors::RepositoryQueryMsg& query) {
    Charge(d);
    auto snapshot = std::make_shared<const actors::RepositoryState>(
        replicas_.at(d.to));
    engine_.Send(d.to, d.from,
                 actors::RepositoryResponseMsg{query.query_id, std::move(snapshot)},
                 d.request_id);
  }

  void Handle(const sim::Delivery& d, const actors::RepositoryResponseMsg& resp) {
    Charge(d);
    const auto it = queries_.find(resp.query_id);
    if (it == queries_.end()) return;
    const PendingQuery q = std::move(it->second);
    queries_.erase(it);
    if (s_.options.va_repository_cache_s > 0.0) {
      va_snapshots_[d.to] = {NowS(), resp.snapshot};
    }
    Reply(d.to, q.requester,
          actors::VaHandleRequest(validators_.at(d.to), *resp.snapshot, q.request,
                                  NowS()),
          d.request_id);
  }

  void Handle(const sim::Delivery&, const actors::RepositoryAckMsg& ack) {
    publisher_->Acknowledge(ack.replica, ack.version);
  }

  void Handle(const sim::Delivery& d, const actors::CrlBroadcastMsg& msg) {
    const auto it = rp_caches_.find(d.to);
    if (it != rp_caches_.end()) actors::RpStoreCrl(it->second, msg.crl);
  }

  void OnDrop(const sim::Delivery& d) {
    const auto it = records_.find(d.request_id);
    if (it == records_.end()) return;
    it->second.cost += d.cost;
    it->second.outcome = sim::Outcome::kDropped;
    it->second.t_completed = engine_.now();
  }

  LatencyReport Finish(const sim::RunStats& stats) {
    LatencyReport report;
    report.scenario = s_.name;
    report.header = MakeHeader(s_);
    for (auto& [id, rec] : records_) {
      if (rec.outcome == sim::Outcome::kPending) {
        // Time not yet attributed to a finished leg counts as waiting.
        rec.t_completed = std::max(engine_.now(), rec.t_initiated + rec.cost.Total());
        rec.cost.wait_visibility += rec.t_completed - rec.t_initiated - rec.cost.Total();
      }
      report.records.push_back(rec);
    }
    report.summaries.push_back(
        Summarize(std::string(SchemeName(s_.scheme)), report.records));
    report.trace = engine_.trace();
    report.trace_digest = sim::TraceDigest(report.trace);
    std::vector<sim::TraceRecord> workload;
    for (const auto& r : report.trace) {
      if (r.kind == "timer" && r.note.starts_with(kRequestNotePrefix)) {
        sim::TraceRecord w;
        w.time = r.time;
        w.kind = r.kind;
        w.note = r.note;
        workload.push_back(std::move(w));
      }
    }
    report.workload_digest = sim::TraceDigest(workload);
    report.stats = stats;
    return report;
  }

  struct PendingQuery {
    actors::ValidationRequestMsg request;
    ActorId requester;
  };

  const Scenario& s_;
  World world_;
  sim::Engine engine_;
  ActorId bca_id_;
  ActorId spc_id_;
  std::optional<actors::RepositoryPublisher> publisher_;
  std::vector<ActorId> replica_ids_;
  std::map<ActorId, actors::RepositoryState> replicas_;
  std::map<ActorId, actors::ValidatorState> validators_;
  std::map<ActorId, actors::RpState> rps_;
  std::map<ActorId, actors::RpCache> rp_caches_;
  std::set<ActorId> sync_wakeups_;
  std::map<std::uint64_t, sim::LatencyRecord> records_;
  std::map<std::uint64_t, ActorId> relay_for_request_;
  std::map<std::uint64_t, PendingQuery> queries_;
  std::uint64_t next_query_ = 0;
  std::map<ActorId,
           std::pair<double, std::shared_ptr<const actors::RepositoryState>>>
      va_snapshots_;
};

}  // namespace

ReportHeader MakeHeader(const Scenario& s) {
  namespace g = geometry;
  const auto& o = s.options;
  ReportHeader h = {
      {"tool", "orbitpki " + std::string(Version())},
      {"schema_version", std::to_string(s.schema_version)},
      {"scenario", s.name},
      {"scheme", std::string(SchemeName(s.scheme))},
      {"seed", std::to_string(s.seed)},
      {"duration_s", Num(s.duration_s)},
      {"requests", std::to_string(ExpandWorkload(s).size())},
      {"signature_scheme", std::string(pki::AlgorithmName(s.trust.algorithm))},
      {"speed_of_light_km_s", Num(g::kSpeedOfLightKmS)},
      {"earth_radius_km", Num(g::kEarthRadiusKm)},
      {"earth_mu_km3_s2", Num(g::kMuKm3S2)},
      {"sidereal_day_s", Num(g::kSiderealDayS)},
      {"geo_altitude_km", Num(g::kGeoAltitudeKm)},
      {"link.grazing_margin_km", Num(o.link.grazing_margin_km)},
      {"link.min_elevation_deg", Num(o.link.min_elevation_deg)},
      {"window_search.step_s", Num(o.search.step_s)},
      {"window_search.refine_s", Num(o.search.refine_s)},
      {"window_horizon_s", Num(s.duration_s + 86400.0)},
      {"relay.capacity_slots", std::to_string(o.relay.capacity_slots)},
      {"relay.slot_service_s", Num(o.relay.slot_service_s)},
      {"relay.max_queue", o.relay.max_queue ? std::to_string(*o.relay.max_queue)
                                            : "unbounded"},
      {"rp_cache_ttl_s", Num(o.rp_cache_ttl_s)},
      {"staleness_limit_s", Num(o.staleness_limit_s)},
      {"va_repository_cache_s", Num(o.va_repository_cache_s)},
      {"crl_interval_s", Num(s.trust.crl_interval_s)},
      {"certificate_lifetime_s", Num(pki::kDefaultCertificateLifetimeS)},
      {"ca_lifetime_s", Num(kCaLifetimeS)},
      {"root_lifetime_s", Num(kRootLifetimeS)},
      {"max_path_depth", std::to_string(trust::kDefaultMaxDepth)},
      {"processing_s.default", "0"},
  };
  for (const auto& n : s.nodes) {
    if (n.processing_s != 0.0) {
      h.emplace_back("processing_s." + n.name, Num(n.processing_s));
    }
  }
  return h;
}

LatencyReport RunScenario(const Scenario& scenario) {
  scenario.Validate();
  return SchemeRun(scenario).Run();
}

Comparison CompareSchemes(const Scenario& base,
                          std::span<const SchemeId> schemes) {
  if (schemes.empty()) {
    throw Error(ErrorCode::kConfiguration, "compare needs at least one scheme");
  }
  Comparison out;
  for (SchemeId scheme : schemes) {
    Scenario s = base;
    s.scheme = scheme;
    out.reports.push_back(RunScenario(s));
  }
  return out;
}

}  // namespace orbitpki::scenarios
