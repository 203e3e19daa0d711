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

#include "orbitpki/trust/validator.h"

#include <algorithm>
#include <sstream>

#include "orbitpki/error.h"
#include "orbitpki/pki/ca.h"

namespace orbitpki::trust {

namespace {

std::string Describe(const Certificate& c) {
  std::ostringstream out;
  out << "'" << c.subject_name << "' (issuer '" << c.issuer_name
      << "', serial " << c.serial << ")";
  return out.str();
}

class ChainValidator {
 public:
  ChainValidator(std::span<const Certificate> chain, double now_s,
                 std::span<const RevocationList> crls, const PolicyContext& ctx,
                 const ValidationOptions& options)
      : chain_(chain), now_(now_s), crls_(crls), ctx_(ctx), options_(options) {
    result_.checked_at_s = now_s;
  }

  ValidationResult Run() && {
    if (Structure() && Signatures() && Validity() && Constraints() &&
        Revocation() && Policy()) {
      result_.status = ValidationStatus::kValid;
      result_.path.assign(chain_.begin(), chain_.end());
      result_.detail = "all checks passed";
      Binding();
    }
    return std::move(result_);
  }

 private:
  bool Pass(const char* check) {
    result_.checks.push_back({check, true, ""});
    return true;
  }

  bool Fail(const char* check, ValidationStatus status, std::string detail) {
    result_.checks.push_back({check, false, detail});
    result_.status = status;
    result_.detail = std::move(detail);
    result_.path.assign(chain_.begin(), chain_.end());
    return false;
  }

  bool Structure() {
    if (chain_.empty()) {
      return Fail("structure", ValidationStatus::kNoPath, "empty chain");
    }
    if (!chain_.front().IsSelfIssued()) {
      return Fail("structure", ValidationStatus::kNoPath,
                  "chain does not start at a self-issued anchor");
    }
    for (std::size_t i = 1; i < chain_.size(); ++i) {
      if (chain_[i].issuer_name != chain_[i - 1].subject_name) {
        return Fail("structure", ValidationStatus::kNoPath,
                    "issuer of " + Describe(chain_[i]) +
                        " does not match the preceding subject");
      }
    }
    return Pass("structure");
  }

  bool Signatures() {
    if (!pki::VerifySignature(chain_[0], chain_[0].subject_public_key)) {
      return Fail("signatures", ValidationStatus::kBadSignature,
                  "anchor self-signature does not verify");
    }
    for (std::size_t i = 1; i < chain_.size(); ++i) {
      if (!pki::VerifySignature(chain_[i], chain_[i - 1].subject_public_key)) {
        return Fail("signatures", ValidationStatus::kBadSignature,
                    "signature on " + Describe(chain_[i]) + " does not verify");
      }
    }
    return Pass("signatures");
  }

  bool Validity() {
    for (const auto& c : chain_) {
      if (!c.ValidAt(now_)) {
        return Fail("validity", ValidationStatus::kExpired,
                    Describe(c) + " is outside its validity period");
      }
    }
    return Pass("validity");
  }

  bool Constraints() {
    const std::size_t n = chain_.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const Certificate& c = chain_[i];
      if (!c.is_ca) {
        return Fail("constraints", ValidationStatus::kNoPath,
                    Describe(c) + " is not a CA but issues " +
                        Describe(chain_[i + 1]));
      }
      if (c.path_len_constraint) {
        const std::size_t below = n - i - 2;  // intermediates after c
        if (below > *c.path_len_constraint) {
          return Fail("constraints", ValidationStatus::kNoPath,
                      "path length constraint of " + Describe(c) +
                          " exceeded");
        }
      }
    }
    return Pass("constraints");
  }

  // CRLs issued by chain[i].issuer_name that verify under chain[i-1]'s key.
  std::vector<const RevocationList*> ApplicableCrls(std::size_t i) const {
    std::vector<const RevocationList*> out;
    for (const auto& crl : crls_) {
      if (crl.issuer_name == chain_[i].issuer_name &&
          pki::VerifyCrl(crl, chain_[i - 1].subject_public_key)) {
        out.push_back(&crl);
      }
    }
    return out;
  }

  bool Revocation() {
    for (std::size_t i = 1; i < chain_.size(); ++i) {
      for (const RevocationList* crl : ApplicableCrls(i)) {
        const auto* entry = crl->Find(chain_[i].serial);
        if (entry != nullptr && entry->revocation_time_s <= now_) {
          return Fail("revocation", ValidationStatus::kRevoked,
                      Describe(chain_[i]) + " is revoked (" +
                          std::string(pki::ReasonName(entry->reason)) + ")");
        }
      }
    }
    for (std::size_t i = 1; i < chain_.size(); ++i) {
      const auto crls = ApplicableCrls(i);
      if (crls.empty()) {
        return Fail("revocation", ValidationStatus::kStaleRevocationData,
                    "no revocation data from '" + chain_[i].issuer_name + "'");
      }
      const RevocationList* freshest = *std::max_element(
          crls.begin(), crls.end(),
          [](const RevocationList* a, const RevocationList* b) {
            return a->IsOlderThan(*b);
          });
      if (freshest->next_update_s < now_ - options_.staleness_limit_s) {
        return Fail("revocation", ValidationStatus::kStaleRevocationData,
                    "revocation data from '" + chain_[i].issuer_name +
                        "' is stale");
      }
    }
    return Pass("revocation");
  }

  bool Policy() {
    std::set<PolicyId> effective = chain_.back().policy_ids;
    if (ctx_.mapping_table) {
      if (!ctx_.publisher_key ||
          !pki::VerifyMappingTable(*ctx_.mapping_table, *ctx_.publisher_key)) {
        return Fail("policy", ValidationStatus::kPolicyViolation,
                    "policy mapping table signature does not verify");
      }
      effective = ApplyPolicyMapping(*ctx_.mapping_table, effective);
    }
    if (!ctx_.required_policies.empty()) {
      const bool overlap = std::any_of(
          effective.begin(), effective.end(),
          [&](const PolicyId& p) { return ctx_.required_policies.contains(p); });
      if (!overlap) {
        return Fail("policy", ValidationStatus::kPolicyViolation,
                    Describe(chain_.back()) +
                        " carries no policy acceptable to the relying party");
      }
    }
    return Pass("policy");
  }

  void Binding() {
    const Certificate& target = chain_.back();
    if (!target.orbital_binding || !options_.observed_target_position) return;
    const auto check = pki::CheckOrbitalBinding(
        *target.orbital_binding, *options_.observed_target_position, now_,
        options_.binding_tolerance_km);
    if (check.consistent) return;
    std::ostringstream msg;
    msg << "orbital binding of " << Describe(target) << " off by "
        << check.deviation_km << " km";
    if (options_.binding_fatal) {
      Fail("binding", ValidationStatus::kPolicyViolation, msg.str());
    } else {
      result_.warnings.push_back(msg.str());
    }
  }

  std::span<const Certificate> chain_;
  double now_;
  std::span<const RevocationList> crls_;
  const PolicyContext& ctx_;
  const ValidationOptions& options_;
  ValidationResult result_;
};

}  // namespace

std::string_view StatusName(ValidationStatus status) {
  switch (status) {
    case ValidationStatus::kValid: return "VALID";
    case ValidationStatus::kExpired: return "EXPIRED";
    case ValidationStatus::kRevoked: return "REVOKED";
    case ValidationStatus::kNoPath: return "NO_PATH";
    case ValidationStatus::kPolicyViolation: return "POLICY_VIOLATION";
    case ValidationStatus::kBadSignature: return "BAD_SIGNATURE";
    case ValidationStatus::kStaleRevocationData:
      return "STALE_REVOCATION_DATA";
  }
  return "NO_PATH";
}

ValidationStatus ParseStatus(std::string_view name) {
  for (auto s : {ValidationStatus::kValid, ValidationStatus::kExpired,
                 ValidationStatus::kRevoked, ValidationStatus::kNoPath,
                 ValidationStatus::kPolicyViolation,
                 ValidationStatus::kBadSignature,
                 ValidationStatus::kStaleRevocationData}) {
    if (StatusName(s) == name) return s;
  }
  throw Error(ErrorCode::kParse,
              "unknown validation status '" + std::string(name) + "'");
}

std::set<PolicyId> ApplyPolicyMapping(const PolicyMappingTable& table,
                                      const std::set<PolicyId>& policies) {
  std::set<PolicyId> out;
  for (const auto& p : policies) {
    auto it = table.entries.find(p);
    out.insert(it == table.entries.end() ? p : it->second);
  }
  return out;
}

ValidationResult ValidateChain(std::span<const Certificate> chain,
                               double now_s,
                               std::span<const RevocationList> crl_view,
                               const PolicyContext& ctx,
                               const ValidationOptions& options) {
  return ChainValidator(chain, now_s, crl_view, ctx, options).Run();
}

ValidationResult ValidateTarget(const TrustGraph& graph,
                                const Certificate& target,
                                const Certificate& anchor, double now_s,
                                std::span<const RevocationList> crl_view,
                                const PolicyContext& ctx,
                                const ValidationOptions& options,
                                int max_depth) {
  const auto chains = DiscoverPaths(graph, target, anchor, max_depth);
  if (chains.empty()) {
    ValidationResult none;
    none.status = ValidationStatus::kNoPath;
    none.checked_at_s = now_s;
    none.detail = "no certification path from '" + anchor.subject_name +
                  "' to '" + target.subject_name + "'";
    return none;
  }
  std::optional<ValidationResult> first;
  for (const auto& chain : chains) {
    ValidationResult r = ValidateChain(chain, now_s, crl_view, ctx, options);
    if (r.ok()) return r;
    if (!first) first = std::move(r);
  }
  return std::move(*first);
}

}  // namespace orbitpki::trust
