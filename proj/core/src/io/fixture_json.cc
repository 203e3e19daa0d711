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

#include "orbitpki/io/fixture_json.h"

#include <sstream>

#include "orbitpki/error.h"
#include "orbitpki/io/scenario_json.h"
#include "orbitpki/pki/json.h"

namespace orbitpki::io {

namespace {

using nlohmann::json;

template <typename T>
void ReadArray(const json& doc, const std::string& key, std::vector<T>& out,
               std::vector<std::string>& issues) {
  const auto it = doc.find(key);
  if (it == doc.end()) return;
  if (!it->is_array()) {
    issues.push_back(key + ": expected an array");
    return;
  }
  for (std::size_t i = 0; i < it->size(); ++i) {
    try {
      out.push_back((*it)[i].get<T>());
    } catch (const std::exception& e) {
      issues.push_back(key + "[" + std::to_string(i) + "]: " + e.what());
    }
  }
}

const pki::Certificate* Highest(const std::vector<pki::Certificate>& certs,
                                std::string_view subject) {
  const pki::Certificate* best = nullptr;
  for (const auto& c : certs) {
    if (c.subject_name == subject && (best == nullptr || c.serial > best->serial)) {
      best = &c;
    }
  }
  return best;
}

std::string Describe(const pki::Certificate& c) {
  return c.subject_name + " <- " + c.issuer_name + " #" + std::to_string(c.serial);
}

}  // namespace

const pki::Certificate& TrustFixture::FindBySubject(std::string_view subject) const {
  if (const auto* c = Highest(certificates, subject)) return *c;
  if (const auto* c = Highest(anchors, subject)) return *c;
  throw Error(ErrorCode::kNotFound,
              "no certificate for subject '" + std::string(subject) + "'");
}

const pki::Certificate& TrustFixture::FindAnchor(std::string_view subject) const {
  if (const auto* c = Highest(anchors, subject)) return *c;
  throw Error(ErrorCode::kAnchor,
              "no trust anchor named '" + std::string(subject) + "'");
}

trust::PolicyContext TrustFixture::ContextFor(const pki::Certificate& anchor) const {
  trust::PolicyContext ctx;
  ctx.required_policies = required_policies;
  for (const auto& t : mapping_tables) {
    if (t.publisher != anchor.subject_name) continue;
    if (!ctx.mapping_table || ctx.mapping_table->version < t.version) {
      ctx.mapping_table = t;
      ctx.publisher_key = anchor.subject_public_key;
    }
  }
  return ctx;
}

TrustFixture ParseFixture(std::string_view text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, source + ": " + e.what());
  }
  std::vector<std::string> issues;
  TrustFixture f;
  if (!doc.is_object()) {
    issues.push_back("expected an object");
  } else {
    for (const auto& [key, value] : doc.items()) {
      if (key != "anchors" && key != "certificates" && key != "crls" &&
          key != "mapping_tables" && key != "required_policies") {
        issues.push_back(key + ": unknown field");
      }
    }
    ReadArray(doc, "anchors", f.anchors, issues);
    ReadArray(doc, "certificates", f.certificates, issues);
    ReadArray(doc, "crls", f.crls, issues);
    ReadArray(doc, "mapping_tables", f.mapping_tables, issues);
    std::vector<std::string> policies;
    ReadArray(doc, "required_policies", policies, issues);
    f.required_policies.insert(policies.begin(), policies.end());
    if (f.anchors.empty()) issues.push_back("anchors: at least one is required");
  }
  if (!issues.empty()) {
    std::string msg = source + ": " + std::to_string(issues.size()) + " problem(s):";
    for (const auto& issue : issues) msg += "\n  - " + issue;
    throw Error(ErrorCode::kConfiguration, msg);
  }
  return f;
}

TrustFixture LoadFixture(const std::filesystem::path& path) {
  return ParseFixture(ReadFile(path), path.string());
}

nlohmann::json FixtureToJson(const TrustFixture& f) {
  return {{"anchors", f.anchors},
          {"certificates", f.certificates},
          {"crls", f.crls},
          {"mapping_tables", f.mapping_tables},
          {"required_policies", f.required_policies}};
}

nlohmann::json ResultToJson(const trust::ValidationResult& r) {
  json path = json::array();
  for (const auto& c : r.path) path.push_back(Describe(c));
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return {{"status", trust::StatusName(r.status)},
          {"checked_at_s", r.checked_at_s},
          {"path_length", r.path.size()},
          {"path", path},
          {"checks", checks},
          {"detail", r.detail},
          {"warnings", r.warnings}};
}

std::string ResultToText(const trust::ValidationResult& r) {
  std::ostringstream out;
  out << "status: " << trust::StatusName(r.status) << "\n";
  out << "checked_at_s: " << r.checked_at_s << "\n";
  out << "path (" << r.path.size() << "):\n";
  for (const auto& c : r.path) out << "  " << Describe(c) << "\n";
  out << "checks:\n";
  for (const auto& c : r.checks) {
    out << "  " << (c.passed ? "pass " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
  for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  if (!r.detail.empty()) out << "detail: " << r.detail << "\n";
  return out.str();
}

}  // namespace orbitpki::io
