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

#include "orbitpki/sim/trace.h"


#include <nlohmann/json.hpp>

#include "orbitpki/error.h"

namespace orbitpki::sim {

std::string ToNdjsonLine(const TraceRecord& r) {
  // Keys are emitted in a fixed order; nlohmann only escapes the strings.
  std::string out = "{\"time_s\":" + FormatSeconds(r.time) +
                    ",\"seq\":" + std::to_string(r.seq) +
                    ",\"kind\":" + nlohmann::json(r.kind).dump() +
                    ",\"from\":" + nlohmann::json(r.from).dump() +
                    ",\"to\":" + nlohmann::json(r.to).dump() + ",\"request_id\":";
  out += r.request_id ? std::to_string(*r.request_id) : "null";
  out += ",\"note\":" + nlohmann::json(r.note).dump() + "}";
  return out;
}

std::string ToNdjson(const std::vector<TraceRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    out += ToNdjsonLine(r);
    out += '\n';
  }
  return out;
}

TraceRecord ParseNdjsonLine(const std::string& line) {
  try {
    const auto j = nlohmann::json::parse(line);
    TraceRecord r;
    // Parse the time from the raw text to keep nanosecond precision.
    const auto start = line.find("\"time_s\":") + 9;
    r.time = ParseSeconds(line.substr(start, line.find(',', start) - start));
    r.seq = j.at("seq").get<std::uint64_t>();
    r.kind = j.at("kind").get<std::string>();
    r.from = j.at("from").get<std::string>();
    r.to = j.at("to").get<std::string>();
    if (!j.at("request_id").is_null()) {
      r.request_id = j.at("request_id").get<std::uint64_t>();
    }
    r.note = j.at("note").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("bad trace line: ") + e.what());
  }
}

pki::Digest TraceDigest(const std::vector<TraceRecord>& records) {
  const std::string text = ToNdjson(records);
  return pki::Blake2b(pki::AsBytes(text));
}

}  // namespace orbitpki::sim
