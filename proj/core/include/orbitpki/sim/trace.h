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

#ifndef ORBITPKI_SIM_TRACE_H_
#define ORBITPKI_SIM_TRACE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbitpki/pki/bytes.h"
#include "orbitpki/sim/time.h"

namespace orbitpki::sim {

// Kinds written by the engine:
//   timer, window-open, transmit, message-delivery, relay-arrival,
//   relay-service-start, relay-service-end, drop, stalled.
struct TraceRecord {
  SimTime time = 0;
  std::uint64_t seq = 0;  // sequence number of the event being processed
  std::string kind;
  std::string from;
  std::string to;
  std::optional<std::uint64_t> request_id;
  std::string note;
};

// One JSON object per line. Times are printed with nanosecond precision so
// the output is stable across platforms.
std::string ToNdjsonLine(const TraceRecord& record);
std::string ToNdjson(const std::vector<TraceRecord>& records);
TraceRecord ParseNdjsonLine(const std::string& line);

pki::Digest TraceDigest(const std::vector<TraceRecord>& records);

}  // namespace orbitpki::sim

#endif  // ORBITPKI_SIM_TRACE_H_
