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

#include "orbitpki/sim/time.h"

#include <charconv>
#include <cstdio>

#include "orbitpki/error.h"

namespace orbitpki::sim {

std::string FormatSeconds(SimTime t) {
  const char* sign = t < 0 ? "-" : "";
  const auto abs = static_cast<unsigned long long>(t < 0 ? -t : t);
  const auto ns = static_cast<unsigned long long>(kNsPerSecond);
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%s%llu.%09llu", sign, abs / ns, abs % ns);
  return buf;
}

SimTime ParseSeconds(std::string_view text) {
  const auto fail = [&] {
    return Error(ErrorCode::kParse, "bad time value '" + std::string(text) + "'");
  };
  const bool negative = text.starts_with('-');
  if (negative) text.remove_prefix(1);
  const auto dot = text.find('.');
  const std::string_view whole = text.substr(0, dot);
  std::string_view frac =
      dot == std::string_view::npos ? std::string_view() : text.substr(dot + 1);
  if (whole.empty() || frac.size() > 9) throw fail();
  SimTime w = 0;
  auto [p1, e1] = std::from_chars(whole.data(), whole.data() + whole.size(), w);
  if (e1 != std::errc() || p1 != whole.data() + whole.size()) throw fail();
  SimTime f = 0;
  if (!frac.empty()) {
    auto [p2, e2] = std::from_chars(frac.data(), frac.data() + frac.size(), f);
    if (e2 != std::errc() || p2 != frac.data() + frac.size()) throw fail();
    for (std::size_t i = frac.size(); i < 9; ++i) f *= 10;
  }
  const SimTime t = w * kNsPerSecond + f;
  return negative ? -t : t;
}

}  // namespace orbitpki::sim
