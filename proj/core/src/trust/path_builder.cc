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

#include "orbitpki/trust/path_builder.h"

#include <algorithm>
#include <set>
#include <string>

#include "orbitpki/error.h"

namespace orbitpki::trust {

namespace {

class PathSearch {
 public:
  PathSearch(const TrustGraph& graph, const Certificate& target,
             std::size_t max_depth)
      : graph_(graph), target_(target), max_depth_(max_depth) {}

  std::vector<Chain> Run(const Certificate& anchor) {
    chain_.push_back(anchor);
    subjects_.insert(anchor.subject_name);
    Extend();
    return std::move(found_);
  }

 private:
  void Extend() {
    const Certificate& last = chain_.back();
    if (target_.issuer_name == last.subject_name &&
        chain_.size() + 1 <= max_depth_) {
      Chain complete = chain_;
      complete.push_back(target_);
      found_.push_back(std::move(complete));
    }
    // Room for one more intermediate plus the target.
    if (chain_.size() + 2 > max_depth_) return;
    for (const Certificate* next : graph_.IssuedBy(last.subject_name)) {
      if (next->IsSelfIssued() || next->key() == target_.key() ||
          subjects_.contains(next->subject_name)) {
        continue;
      }
      chain_.push_back(*next);
      subjects_.insert(next->subject_name);
      Extend();
      subjects_.erase(next->subject_name);
      chain_.pop_back();
    }
  }

  const TrustGraph& graph_;
  const Certificate& target_;
  const std::size_t max_depth_;
  Chain chain_;
  std::set<std::string> subjects_;
  std::vector<Chain> found_;
};

}  // namespace

bool ChainLess(const Chain& a, const Chain& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [](const Certificate& x, const Certificate& y) {
        return x.key() < y.key();
      });
}

std::vector<Chain> DiscoverPaths(const TrustGraph& graph,
                                 const Certificate& target,
                                 const Certificate& anchor, int max_depth) {
  if (max_depth < 1) {
    throw Error(ErrorCode::kDomain, "max_depth must be at least 1");
  }
  if (!graph.IsAnchor(anchor)) {
    throw Error(ErrorCode::kAnchor,
                "'" + anchor.subject_name + "' is not a trust anchor");
  }
  if (target == anchor) return {Chain{anchor}};

  std::vector<Chain> chains =
      PathSearch(graph, target, static_cast<std::size_t>(max_depth))
          .Run(anchor);
  std::sort(chains.begin(), chains.end(), ChainLess);
  return chains;
}

}  // namespace orbitpki::trust
