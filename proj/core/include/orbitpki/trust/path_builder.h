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

#ifndef ORBITPKI_TRUST_PATH_BUILDER_H_
#define ORBITPKI_TRUST_PATH_BUILDER_H_

#include <vector>

#include "orbitpki/trust/trust_graph.h"

namespace orbitpki::trust {

inline constexpr int kDefaultMaxDepth = 6;

// Anchor first, target last.
using Chain = std::vector<Certificate>;

// Every simple chain from `anchor` to `target` with at most `max_depth`
// certificates. A chain is simple when no subject name repeats among the
// anchor and the intermediates, and no intermediate is self-issued. The
// target need not be stored in the graph.
//
// Chains come back in ascending length; equal lengths are ordered by the
// lexicographic sequence of (issuer_name, serial) along the chain.
//
// Throws Error(kAnchor) if `anchor` is not one of graph.anchors(), and
// Error(kDomain) if max_depth < 1.
std::vector<Chain> DiscoverPaths(const TrustGraph& graph,
                                 const Certificate& target,
                                 const Certificate& anchor,
                                 int max_depth = kDefaultMaxDepth);

// Ordering used by DiscoverPaths.
bool ChainLess(const Chain& a, const Chain& b);

}  // namespace orbitpki::trust

#endif  // ORBITPKI_TRUST_PATH_BUILDER_H_
