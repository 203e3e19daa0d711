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

#ifndef ORBITPKI_VERSION_H_
#define ORBITPKI_VERSION_H_

#include <string_view>

namespace orbitpki {

// Library version, e.g. "0.3.0".
std::string_view Version();

}  // namespace orbitpki

#endif  // ORBITPKI_VERSION_H_
