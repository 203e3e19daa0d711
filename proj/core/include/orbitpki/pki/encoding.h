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

#ifndef ORBITPKI_PKI_ENCODING_H_
#define ORBITPKI_PKI_ENCODING_H_

#include "orbitpki/pki/bytes.h"
#include "orbitpki/pki/certificate.h"

namespace orbitpki::pki {

// Deterministic, injective encoding of every certificate field except the
// signature. This is the message that issuers sign.
// Throws Error(kEncoding) when a mandatory field is empty.
Bytes CanonicalEncode(const Certificate& cert);

// Body followed by the signature.
Bytes EncodeCertificate(const Certificate& cert);
// Inverse of EncodeCertificate. Throws Error(kEncoding) on malformed input.
Certificate DecodeCertificate(ByteView encoded);

Bytes CanonicalEncode(const RevocationList& crl);
Bytes CanonicalEncode(const PolicyMappingTable& table);

}  // namespace orbitpki::pki

#endif  // ORBITPKI_PKI_ENCODING_H_
