// Copyright 2026 The effkit Authors
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

// JSON forms used by the command-line tool.
//
//   matrix      {"dim": n, "data": [[[re, im], ...], ...]}   row-major
//   descriptor  {"kind": "unitary"|"antiunitary", "u": <matrix>,
//                "complement": bool, "sign": 1|-1}
//   affine map  {"dim": n, "linear": [[real, ...], ...], "constant": <matrix>}
//               linear is n²×n² in hermitian_basis order
//
// Parsers throw effkit::FormatError on anything that does not match.

#pragma once

#include <variant>

#include "effkit/recover.hpp"
#include "effkit/symmetry.hpp"
#include "json.hpp"

namespace effkit::io {

using Json = nlohmann::json;

Json to_json(const ComplexMatrix& m);
Json to_json(const SymmetryDescriptor& d);
Json to_json(const AffineMapRep& rep);
Json to_json(const ProbeReport& probe);
Json to_json(const ScalingSamples& samples);
Json to_json(const ScalingCheck& check);
Json to_json(const Witness& w);
Json to_json(const RecoveryReport& r);

ComplexMatrix matrix_from_json(const Json& j);
SymmetryDescriptor descriptor_from_json(const Json& j);
AffineMapRep affine_from_json(const Json& j);

/// A map file holds either a descriptor or an affine map; told apart by the
/// presence of "kind" or "linear".
using MapFile = std::variant<SymmetryDescriptor, AffineMapRep>;
MapFile map_from_json(const Json& j);
EffectMapOracle oracle_from_map(const MapFile& map);
std::size_t map_dim(const MapFile& map);

}  // namespace effkit::io
