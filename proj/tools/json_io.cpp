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

#include "json_io.hpp"

#include <string>

#include "effkit/error.hpp"

namespace effkit::io {

namespace {

std::size_t read_dim(const Json& j) {
  const Json& d = j.at("dim");
  if (!d.is_number_integer() || d.get<long long>() <= 0)
    throw FormatError("\"dim\" must be a positive integer");
  return d.get<std::size_t>();
}

double read_number(const Json& j, const char* what) {
  if (!j.is_number()) throw FormatError(std::string(what) + " must be a number");
  return j.get<double>();
}

template <typename F>
auto with_context(const char* what, F&& f) {
  try {
    return f();
  } catch (const FormatError&) {
    throw;
  } catch (const Json::exception& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  } catch (const Error& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return Json{{"dim", m.dim()}, {"data", std::move(rows)}};
}

Json to_json(const SymmetryDescriptor& d) {
  return Json{{"kind", to_string(d.kind)},
              {"u", to_json(d.u)},
              {"complement", d.complement},
              {"sign", d.sign}};
}

Json to_json(const AffineMapRep& rep) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < rep.linear.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < rep.linear.cols(); ++c) row.push_back(rep.linear(r, c));
    rows.push_back(std::move(row));
  }
  return Json{{"dim", rep.dim}, {"linear", std::move(rows)}, {"constant", to_json(rep.constant)}};
}

Json to_json(const Witness& w) {
  Json inputs = Json::array();
  for (const auto& m : w.inputs) inputs.push_back(to_json(m));
  return Json{{"property", w.property}, {"deviation", w.deviation}, {"inputs", std::move(inputs)}};
}

Json to_json(const ProbeReport& probe) {
  Json witnesses = Json::array();
  for (const auto& w : probe.witnesses) witnesses.push_back(to_json(w));
  return Json{{"projections_preserved", probe.projections_preserved},
              {"order_preserved", probe.order_preserved},
              {"orthogonality_preserved", probe.orthogonality_preserved},
              {"orthocomplement_preserved", probe.orthocomplement_preserved},
              {"samples_used", probe.samples_used},
              {"witnesses", std::move(witnesses)}};
}

Json to_json(const ScalingSamples& samples) {
  Json pairs = Json::array();
  for (const auto& s : samples.samples)
    pairs.push_back(Json{{"lambda", s.lambda},
                         {"f", s.f},
                         {"valid", s.valid},
                         {"proportionality_error", s.proportionality_error}});
  return Json{{"projection", to_json(samples.projection)}, {"pairs", std::move(pairs)}};
}

Json to_json(const ScalingCheck& check) {
  return Json{{"identity", check.identity},
              {"max_deviation", check.max_deviation},
              {"worst_lambda", check.worst_lambda},
              {"multiplicative_deviation", check.multiplicative_deviation},
              {"orthoadditive_deviation", check.orthoadditive_deviation},
              {"invalid_samples", check.invalid_samples}};
}

Json to_json(const RecoveryReport& r) {
  Json j{{"verdict", to_string(r.verdict)},
         {"family", to_string(r.family)},
         {"reason", r.reason},
         {"probe", to_json(r.probe)}};
  j["descriptor"] = r.descriptor ? to_json(*r.descriptor) : Json(nullptr);
  j["max_residual"] = r.max_residual ? Json(*r.max_residual) : Json(nullptr);
  j["scaling"] = r.scaling ? to_json(*r.scaling) : Json(nullptr);
  j["scaling_check"] = r.scaling_check ? to_json(*r.scaling_check) : Json(nullptr);
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  return j;
}

ComplexMatrix matrix_from_json(const Json& j) {
  return with_context("matrix", [&] {
    if (!j.is_object()) throw FormatError("matrix must be an object");
    const std::size_t n = read_dim(j);
    const Json& rows = j.at("data");
    if (!rows.is_array() || rows.size() != n) throw FormatError("\"data\" must have dim rows");
    std::vector<Complex> entries;
    entries.reserve(n * n);
    for (const Json& row : rows) {
      if (!row.is_array() || row.size() != n) throw FormatError("each row must have dim entries");
      for (const Json& z : row) {
        if (!z.is_array() || z.size() != 2) throw FormatError("entries must be [re, im] pairs");
        entries.emplace_back(read_number(z[0], "re"), read_number(z[1], "im"));
      }
    }
    return ComplexMatrix(n, std::move(entries));
  });
}

SymmetryDescriptor descriptor_from_json(const Json& j) {
  return with_context("descriptor", [&] {
    if (!j.is_object()) throw FormatError("descriptor must be an object");
    const Json& kind = j.at("kind");
    if (!kind.is_string()) throw FormatError("\"kind\" must be a string");
    const Json& complement = j.at("complement");
    if (!complement.is_boolean()) throw FormatError("\"complement\" must be a boolean");
    const Json& sign = j.at("sign");
    if (!sign.is_number_integer()) throw FormatError("\"sign\" must be 1 or -1");
    return SymmetryDescriptor::make(parse_kind(kind.get<std::string>()),
                                    matrix_from_json(j.at("u")), complement.get<bool>(),
                                    sign.get<int>());
  });
}

AffineMapRep affine_from_json(const Json& j) {
  return with_context("affine map", [&] {
    if (!j.is_object()) throw FormatError("affine map must be an object");
    const std::size_t n = read_dim(j);
    const std::size_t m = n * n;
    const Json& rows = j.at("linear");
    if (!rows.is_array() || rows.size() != m) throw FormatError("\"linear\" must have dim² rows");
    std::vector<double> data;
    data.reserve(m * m);
    for (const Json& row : rows) {
      if (!row.is_array() || row.size() != m) throw FormatError("\"linear\" rows must have dim² entries");
      for (const Json& x : row) data.push_back(read_number(x, "linear entry"));
    }
    return AffineMapRep(n, RealMatrix(m, m, std::move(data)), matrix_from_json(j.at("constant")));
  });
}

MapFile map_from_json(const Json& j) {
  if (j.is_object() && j.contains("kind")) return descriptor_from_json(j);
  if (j.is_object() && j.contains("linear")) return affine_from_json(j);
  throw FormatError("map file is neither a descriptor nor an affine map");
}

EffectMapOracle oracle_from_map(const MapFile& map) {
  return std::visit(
      [](const auto& m) -> EffectMapOracle {
        if constexpr (std::is_same_v<std::decay_t<decltype(m)>, SymmetryDescriptor>)
          return EffectMapOracle::from_descriptor(m);
        else
          return EffectMapOracle::from_affine_rep(m);
      },
      map);
}

std::size_t map_dim(const MapFile& map) {
  return std::visit(
      [](const auto& m) -> std::size_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(m)>, SymmetryDescriptor>)
          return m.dim();
        else
          return m.dim;
      },
      map);
}

}  // namespace effkit::io
