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

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "effkit/effects.hpp"
#include "effkit/extension.hpp"
#include "effkit/symmetry.hpp"

namespace effkit {

/// A failing input found by one of the probes.
struct Witness {
  std::string property;
  std::vector<ComplexMatrix> inputs;
  double deviation = 0.0;
};

/// Outcome of sampling the projection-level consequences of an automorphism:
/// projections map to projections, the order and orthogonality among
/// projections are kept, and φ(P) + φ(I − P) = I.
struct ProbeReport {
  bool projections_preserved = true;
  bool order_preserved = true;
  bool orthogonality_preserved = true;
  bool orthocomplement_preserved = true;
  std::vector<Witness> witnesses;  // at most one per failing property
  std::size_t samples_used = 0;

  bool all_preserved() const {
    return projections_preserved && order_preserved && orthogonality_preserved &&
           orthocomplement_preserved;
  }
};

/// Always checks P = I and P = 0 first, then `trials` rounds of random
/// projections (rank uniform on 1..dim−1, Haar frame).
ProbeReport preservation_probe(const EffectMapOracle& phi, std::size_t trials,
                               double tol = kDefaultTol, std::uint64_t seed = 0);

// ---------------------------------------------------------------------------

struct UnitaryReconstruction {
  ComplexMatrix u;  // gauge-normalized
  SymmetryKind kind = SymmetryKind::unitary;
  double residual = 0.0;  // max over the verification projections
};

/// Thresholds certifying that a matrix is a rank-one projection.
inline constexpr double kRankOneTol = 1e-6;
inline constexpr std::size_t kReconstructionChecks = 20;

/// Unit vector spanning the range of a rank-one projection: the eigenvector
/// of the largest eigenvalue, which must lie within 1e-6 of 1 while the rest
/// stay below 1e-6 in modulus. Throws ReconstructionError otherwise.
ComplexVector rank_one_vector(const ComplexMatrix& p);

/// Recovers U with action(P) = U P U* (unitary) or U conj(P) U* (antiunitary)
/// from the images of P_{e_j}, P_{(e_1+e_j)/√2} and P_{(e_1+ie_2)/√2}, then
/// checks 20 random rank-one projections against tol. Throws
/// ReconstructionError on any failed certification and InvalidArgument for
/// dim < 2.
UnitaryReconstruction reconstruct_unitary_from_projection_action(
    const std::function<ComplexMatrix(const ComplexMatrix&)>& action, std::size_t dim, double tol,
    std::uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Scaling function f with φ(λP) = f(λ) φ(P) on a rank-one P

struct ScalingSample {
  double lambda = 0.0;
  double f = 0.0;
  bool valid = true;  // ‖φ(λP) − f(λ)φ(P)‖_F ≤ tol
  double proportionality_error = 0.0;
};

struct ScalingSamples {
  ComplexMatrix projection;
  std::vector<ScalingSample> samples;
};

/// k/(n−1) for k = 0..n−1; the default 17 points give the grid {k/16}.
std::vector<double> scaling_grid(std::size_t points = 17);

/// f(λ) = trace(φ(λP) φ(P)) / trace(φ(P)²). Throws ReconstructionError when
/// φ(P) is not rank one.
ScalingSamples extract_scaling_function(const EffectMapOracle& phi, const Projection& p,
                                        std::span<const double> lambdas,
                                        double tol = kDefaultTol);

struct ScalingCheck {
  bool identity = false;
  double max_deviation = 0.0;  // max |f(λ) − λ|
  double worst_lambda = 0.0;
  /// max |f(λ²) − f(λ)²| over grid points whose square is on the grid.
  double multiplicative_deviation = 0.0;
  /// max |f(λ²) + f(1 − λ²) − 1| over the same points.
  double orthoadditive_deviation = 0.0;
  std::size_t invalid_samples = 0;
};

/// identity is true iff every sample is valid and max |f(λ) − λ| ≤ tol.
ScalingCheck check_scaling_identity(const ScalingSamples& s, double tol = kDefaultTol);

// ---------------------------------------------------------------------------

/// max ‖φ(A) − apply(d, A)‖_F over sampled A: random effects for the
/// effect-interval families, G + G* with G Ginibre for triple_hermitian.
double verify_descriptor(const EffectMapOracle& phi, const SymmetryDescriptor& d,
                         std::size_t trials, Family family = Family::affine,
                         std::uint64_t seed = 0);

struct RecoverOptions {
  double tol = 1e-8;  // acceptance residual
  double probe_tol = 1e-9;
  std::size_t trials = 64;
  std::uint64_t seed = 0;
  std::size_t scaling_points = 17;
};

enum class Verdict { canonical, rejected };
std::string_view to_string(Verdict v);

struct RecoveryReport {
  Verdict verdict = Verdict::rejected;
  Family family = Family::affine;
  std::string reason;  // nonempty iff rejected
  std::optional<SymmetryDescriptor> descriptor;
  std::optional<double> max_residual;
  ProbeReport probe;
  std::optional<ScalingSamples> scaling;
  std::optional<ScalingCheck> scaling_check;
  std::optional<Witness> witness;  // the input behind a rejection, when one exists

  bool canonical() const { return verdict == Verdict::canonical; }
};

/// A ↦ Φ(A) or A ↦ Φ(I − A). Accepts dim ≥ 2.
RecoveryReport recover_affine(const EffectMapOracle& phi, const RecoverOptions& opts = {});

/// Jordan-triple automorphisms of [0, I]. Throws InvalidArgument for dim < 3.
RecoveryReport recover_triple(const EffectMapOracle& phi, const RecoverOptions& opts = {});

/// Jordan-triple automorphisms of the Hermitian matrices, A ↦ ±Φ(A). Throws
/// InvalidArgument for dim < 3.
RecoveryReport recover_triple_hermitian(const EffectMapOracle& phi,
                                        const RecoverOptions& opts = {});

/// Dispatches on family.
RecoveryReport recover(const EffectMapOracle& phi, Family family, const RecoverOptions& opts = {});

inline constexpr const char* kSignRejection = "φ(I) ∉ {I, −I}";

}  // namespace effkit
