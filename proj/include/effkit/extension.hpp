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

#include <array>
#include <cstdint>
#include <functional>
#include <optional>

#include "effkit/effects.hpp"
#include "effkit/linalg.hpp"
#include "effkit/symmetry.hpp"

namespace effkit {

/// A deterministic black-box map on dim×dim Hermitian matrices.
///
/// Nothing about the map (affinity, bijectivity, ranges) is assumed; the
/// probes in this module and in recover.hpp sample it. Evaluation failures
/// and malformed outputs surface as OracleError.
class EffectMapOracle {
 public:
  using Evaluator = std::function<ComplexMatrix(const ComplexMatrix&)>;

  EffectMapOracle(std::size_t dim, Evaluator evaluator);

  static EffectMapOracle from_descriptor(const SymmetryDescriptor& d);
  static EffectMapOracle from_affine_rep(AffineMapRep rep);

  std::size_t dim() const { return dim_; }
  ComplexMatrix operator()(const ComplexMatrix& a) const;

 private:
  std::size_t dim_;
  Evaluator evaluator_;
};

/// A ↦ I − φ(A).
EffectMapOracle complemented(const EffectMapOracle& phi);
/// A ↦ s·φ(A).
EffectMapOracle scaled(const EffectMapOracle& phi, double s);

struct AffinityWitness {
  double lambda = 0.0;
  ComplexMatrix a;
  ComplexMatrix b;
  double deviation = 0.0;
};

struct AffinityResult {
  bool affine = true;
  std::size_t trials_run = 0;
  double max_deviation = 0.0;
  std::optional<AffinityWitness> witness;  // first violating triple
};

inline constexpr std::size_t kDefaultAffinityTrials = 64;

/// Checks φ(λA + (1−λ)B) = λφ(A) + (1−λ)φ(B) on sampled triples. The first
/// trial is the fixed triple (1/2, P, I − P) with P the first basis
/// projection; the rest draw λ uniform on [0, 1] and A, B from random_effect.
/// The deviation is measured in Frobenius norm against
/// tol · max(1, ‖λφ(A) + (1−λ)φ(B)‖_F).
AffinityResult is_affine(const EffectMapOracle& phi, std::size_t trials = kDefaultAffinityTrials,
                         double tol = kDefaultTol, std::uint64_t seed = 0);

/// The linear extension of an affine map φ on [0, I] with φ(0) = 0 to all
/// complex matrices:
///   Φ₁(A) = ‖A‖ φ(A/‖A‖) for A ≥ 0 (0 when ‖A‖ < 1e-12),
///   Φ₂(H) = Φ₁(H⁺) − Φ₁(H⁻) for Hermitian H,
///   Φ(M)  = Φ₂(Re M) + i Φ₂(Im M).
/// ‖·‖ is the operator norm, so A/‖A‖ stays inside [0, I].
///
/// The constructor checks ‖φ(0)‖_F ≤ tol and runs is_affine; either failure
/// throws InvalidArgument. Linearity of the result is a property to test.
class LinearExtension {
 public:
  explicit LinearExtension(EffectMapOracle phi, double tol = kDefaultTol,
                           std::size_t affinity_trials = kDefaultAffinityTrials,
                           std::uint64_t seed = 0);

  ComplexMatrix operator()(const ComplexMatrix& m) const;
  /// Φ₁, for positive semidefinite input.
  ComplexMatrix on_positive(const ComplexMatrix& a) const;
  /// Φ₂, for Hermitian input.
  ComplexMatrix on_hermitian(const ComplexMatrix& h) const;

  const EffectMapOracle& oracle() const { return phi_; }

 private:
  EffectMapOracle phi_;
  double tol_;
};

inline constexpr double kZeroNormCutoff = 1e-12;

/// Φ(M) for a single matrix. Builds (and probes) a fresh LinearExtension.
ComplexMatrix extend_linear(const EffectMapOracle& phi, const ComplexMatrix& m,
                            double tol = kDefaultTol);

/// max ‖Ψ(A)‖ (operator norm) over I and `trials` random effects, where Ψ is
/// the linear extension of ψ(A) = φ(A) − φ(0). At most 2 whenever φ maps
/// [0, I] into itself.
double boundedness_check(const EffectMapOracle& phi, std::size_t trials, std::uint64_t seed = 0,
                         double tol = kDefaultTol);

/// M = A₁ − A₂ + i(A₃ − A₄) with every Aₖ an effect, for ‖M‖ ≤ 1 + tol.
/// A₁, A₂ are the positive and negative parts of Re M; A₃, A₄ those of Im M.
std::array<Effect, 4> unit_ball_decomposition(const ComplexMatrix& m, double tol = kDefaultTol);

}  // namespace effkit
