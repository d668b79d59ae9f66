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
#include <span>
#include <utility>

#include "effkit/linalg.hpp"

namespace effkit {

/// A Hermitian matrix A with 0 ≤ A ≤ I.
///
/// Construction checks Hermiticity and that the spectrum lies in
/// [−tol, 1 + tol]. Eigenvalues that drift outside [0, 1] by at most tol are
/// clamped back (the matrix is rebuilt from its clamped spectrum); anything
/// further out is rejected with InvalidArgument.
class Effect {
 public:
  explicit Effect(const ComplexMatrix& m, double tol = kDefaultTol);

  static Effect zero(std::size_t dim);
  static Effect identity(std::size_t dim);
  /// Skips validation. For callers that construct effects by a method that
  /// guarantees the invariant (spectral synthesis with λ ∈ [0, 1]).
  static Effect trusted(ComplexMatrix m, double tol = kDefaultTol);

  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return matrix_.dim(); }
  double tol() const { return tol_; }

 private:
  Effect(ComplexMatrix m, double tol, int) : matrix_(std::move(m)), tol_(tol) {}

  ComplexMatrix matrix_;
  double tol_ = kDefaultTol;
};

/// Hermitian idempotent, stored as a full matrix.
class Projection {
 public:
  explicit Projection(const ComplexMatrix& m, double tol = kDefaultTol);

  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return matrix_.dim(); }
  /// Rank from the trace; throws InvalidArgument if the trace is more than
  /// 0.01 away from an integer.
  std::size_t rank() const;
  Effect as_effect() const { return Effect::trusted(matrix_); }

 private:
  ComplexMatrix matrix_;
};

/// A B A.
Effect jordan_triple(const Effect& a, const Effect& b);

/// I − A.
Effect orthocomplement(const Effect& a);

/// λA + (1 − λ)B. Throws InvalidArgument unless λ ∈ [0, 1].
Effect convex_combine(double lambda, const Effect& a, const Effect& b);

/// A ⊕ B = A + B, defined only when A + B ≤ I. Throws NotSummable otherwise.
Effect partial_add(const Effect& a, const Effect& b, double tol = kDefaultTol);

/// A ≤ B in the Löwner order: the smallest eigenvalue of B − A is ≥ −tol.
bool leq(const ComplexMatrix& a, const ComplexMatrix& b, double tol = kDefaultTol);
inline bool leq(const Effect& a, const Effect& b, double tol = kDefaultTol) {
  return leq(a.matrix(), b.matrix(), tol);
}

/// True iff the spectrum of A lies within tol of {0, 1}, i.e. A is a
/// projection. Projections are exactly the extreme points of [0, I].
bool is_extreme(const Effect& a, double tol = kDefaultTol);

/// True iff M is Hermitian and ‖M² − M‖_F ≤ tol.
bool is_projection(const ComplexMatrix& m, double tol = kDefaultTol);

/// (A⁺, A⁻) = ((|A| + A)/2, (|A| − A)/2).
std::pair<ComplexMatrix, ComplexMatrix> positive_negative_parts(const ComplexMatrix& a,
                                                                double tol = kDefaultTol);

/// (Re M, Im M) = ((M + M*)/2, (M − M*)/(2i)).
std::pair<ComplexMatrix, ComplexMatrix> real_imag_parts(const ComplexMatrix& m);

/// x x* for x renormalized to unit length. Throws InvalidArgument for a zero
/// vector.
Projection rank_one_projection(std::span<const Complex> x);

/// ‖PQ‖_F ≤ tol.
bool are_orthogonal(const Projection& p, const Projection& q, double tol = kDefaultTol);

// ---------------------------------------------------------------------------
// Sampling

Effect random_effect(std::size_t dim, std::uint64_t seed);
Effect random_effect(std::size_t dim, Rng& rng);

/// V diag(1,…,1,0,…,0) V* with V Haar and the given rank.
Projection random_projection(std::size_t dim, std::size_t rank, Rng& rng);

/// Rank uniform on 1..dim−1 (dim ≥ 2).
Projection random_nontrivial_projection(std::size_t dim, Rng& rng);

/// Two projections built on one Haar frame: P of rank r ≤ Q of rank r + s.
std::pair<Projection, Projection> random_nested_projections(std::size_t dim, Rng& rng);

/// Two orthogonal projections built on one Haar frame, ranks ≥ 1.
std::pair<Projection, Projection> random_orthogonal_projections(std::size_t dim, Rng& rng);

}  // namespace effkit
