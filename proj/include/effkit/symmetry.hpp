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
#include <string_view>
#include <vector>

#include "effkit/linalg.hpp"

namespace effkit {

enum class SymmetryKind { unitary, antiunitary };

/// Which canonical family a map is classified against.
///   affine            A ↦ Φ(A) or A ↦ Φ(I − A) on [0, I]
///   triple_effects    A ↦ Φ(A) on [0, I], Jordan-triple multiplicative
///   triple_hermitian  A ↦ ±Φ(A) on all Hermitian matrices
/// where Φ(A) = U A U* or U conj(A) U*.
enum class Family { affine, triple_effects, triple_hermitian };

std::string_view to_string(SymmetryKind kind);
std::string_view to_string(Family family);
/// Throws InvalidArgument on an unknown name.
SymmetryKind parse_kind(std::string_view name);
Family parse_family(std::string_view name);

/// Smallest dimension each family is defined for (2 for affine, 3 otherwise).
std::size_t min_dim(Family family);

/// A canonical automorphism. Antiunitaries are stored as U∘K with K entrywise
/// conjugation in the standard basis, so both kinds carry one matrix.
///
/// make() checks unitarity and normalizes the global phase: the first entry
/// of U's first column with modulus above 1e-8 is made real and positive.
/// complement and sign = −1 are mutually exclusive.
struct SymmetryDescriptor {
  SymmetryKind kind = SymmetryKind::unitary;
  ComplexMatrix u;
  bool complement = false;
  int sign = 1;

  static SymmetryDescriptor make(SymmetryKind kind, const ComplexMatrix& u, bool complement = false,
                                 int sign = 1);
  static SymmetryDescriptor identity(std::size_t dim);

  std::size_t dim() const { return u.dim(); }
  /// Whether the descriptor is a legal canonical form for the family.
  bool fits(Family family) const;
};

bool operator==(const SymmetryDescriptor& a, const SymmetryDescriptor& b);

inline constexpr double kGaugeThreshold = 1e-8;

/// Multiplies U by the phase that makes its first significant first-column
/// entry real and positive.
ComplexMatrix gauge_normalize(const ComplexMatrix& u);

/// A ↦ U A U* or U conj(A) U*, then complement and sign.
ComplexMatrix apply(const SymmetryDescriptor& d, const ComplexMatrix& a);

/// d1 ∘ d2. Throws InvalidArgument if one descriptor uses the complement and
/// the other a negative sign; DimensionMismatch on size mismatch.
SymmetryDescriptor compose(const SymmetryDescriptor& d1, const SymmetryDescriptor& d2);

SymmetryDescriptor inverse(const SymmetryDescriptor& d);

/// Haar-random descriptor of the given shape.
SymmetryDescriptor random_descriptor(std::size_t dim, SymmetryKind kind, bool complement, int sign,
                                     Rng& rng);

// ---------------------------------------------------------------------------
// Real coordinates on Hermitian matrices

/// Trace-orthonormal basis of the n×n Hermitian matrices, in the order
/// E_kk (k = 1..n), then for each k < l lexicographically
/// (E_kl + E_lk)/√2 followed by (iE_kl − iE_lk)/√2.
std::vector<ComplexMatrix> hermitian_basis(std::size_t dim);

/// Coordinates trace(B_j A) in hermitian_basis order. The basis is never
/// materialized.
std::vector<double> encode_hermitian(const ComplexMatrix& a);
ComplexMatrix decode_hermitian(std::span<const double> coords, std::size_t dim);

/// A ↦ L(A) + C on Hermitian matrices, L given as a real dim²×dim² matrix in
/// hermitian_basis coordinates.
struct AffineMapRep {
  std::size_t dim = 0;
  RealMatrix linear;
  ComplexMatrix constant;

  /// Validates shapes and that the constant is Hermitian.
  AffineMapRep(std::size_t dim, RealMatrix linear, ComplexMatrix constant);

  ComplexMatrix evaluate(const ComplexMatrix& a) const;
  /// L(A) only.
  ComplexMatrix evaluate_linear(const ComplexMatrix& a) const;
};

AffineMapRep to_affine_rep(const SymmetryDescriptor& d);

}  // namespace effkit
