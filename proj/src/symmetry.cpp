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

#include "effkit/symmetry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "effkit/error.hpp"

namespace effkit {

std::string_view to_string(SymmetryKind kind) {
  return kind == SymmetryKind::unitary ? "unitary" : "antiunitary";
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::affine:
      return "affine";
    case Family::triple_effects:
      return "triple_effects";
    case Family::triple_hermitian:
      return "triple_hermitian";
  }
  return "?";
}

SymmetryKind parse_kind(std::string_view name) {
  if (name == "unitary") return SymmetryKind::unitary;
  if (name == "antiunitary") return SymmetryKind::antiunitary;
  throw InvalidArgument("unknown kind '" + std::string(name) + "'");
}

Family parse_family(std::string_view name) {
  if (name == "affine") return Family::affine;
  if (name == "triple_effects") return Family::triple_effects;
  if (name == "triple_hermitian") return Family::triple_hermitian;
  throw InvalidArgument("unknown family '" + std::string(name) + "'");
}

std::size_t min_dim(Family family) { return family == Family::affine ? 2 : 3; }

// ---------------------------------------------------------------------------
// SymmetryDescriptor

ComplexMatrix gauge_normalize(const ComplexMatrix& u) {
  for (std::size_t i = 0; i < u.dim(); ++i) {
    const Complex z = u(i, 0);
    const double r = std::abs(z);
    if (r <= kGaugeThreshold) continue;
    if (z.imag() == 0.0 && z.real() > 0.0) return u;  // already in gauge; keep it bit-exact
    ComplexMatrix g = (std::conj(z) / r) * u;
    g(i, 0) = r;
    return g;
  }
  return u;
}

SymmetryDescriptor SymmetryDescriptor::make(SymmetryKind kind, const ComplexMatrix& u,
                                            bool complement, int sign) {
  if (u.empty()) throw InvalidArgument("SymmetryDescriptor: empty matrix");
  if (sign != 1 && sign != -1) throw InvalidArgument("SymmetryDescriptor: sign must be ±1");
  if (complement && sign == -1)
    throw InvalidArgument("SymmetryDescriptor: complement and sign −1 are exclusive");
  const double defect =
      distance(u.adjoint() * u, ComplexMatrix::identity(u.dim()));
  if (defect > 1e-10 * static_cast<double>(u.dim()))
    throw InvalidArgument("SymmetryDescriptor: U is not unitary");
  return SymmetryDescriptor{kind, gauge_normalize(u), complement, sign};
}

SymmetryDescriptor SymmetryDescriptor::identity(std::size_t dim) {
  return make(SymmetryKind::unitary, ComplexMatrix::identity(dim));
}

bool SymmetryDescriptor::fits(Family family) const {
  switch (family) {
    case Family::affine:
      return sign == 1;
    case Family::triple_effects:
      return !complement && sign == 1;
    case Family::triple_hermitian:
      return !complement;
  }
  return false;
}

bool operator==(const SymmetryDescriptor& a, const SymmetryDescriptor& b) {
  return a.kind == b.kind && a.complement == b.complement && a.sign == b.sign && a.u == b.u;
}

ComplexMatrix apply(const SymmetryDescriptor& d, const ComplexMatrix& a) {
  if (a.dim() != d.dim()) throw DimensionMismatch("apply: descriptor and matrix sizes differ");
  ComplexMatrix x = d.kind == SymmetryKind::unitary ? a : a.conj();
  if (d.complement) x = ComplexMatrix::identity(a.dim()) - x;
  ComplexMatrix y = hermitian_part(d.u * x * d.u.adjoint());
  if (d.sign == -1) y *= -1.0;
  return y;
}

// Φ1(Φ2(A)) = U1 κ1(U2 κ2(A) U2*) U1* = (U1 κ1(U2)) κ1κ2(A) (U1 κ1(U2))*.
// The complement commutes with both conjugations since each fixes I.
SymmetryDescriptor compose(const SymmetryDescriptor& d1, const SymmetryDescriptor& d2) {
  if (d1.dim() != d2.dim()) throw DimensionMismatch("compose: descriptor sizes differ");
  if ((d1.complement && d2.sign == -1) || (d2.complement && d1.sign == -1))
    throw InvalidArgument("compose: descriptors belong to different families");
  const ComplexMatrix inner_u = d1.kind == SymmetryKind::unitary ? d2.u : d2.u.conj();
  const SymmetryKind kind =
      d1.kind == d2.kind ? SymmetryKind::unitary : SymmetryKind::antiunitary;
  return SymmetryDescriptor::make(kind, d1.u * inner_u, d1.complement != d2.complement, d1.sign * d2.sign);
}

// For the antiunitary U∘K the inverse is K∘U* = Uᵀ∘K.
SymmetryDescriptor inverse(const SymmetryDescriptor& d) {
  const ComplexMatrix u =
      d.kind == SymmetryKind::unitary ? d.u.adjoint() : d.u.transpose();
  return SymmetryDescriptor::make(d.kind, u, d.complement, d.sign);
}

SymmetryDescriptor random_descriptor(std::size_t dim, SymmetryKind kind, bool complement, int sign,
                                     Rng& rng) {
  return SymmetryDescriptor::make(kind, haar_unitary(dim, rng), complement, sign);
}

// ---------------------------------------------------------------------------
// Hermitian coordinates

std::vector<ComplexMatrix> hermitian_basis(std::size_t dim) {
  std::vector<ComplexMatrix> basis;
  basis.reserve(dim * dim);
  for (std::size_t k = 0; k < dim; ++k) {
    ComplexMatrix e(dim);
    e(k, k) = 1.0;
    basis.push_back(std::move(e));
  }
  const double h = kInvSqrt2;
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t l = k + 1; l < dim; ++l) {
      ComplexMatrix s(dim);
      s(k, l) = h;
      s(l, k) = h;
      basis.push_back(std::move(s));
      ComplexMatrix t(dim);
      t(k, l) = Complex(0.0, h);
      t(l, k) = Complex(0.0, -h);
      basis.push_back(std::move(t));
    }
  return basis;
}

// trace(S A) = √2 Re A_kl and trace(T A) = √2 Im A_kl for the off-diagonal
// pair (S, T) at (k, l).
std::vector<double> encode_hermitian(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<double> coords;
  coords.reserve(n * n);
  for (std::size_t k = 0; k < n; ++k) coords.push_back(a(k, k).real());
  const double r2 = std::numbers::sqrt2;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k + 1; l < n; ++l) {
      const Complex z = 0.5 * (a(k, l) + std::conj(a(l, k)));
      coords.push_back(r2 * z.real());
      coords.push_back(r2 * z.imag());
    }
  return coords;
}

ComplexMatrix decode_hermitian(std::span<const double> coords, std::size_t dim) {
  if (coords.size() != dim * dim)
    throw DimensionMismatch("decode_hermitian: expected " + std::to_string(dim * dim) +
                            " coordinates");
  ComplexMatrix a(dim);
  std::size_t j = 0;
  for (std::size_t k = 0; k < dim; ++k) a(k, k) = coords[j++];
  const double h = kInvSqrt2;
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t l = k + 1; l < dim; ++l) {
      const Complex z(h * coords[j], h * coords[j + 1]);
      j += 2;
      a(k, l) = z;
      a(l, k) = std::conj(z);
    }
  return a;
}

AffineMapRep::AffineMapRep(std::size_t dim_, RealMatrix linear_, ComplexMatrix constant_)
    : dim(dim_), linear(std::move(linear_)), constant(std::move(constant_)) {
  if (dim == 0) throw InvalidArgument("AffineMapRep: dim must be positive");
  if (linear.rows() != dim * dim || linear.cols() != dim * dim)
    throw DimensionMismatch("AffineMapRep: linear part must be dim²×dim²");
  if (constant.dim() != dim) throw DimensionMismatch("AffineMapRep: constant has wrong size");
  if (!constant.is_hermitian()) throw InvalidArgument("AffineMapRep: constant is not Hermitian");
}

ComplexMatrix AffineMapRep::evaluate_linear(const ComplexMatrix& a) const {
  if (a.dim() != dim) throw DimensionMismatch("AffineMapRep: input has wrong size");
  return decode_hermitian(linear.apply(encode_hermitian(a)), dim);
}

ComplexMatrix AffineMapRep::evaluate(const ComplexMatrix& a) const {
  return evaluate_linear(a) + constant;
}

AffineMapRep to_affine_rep(const SymmetryDescriptor& d) {
  const std::size_t n = d.dim();
  const std::size_t m = n * n;
  const ComplexMatrix offset = apply(d, ComplexMatrix(n));
  const auto basis = hermitian_basis(n);
  RealMatrix linear(m, m);
  for (std::size_t k = 0; k < m; ++k) {
    const auto column = encode_hermitian(apply(d, basis[k]) - offset);
    for (std::size_t j = 0; j < m; ++j) linear(j, k) = column[j];
  }
  return AffineMapRep(n, std::move(linear), offset);
}

}  // namespace effkit
