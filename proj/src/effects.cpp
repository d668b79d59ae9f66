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

#include "effkit/effects.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "effkit/error.hpp"

namespace effkit {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw DimensionMismatch(std::string(what) + ": dimension mismatch");
}

std::string describe(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

ComplexMatrix diagonal_block(const ComplexMatrix& frame, std::size_t first, std::size_t last) {
  const std::size_t n = frame.dim();
  ComplexMatrix out(n);
  for (std::size_t k = first; k < last; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out(i, j) += frame(i, k) * std::conj(frame(j, k));
  return hermitian_part(out);
}

}  // namespace

// ---------------------------------------------------------------------------
// Effect / Projection

Effect::Effect(const ComplexMatrix& m, double tol) : tol_(tol) {
  if (m.empty()) throw InvalidArgument("Effect: empty matrix");
  if (!m.is_hermitian(tol)) throw InvalidArgument("Effect: matrix is not Hermitian");
  const HermitianEig eig = eig_hermitian(m, tol);
  const double lo = eig.eigenvalues.front();
  const double hi = eig.eigenvalues.back();
  if (lo < -tol || hi > 1.0 + tol) {
    throw InvalidArgument("Effect: spectrum [" + describe(lo) + ", " + describe(hi) +
                          "] outside [0, 1]");
  }
  if (lo < 0.0 || hi > 1.0) {
    matrix_ = hermitian_part(eig.reconstruct([](double x) { return std::clamp(x, 0.0, 1.0); }));
  } else {
    matrix_ = hermitian_part(m);
  }
}

Effect Effect::zero(std::size_t dim) { return Effect(ComplexMatrix(dim), kDefaultTol, 0); }

Effect Effect::identity(std::size_t dim) {
  return Effect(ComplexMatrix::identity(dim), kDefaultTol, 0);
}

Effect Effect::trusted(ComplexMatrix m, double tol) { return Effect(std::move(m), tol, 0); }

Projection::Projection(const ComplexMatrix& m, double tol) {
  if (!is_projection(m, tol)) throw InvalidArgument("Projection: matrix is not a projection");
  matrix_ = hermitian_part(m);
}

std::size_t Projection::rank() const {
  const double t = matrix_.trace().real();
  const double r = std::round(t);
  if (std::abs(t - r) > 0.01) throw InvalidArgument("Projection: trace is not an integer");
  return static_cast<std::size_t>(std::max(0.0, r));
}

// ---------------------------------------------------------------------------
// Effect-algebra operations

Effect jordan_triple(const Effect& a, const Effect& b) {
  require_same_dim(a.dim(), b.dim(), "jordan_triple");
  const ComplexMatrix& am = a.matrix();
  return Effect(hermitian_part(am * b.matrix() * am), std::max(a.tol(), b.tol()));
}

Effect orthocomplement(const Effect& a) {
  return Effect::trusted(ComplexMatrix::identity(a.dim()) - a.matrix(), a.tol());
}

Effect convex_combine(double lambda, const Effect& a, const Effect& b) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw InvalidArgument("convex_combine: lambda outside [0, 1]");
  require_same_dim(a.dim(), b.dim(), "convex_combine");
  return Effect::trusted(lambda * a.matrix() + (1.0 - lambda) * b.matrix(),
                         std::max(a.tol(), b.tol()));
}

Effect partial_add(const Effect& a, const Effect& b, double tol) {
  require_same_dim(a.dim(), b.dim(), "partial_add");
  ComplexMatrix sum = a.matrix() + b.matrix();
  const double top = eigvalsh(sum, tol).back();
  if (top > 1.0 + tol) {
    throw NotSummable("partial_add: largest eigenvalue of A + B is " + describe(top));
  }
  return Effect(sum, tol);
}

bool leq(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  require_same_dim(a.dim(), b.dim(), "leq");
  return eigvalsh(hermitian_part(b - a), tol).front() >= -tol;
}

bool is_extreme(const Effect& a, double tol) {
  const auto values = eigvalsh(a.matrix(), tol);
  return std::all_of(values.begin(), values.end(), [tol](double x) {
    return std::abs(x) <= tol || std::abs(x - 1.0) <= tol;
  });
}

bool is_projection(const ComplexMatrix& m, double tol) {
  if (m.empty() || !m.is_hermitian(tol)) return false;
  return distance(m * m, m) <= tol;
}

std::pair<ComplexMatrix, ComplexMatrix> positive_negative_parts(const ComplexMatrix& a,
                                                                double tol) {
  const HermitianEig eig = eig_hermitian(a, tol);
  return {hermitian_part(eig.reconstruct([](double x) { return x > 0.0 ? x : 0.0; })),
          hermitian_part(eig.reconstruct([](double x) { return x < 0.0 ? -x : 0.0; }))};
}

std::pair<ComplexMatrix, ComplexMatrix> real_imag_parts(const ComplexMatrix& m) {
  const ComplexMatrix adj = m.adjoint();
  const Complex half_over_i(0.0, -0.5);
  return {0.5 * (m + adj), half_over_i * (m - adj)};
}

Projection rank_one_projection(std::span<const Complex> x) {
  const double r = norm(x);
  if (r == 0.0 || !std::isfinite(r)) throw InvalidArgument("rank_one_projection: zero vector");
  ComplexVector unit(x.begin(), x.end());
  for (auto& z : unit) z /= r;
  return Projection(hermitian_part(ComplexMatrix::outer(unit, unit)));
}

bool are_orthogonal(const Projection& p, const Projection& q, double tol) {
  return (p.matrix() * q.matrix()).frobenius_norm() <= tol;
}

// ---------------------------------------------------------------------------
// Sampling

Effect random_effect(std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_effect(dim, rng);
}

Effect random_effect(std::size_t dim, Rng& rng) {
  if (dim == 0) throw InvalidArgument("random_effect: dim must be positive");
  return Effect::trusted(random_effect_matrix(dim, rng));
}

Projection random_projection(std::size_t dim, std::size_t rank, Rng& rng) {
  if (rank > dim) throw InvalidArgument("random_projection: rank exceeds dim");
  return Projection(diagonal_block(haar_unitary(dim, rng), 0, rank));
}

Projection random_nontrivial_projection(std::size_t dim, Rng& rng) {
  if (dim < 2) throw InvalidArgument("random_nontrivial_projection: dim must be ≥ 2");
  const std::size_t rank = rng.uniform_index(1, dim - 1);
  return random_projection(dim, rank, rng);
}

std::pair<Projection, Projection> random_nested_projections(std::size_t dim, Rng& rng) {
  if (dim < 2) throw InvalidArgument("random_nested_projections: dim must be ≥ 2");
  const ComplexMatrix frame = haar_unitary(dim, rng);
  const std::size_t small = rng.uniform_index(1, dim - 1);
  const std::size_t large = rng.uniform_index(small, dim);
  return {Projection(diagonal_block(frame, 0, small)), Projection(diagonal_block(frame, 0, large))};
}

std::pair<Projection, Projection> random_orthogonal_projections(std::size_t dim, Rng& rng) {
  if (dim < 2) throw InvalidArgument("random_orthogonal_projections: dim must be ≥ 2");
  const ComplexMatrix frame = haar_unitary(dim, rng);
  const std::size_t split = rng.uniform_index(1, dim - 1);
  const std::size_t end = rng.uniform_index(split + 1, dim);
  return {Projection(diagonal_block(frame, 0, split)),
          Projection(diagonal_block(frame, split, end))};
}

}  // namespace effkit
