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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

namespace effkit {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Default relative tolerance used throughout the library.
inline constexpr double kDefaultTol = 1e-9;

inline constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

/// Dense square complex matrix, row-major.
///
/// Every entry is finite; the constructors reject NaN and Inf. Arithmetic
/// operators throw DimensionMismatch when the operands differ in size.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  /// Zero matrix of the given dimension.
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
  /// Row-wise literal, e.g. {{1, 0}, {0, 1}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix zeros(std::size_t dim) { return ComplexMatrix(dim); }
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix diagonal(std::initializer_list<double> values);
  /// Outer product x y*.
  static ComplexMatrix outer(std::span<const Complex> x, std::span<const Complex> y);

  std::size_t dim() const { return dim_; }
  bool empty() const { return dim_ == 0; }

  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }
  std::span<const Complex> data() const { return data_; }

  ComplexVector column(std::size_t col) const;
  void set_column(std::size_t col, std::span<const Complex> values);

  ComplexMatrix adjoint() const;
  ComplexMatrix conj() const;
  ComplexMatrix transpose() const;
  Complex trace() const;
  double frobenius_norm() const;
  /// Largest singular value.
  double operator_norm() const;
  bool is_hermitian(double tol = kDefaultTol) const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex scalar, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex scalar);
ComplexVector operator*(const ComplexMatrix& m, std::span<const Complex> v);

/// Frobenius distance ‖a − b‖_F.
double distance(const ComplexMatrix& a, const ComplexMatrix& b);
/// Hilbert–Schmidt inner product trace(a* b).
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate-linear in the first argument.
Complex inner(std::span<const Complex> x, std::span<const Complex> y);
double norm(std::span<const Complex> x);

/// (A + A*) / 2; used to strip rounding noise from results that are Hermitian in exact arithmetic.
ComplexMatrix hermitian_part(const ComplexMatrix& m);

/// Dense real matrix, row-major. Only what AffineMapRep needs.
class RealMatrix {
 public:
  RealMatrix() = default;
  RealMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RealMatrix(std::size_t rows, std::size_t cols, std::vector<double> data);

  static RealMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const double> data() const { return data_; }

  RealMatrix transpose() const;
  std::vector<double> apply(std::span<const double> x) const;

  friend bool operator==(const RealMatrix&, const RealMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

RealMatrix operator*(const RealMatrix& lhs, const RealMatrix& rhs);
double max_abs_difference(const RealMatrix& a, const RealMatrix& b);

// ---------------------------------------------------------------------------
// Hermitian eigendecomposition

struct HermitianEig {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // columns, orthonormal
  int sweeps = 0;

  /// V f(Λ) V* for a real function applied to the spectrum.
  template <typename F>
  ComplexMatrix reconstruct(F&& f) const {
    const std::size_t n = eigenvalues.size();
    ComplexMatrix out(n);
    for (std::size_t k = 0; k < n; ++k) {
      const double w = f(eigenvalues[k]);
      if (w == 0.0) continue;
      for (std::size_t i = 0; i < n; ++i) {
        const Complex vik = eigenvectors(i, k) * w;
        for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(eigenvectors(j, k));
      }
    }
    return out;
  }
  ComplexMatrix reconstruct() const {
    return reconstruct([](double x) { return x; });
  }
};

inline constexpr int kJacobiMaxSweeps = 100;

/// Cyclic complex Jacobi. Throws InvalidArgument when ‖A − A*‖_F > tol·‖A‖_F
/// and ConvergenceError when the sweep cap is hit.
HermitianEig eig_hermitian(const ComplexMatrix& a, double tol = kDefaultTol);

/// Eigenvalues only; same algorithm.
std::vector<double> eigvalsh(const ComplexMatrix& a, double tol = kDefaultTol);

// ---------------------------------------------------------------------------
// Random sampling
//
// Rng is a counter-based generator: the n-th draw (n = 1, 2, ...) of a stream
// keyed by k is splitmix64_finalize(k + n * 0x9E3779B97F4A7C15). split(s)
// derives the key of an independent child stream as
// splitmix64_finalize(k ^ splitmix64_finalize(s + 0x632BE59BD9B4E019)).
// uniform() = (next_u64() >> 11) * 2^-53; gaussian() is Box–Muller on
// (1 − uniform(), uniform()), yielding the cosine branch first and the sine
// branch on the following call.

std::uint64_t splitmix64_finalize(std::uint64_t z);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : key_(seed) {}

  std::uint64_t next_u64();
  /// Uniform on [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer on [lo, hi].
  std::size_t uniform_index(std::size_t lo, std::size_t hi);
  double gaussian();
  /// Complex standard Gaussian: real and imaginary parts each N(0, 1/2).
  Complex complex_gaussian();
  Rng split(std::uint64_t stream) const;

  std::uint64_t key() const { return key_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  std::optional<double> spare_;
};

/// Haar-distributed unitary: Gram–Schmidt QR of a complex Ginibre matrix.
/// Throws InvalidArgument for dim == 0.
ComplexMatrix haar_unitary(std::size_t dim, std::uint64_t seed);
ComplexMatrix haar_unitary(std::size_t dim, Rng& rng);

/// V diag(λ) V* with V Haar and λᵢ uniform on [0, 1]. Returns the raw
/// matrix; effects.hpp wraps it as an Effect.
ComplexMatrix random_effect_matrix(std::size_t dim, Rng& rng);

/// G + G* with G complex Ginibre.
ComplexMatrix random_hermitian(std::size_t dim, Rng& rng);

/// Uniformly distributed unit vector.
ComplexVector random_unit_vector(std::size_t dim, Rng& rng);

}  // namespace effkit
