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

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "effkit/effects.hpp"
#include "effkit/error.hpp"
#include "effkit/extension.hpp"
#include "effkit/symmetry.hpp"
#include "test_support.hpp"

using namespace effkit;
using effkit::testing::check_close;
using effkit::testing::kI;
using effkit::testing::random_complex;

namespace {

EffectMapOracle identity_map(std::size_t n) {
  return EffectMapOracle(n, [](const ComplexMatrix& a) { return a; });
}

EffectMapOracle square_map(std::size_t n) {
  return EffectMapOracle(n, [](const ComplexMatrix& a) { return hermitian_part(a * a); });
}

}  // namespace

TEST_CASE("oracle wrapper") {
  const auto phi = identity_map(2);
  CHECK_THROWS_AS(phi(ComplexMatrix(3)), DimensionMismatch);
  const EffectMapOracle bad_dim(2, [](const ComplexMatrix&) { return ComplexMatrix(3); });
  CHECK_THROWS_AS(bad_dim(ComplexMatrix(2)), OracleError);
  const EffectMapOracle throwing(2, [](const ComplexMatrix&) -> ComplexMatrix {
    throw std::runtime_error("boom");
  });
  CHECK_THROWS_AS(throwing(ComplexMatrix(2)), OracleError);

  Rng rng(40);
  const ComplexMatrix a = random_effect(2, rng).matrix();
  check_close(complemented(phi)(a), ComplexMatrix::identity(2) - a, 0.0);
  check_close(scaled(phi, 0.5)(a), 0.5 * a, 0.0);

  const auto d = random_descriptor(3, SymmetryKind::antiunitary, true, 1, rng);
  const ComplexMatrix b = random_effect(3, rng).matrix();
  check_close(EffectMapOracle::from_descriptor(d)(b), apply(d, b), 0.0);
  check_close(EffectMapOracle::from_affine_rep(to_affine_rep(d))(b), apply(d, b), 1e-12);
}

TEST_CASE("is_affine examples") {
  CHECK(is_affine(identity_map(3)).affine);
  CHECK(is_affine(complemented(identity_map(3))).affine);
  CHECK(is_affine(identity_map(3), 64).trials_run == 64);

  // Midpoint of diag(1, 0) and diag(0, 1) squares to I/4; the squares average to I/2.
  const auto r = is_affine(square_map(2));
  CHECK_FALSE(r.affine);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->lambda == 0.5);
  CHECK(r.witness->a == ComplexMatrix::diagonal({1.0, 0.0}));
  CHECK(r.witness->b == ComplexMatrix::diagonal({0.0, 1.0}));
  CHECK(r.witness->deviation == doctest::Approx(std::sqrt(2.0) / 4.0));

  CHECK(is_affine(identity_map(2), 1).trials_run == 1);
  CHECK_THROWS_AS(is_affine(identity_map(2), 0), InvalidArgument);

  Rng rng(41);
  for (SymmetryKind kind : {SymmetryKind::unitary, SymmetryKind::antiunitary})
    for (bool comp : {false, true})
      CHECK(is_affine(EffectMapOracle::from_descriptor(random_descriptor(4, kind, comp, 1, rng)))
                .affine);
}

TEST_CASE("extend_linear examples") {
  check_close(extend_linear(identity_map(2), ComplexMatrix::diagonal({2.0, -3.0})),
              ComplexMatrix::diagonal({2.0, -3.0}), 1e-14);

  Rng rng(42);
  const auto half = scaled(identity_map(3), 0.5);
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix m = random_hermitian(3, rng);
    check_close(extend_linear(half, m), 0.5 * m, 1e-12 * m.frobenius_norm());
  }

  const ComplexMatrix u0 = haar_unitary(2, 11);
  const EffectMapOracle conj(2, [&](const ComplexMatrix& a) { return u0 * a * u0.adjoint(); });
  const ComplexMatrix m{{1.0, kI}, {-kI, 0.0}};
  check_close(extend_linear(conj, m), u0 * m * u0.adjoint(), 1e-12);

  // Non-Hermitian input goes through the real and imaginary parts.
  const ComplexMatrix g = random_complex(3, rng);
  check_close(extend_linear(identity_map(3), g), g, 1e-12);

  CHECK(extend_linear(identity_map(2), ComplexMatrix(2)) == ComplexMatrix(2));
}

TEST_CASE("extend_linear errors") {
  CHECK_THROWS_AS(extend_linear(complemented(identity_map(2)), ComplexMatrix::identity(2)),
                  InvalidArgument);
  CHECK_THROWS_AS(extend_linear(square_map(2), ComplexMatrix::identity(2)), InvalidArgument);
  CHECK_THROWS_AS(LinearExtension(complemented(identity_map(3))), InvalidArgument);
}

TEST_CASE("boundedness examples") {
  CHECK(boundedness_check(identity_map(3), 50, 1) <= 1.0 + 1e-12);
  CHECK(boundedness_check(complemented(identity_map(3)), 50, 1) <= 1.0 + 1e-12);
  Rng rng(43);
  for (SymmetryKind kind : {SymmetryKind::unitary, SymmetryKind::antiunitary})
    for (bool comp : {false, true})
      for (std::size_t n = 2; n <= 5; ++n) {
        const auto phi = EffectMapOracle::from_descriptor(random_descriptor(n, kind, comp, 1, rng));
        CHECK(boundedness_check(phi, 50, n) <= 2.0 + 1e-9);
      }
}

TEST_CASE("unit-ball decomposition") {
  Rng rng(44);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + t % 6;
    ComplexMatrix m = random_complex(n, rng);
    m *= rng.uniform() / m.operator_norm();
    const auto parts = unit_ball_decomposition(m);
    const ComplexMatrix back =
        parts[0].matrix() - parts[1].matrix() + kI * (parts[2].matrix() - parts[3].matrix());
    CHECK(distance(back, m) <= 1e-12);
  }
  CHECK_THROWS_AS(unit_ball_decomposition(2.0 * ComplexMatrix::identity(2)), InvalidArgument);
}

// ---------------------------------------------------------------------------
// Properties over synthesized descriptors with φ(0) = 0

TEST_CASE("extension is linear and agrees with the map") {
  Rng rng(50);
  for (SymmetryKind kind : {SymmetryKind::unitary, SymmetryKind::antiunitary}) {
    const std::size_t n = 4;
    const auto d = random_descriptor(n, kind, false, 1, rng);
    const LinearExtension ext(EffectMapOracle::from_descriptor(d));
    for (int t = 0; t < 200; ++t) {
      const ComplexMatrix m = random_complex(n, rng), q = random_complex(n, rng);
      const double alpha = rng.uniform(-2.0, 2.0), beta = rng.uniform(-2.0, 2.0);
      const ComplexMatrix lhs = ext(alpha * m + beta * q);
      const ComplexMatrix rhs = alpha * ext(m) + beta * ext(q);
      CHECK(distance(lhs, rhs) <= 1e-8 * (m.operator_norm() + q.operator_norm()));
    }
    for (int t = 0; t < 200; ++t) {
      const ComplexMatrix a = random_effect(n, rng).matrix();
      CHECK(distance(ext(a), apply(d, a)) <= 1e-9);
    }
  }
}

TEST_CASE("extension matches the affine representation's linear part") {
  Rng rng(51);
  for (SymmetryKind kind : {SymmetryKind::unitary, SymmetryKind::antiunitary}) {
    const auto rep = to_affine_rep(random_descriptor(3, kind, false, 1, rng));
    REQUIRE(rep.constant.frobenius_norm() == 0.0);
    const LinearExtension ext(EffectMapOracle::from_affine_rep(rep));
    for (int t = 0; t < 100; ++t) {
      const ComplexMatrix h = random_hermitian(3, rng);
      CHECK(distance(ext(h), rep.evaluate_linear(h)) <= 1e-9 * std::max(1.0, h.frobenius_norm()));
    }
  }
}
