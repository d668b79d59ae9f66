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

#include "effkit/extension.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "effkit/error.hpp"

namespace effkit {

EffectMapOracle::EffectMapOracle(std::size_t dim, Evaluator evaluator)
    : dim_(dim), evaluator_(std::move(evaluator)) {
  if (dim_ == 0) throw InvalidArgument("EffectMapOracle: dim must be positive");
  if (!evaluator_) throw InvalidArgument("EffectMapOracle: empty evaluator");
}

EffectMapOracle EffectMapOracle::from_descriptor(const SymmetryDescriptor& d) {
  return EffectMapOracle(d.dim(), [d](const ComplexMatrix& a) { return apply(d, a); });
}

EffectMapOracle EffectMapOracle::from_affine_rep(AffineMapRep rep) {
  const std::size_t dim = rep.dim;
  return EffectMapOracle(dim,
                         [rep = std::move(rep)](const ComplexMatrix& a) { return rep.evaluate(a); });
}

ComplexMatrix EffectMapOracle::operator()(const ComplexMatrix& a) const {
  if (a.dim() != dim_) throw DimensionMismatch("oracle: input has wrong size");
  ComplexMatrix out;
  try {
    out = evaluator_(a);
  } catch (const OracleError&) {
    throw;
  } catch (const std::exception& e) {
    throw OracleError(std::string("oracle evaluation failed: ") + e.what());
  }
  if (out.dim() != dim_) throw OracleError("oracle returned a matrix of the wrong size");
  if (!out.all_finite()) throw OracleError("oracle returned a non-finite matrix");
  return out;
}

EffectMapOracle complemented(const EffectMapOracle& phi) {
  return EffectMapOracle(phi.dim(), [phi](const ComplexMatrix& a) {
    return ComplexMatrix::identity(a.dim()) - phi(a);
  });
}

EffectMapOracle scaled(const EffectMapOracle& phi, double s) {
  return EffectMapOracle(phi.dim(), [phi, s](const ComplexMatrix& a) { return s * phi(a); });
}

// ---------------------------------------------------------------------------

AffinityResult is_affine(const EffectMapOracle& phi, std::size_t trials, double tol,
                         std::uint64_t seed) {
  if (trials == 0) throw InvalidArgument("is_affine: trials must be ≥ 1");
  const std::size_t n = phi.dim();
  Rng rng(seed);
  AffinityResult result;

  for (std::size_t t = 0; t < trials; ++t) {
    double lambda;
    ComplexMatrix a, b;
    if (t == 0) {
      lambda = 0.5;
      a = ComplexMatrix(n);
      a(0, 0) = 1.0;
      b = ComplexMatrix::identity(n) - a;
    } else {
      lambda = rng.uniform();
      a = random_effect_matrix(n, rng);
      b = random_effect_matrix(n, rng);
    }
    const ComplexMatrix expected = lambda * phi(a) + (1.0 - lambda) * phi(b);
    const ComplexMatrix actual = phi(lambda * a + (1.0 - lambda) * b);
    const double deviation = distance(actual, expected);
    result.trials_run = t + 1;
    result.max_deviation = std::max(result.max_deviation, deviation);
    if (deviation > tol * std::max(1.0, expected.frobenius_norm())) {
      result.affine = false;
      result.witness = AffinityWitness{lambda, std::move(a), std::move(b), deviation};
      break;
    }
  }
  return result;
}

// ---------------------------------------------------------------------------

LinearExtension::LinearExtension(EffectMapOracle phi, double tol, std::size_t affinity_trials,
                                 std::uint64_t seed)
    : phi_(std::move(phi)), tol_(tol) {
  const double at_zero = phi_(ComplexMatrix(phi_.dim())).frobenius_norm();
  if (at_zero > tol_) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "linear extension: ‖φ(0)‖_F = %.3e exceeds tolerance", at_zero);
    throw InvalidArgument(buf);
  }
  const AffinityResult affinity = is_affine(phi_, affinity_trials, tol_, seed);
  if (!affinity.affine) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "linear extension: map is not affine (deviation %.3e)",
                  affinity.witness->deviation);
    throw InvalidArgument(buf);
  }
}

ComplexMatrix LinearExtension::on_positive(const ComplexMatrix& a) const {
  const double scale = std::max(0.0, eigvalsh(a, tol_).back());
  if (scale < kZeroNormCutoff) return ComplexMatrix(a.dim());
  return scale * phi_((1.0 / scale) * a);
}

ComplexMatrix LinearExtension::on_hermitian(const ComplexMatrix& h) const {
  const HermitianEig eig = eig_hermitian(h, tol_);
  const double top = eig.eigenvalues.back();
  const double bottom = eig.eigenvalues.front();
  ComplexMatrix out(h.dim());
  // Φ₁(H±) with ‖H±‖ read off the spectrum; H±/‖H±‖ is rebuilt directly.
  if (top >= kZeroNormCutoff) {
    out += top * phi_(hermitian_part(eig.reconstruct([top](double x) {
      return x > 0.0 ? x / top : 0.0;
    })));
  }
  if (-bottom >= kZeroNormCutoff) {
    out -= (-bottom) * phi_(hermitian_part(eig.reconstruct([bottom](double x) {
      return x < 0.0 ? x / bottom : 0.0;
    })));
  }
  return out;
}

ComplexMatrix LinearExtension::operator()(const ComplexMatrix& m) const {
  const auto [re, im] = real_imag_parts(m);
  return on_hermitian(re) + Complex(0.0, 1.0) * on_hermitian(im);
}

ComplexMatrix extend_linear(const EffectMapOracle& phi, const ComplexMatrix& m, double tol) {
  return LinearExtension(phi, tol)(m);
}

double boundedness_check(const EffectMapOracle& phi, std::size_t trials, std::uint64_t seed,
                         double tol) {
  const std::size_t n = phi.dim();
  const ComplexMatrix offset = phi(ComplexMatrix(n));
  const EffectMapOracle psi(n, [phi, offset](const ComplexMatrix& a) { return phi(a) - offset; });
  const LinearExtension extension(psi, tol, kDefaultAffinityTrials, seed);

  Rng rng = Rng(seed).split(1);
  double worst = extension(ComplexMatrix::identity(n)).operator_norm();
  for (std::size_t t = 0; t < trials; ++t) {
    worst = std::max(worst, extension(random_effect_matrix(n, rng)).operator_norm());
  }
  return worst;
}

std::array<Effect, 4> unit_ball_decomposition(const ComplexMatrix& m, double tol) {
  if (m.operator_norm() > 1.0 + tol)
    throw InvalidArgument("unit_ball_decomposition: operator norm exceeds 1");
  const auto [re, im] = real_imag_parts(m);
  auto [a1, a2] = positive_negative_parts(re, tol);
  auto [a3, a4] = positive_negative_parts(im, tol);
  return {Effect(a1, tol), Effect(a2, tol), Effect(a3, tol), Effect(a4, tol)};
}

}  // namespace effkit
