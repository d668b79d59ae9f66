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

#include "effkit/recover.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "effkit/error.hpp"

namespace effkit {

namespace {

std::string format(const char* fmt, double x) {
  char buf[160];
  std::snprintf(buf, sizeof buf, fmt, x);
  return buf;
}

// Distance of X from the set of projections: Hermitian defect plus idempotency defect.
double projection_defect(const ComplexMatrix& x) {
  return distance(x, x.adjoint()) + distance(x * x, x);
}

ComplexVector basis_vector(std::size_t dim, std::size_t k) {
  ComplexVector e(dim);
  e[k] = 1.0;
  return e;
}

// Seeds for the independent sampling stages of one recovery run.
enum Stage : std::uint64_t {
  kAffinity = 1,
  kPreservation,
  kReconstruction,
  kScaling,
  kVerification,
  kTriple,
};

std::uint64_t stage_seed(std::uint64_t seed, Stage stage) { return Rng(seed).split(stage).key(); }

void reject(RecoveryReport& r, std::string reason, std::optional<Witness> witness = std::nullopt) {
  r.verdict = Verdict::rejected;
  r.reason = std::move(reason);
  r.witness = std::move(witness);
}

}  // namespace

std::string_view to_string(Verdict v) {
  return v == Verdict::canonical ? "canonical" : "rejected";
}

// ---------------------------------------------------------------------------
// Preservation probe

ProbeReport preservation_probe(const EffectMapOracle& phi, std::size_t trials, double tol,
                               std::uint64_t seed) {
  if (trials == 0) throw InvalidArgument("preservation_probe: trials must be ≥ 1");
  const std::size_t n = phi.dim();
  const ComplexMatrix id = ComplexMatrix::identity(n);
  ProbeReport report;

  auto fail = [&](bool& flag, const char* property, std::vector<ComplexMatrix> inputs,
                  double deviation) {
    if (!flag) return;
    flag = false;
    report.witnesses.push_back(Witness{property, std::move(inputs), deviation});
  };

  for (const ComplexMatrix& p : {id, ComplexMatrix(n)}) {
    const double defect = projection_defect(phi(p));
    ++report.samples_used;
    if (defect > tol) fail(report.projections_preserved, "projections_preserved", {p}, defect);
  }
  if (n < 2) return report;

  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const ComplexMatrix p = random_nontrivial_projection(n, rng).matrix();
    const ComplexMatrix image = phi(p);
    const double defect = projection_defect(image);
    if (defect > tol) fail(report.projections_preserved, "projections_preserved", {p}, defect);

    const double complement_gap = distance(image + phi(id - p), id);
    if (complement_gap > tol)
      fail(report.orthocomplement_preserved, "orthocomplement_preserved", {p}, complement_gap);

    const auto [lower, upper] = random_nested_projections(n, rng);
    const ComplexMatrix gap = hermitian_part(phi(upper.matrix()) - phi(lower.matrix()));
    const double order_violation = std::max(0.0, -eigvalsh(gap).front());
    if (order_violation > tol)
      fail(report.order_preserved, "order_preserved", {lower.matrix(), upper.matrix()},
           order_violation);

    const auto [left, right] = random_orthogonal_projections(n, rng);
    const double overlap = (phi(left.matrix()) * phi(right.matrix())).frobenius_norm();
    if (overlap > tol)
      fail(report.orthogonality_preserved, "orthogonality_preserved",
           {left.matrix(), right.matrix()}, overlap);

    report.samples_used += 5;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Unitary reconstruction

ComplexVector rank_one_vector(const ComplexMatrix& p) {
  if (!p.is_hermitian(kRankOneTol))
    throw ReconstructionError("image of a rank-one projection is not Hermitian");
  const HermitianEig eig = eig_hermitian(hermitian_part(p), kRankOneTol);
  const std::size_t n = eig.eigenvalues.size();
  const double top = eig.eigenvalues.back();
  bool rank_one = std::abs(top - 1.0) <= kRankOneTol;
  for (std::size_t k = 0; k + 1 < n; ++k) rank_one = rank_one && std::abs(eig.eigenvalues[k]) <= kRankOneTol;
  if (!rank_one)
    throw ReconstructionError(
        format("image of a rank-one projection is not a rank-one projection (top eigenvalue %.6g)",
               top));
  return eig.eigenvectors.column(n - 1);
}

UnitaryReconstruction reconstruct_unitary_from_projection_action(
    const std::function<ComplexMatrix(const ComplexMatrix&)>& action, std::size_t dim, double tol,
    std::uint64_t seed) {
  if (dim < 2) throw InvalidArgument("reconstruct_unitary: dim must be ≥ 2");
  const double h = kInvSqrt2;
  auto image_of = [&](const ComplexVector& x) {
    return action(rank_one_projection(x).matrix());
  };

  std::vector<ComplexVector> frame(dim);
  for (std::size_t j = 0; j < dim; ++j) frame[j] = rank_one_vector(image_of(basis_vector(dim, j)));

  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      if (std::abs(inner(frame[i], frame[j])) > kRankOneTol)
        throw ReconstructionError("images of orthogonal basis projections are not orthogonal");

  // Align the phase of f_j to f_1 through the image of P_{(e_1+e_j)/√2}.
  for (std::size_t j = 1; j < dim; ++j) {
    ComplexVector x(dim);
    x[0] = h;
    x[j] = h;
    const ComplexMatrix r = image_of(x);
    const Complex c = inner(frame[j], r * frame[0]);
    if (std::abs(c) < kRankOneTol)
      throw ReconstructionError("phase alignment is degenerate");
    const Complex phase = c / std::abs(c);
    for (auto& z : frame[j]) z *= phase;
  }

  // Unitary maps (e_1 + i e_2) to f_1 + i f_2, antiunitary to f_1 − i f_2.
  ComplexVector probe(dim);
  probe[0] = h;
  probe[1] = Complex(0.0, h);
  const ComplexMatrix s = image_of(probe);
  ComplexVector plus(dim), minus(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    plus[i] = frame[0][i] + Complex(0.0, 1.0) * frame[1][i];
    minus[i] = frame[0][i] - Complex(0.0, 1.0) * frame[1][i];
  }
  const SymmetryKind kind =
      distance(s, rank_one_projection(plus).matrix()) <= distance(s, rank_one_projection(minus).matrix())
          ? SymmetryKind::unitary
          : SymmetryKind::antiunitary;

  ComplexMatrix u(dim);
  for (std::size_t j = 0; j < dim; ++j) u.set_column(j, frame[j]);
  const SymmetryDescriptor candidate = SymmetryDescriptor::make(kind, u);

  Rng rng(seed);
  double residual = 0.0;
  for (std::size_t t = 0; t < kReconstructionChecks; ++t) {
    const ComplexMatrix p = rank_one_projection(random_unit_vector(dim, rng)).matrix();
    residual = std::max(residual, distance(action(p), apply(candidate, p)));
  }
  if (residual > tol)
    throw ReconstructionError(
        format("reconstructed unitary fails verification on rank-one projections (residual %.3e)",
               residual));
  return UnitaryReconstruction{candidate.u, kind, residual};
}

// ---------------------------------------------------------------------------
// Scaling function

std::vector<double> scaling_grid(std::size_t points) {
  if (points < 2) throw InvalidArgument("scaling_grid: need at least 2 points");
  std::vector<double> grid(points);
  for (std::size_t k = 0; k < points; ++k)
    grid[k] = static_cast<double>(k) / static_cast<double>(points - 1);
  return grid;
}

ScalingSamples extract_scaling_function(const EffectMapOracle& phi, const Projection& p,
                                        std::span<const double> lambdas, double tol) {
  const ComplexMatrix image = phi(p.matrix());
  rank_one_vector(image);
  const double denom = (image * image).trace().real();

  ScalingSamples out{p.matrix(), {}};
  out.samples.reserve(lambdas.size());
  for (const double lambda : lambdas) {
    const ComplexMatrix scaled_image = phi(lambda * p.matrix());
    const double f = (scaled_image * image).trace().real() / denom;
    const double err = distance(scaled_image, f * image);
    out.samples.push_back(ScalingSample{lambda, f, err <= tol, err});
  }
  return out;
}

ScalingCheck check_scaling_identity(const ScalingSamples& s, double tol) {
  ScalingCheck check;
  auto lookup = [&](double lambda) -> const ScalingSample* {
    for (const auto& sample : s.samples)
      if (std::abs(sample.lambda - lambda) <= 1e-12) return &sample;
    return nullptr;
  };

  for (const auto& sample : s.samples) {
    if (!sample.valid) ++check.invalid_samples;
    const double dev = std::abs(sample.f - sample.lambda);
    if (dev > check.max_deviation) {
      check.max_deviation = dev;
      check.worst_lambda = sample.lambda;
    }
    const double square = sample.lambda * sample.lambda;
    const ScalingSample* at_square = lookup(square);
    const ScalingSample* at_rest = lookup(1.0 - square);
    if (at_square != nullptr) {
      check.multiplicative_deviation =
          std::max(check.multiplicative_deviation, std::abs(at_square->f - sample.f * sample.f));
      if (at_rest != nullptr)
        check.orthoadditive_deviation =
            std::max(check.orthoadditive_deviation, std::abs(at_square->f + at_rest->f - 1.0));
    }
  }
  check.identity = check.invalid_samples == 0 && check.max_deviation <= tol;
  return check;
}

// ---------------------------------------------------------------------------
// Verification and recovery

double verify_descriptor(const EffectMapOracle& phi, const SymmetryDescriptor& d,
                         std::size_t trials, Family family, std::uint64_t seed) {
  const std::size_t n = phi.dim();
  if (d.dim() != n) throw DimensionMismatch("verify_descriptor: descriptor and oracle sizes differ");
  double worst = 0.0;
  for (const ComplexMatrix& a : {ComplexMatrix(n), ComplexMatrix::identity(n)})
    worst = std::max(worst, distance(phi(a), apply(d, a)));

  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const ComplexMatrix a = family == Family::triple_hermitian ? random_hermitian(n, rng)
                                                               : random_effect_matrix(n, rng);
    worst = std::max(worst, distance(phi(a), apply(d, a)));
  }
  return worst;
}

namespace {

std::string failed_properties(const ProbeReport& probe) {
  std::string names;
  for (const auto& w : probe.witnesses) names += (names.empty() ? "" : ", ") + w.property;
  return names;
}

void attach_scaling(RecoveryReport& r, const EffectMapOracle& phi, const RecoverOptions& opts) {
  Rng rng(stage_seed(opts.seed, kScaling));
  const Projection p = rank_one_projection(random_unit_vector(phi.dim(), rng));
  const auto grid = scaling_grid(opts.scaling_points);
  r.scaling = extract_scaling_function(phi, p, grid, opts.probe_tol);
  r.scaling_check = check_scaling_identity(*r.scaling, opts.probe_tol);
}

// Finalizes a report once (U, kind) is known: residual over the family's domain.
void finish(RecoveryReport& r, const EffectMapOracle& phi, const SymmetryDescriptor& d,
            const RecoverOptions& opts) {
  const double residual =
      verify_descriptor(phi, d, opts.trials, r.family, stage_seed(opts.seed, kVerification));
  r.descriptor = d;
  r.max_residual = residual;
  if (residual > opts.tol) {
    reject(r, format("residual %.3e exceeds the acceptance tolerance", residual));
    return;
  }
  r.verdict = Verdict::canonical;
  r.reason.clear();
}

// Triple identity, preservation probe, reconstruction and the scaling grid on
// [0, I]. Returns nullopt after recording a rejection.
std::optional<UnitaryReconstruction> triple_pipeline(const EffectMapOracle& psi,
                                                     const RecoverOptions& opts,
                                                     RecoveryReport& r) {
  const std::size_t n = psi.dim();
  Rng rng(stage_seed(opts.seed, kTriple));
  for (std::size_t t = 0; t < opts.trials; ++t) {
    const ComplexMatrix a = random_effect_matrix(n, rng);
    const ComplexMatrix b = random_effect_matrix(n, rng);
    const ComplexMatrix image_a = psi(a);
    const ComplexMatrix expected = image_a * psi(b) * image_a;
    const double deviation = distance(psi(a * b * a), expected);
    if (deviation > opts.probe_tol * std::max(1.0, expected.frobenius_norm())) {
      reject(r, format("triple identity φ(ABA) = φ(A)φ(B)φ(A) violated (deviation %.3e)",
                       deviation),
             Witness{"triple_identity", {a, b}, deviation});
      return std::nullopt;
    }
  }

  r.probe = preservation_probe(psi, opts.trials, opts.probe_tol,
                               stage_seed(opts.seed, kPreservation));
  if (!r.probe.all_preserved()) {
    reject(r, "projection preservation failed: " + failed_properties(r.probe),
           r.probe.witnesses.front());
    return std::nullopt;
  }

  const UnitaryReconstruction rec = reconstruct_unitary_from_projection_action(
      [&psi](const ComplexMatrix& p) { return psi(p); }, n, opts.tol,
      stage_seed(opts.seed, kReconstruction));

  attach_scaling(r, psi, opts);
  if (!r.scaling_check->identity) {
    const double worst = r.scaling_check->worst_lambda;
    reject(r,
           format("scaling function is not the identity (max |f(λ) − λ| = %.3e)",
                  r.scaling_check->max_deviation),
           Witness{"scaling_identity", {worst * r.scaling->projection},
                   r.scaling_check->max_deviation});
    return std::nullopt;
  }
  return rec;
}

template <typename Body>
RecoveryReport guarded(Family family, Body&& body) {
  RecoveryReport r;
  r.family = family;
  try {
    body(r);
  } catch (const OracleError&) {
    throw;
  } catch (const Error& e) {
    reject(r, e.what());
  }
  return r;
}

void require_triple_dim(const EffectMapOracle& phi) {
  if (phi.dim() < 3)
    throw InvalidArgument("triple-product recovery requires dim ≥ 3, got " +
                          std::to_string(phi.dim()));
}

}  // namespace

RecoveryReport recover_affine(const EffectMapOracle& phi, const RecoverOptions& opts) {
  if (phi.dim() < 2) throw InvalidArgument("recover_affine requires dim ≥ 2");
  return guarded(Family::affine, [&](RecoveryReport& r) {
    const std::size_t n = phi.dim();
    const AffinityResult affinity =
        is_affine(phi, opts.trials, opts.probe_tol, stage_seed(opts.seed, kAffinity));
    if (!affinity.affine) {
      const auto& w = *affinity.witness;
      reject(r, format("map is not affine (deviation %.3e)", w.deviation),
             Witness{"affinity", {w.a, w.b, w.lambda * ComplexMatrix::identity(n)}, w.deviation});
      return;
    }

    const ComplexMatrix at_zero = phi(ComplexMatrix(n));
    bool complement;
    if (at_zero.frobenius_norm() <= opts.probe_tol) {
      complement = false;
    } else if (distance(at_zero, ComplexMatrix::identity(n)) <= opts.probe_tol) {
      complement = true;
    } else {
      reject(r, "φ(0) not in {0, I}", Witness{"zero_image", {ComplexMatrix(n)}, 0.0});
      return;
    }
    const EffectMapOracle normalized = complement ? complemented(phi) : phi;

    r.probe = preservation_probe(normalized, opts.trials, opts.probe_tol,
                                 stage_seed(opts.seed, kPreservation));
    if (!r.probe.all_preserved()) {
      reject(r, "projection preservation failed: " + failed_properties(r.probe),
             r.probe.witnesses.front());
      return;
    }

    const UnitaryReconstruction rec = reconstruct_unitary_from_projection_action(
        [&normalized](const ComplexMatrix& p) { return normalized(p); }, n, opts.tol,
        stage_seed(opts.seed, kReconstruction));
    attach_scaling(r, normalized, opts);
    finish(r, phi, SymmetryDescriptor::make(rec.kind, rec.u, complement), opts);
  });
}

RecoveryReport recover_triple(const EffectMapOracle& phi, const RecoverOptions& opts) {
  require_triple_dim(phi);
  return guarded(Family::triple_effects, [&](RecoveryReport& r) {
    const auto rec = triple_pipeline(phi, opts, r);
    if (!rec) return;
    finish(r, phi, SymmetryDescriptor::make(rec->kind, rec->u), opts);
  });
}

RecoveryReport recover_triple_hermitian(const EffectMapOracle& phi, const RecoverOptions& opts) {
  require_triple_dim(phi);
  return guarded(Family::triple_hermitian, [&](RecoveryReport& r) {
    const std::size_t n = phi.dim();
    const ComplexMatrix id = ComplexMatrix::identity(n);
    const ComplexMatrix at_identity = phi(id);
    int sign;
    if (distance(at_identity, id) <= opts.probe_tol) {
      sign = 1;
    } else if (distance(at_identity, -id) <= opts.probe_tol) {
      sign = -1;
    } else {
      reject(r, kSignRejection, Witness{"identity_image", {id}, distance(at_identity * at_identity, id)});
      return;
    }
    const EffectMapOracle normalized = sign == 1 ? phi : scaled(phi, -1.0);
    const auto rec = triple_pipeline(normalized, opts, r);
    if (!rec) return;
    finish(r, phi, SymmetryDescriptor::make(rec->kind, rec->u, false, sign), opts);
  });
}

RecoveryReport recover(const EffectMapOracle& phi, Family family, const RecoverOptions& opts) {
  switch (family) {
    case Family::affine:
      return recover_affine(phi, opts);
    case Family::triple_effects:
      return recover_triple(phi, opts);
    case Family::triple_hermitian:
      return recover_triple_hermitian(phi, opts);
  }
  throw InvalidArgument("recover: unknown family");
}

}  // namespace effkit
