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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

#include "cli.hpp"
#include "effkit/effects.hpp"
#include "effkit/error.hpp"
#include "effkit/extension.hpp"
#include "effkit/recover.hpp"

namespace effkit::cli {

namespace {

std::string fmt(const char* pattern, double x) {
  char buf[128];
  std::snprintf(buf, sizeof buf, pattern, x);
  return buf;
}

// Each suite returns an empty string on success, otherwise what failed.
using Suite = std::function<std::string(std::size_t dim, Rng& rng, std::size_t trials, double tol)>;

std::string closure(std::size_t n, Rng& rng, std::size_t trials, double) {
  for (std::size_t t = 0; t < trials; ++t) {
    const ComplexMatrix a = random_effect_matrix(n, rng);
    const ComplexMatrix b = random_effect_matrix(n, rng);
    const auto values = eigvalsh(hermitian_part(a * b * a));
    if (values.front() < -1e-9 || values.back() > 1.0 + 1e-9)
      return fmt("ABA has an eigenvalue outside [0, 1] (%.3e)",
                 values.front() < 0.0 ? values.front() : values.back());
  }
  return {};
}

std::string decomposition(std::size_t n, Rng& rng, std::size_t trials, double) {
  for (std::size_t t = 0; t < trials; ++t) {
    const ComplexMatrix a = random_hermitian(n, rng);
    const auto [pos, neg] = positive_negative_parts(a);
    const double scale = a.frobenius_norm();
    if (distance(a, pos - neg) > 1e-9 * scale) return "A ≠ A⁺ − A⁻";
    if ((pos * neg).frobenius_norm() > 1e-9 * scale * scale) return "A⁺A⁻ ≠ 0";
  }
  return {};
}

std::string order_pinching(std::size_t n, Rng& rng, std::size_t trials, double) {
  for (std::size_t t = 0; t < trials; ++t) {
    ComplexMatrix p, q;
    if (t % 2 == 0) {
      const auto [lo, hi] = random_nested_projections(n, rng);
      p = lo.matrix();
      q = hi.matrix();
    } else {
      p = random_nontrivial_projection(n, rng).matrix();
      q = random_nontrivial_projection(n, rng).matrix();
    }
    const bool ordered = leq(p, q, kDefaultTol);
    const bool pinched = distance(p * q * p, p) <= kDefaultTol;
    if (ordered != pinched) return "leq(P, Q) disagrees with PQP = P";
  }
  return {};
}

// Descriptor shapes cycled through by the round-trip suites.
struct Shape {
  SymmetryKind kind;
  bool complement;
  int sign;
};

std::vector<Shape> shapes_for(Family family) {
  using enum SymmetryKind;
  switch (family) {
    case Family::affine:
      return {{unitary, false, 1}, {antiunitary, false, 1}, {unitary, true, 1}, {antiunitary, true, 1}};
    case Family::triple_effects:
      return {{unitary, false, 1}, {antiunitary, false, 1}};
    case Family::triple_hermitian:
      return {{unitary, false, 1}, {antiunitary, false, -1}, {antiunitary, false, 1}, {unitary, false, -1}};
  }
  return {};
}

Suite roundtrip(Family family) {
  return [family](std::size_t n, Rng& rng, std::size_t trials, double tol) -> std::string {
    const auto shapes = shapes_for(family);
    for (std::size_t t = 0; t < trials; ++t) {
      const Shape s = shapes[t % shapes.size()];
      const auto d = random_descriptor(n, s.kind, s.complement, s.sign, rng);
      RecoverOptions opts;
      opts.tol = tol;
      opts.seed = rng.next_u64();
      const RecoveryReport r = recover(EffectMapOracle::from_descriptor(d), family, opts);
      if (!r.canonical()) return "rejected a canonical map: " + r.reason;
      const auto& got = *r.descriptor;
      if (got.kind != d.kind || got.complement != d.complement || got.sign != d.sign)
        return "recovered flags differ from the synthesized descriptor";
      const double gap = distance(got.u, d.u);
      if (gap > 1e-7) return fmt("recovered U differs by %.3e", gap);
    }
    return {};
  };
}

std::string rejection(std::size_t n, Rng& rng, std::size_t trials, double tol) {
  const double eps = 1e-2;
  RecoverOptions opts;
  opts.tol = tol;
  for (std::size_t t = 0; t < std::min<std::size_t>(trials, 20); ++t) {
    const ComplexMatrix u = haar_unitary(n, rng);
    const EffectMapOracle perturbed(n, [u, eps](const ComplexMatrix& a) {
      const ComplexMatrix c = u * a * u.adjoint();
      return (1.0 - eps) * c + eps * (c * c);
    });
    opts.seed = rng.next_u64();
    if (recover_affine(perturbed, opts).canonical()) return "recover_affine accepted a perturbed map";
    if (n >= 3 && recover_triple(perturbed, opts).canonical())
      return "recover_triple accepted a perturbed map";
  }
  if (n >= 3) {
    const EffectMapOracle complement(n, [](const ComplexMatrix& a) {
      return ComplexMatrix::identity(a.dim()) - a;
    });
    const RecoveryReport r = recover_triple(complement, opts);
    if (r.canonical() || !r.witness || r.witness->property != "triple_identity")
      return "A ↦ I − A was not rejected with a triple-identity witness";
    const EffectMapOracle shifted(n, [](const ComplexMatrix& a) {
      return a + ComplexMatrix::identity(a.dim());
    });
    if (recover_triple_hermitian(shifted, opts).reason != kSignRejection)
      return "A ↦ A + I was not rejected on φ(I)";
  }
  return {};
}

std::string scaling(std::size_t n, Rng& rng, std::size_t trials, double) {
  const auto grid = scaling_grid();
  for (std::size_t t = 0; t < trials; ++t) {
    const auto kind = t % 2 == 0 ? SymmetryKind::unitary : SymmetryKind::antiunitary;
    const auto d = random_descriptor(n, kind, false, 1, rng);
    const Projection p = rank_one_projection(random_unit_vector(n, rng));
    const ScalingCheck check = check_scaling_identity(
        extract_scaling_function(EffectMapOracle::from_descriptor(d), p, grid), 1e-9);
    if (!check.identity || check.multiplicative_deviation > 1e-9 ||
        check.orthoadditive_deviation > 1e-9)
      return fmt("scaling identities violated (max deviation %.3e)", check.max_deviation);
  }
  return {};
}

std::string extension(std::size_t n, Rng& rng, std::size_t trials, double) {
  for (std::size_t t = 0; t < std::min<std::size_t>(trials, 10); ++t) {
    const auto kind = t % 2 == 0 ? SymmetryKind::unitary : SymmetryKind::antiunitary;
    const auto d = random_descriptor(n, kind, false, 1, rng);
    const EffectMapOracle phi = EffectMapOracle::from_descriptor(d);
    const LinearExtension ext(phi, kDefaultTol, kDefaultAffinityTrials, rng.next_u64());
    for (std::size_t k = 0; k < trials; ++k) {
      ComplexMatrix m(n), w(n);
      for (std::size_t i = 0; i < n * n; ++i) {
        m(i / n, i % n) = rng.complex_gaussian();
        w(i / n, i % n) = rng.complex_gaussian();
      }
      const double alpha = rng.uniform(-2.0, 2.0);
      const double beta = rng.uniform(-2.0, 2.0);
      const double dev = distance(ext(alpha * m + beta * w), alpha * ext(m) + beta * ext(w));
      if (dev > 1e-8 * (m.frobenius_norm() + w.frobenius_norm()))
        return fmt("linear extension deviates from linearity by %.3e", dev);
    }
    const auto complemented_d = random_descriptor(n, kind, true, 1, rng);
    for (const auto& candidate : {d, complemented_d}) {
      const double bound =
          boundedness_check(EffectMapOracle::from_descriptor(candidate), trials, rng.next_u64());
      if (bound > 2.0 + 1e-9) return fmt("‖Ψ(A)‖ = %.6g exceeds 2", bound);
    }
  }
  return {};
}

std::string phase_gauge(std::size_t n, Rng& rng, std::size_t trials, double tol) {
  for (std::size_t t = 0; t < std::min<std::size_t>(trials, 5); ++t) {
    const ComplexMatrix u = haar_unitary(n, rng);
    std::optional<std::vector<double>> reference;
    for (const double theta : {0.0, 1.0, 2.0, 4.0}) {
      const ComplexMatrix v = std::polar(1.0, theta) * u;
      const EffectMapOracle phi(n, [v](const ComplexMatrix& a) { return v * a * v.adjoint(); });
      RecoverOptions opts;
      opts.tol = tol;
      const RecoveryReport r = recover_affine(phi, opts);
      if (!r.canonical()) return "rejected a phase-shifted unitary map: " + r.reason;
      std::vector<double> rounded;
      for (const Complex z : r.descriptor->u.data()) {
        rounded.push_back(std::round(z.real() * 1e12));
        rounded.push_back(std::round(z.imag() * 1e12));
      }
      if (!reference) reference = rounded;
      else if (*reference != rounded) return fmt("gauge-normalized U differs at θ = %g", theta);
    }
  }
  return {};
}

}  // namespace

std::vector<SuiteResult> run_verify_suites(std::size_t dim, std::uint64_t seed,
                                           std::size_t trials, double tol) {
  struct Entry {
    const char* name;
    std::size_t min_dim;
    Suite suite;
  };
  const std::vector<Entry> entries = {
      {"triple_closure", 2, closure},
      {"positive_negative_parts", 2, decomposition},
      {"order_pinching", 2, order_pinching},
      {"affine_roundtrip", 2, roundtrip(Family::affine)},
      {"triple_roundtrip", 3, roundtrip(Family::triple_effects)},
      {"hermitian_roundtrip", 3, roundtrip(Family::triple_hermitian)},
      {"rejection_battery", 2, rejection},
      {"scaling_grid", 2, scaling},
      {"extension", 2, extension},
      {"phase_gauge", 2, phase_gauge},
  };

  std::vector<SuiteResult> results;
  const Rng root(seed);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const Entry& e = entries[k];
    SuiteResult result{e.name, SuiteStatus::pass, {}};
    if (dim < e.min_dim) {
      result.status = SuiteStatus::skipped;
      result.detail = "requires dim ≥ " + std::to_string(e.min_dim);
    } else {
      Rng rng = root.split(k);
      try {
        result.detail = e.suite(dim, rng, trials, tol);
      } catch (const Error& ex) {
        result.detail = std::string("error: ") + ex.what();
      }
      if (!result.detail.empty()) result.status = SuiteStatus::fail;
    }
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace effkit::cli
