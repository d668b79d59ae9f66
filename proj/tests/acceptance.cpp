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

// Full-size acceptance run. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "effkit/effects.hpp"
#include "effkit/extension.hpp"
#include "effkit/recover.hpp"
#include "effkit/symmetry.hpp"

using namespace effkit;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail = why;
  o.pass = false;
}

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

const SymmetryKind kU = SymmetryKind::unitary;
const SymmetryKind kA = SymmetryKind::antiunitary;

bool round_trip_ok(const SymmetryDescriptor& truth, const RecoveryReport& r, Outcome& o,
                   double& worst_u, double& worst_res) {
  if (!r.canonical() || !r.descriptor || !r.max_residual) {
    fail(o, "not canonical: " + r.reason);
    return false;
  }
  const auto& d = *r.descriptor;
  if (d.kind != truth.kind || d.complement != truth.complement || d.sign != truth.sign) {
    fail(o, "flag mismatch");
    return false;
  }
  const double du = distance(d.u, truth.u);
  worst_u = std::max(worst_u, du);
  worst_res = std::max(worst_res, *r.max_residual);
  if (du > 1e-7) fail(o, fmt("‖U_rec − U‖_F = %.3g", du));
  if (*r.max_residual > 1e-8) fail(o, fmt("residual %.3g", *r.max_residual));
  return o.pass;
}

// (1 − ε) U A U* + ε (U A U*)².
EffectMapOracle perturbed(const ComplexMatrix& u, double eps) {
  return EffectMapOracle(u.dim(), [u, eps](const ComplexMatrix& a) {
    const ComplexMatrix x = u * a * u.adjoint();
    return hermitian_part((1.0 - eps) * x + eps * (x * x));
  });
}

Outcome criterion1() {
  Outcome o;
  const auto start = Clock::now();
  Rng rng(1001);
  double lo = 1.0, hi = 0.0;
  for (std::size_t n = 2; n <= 8; ++n)
    for (int t = 0; t < 1000; ++t) {
      const Effect a = random_effect(n, rng), b = random_effect(n, rng);
      const auto values = eigvalsh(jordan_triple(a, b).matrix());
      lo = std::min(lo, values.front());
      hi = std::max(hi, values.back());
    }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (lo < -1e-9 || hi > 1.0 + 1e-9) fail(o, fmt("spectrum reached [%.3g, %.3g]", lo, hi));
  if (secs >= 10.0) fail(o, fmt("runtime %.2f s", secs));
  if (o.pass) o.detail = fmt("7000 pairs, eigenvalues in [%.3g, %.17g]", lo, hi) +
                         fmt(", %.2f s", secs);
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto start = Clock::now();
  Rng rng(1002);
  double worst_u = 0.0, worst_res = 0.0;
  int runs = 0;
  for (std::size_t n = 2; n <= 6 && o.pass; ++n)
    for (int t = 0; t < 100 && o.pass; ++t) {
      const auto d = random_descriptor(n, t % 2 ? kA : kU, (t / 2) % 2 == 1, 1, rng);
      RecoverOptions opts;
      opts.seed = rng.next_u64();
      round_trip_ok(d, recover_affine(EffectMapOracle::from_descriptor(d), opts), o, worst_u,
                    worst_res);
      ++runs;
    }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs >= 60.0) fail(o, fmt("runtime %.2f s", secs));
  if (o.pass)
    o.detail = std::to_string(runs) + " descriptors, " +
               fmt("max ‖ΔU‖_F %.3g, max residual %.3g", worst_u, worst_res) +
               fmt(", %.2f s", secs);
  return o;
}

Outcome criterion3() {
  Outcome o;
  Rng rng(1003);
  double worst_u = 0.0, worst_res = 0.0, worst_f = 0.0;
  for (std::size_t n = 3; n <= 6 && o.pass; ++n)
    for (int t = 0; t < 100 && o.pass; ++t) {
      const auto d = random_descriptor(n, t % 2 ? kA : kU, false, 1, rng);
      RecoverOptions opts;
      opts.seed = rng.next_u64();
      const auto r = recover_triple(EffectMapOracle::from_descriptor(d), opts);
      if (!round_trip_ok(d, r, o, worst_u, worst_res)) break;
      if (!r.scaling_check) {
        fail(o, "no scaling check");
        break;
      }
      worst_f = std::max(worst_f, r.scaling_check->max_deviation);
      if (r.scaling_check->max_deviation > 1e-9)
        fail(o, fmt("max |f(λ) − λ| = %.3g", r.scaling_check->max_deviation));
    }
  if (o.pass)
    o.detail = "400 descriptors, " + fmt("max residual %.3g, max |f(λ) − λ| %.3g", worst_res, worst_f);
  return o;
}

Outcome criterion4() {
  Outcome o;
  Rng rng(1004);
  int negatives = 0;
  for (std::size_t n = 3; n <= 6 && o.pass; ++n)
    for (int t = 0; t < 100 && o.pass; ++t) {
      const int sign = t % 2 ? -1 : 1;
      negatives += sign == -1;
      const auto d = random_descriptor(n, (t / 2) % 2 ? kA : kU, false, sign, rng);
      RecoverOptions opts;
      opts.seed = rng.next_u64();
      const auto r = recover_triple_hermitian(EffectMapOracle::from_descriptor(d), opts);
      if (!r.canonical() || !r.descriptor) {
        fail(o, "not canonical: " + r.reason);
      } else if (r.descriptor->sign != sign) {
        fail(o, "wrong sign");
      }
    }
  for (std::size_t n = 3; n <= 6; ++n) {
    const EffectMapOracle shift(n, [n](const ComplexMatrix& a) {
      return a + ComplexMatrix::identity(n);
    });
    const auto r = recover_triple_hermitian(shift);
    if (r.canonical() || r.reason != kSignRejection) fail(o, "A ↦ A + I not rejected as required");
  }
  if (o.pass)
    o.detail = "400 descriptors (" + std::to_string(negatives) +
               " with sign −1) all correct; A ↦ A + I rejected with \"" + kSignRejection + "\"";
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto phi = perturbed(haar_unitary(4, seed), 1e-2);
    RecoverOptions opts;
    opts.seed = seed;
    if (recover_affine(phi, opts).canonical())
      fail(o, "recover_affine accepted φ_ε for seed " + std::to_string(seed));
    if (recover_triple(phi, opts).canonical())
      fail(o, "recover_triple accepted φ_ε for seed " + std::to_string(seed));
  }
  const EffectMapOracle comp(4, [](const ComplexMatrix& a) { return ComplexMatrix::identity(4) - a; });
  const auto r = recover_triple(comp);
  if (r.canonical() || !r.witness || r.witness->property != "triple_identity")
    fail(o, "A ↦ I − A not rejected with a triple-identity witness");
  if (o.pass)
    o.detail = "φ_ε rejected by both pipelines for 20 seeds; I − A witness deviation " +
               fmt("%.3g", r.witness->deviation);
  return o;
}

Outcome criterion6() {
  Outcome o;
  Rng rng(1006);
  double worst_lin = 0.0, worst_bound = 0.0;
  int descriptors = 0, oracles = 0;
  for (std::size_t n = 2; n <= 6; ++n)
    for (SymmetryKind kind : {kU, kA}) {
      const auto d = random_descriptor(n, kind, false, 1, rng);
      const LinearExtension ext(EffectMapOracle::from_descriptor(d));
      ++descriptors;
      for (int t = 0; t < 200; ++t) {
        ComplexMatrix m(n), q(n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = rng.complex_gaussian();
            q(i, j) = rng.complex_gaussian();
          }
        const double alpha = rng.uniform(-2.0, 2.0), beta = rng.uniform(-2.0, 2.0);
        const double dev = distance(ext(alpha * m + beta * q), alpha * ext(m) + beta * ext(q)) /
                           (m.operator_norm() + q.operator_norm());
        worst_lin = std::max(worst_lin, dev);
      }
    }
  if (worst_lin > 1e-8) fail(o, fmt("linearity deviation %.3g", worst_lin));
  for (std::size_t n = 2; n <= 6; ++n)
    for (SymmetryKind kind : {kU, kA})
      for (bool comp : {false, true}) {
        const auto d = random_descriptor(n, kind, comp, 1, rng);
        const double b = boundedness_check(EffectMapOracle::from_descriptor(d), 50, rng.next_u64());
        ++oracles;
        worst_bound = std::max(worst_bound, b);
      }
  if (worst_bound > 2.0 + 1e-9) fail(o, fmt("boundedness %.6g", worst_bound));
  if (o.pass)
    o.detail = fmt("linearity %.3g", worst_lin) + " (relative, " + std::to_string(descriptors) +
               " descriptors × 200 probes); " + fmt("max bound %.6g", worst_bound) + " over " +
               std::to_string(oracles) + " oracles";
  return o;
}

Outcome criterion7() {
  Outcome o;
  Rng rng(1007);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 3 + t % 4;
    const auto d = random_descriptor(n, t % 2 ? kA : kU, false, 1, rng);
    if (!preservation_probe(EffectMapOracle::from_descriptor(d), 16, 1e-9, rng.next_u64())
             .all_preserved())
      fail(o, "probe failed on a canonical oracle");
  }
  int ordered = 0, mismatches = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 2 + t % 5;
    ComplexMatrix p, q;
    if (t % 2 == 0) {
      auto [lo, hi] = random_nested_projections(n, rng);
      p = lo.matrix();
      q = hi.matrix();
    } else {
      p = random_nontrivial_projection(n, rng).matrix();
      q = random_nontrivial_projection(n, rng).matrix();
    }
    const bool le = leq(p, q);
    ordered += le;
    mismatches += le != (distance(p * q * p, p) <= kDefaultTol);
  }
  if (mismatches) fail(o, std::to_string(mismatches) + " order/pinching mismatches");
  if (o.pass)
    o.detail = "100 oracles all-preserved; 1000 pairs (" + std::to_string(ordered) +
               " ordered) agree";
  return o;
}

Outcome criterion8() {
  Outcome o;
  Rng rng(1008);
  const auto rounded = [](const ComplexMatrix& m) {
    std::vector<double> v;
    for (const Complex& z : m.data()) {
      v.push_back(std::round(z.real() * 1e12) / 1e12);
      v.push_back(std::round(z.imag() * 1e12) / 1e12);
    }
    return v;
  };
  int cases = 0;
  for (std::size_t n = 3; n <= 6; ++n)
    for (SymmetryKind kind : {kU, kA})
      for (Family f : {Family::affine, Family::triple_effects, Family::triple_hermitian}) {
        const ComplexMatrix u = haar_unitary(n, rng);
        std::vector<double> first;
        for (double theta : {0.0, 1.0, 2.0, 4.0}) {
          const ComplexMatrix v = std::polar(1.0, theta) * u;
          const EffectMapOracle phi(n, [v, kind](const ComplexMatrix& a) {
            return hermitian_part(v * (kind == kU ? a : a.conj()) * v.adjoint());
          });
          const auto r = recover(phi, f);
          if (!r.canonical()) {
            fail(o, "not canonical: " + r.reason);
            continue;
          }
          const auto got = rounded(r.descriptor->u);
          if (first.empty())
            first = got;
          else if (got != first)
            fail(o, fmt("U differs at θ = %g (dim %g)", theta, static_cast<double>(n)));
        }
        ++cases;
      }
  if (o.pass) o.detail = std::to_string(cases) + " maps × 4 phases identical after rounding";
  return o;
}

}  // namespace

int main() {
  const std::function<Outcome()> criteria[] = {criterion1, criterion2, criterion3, criterion4,
                                               criterion5, criterion6, criterion7, criterion8};
  const char* names[] = {"triple closure",
                         "affine round-trip",
                         "triple round-trip",
                         "sign dichotomy",
                         "rejection battery",
                         "extension machinery",
                         "proof-step probes",
                         "phase-gauge invariance"};
  int failures = 0;
  for (int k = 0; k < 8; ++k) {
    Outcome o;
    try {
      o = criteria[k]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("criterion %d [%s]: %s  %s\n", k + 1, names[k], o.pass ? "PASS" : "FAIL",
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
