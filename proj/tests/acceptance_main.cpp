// Copyright 2026 The qgraph Authors
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line with
// the measured quantities; the process exit code is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qgraph/convergence.hpp"
#include "qgraph/io.hpp"
#include "qgraph/resolvent.hpp"
#include "test_support.hpp"

using namespace qgraph;
using qgraph::testing::Rng;
using qgraph::testing::complex_degree3_form;
using qgraph::testing::frob_diff;
using qgraph::testing::random_st_form;
using qgraph::testing::random_unitary;

namespace {

int failures = 0;

void report(int number, bool ok, const std::string& what) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", number,
              what.c_str());
  if (!ok) ++failures;
}

STForm dirichlet_form(std::size_t n) {
  STForm f;
  f.n = n;
  f.m = 0;
  for (std::size_t i = 0; i < n; ++i) f.perm.push_back(i);
  f.S = CMatrix(0, 0);
  f.T = CMatrix(0, n);
  return f;
}

STForm neumann_form(std::size_t n) {
  STForm f;
  f.n = n;
  f.m = n;
  for (std::size_t i = 0; i < n; ++i) f.perm.push_back(i);
  f.S = CMatrix(n, n);
  f.T = CMatrix(n, 0);
  return f;
}

// Direct matrix transcription of the delta coupling: continuity rows and the
// derivative-sum row.
Coupling delta_transcription(std::size_t n, double alpha) {
  Coupling c;
  c.n = n;
  c.A = CMatrix(n, n);
  c.B = CMatrix(n, n);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    c.A(j, j) = 1.0;
    c.A(j, j + 1) = -1.0;
  }
  c.A(n - 1, 0) = -alpha;
  for (std::size_t j = 0; j < n; ++j) c.B(n - 1, j) = 1.0;
  return c;
}

// --- criterion 1 ---------------------------------------------------------

void criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(20260810);
  bool ok = true;
  double worst_defect = 0.0;
  for (int trial = 0; trial < 200 && ok; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const Coupling c = from_unitary(random_unitary(n, rng));
    const STForm f = to_st_form(c);
    const double s_defect =
        (f.S - f.S.conjugate_transpose()).frobenius_norm();
    worst_defect = std::max(worst_defect, s_defect);
    if (s_defect >= 1e-9) ok = false;
    const Coupling back = st_to_coupling(f);
    if (!validate(back).admissible()) ok = false;
    if (!couplings_equivalent(back, c, 1e-9)) ok = false;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  std::ostringstream msg;
  msg << "canonical-form round trip on 200 random unitaries (worst S defect "
      << worst_defect << ", " << secs << " s)";
  report(1, ok && secs < 5.0, msg.str());
}

// --- criterion 2 ---------------------------------------------------------

void criterion_2() {
  bool ok = true;
  for (std::size_t n : {2, 3, 4, 5}) {
    for (double alpha : {-3.0, 0.0, 2.5}) {
      const Coupling c1 = st_to_coupling(delta_coupling(n, alpha));
      const Coupling c2 = from_unitary(delta_unitary(n, alpha));
      const Coupling c3 = delta_transcription(n, alpha);
      ok = ok && couplings_equivalent(c1, c2, 1e-9) &&
           couplings_equivalent(c2, c3, 1e-9) &&
           couplings_equivalent(c1, c3, 1e-9);
    }
  }
  report(2, ok,
         "delta coupling triangle (canonical form / unitary / transcription) "
         "for n in {2..5}, alpha in {-3, 0, 2.5}");
}

// --- criterion 3 ---------------------------------------------------------

void criterion_3() {
  Rng rng(333);
  bool ok = true;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng.index(6);
    const STForm f = random_st_form(n, rng);
    SpectralPoint sp;
    sp.kappa = Complex(1.0 + 2.0 * f.S.frobenius_norm(), 0.0);
    const ResolventAd r = lambda_ad(f, sp);
    const Coupling c = st_to_coupling(f);
    const CMatrix direct =
        inverse(c.A - sp.kappa * c.B) * (Complex(-1.0, 0.0) * c.B);
    const double diff = frob_diff(direct, r.lambda);
    worst = std::max(worst, diff);
    if (diff >= 1e-10) ok = false;
  }
  std::ostringstream msg;
  msg << "Krein coefficient block identity on 100 random forms (worst "
      << worst << ")";
  report(3, ok, msg.str());
}

// --- criterion 4 ---------------------------------------------------------

void criterion_4() {
  Rng rng(444);
  std::vector<STForm> forms = {delta_coupling(3, 2.0), dirichlet_form(3),
                               neumann_form(3)};
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng.index(4);
    // Moderate spectral scale keeps the finite-difference jump check inside
    // its step budget.
    STForm f = to_st_form(from_unitary(random_unitary(n, rng)));
    while (f.S.frobenius_norm() > 5.0) {
      f = to_st_form(from_unitary(random_unitary(n, rng)));
    }
    forms.push_back(f);
  }
  bool ok = true;
  double worst_residual = 0.0, worst_jump = 0.0;
  const double eps = 1e-6;
  for (const STForm& f : forms) {
    const SpectralPoint sp = default_spectral_point(f);
    const ResolventAd r = lambda_ad(f, sp);
    for (double res : boundary_residual_ad(r, 0.7)) {
      worst_residual = std::max(worst_residual, res);
      if (res >= 1e-8) ok = false;
    }
    const double y = 0.8 / sp.kappa.real();
    for (std::size_t j = 0; j < f.n; ++j) {
      const Complex right =
          (eval_kernel_ad(r, j, j, y + eps, y) - eval_kernel_ad(r, j, j, y, y)) /
          eps;
      const Complex left =
          (eval_kernel_ad(r, j, j, y, y) - eval_kernel_ad(r, j, j, y - eps, y)) /
          eps;
      const double jump_err = std::abs(right - left + 1.0);
      worst_jump = std::max(worst_jump, jump_err);
      if (jump_err >= 1e-4) ok = false;
    }
  }
  std::ostringstream msg;
  msg << "star-graph Green's function: boundary residual (worst "
      << worst_residual << ") and diagonal jump (worst error " << worst_jump
      << ")";
  report(4, ok, msg.str());
}

// --- criterion 5 ---------------------------------------------------------

void criterion_5() {
  bool ok = true;
  double worst_gauge = 0.0, worst_limit = 0.0, worst_anti = 0.0;

  std::vector<STForm> forms = {complex_degree3_form()};
  Rng rng(555);
  for (int trial = 0; trial < 10; ++trial) {
    forms.push_back(random_st_form(2 + rng.index(4), rng));
  }
  for (const STForm& f : forms) {
    ApproxParams p;
    try {
      p = build_params(f, 0.02);
    } catch (const DegenerateDenominator&) {
      continue;
    }
    for (const auto& [j, k] : p.topology.edges) {
      worst_anti = std::max(worst_anti,
                            std::abs(p.a_of(j, k) + p.a_of(k, j)));
      Complex target;
      if (k >= f.m) {
        target = f.t(j, k);
      } else {
        target = 0.02 * f.S(j, k);
        for (std::size_t l = f.m; l < f.n; ++l) {
          target += f.t(j, l) * std::conj(f.t(k, l));
        }
      }
      const Complex rebuilt =
          std::exp(Complex(0.0, 2.0 * 0.02 * p.a_of(j, k))) *
          signed_modulus(target);
      worst_gauge =
          std::max(worst_gauge, std::abs(rebuilt - target) /
                                    std::max(1.0, std::abs(target)));
    }
  }

  for (std::size_t n : {2, 3, 4, 5}) {
    for (double alpha : {-3.0, 0.0, 2.5}) {
      const LimitCheckReport rep =
          check_limits(delta_coupling(n, alpha), {0.1, 0.01});
      for (const auto& e : rep.condition1) {
        for (double v : e.values) {
          worst_limit = std::max(worst_limit, std::abs(v - 1.0));
        }
      }
      for (const auto& e : rep.condition2) {
        for (double v : e.values) {
          worst_limit = std::max(worst_limit, std::abs(v - e.expected));
        }
      }
    }
  }
  ok = worst_gauge < 1e-12 && worst_limit <= 1e-12 && worst_anti == 0.0;
  std::ostringstream msg;
  msg << "network parameter identities: gauge rebuild (worst " << worst_gauge
      << "), delta-family limit values (worst deviation " << worst_limit
      << "), potential antisymmetry (worst " << worst_anti << ")";
  report(5, ok, msg.str());
}

// --- criterion 6 ---------------------------------------------------------

void criterion_6() {
  bool ok = true;
  double worst = 0.0;
  for (const STForm& f : {delta_coupling(3, 2.0), complex_degree3_form()}) {
    const SpectralPoint sp = default_spectral_point(f);
    for (double d : {0.1, 0.01}) {
      const ResolventAg r = assemble_m(build_params(f, d), sp);
      std::vector<AgIndex> cols;
      for (std::size_t j = 0; j < f.n; ++j) {
        cols.push_back(AgIndex::halfline(j));
      }
      for (const auto& [l, h] : r.halves) {
        cols.push_back(AgIndex::segment(l, h));
      }
      for (const AgIndex& col : cols) {
        for (int s = 0; s < 10; ++s) {
          const double frac = (s + 0.5) / 10.0;
          const double y =
              col.is_segment ? frac * d : frac * 2.0 / sp.kappa.real();
          for (const auto& [l, h] : r.halves) {
            const double w_gap =
                std::abs(eval_kernel_ag(r, AgIndex::segment(l, h), col, 0.0, y) -
                         eval_kernel_ag(r, AgIndex::segment(h, l), col, 0.0, y));
            const double v_gap =
                std::abs(eval_kernel_ag(r, AgIndex::halfline(l), col, 0.0, y) -
                         eval_kernel_ag(r, AgIndex::segment(l, h), col, d, y));
            worst = std::max({worst, w_gap, v_gap});
          }
        }
      }
    }
  }
  ok = worst < 1e-9;
  std::ostringstream msg;
  msg << "network kernel continuity at the middle points and endpoints "
         "(worst gap "
      << worst << ")";
  report(6, ok, msg.str());
}

// --- criterion 7 ---------------------------------------------------------

void criterion_7() {
  bool ok = true;
  std::ostringstream msg;
  msg << "first-order convergence of the network Krein block (halving "
         "ratios:";
  for (const STForm& f : {delta_coupling(2, 1.0), delta_coupling(3, 2.0),
                          complex_degree3_form(), dirichlet_form(3)}) {
    const SpectralPoint sp = default_spectral_point(f);
    const CMatrix lambda = lambda_ad(f, sp).lambda;
    const double e1 =
        frob_diff(assemble_m(build_params(f, 1e-2), sp).minv, lambda);
    const double e2 =
        frob_diff(assemble_m(build_params(f, 5e-3), sp).minv, lambda);
    const double ratio = e1 / e2;
    msg << " " << ratio;
    if (!(ratio >= 1.6 && ratio <= 2.4)) ok = false;
  }
  msg << ")";
  report(7, ok, msg.str());
}

// --- criterion 8 ---------------------------------------------------------

void criterion_8() {
  const std::vector<double> grid = {0.2, 0.1, 0.05, 0.025, 0.0125};
  bool decreasing = true, envelope = true, slope_ok = true;
  std::ostringstream detail;
  for (const STForm& f : {delta_coupling(2, 1.0), complex_degree3_form()}) {
    const ConvergenceReport rep =
        convergence_sweep(f, grid, default_spectral_point(f), QuadConfig{});
    for (std::size_t i = 0; i + 1 < rep.hs_norms.size(); ++i) {
      if (!(rep.hs_norms[i] > rep.hs_norms[i + 1])) decreasing = false;
    }
    if (!rep.envelope_ok) envelope = false;
    if (!(rep.slope >= 0.4)) slope_ok = false;
    detail << " [slope " << rep.slope << ", envelope "
           << (rep.envelope_ok ? "holds" : "violated") << ", hs "
           << rep.hs_norms.front() << " -> " << rep.hs_norms.back() << "]";
  }
  std::ostringstream msg;
  msg << "norm-resolvent rate sweep:" << detail.str()
      << " (a) decreasing=" << (decreasing ? "yes" : "no")
      << " (b) sqrt-envelope anchored at d=0.2=" << (envelope ? "yes" : "no")
      << " (c) slope>=0.4=" << (slope_ok ? "yes" : "no");
  report(8, decreasing && envelope && slope_ok, msg.str());
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
  } else {
    std::printf("%d acceptance criterion(s) failed\n", failures);
  }
  return failures;
}
