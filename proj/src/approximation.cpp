// Copyright 2026 The qgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "qgraph/approximation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace qgraph {

namespace {

constexpr double kZeroTestTol = 1e-12;

// Kills negative-zero imaginary parts so that arg() lands on the +pi branch
// deterministically for negative real inputs.
Complex normalize_signed_zero(Complex c) {
  if (c.imag() == 0.0) return Complex(c.real(), 0.0);
  return c;
}

// arg(c)/(2d), shifted down by pi/(2d) on the Re < 0 branch; the resulting
// phase satisfies exp(2 i d a) = c / <c>.
double gauge_potential(Complex c, double d) {
  c = normalize_signed_zero(c);
  double a = std::arg(c) / (2.0 * d);
  if (c.real() < 0.0) a -= std::numbers::pi / (2.0 * d);
  return a;
}

// c_{jk} = d S_jk + sum_l T_jl conj(T_kl) for canonical slots j, k < m.
Complex pair_denominator(const STForm& f, std::size_t j, std::size_t k,
                         double d) {
  Complex c = d * f.S(j, k);
  for (std::size_t l = f.m; l < f.n; ++l) c += f.t(j, l) * std::conj(f.t(k, l));
  return c;
}

}  // namespace

double signed_modulus(Complex c) {
  const double a = std::abs(c);
  return c.real() >= 0.0 ? a : -a;
}

bool ApproxTopology::connected(std::size_t j, std::size_t k) const {
  const auto& nj = neighbor_sets[j];
  return std::binary_search(nj.begin(), nj.end(), k);
}

ApproxTopology neighbor_sets(const STForm& f) {
  ApproxTopology topo;
  topo.n = f.n;
  topo.m = f.m;
  topo.neighbor_sets.assign(f.n, {});

  const double th_s = kZeroTestTol * f.S.max_abs();
  const double th_t = kZeroTestTol * f.T.max_abs();
  const auto s_nonzero = [&](std::size_t j, std::size_t k) {
    return std::abs(f.S(j, k)) > th_s;
  };
  const auto t_nonzero = [&](std::size_t j, std::size_t l) {
    return std::abs(f.t(j, l)) > th_t;
  };

  for (std::size_t j = 0; j < f.m; ++j) {
    auto& nj = topo.neighbor_sets[j];
    for (std::size_t k = 0; k < f.m; ++k) {
      if (k == j) continue;
      bool shared = false;
      for (std::size_t l = f.m; l < f.n && !shared; ++l) {
        shared = t_nonzero(j, l) && t_nonzero(k, l);
      }
      if (shared || s_nonzero(j, k)) nj.push_back(k);
    }
    for (std::size_t l = f.m; l < f.n; ++l) {
      if (t_nonzero(j, l)) nj.push_back(l);
    }
  }
  for (std::size_t l = f.m; l < f.n; ++l) {
    auto& nl = topo.neighbor_sets[l];
    for (std::size_t k = 0; k < f.m; ++k) {
      if (t_nonzero(k, l)) nl.push_back(k);
    }
  }

  for (std::size_t j = 0; j < f.n; ++j) {
    for (std::size_t k : topo.neighbor_sets[j]) {
      if (j < k) topo.edges.emplace_back(j, k);
    }
  }
  std::sort(topo.edges.begin(), topo.edges.end());
  return topo;
}

double ApproxParams::w_of(std::size_t j, std::size_t k) const {
  return w.at(std::minmax(j, k));
}

double ApproxParams::a_of(std::size_t j, std::size_t k) const {
  const double val = a.at(std::minmax(j, k));
  return j < k ? val : -val;
}

ApproxParams build_params(const STForm& f, double d) {
  if (!(d > 0.0)) {
    throw DomainViolation("edge half-length d must be positive");
  }
  ApproxParams p;
  p.d = d;
  p.topology = neighbor_sets(f);
  p.v.assign(f.n, 0.0);

  for (std::size_t l = f.m; l < f.n; ++l) {
    double sum = 0.0;
    for (std::size_t h = 0; h < f.m; ++h) sum += signed_modulus(f.t(h, l));
    p.v[l] =
        (1.0 - static_cast<double>(p.topology.neighbor_sets[l].size()) + sum) /
        d;
  }

  for (const auto& [j, k] : p.topology.edges) {
    if (k >= f.m) {
      // j < m <= k: strength and gauge from the T entry alone.
      const Complex t = f.t(j, k);
      p.w[{j, k}] = (-2.0 + 1.0 / signed_modulus(t)) / d;
      p.a[{j, k}] = gauge_potential(t, d);
    } else {
      const Complex c = pair_denominator(f, j, k, d);
      const double scale =
          std::abs(d * f.S(j, k)) + std::abs(c - d * f.S(j, k)) + 1.0;
      if (std::abs(c) <= kZeroTestTol * scale) {
        throw DegenerateDenominator(
            "pair denominator vanishes for edge {" + std::to_string(j + 1) +
                "," + std::to_string(k + 1) + "} at d = " + std::to_string(d),
            d);
      }
      p.w[{j, k}] = (-1.0 / signed_modulus(c) - 2.0) / d;
      p.a[{j, k}] = gauge_potential(c, d);
    }
  }

  for (std::size_t j = 0; j < f.m; ++j) {
    double vj = f.S(j, j).real() -
                static_cast<double>(p.topology.neighbor_sets[j].size()) / d;
    for (std::size_t k : p.topology.neighbor_sets[j]) {
      if (k < f.m) vj -= signed_modulus(pair_denominator(f, j, k, d)) / d;
    }
    for (std::size_t l = f.m; l < f.n; ++l) {
      const double t = signed_modulus(f.t(j, l));
      vj += (1.0 + t) * t / d;
    }
    p.v[j] = vj;
  }
  return p;
}

LimitCheckReport check_limits(const STForm& f,
                              const std::vector<double>& d_sequence) {
  LimitCheckReport report;
  report.d_values = d_sequence;

  const ApproxTopology topo = neighbor_sets(f);
  if (topo.edges.empty()) return report;

  for (std::size_t l = f.m; l < f.n; ++l) {
    LimitCheckEntry e;
    e.j = l;
    e.expected = 1.0;
    report.condition1.push_back(e);
    for (std::size_t k : topo.neighbor_sets[l]) {
      LimitCheckEntry e2;
      e2.j = l;
      e2.k = k;
      e2.expected = signed_modulus(f.t(k, l));
      report.condition2.push_back(e2);
    }
  }
  for (const auto& [j, k] : topo.edges) {
    if (k < f.m) {
      LimitCheckEntry e7;
      e7.j = j;
      e7.k = k;
      e7.expected = -signed_modulus(pair_denominator(f, j, k, 0.0));
      report.condition7.push_back(e7);
    }
  }

  for (double d : d_sequence) {
    const ApproxParams p = build_params(f, d);
    const auto ratio = [&](std::size_t j, std::size_t k) {
      return 1.0 / (2.0 + d * p.w_of(j, k));
    };
    for (auto& e : report.condition1) {
      double val = d * p.v[e.j] +
                   static_cast<double>(topo.neighbor_sets[e.j].size());
      for (std::size_t k : topo.neighbor_sets[e.j]) val -= ratio(e.j, k);
      e.values.push_back(val);
      e.finite = e.finite && std::isfinite(val);
    }
    for (auto& e : report.condition2) {
      const double val = ratio(e.j, e.k);
      e.values.push_back(val);
      e.finite = e.finite && std::isfinite(val);
    }
    for (auto& e : report.condition7) {
      const double val = ratio(e.j, e.k);
      e.values.push_back(val);
      e.finite = e.finite && std::isfinite(val);
    }
  }
  return report;
}

}  // namespace qgraph
