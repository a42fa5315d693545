// Copyright 2026 The qgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "qgraph/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qgraph {

void gauss_legendre(std::size_t n, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Legendre recurrence for P_n(x) and P_n'(x).
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double kk = static_cast<double>(k);
        const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
}

namespace {

struct Rule1D {
  std::vector<double> x;
  std::vector<double> w;
};

Rule1D scaled_rule(std::size_t n, double a, double b) {
  std::vector<double> nodes, weights;
  gauss_legendre(n, nodes, weights);
  Rule1D r;
  r.x.resize(n);
  r.w.resize(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (std::size_t i = 0; i < n; ++i) {
    r.x[i] = mid + half * nodes[i];
    r.w[i] = half * weights[i];
  }
  return r;
}

// Halfline rule: panels [0, 1/re_kappa] and [1/re_kappa, x_max].
Rule1D halfline_rule(std::size_t nodes_per_panel, double re_kappa,
                     double x_max) {
  const double split = 1.0 / re_kappa;
  if (x_max <= split) return scaled_rule(nodes_per_panel, 0.0, x_max);
  Rule1D a = scaled_rule(nodes_per_panel, 0.0, split);
  const Rule1D b = scaled_rule(nodes_per_panel, split, x_max);
  a.x.insert(a.x.end(), b.x.begin(), b.x.end());
  a.w.insert(a.w.end(), b.w.begin(), b.w.end());
  return a;
}

struct BlockNormsOnly {
  double nj = 0.0;
  double jn = 0.0;
  double jj = 0.0;
};

// Quadrature of the mixed and segment-segment blocks of |G^Ag|^2.
BlockNormsOnly integrate_blocks(const ResolventAg& r, const QuadConfig& q,
                                std::size_t nodes_halfline,
                                std::size_t nodes_segment) {
  const Complex k = r.spectral.kappa;
  const double re_k = k.real();
  const double d = r.params.d;
  const double x_max = q.x_max > 0.0 ? q.x_max : 20.0 / re_k;
  const std::size_t n = r.params.topology.n;

  const Rule1D hl = halfline_rule(nodes_halfline, re_k, x_max);
  const Rule1D seg = scaled_rule(nodes_segment, 0.0, d);

  double halfline_mass = 0.0;  // integral of e^{-2 Re kappa x}
  for (std::size_t i = 0; i < hl.x.size(); ++i) {
    halfline_mass += hl.w[i] * std::exp(-2.0 * re_k * hl.x[i]);
  }

  const std::size_t ns = seg.x.size();
  std::vector<Complex> sh_y(ns), sh_dy(ns);
  for (std::size_t i = 0; i < ns; ++i) {
    sh_y[i] = std::sinh(k * seg.x[i]);
    sh_dy[i] = std::sinh(k * (d - seg.x[i]));
  }

  BlockNormsOnly out;
  // Halfline rows x segment columns: |e^{-kappa x}|^2 factors out.
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& [lp, hp] : r.halves) {
      const Complex c0 = lambda_nz(r, j, lp, hp);
      const Complex cd = lambda_nd(r, j, lp, hp);
      double iy = 0.0;
      for (std::size_t i = 0; i < ns; ++i) {
        iy += seg.w[i] * std::norm(c0 * sh_y[i] + cd * sh_dy[i]);
      }
      out.nj += halfline_mass * iy;
    }
  }
  // Segment rows x halfline columns.
  for (const auto& [l, h] : r.halves) {
    for (std::size_t jp = 0; jp < n; ++jp) {
      const Complex c0 = lambda_zn(r, l, h, jp);
      const Complex cd = lambda_dn(r, l, h, jp);
      double ix = 0.0;
      for (std::size_t i = 0; i < ns; ++i) {
        ix += seg.w[i] * std::norm(c0 * sh_y[i] + cd * sh_dy[i]);
      }
      out.jn += ix * halfline_mass;
    }
  }
  // Segment rows x segment columns. On the diagonal pairs the free kernel
  // has a derivative kink across x = y, so the y integration is split there
  // to keep the product rule spectrally accurate.
  for (const auto& [l, h] : r.halves) {
    for (const auto& [lp, hp] : r.halves) {
      const Complex czz = lambda_zz(r, l, h, lp, hp);
      const Complex czd = lambda_zd(r, l, h, lp, hp);
      const Complex cdz = lambda_dz(r, l, h, lp, hp);
      const Complex cdd = lambda_dd(r, l, h, lp, hp);
      const bool diag = l == lp && h == hp;
      double acc = 0.0;
      for (std::size_t ix = 0; ix < ns; ++ix) {
        const double x = seg.x[ix];
        const Complex shx = sh_y[ix];
        const Complex shdx = sh_dy[ix];
        if (!diag) {
          for (std::size_t iy = 0; iy < ns; ++iy) {
            const Complex g = shx * (czz * sh_y[iy] + czd * sh_dy[iy]) +
                              shdx * (cdz * sh_y[iy] + cdd * sh_dy[iy]);
            acc += seg.w[ix] * seg.w[iy] * std::norm(g);
          }
          continue;
        }
        for (auto [ya, yb] : {std::pair{0.0, x}, std::pair{x, d}}) {
          if (yb <= ya) continue;
          // Scaled nodes for [ya, yb] from the reference rule on [0, d].
          for (std::size_t iy = 0; iy < ns; ++iy) {
            const double t = seg.x[iy] / d;  // reference in [0, 1]
            const double y = ya + (yb - ya) * t;
            const double wy = seg.w[iy] * (yb - ya) / d;
            const Complex shy = std::sinh(k * y);
            const Complex shdy2 = std::sinh(k * (d - y));
            Complex g = shx * (czz * shy + czd * shdy2) +
                        shdx * (cdz * shy + cdd * shdy2);
            g += (x <= y ? shx * shdy2 : shy * shdx) / (k * std::sinh(k * d));
            acc += seg.w[ix] * wy * std::norm(g);
          }
        }
      }
      out.jj += acc;
    }
  }
  return out;
}

}  // namespace

double hs_nn_closed_form(const CMatrix& delta_lambda, Complex kappa) {
  const double re_k = kappa.real();
  double sum = 0.0;
  for (std::size_t i = 0; i < delta_lambda.rows(); ++i)
    for (std::size_t j = 0; j < delta_lambda.cols(); ++j)
      sum += std::norm(delta_lambda(i, j));
  return sum / ((2.0 * re_k) * (2.0 * re_k));
}

KernelDifferenceBlockNorms hs_norm_difference(const STForm& f, double d,
                                              SpectralPoint sp,
                                              const QuadConfig& q) {
  const ApproxParams params = build_params(f, d);
  const ResolventAg ag = assemble_m(params, sp);
  const ResolventAd ad = lambda_ad(f, sp);

  KernelDifferenceBlockNorms out;
  out.nn = hs_nn_closed_form(ag.minv - ad.lambda, sp.kappa);

  const BlockNormsOnly coarse =
      integrate_blocks(ag, q, q.nodes_halfline, q.nodes_segment);
  const BlockNormsOnly fine =
      integrate_blocks(ag, q, 2 * q.nodes_halfline, 2 * q.nodes_segment);

  const double coarse_total = out.nn + coarse.nj + coarse.jn + coarse.jj;
  const double fine_total = out.nn + fine.nj + fine.jn + fine.jj;
  if (fine_total > 0.0 &&
      std::abs(fine_total - coarse_total) > 1e-4 * fine_total) {
    throw QuadratureNotConverged(
        "doubling quadrature nodes moved the Hilbert-Schmidt total by more "
        "than 1e-4 relative");
  }
  out.nj = fine.nj;
  out.jn = fine.jn;
  out.jj = fine.jj;
  return out;
}

ConvergenceReport convergence_sweep(const STForm& f,
                                    const std::vector<double>& d_values,
                                    SpectralPoint sp, const QuadConfig& q) {
  if (d_values.size() < 3) {
    throw InsufficientPoints("a convergence sweep needs at least 3 d values");
  }
  for (std::size_t i = 0; i + 1 < d_values.size(); ++i) {
    if (!(d_values[i] > d_values[i + 1])) {
      throw InsufficientPoints("d values must be strictly decreasing");
    }
  }

  ConvergenceReport rep;
  rep.kappa = sp.kappa;
  rep.d_values = d_values;
  for (double d : d_values) {
    const KernelDifferenceBlockNorms b = hs_norm_difference(f, d, sp, q);
    rep.blocks.push_back(b);
    rep.hs_norms.push_back(std::sqrt(b.total()));
  }

  const std::size_t n = d_values.size();
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = std::log(d_values[i]);
    const double y = std::log(rep.hs_norms[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double dn = static_cast<double>(n);
  rep.slope = (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
  rep.intercept = (sy - rep.slope * sx) / dn;

  rep.envelope_c = rep.hs_norms.front() / std::sqrt(d_values.front());
  rep.envelope_ok = true;
  for (std::size_t i = 1; i < n; ++i) {
    if (rep.hs_norms[i] >
        rep.envelope_c * std::sqrt(d_values[i]) * (1.0 + 1e-12)) {
      rep.envelope_ok = false;
    }
  }
  return rep;
}

}  // namespace qgraph
