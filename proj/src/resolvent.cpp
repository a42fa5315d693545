// Copyright 2026 The qgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "qgraph/resolvent.hpp"

#include <algorithm>
#include <cmath>

namespace qgraph {

namespace {

CMatrix canonical_a(const STForm& f) {
  CMatrix a(f.n, f.n);
  a.set_block(0, 0, Complex(-1.0, 0.0) * f.S);
  a.set_block(f.m, 0, f.T.conjugate_transpose());
  a.set_block(f.m, f.m, Complex(-1.0, 0.0) * CMatrix::identity(f.n - f.m));
  return a;
}

CMatrix canonical_b(const STForm& f) {
  CMatrix b(f.n, f.n);
  b.set_block(0, 0, CMatrix::identity(f.m));
  b.set_block(0, f.m, f.T);
  return b;
}

}  // namespace

SpectralPoint default_spectral_point(const STForm& f) {
  SpectralPoint sp;
  sp.kappa = Complex(1.0 + 2.0 * std::max(1.0, f.S.frobenius_norm()), 0.0);
  return sp;
}

Complex halfline_kernel(Complex kappa, double x, double y) {
  const double lo = std::min(x, y);
  const double hi = std::max(x, y);
  return std::sinh(kappa * lo) * std::exp(-kappa * hi) / kappa;
}

Complex segment_kernel(Complex kappa, double d, double a_pot, double x,
                       double y) {
  const double lo = std::min(x, y);
  const double hi = std::max(x, y);
  const Complex body = std::sinh(kappa * lo) * std::sinh(kappa * (d - hi)) /
                       (kappa * std::sinh(kappa * d));
  return std::exp(Complex(0.0, a_pot * (x - y))) * body;
}

ResolventAd lambda_ad(const STForm& f, SpectralPoint sp) {
  if (sp.kappa.real() <= 0.0) {
    throw KappaTooSmall("Re kappa must be positive");
  }
  const Complex k = sp.kappa;
  const std::size_t n = f.n;
  const std::size_t m = f.m;

  CMatrix r;
  try {
    r = inverse(f.S + k * (CMatrix::identity(m) +
                           f.T * f.T.conjugate_transpose()));
  } catch (const SingularMatrix&) {
    throw KappaTooSmall("S + kappa (I + T T*) is singular; increase Re kappa");
  }

  CMatrix lambda(n, n);
  lambda.set_block(0, 0, r);
  lambda.set_block(0, m, r * f.T);
  lambda.set_block(m, 0, f.T.conjugate_transpose() * r);
  lambda.set_block(m, m, f.T.conjugate_transpose() * r * f.T);

  // Cross-check against the direct route (A - kappa B)^{-1} (-B).
  const CMatrix a = canonical_a(f);
  const CMatrix b = canonical_b(f);
  const CMatrix direct =
      inverse(a - k * b) * (Complex(-1.0, 0.0) * b);
  const double diff = (direct - lambda).frobenius_norm();
  if (diff > 1e-8 * std::max(1.0, lambda.frobenius_norm())) {
    throw Error("Krein coefficient routes disagree");
  }

  ResolventAd res;
  res.spectral = sp;
  res.st = f;
  res.lambda = lambda;
  return res;
}

Complex eval_kernel_ad(const ResolventAd& r, std::size_t j, std::size_t l,
                       double x, double y) {
  const Complex k = r.spectral.kappa;
  Complex val = r.lambda(j, l) * std::exp(-k * x) * std::exp(-k * y);
  if (j == l) val += halfline_kernel(k, x, y);
  return val;
}

std::vector<double> boundary_residual_ad(const ResolventAd& r,
                                         double y_sample) {
  const Complex k = r.spectral.kappa;
  const std::size_t n = r.st.n;
  const CMatrix a = canonical_a(r.st);
  const CMatrix b = canonical_b(r.st);
  // g(0) = Lambda e^{-kappa y} columnwise, g'(0) = (I - kappa Lambda) e^{-kappa y}.
  const CMatrix residual =
      a * r.lambda + b - k * (b * r.lambda);  // n x n, column = probe edge
  const double damp = std::abs(std::exp(-k * y_sample));
  std::vector<double> out(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double worst = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
      worst = std::max(worst, std::abs(residual(j, l)));
    }
    out[j] = worst * damp;
  }
  return out;
}

Complex ResolventAg::phase(std::size_t l, std::size_t h) const {
  return std::exp(Complex(0.0, params.d * params.a_of(l, h)));
}

Complex ResolventAg::w_denominator(std::size_t l, std::size_t h) const {
  const Complex k = spectral.kappa;
  return 2.0 * k * std::cosh(k * params.d) +
         params.w_of(l, h) * std::sinh(k * params.d);
}

Complex ResolventAg::sinh_kd() const {
  return std::sinh(spectral.kappa * params.d);
}

ResolventAg assemble_m(const ApproxParams& params, SpectralPoint sp) {
  if (sp.kappa.real() <= 0.0) {
    throw KappaTooSmall("Re kappa must be positive");
  }
  ResolventAg r;
  r.spectral = sp;
  r.params = params;

  const std::size_t n = params.topology.n;
  const Complex k = sp.kappa;
  const Complex sh = std::sinh(k * params.d);
  const Complex ch = std::cosh(k * params.d);
  if (std::abs(sh) == 0.0) {
    throw SingularM("sinh(kappa d) vanishes");
  }

  CMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& nj = params.topology.neighbor_sets[j];
    Complex diag = k + k * static_cast<double>(nj.size()) * ch / sh +
                   params.v[j];
    for (std::size_t h : nj) {
      const Complex den =
          2.0 * k * ch + params.w_of(j, h) * sh;
      diag -= (k / sh) * (k / den);
      m(j, h) -= (k * k / sh) *
                 std::exp(Complex(0.0, 2.0 * params.d * params.a_of(j, h))) /
                 den;
    }
    m(j, j) += diag;
  }

  r.m_matrix = m;
  try {
    r.minv = inverse(m);
  } catch (const SingularMatrix&) {
    throw SingularM("M_d is numerically singular");
  }
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t h : params.topology.neighbor_sets[l]) {
      r.halves.emplace_back(l, h);
    }
  }
  return r;
}

Complex lambda_nn(const ResolventAg& r, std::size_t j, std::size_t jp) {
  return r.minv(j, jp);
}

Complex lambda_nz(const ResolventAg& r, std::size_t j, std::size_t lp,
                  std::size_t hp) {
  return r.phase(lp, hp) / r.sinh_kd() * r.minv(j, lp);
}

Complex lambda_nd(const ResolventAg& r, std::size_t j, std::size_t lp,
                  std::size_t hp) {
  const Complex k = r.spectral.kappa;
  return (k / r.sinh_kd()) * r.phase(lp, hp) / r.w_denominator(lp, hp) *
         r.minv(j, lp);
}

Complex lambda_zn(const ResolventAg& r, std::size_t l, std::size_t h,
                  std::size_t jp) {
  return std::conj(r.phase(l, h)) / r.sinh_kd() * r.minv(l, jp);
}

Complex lambda_zz(const ResolventAg& r, std::size_t l, std::size_t h,
                  std::size_t lp, std::size_t hp) {
  const Complex sh = r.sinh_kd();
  return std::conj(r.phase(l, h)) / sh * r.phase(lp, hp) / sh * r.minv(l, lp);
}

Complex lambda_zd(const ResolventAg& r, std::size_t l, std::size_t h,
                  std::size_t lp, std::size_t hp) {
  const Complex k = r.spectral.kappa;
  const Complex sh = r.sinh_kd();
  return std::conj(r.phase(l, h)) / (sh * sh) * k * r.phase(lp, hp) /
         r.w_denominator(lp, hp) * r.minv(l, lp);
}

Complex lambda_dn(const ResolventAg& r, std::size_t l, std::size_t h,
                  std::size_t jp) {
  const Complex k = r.spectral.kappa;
  return k / r.w_denominator(l, h) / r.sinh_kd() *
         (std::conj(r.phase(l, h)) * r.minv(l, jp) +
          std::conj(r.phase(h, l)) * r.minv(h, jp));
}

Complex lambda_dz(const ResolventAg& r, std::size_t l, std::size_t h,
                  std::size_t lp, std::size_t hp) {
  const Complex k = r.spectral.kappa;
  const Complex sh = r.sinh_kd();
  return k / r.w_denominator(l, h) * r.phase(lp, hp) / (sh * sh) *
         (std::conj(r.phase(l, h)) * r.minv(l, lp) +
          std::conj(r.phase(h, l)) * r.minv(h, lp));
}

Complex lambda_dd(const ResolventAg& r, std::size_t l, std::size_t h,
                  std::size_t lp, std::size_t hp) {
  const Complex k = r.spectral.kappa;
  const Complex sh = r.sinh_kd();
  Complex inner = (k / sh) * r.phase(lp, hp) / r.w_denominator(lp, hp) *
                  (std::conj(r.phase(l, h)) * r.minv(l, lp) +
                   std::conj(r.phase(h, l)) * r.minv(h, lp));
  // The free-kernel contribution enters through the matching condition at
  // the middle point, which sums both orientations of the segment; the delta
  // therefore fires for the unordered pair.
  if ((l == lp && h == hp) || (l == hp && h == lp)) inner += 1.0 / k;
  return k / r.w_denominator(l, h) / sh * inner;
}

LambdaTables lambda_tables(const ResolventAg& r) {
  const std::size_t n = r.params.topology.n;
  const std::size_t nj = r.halves.size();
  LambdaTables t;
  t.nn = CMatrix(n, n);
  t.nz = CMatrix(n, nj);
  t.nd = CMatrix(n, nj);
  t.zn = CMatrix(nj, n);
  t.zz = CMatrix(nj, nj);
  t.zd = CMatrix(nj, nj);
  t.dn = CMatrix(nj, n);
  t.dz = CMatrix(nj, nj);
  t.dd = CMatrix(nj, nj);

  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t jp = 0; jp < n; ++jp) t.nn(j, jp) = lambda_nn(r, j, jp);
    for (std::size_t q = 0; q < nj; ++q) {
      const auto [lp, hp] = r.halves[q];
      t.nz(j, q) = lambda_nz(r, j, lp, hp);
      t.nd(j, q) = lambda_nd(r, j, lp, hp);
    }
  }
  for (std::size_t p = 0; p < nj; ++p) {
    const auto [l, h] = r.halves[p];
    for (std::size_t jp = 0; jp < n; ++jp) {
      t.zn(p, jp) = lambda_zn(r, l, h, jp);
      t.dn(p, jp) = lambda_dn(r, l, h, jp);
    }
    for (std::size_t q = 0; q < nj; ++q) {
      const auto [lp, hp] = r.halves[q];
      t.zz(p, q) = lambda_zz(r, l, h, lp, hp);
      t.zd(p, q) = lambda_zd(r, l, h, lp, hp);
      t.dz(p, q) = lambda_dz(r, l, h, lp, hp);
      t.dd(p, q) = lambda_dd(r, l, h, lp, hp);
    }
  }
  return t;
}

Complex eval_kernel_ag(const ResolventAg& r, AgIndex row, AgIndex col,
                       double x, double y) {
  const Complex k = r.spectral.kappa;
  const double d = r.params.d;

  if (row.is_segment ? (x < 0.0 || x > d) : (x < 0.0)) {
    throw DomainViolation("row coordinate outside its edge");
  }
  if (col.is_segment ? (y < 0.0 || y > d) : (y < 0.0)) {
    throw DomainViolation("column coordinate outside its edge");
  }

  if (!row.is_segment && !col.is_segment) {
    Complex val = r.minv(row.j, col.j) * std::exp(-k * x) * std::exp(-k * y);
    if (row.j == col.j) val += halfline_kernel(k, x, y);
    return val;
  }

  if (!row.is_segment && col.is_segment) {
    const Complex bracket =
        lambda_nz(r, row.j, col.l, col.h) * std::sinh(k * y) +
        lambda_nd(r, row.j, col.l, col.h) * std::sinh(k * (d - y));
    return std::exp(-k * x) *
           std::exp(Complex(0.0, -r.params.a_of(col.l, col.h) * y)) * bracket;
  }

  if (row.is_segment && !col.is_segment) {
    const Complex bracket =
        lambda_zn(r, row.l, row.h, col.j) * std::sinh(k * x) +
        lambda_dn(r, row.l, row.h, col.j) * std::sinh(k * (d - x));
    return std::exp(Complex(0.0, r.params.a_of(row.l, row.h) * x)) * bracket *
           std::exp(-k * y);
  }

  Complex val =
      std::sinh(k * x) *
          (lambda_zz(r, row.l, row.h, col.l, col.h) * std::sinh(k * y) +
           lambda_zd(r, row.l, row.h, col.l, col.h) * std::sinh(k * (d - y))) +
      std::sinh(k * (d - x)) *
          (lambda_dz(r, row.l, row.h, col.l, col.h) * std::sinh(k * y) +
           lambda_dd(r, row.l, row.h, col.l, col.h) * std::sinh(k * (d - y)));
  if (row.l == col.l && row.h == col.h) {
    const double lo = std::min(x, y);
    const double hi = std::max(x, y);
    val += std::sinh(k * lo) * std::sinh(k * (d - hi)) /
           (k * std::sinh(k * d));
  }
  return std::exp(Complex(0.0, r.params.a_of(row.l, row.h) * x)) * val *
         std::exp(Complex(0.0, -r.params.a_of(col.l, col.h) * y));
}

}  // namespace qgraph
