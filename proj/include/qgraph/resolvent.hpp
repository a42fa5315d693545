// Copyright 2026 The qgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qgraph/approximation.hpp"
#include "qgraph/coupling.hpp"

namespace qgraph {

/// Spectral parameter k^2 = -kappa^2 with Re kappa > 0, on the negative real
/// axis for real kappa.
struct SpectralPoint {
  Complex kappa{1.0, 0.0};

  Complex k2() const { return -kappa * kappa; }
};

/// kappa = 1 + 2 max(1, ||S||_F); real, and large enough to keep
/// S + kappa (I + T T*) safely regular for the forms exercised here.
SpectralPoint default_spectral_point(const STForm& f);

/// Green's function of the Dirichlet halfline: sinh(kappa x_<) e^{-kappa x_>} / kappa.
Complex halfline_kernel(Complex kappa, double x, double y);

/// Green's function of the Dirichlet segment [0, d] carrying a constant
/// vector potential a_pot:
///   e^{i a x} sinh(kappa x_<) sinh(kappa (d - x_>)) / (kappa sinh kappa d) e^{-i a y}.
Complex segment_kernel(Complex kappa, double d, double a_pot, double x,
                       double y);

/// Star-graph resolvent data: the Krein coefficient matrix Lambda(k^2) in the
/// canonical edge order of `st`.
struct ResolventAd {
  SpectralPoint spectral;
  STForm st;
  CMatrix lambda;  // n x n
};

/// Builds Lambda two ways, as (A - kappa B)^{-1} (-B) and via the block form
///   [[R, R T], [T* R, T* R T]],  R = (S + kappa I + kappa T T*)^{-1},
/// checks they agree, and stores the block-form value. Throws KappaTooSmall
/// when S + kappa (I + T T*) is numerically singular (or Re kappa <= 0).
ResolventAd lambda_ad(const STForm& f, SpectralPoint sp);

/// Kernel entry of the star-graph resolvent, x on halfline j, y on halfline l.
Complex eval_kernel_ad(const ResolventAd& r, std::size_t j, std::size_t l,
                       double x, double y);

/// Row-wise boundary defect |A g(0) + B g'(0)| of the kernel columns, maximised
/// over the column halfline, where g_h = G_{h,col}(., y_sample). Near zero for
/// a correct Lambda.
std::vector<double> boundary_residual_ad(const ResolventAd& r, double y_sample);

/// Index into the approximating graph: either halfline j or the segment half
/// (l, h) running from the middle point W_{l,h} (x = 0) to V_l (x = d).
struct AgIndex {
  bool is_segment = false;
  std::size_t j = 0;
  std::size_t l = 0;
  std::size_t h = 0;

  static AgIndex halfline(std::size_t j) {
    AgIndex i;
    i.j = j;
    return i;
  }
  static AgIndex segment(std::size_t l, std::size_t h) {
    AgIndex i;
    i.is_segment = true;
    i.l = l;
    i.h = h;
    return i;
  }
};

/// Resolvent data of the approximating graph at edge half-length params.d:
/// the matrix M_d, its inverse, and the ordered list of segment halves.
struct ResolventAg {
  SpectralPoint spectral;
  ApproxParams params;
  CMatrix m_matrix;  // M_d
  CMatrix minv;      // (M_d)^{-1}
  std::vector<std::pair<std::size_t, std::size_t>> halves;  // (l, h), l asc

  /// e^{i d a_{(l,h)}}.
  Complex phase(std::size_t l, std::size_t h) const;
  /// 2 kappa cosh(kappa d) + w_{l,h} sinh(kappa d).
  Complex w_denominator(std::size_t l, std::size_t h) const;
  Complex sinh_kd() const;
};

/// Assembles M_d:
///   [M_d]_{jj} = kappa + kappa #N_j coth(kappa d)
///                - (kappa / sinh kappa d) sum_{h in N_j} kappa / D_{j,h} + v_j
///   [M_d]_{jh} = -(kappa^2 / sinh kappa d) e^{2 i d a_{(j,h)}} / D_{j,h}   (h in N_j)
/// with D_{j,h} = 2 kappa cosh(kappa d) + w_{j,h} sinh(kappa d), and inverts
/// it. Throws SingularM when the inversion pivots fail.
ResolventAg assemble_m(const ApproxParams& params, SpectralPoint sp);

/// All nine Krein coefficient tables of the approximating graph. Row/column
/// families: n = halflines, z = segment ends at the middle points (x = 0),
/// d = segment ends at the halfline endpoints (x = d). Entry order follows
/// ResolventAg::halves.
struct LambdaTables {
  CMatrix nn, nz, nd;
  CMatrix zn, zz, zd;
  CMatrix dn, dz, dd;
};

LambdaTables lambda_tables(const ResolventAg& r);

/// Individual coefficients (same notation as LambdaTables).
Complex lambda_nn(const ResolventAg& r, std::size_t j, std::size_t jp);
Complex lambda_nz(const ResolventAg& r, std::size_t j, std::size_t lp,
                  std::size_t hp);
Complex lambda_nd(const ResolventAg& r, std::size_t j, std::size_t lp,
                  std::size_t hp);
Complex lambda_zn(const ResolventAg& r, std::size_t l, std::size_t h,
                  std::size_t jp);
Complex lambda_zz(const ResolventAg& r, std::size_t l, std::size_t h,
                  std::size_t lp, std::size_t hp);
Complex lambda_zd(const ResolventAg& r, std::size_t l, std::size_t h,
                  std::size_t lp, std::size_t hp);
Complex lambda_dn(const ResolventAg& r, std::size_t l, std::size_t h,
                  std::size_t jp);
Complex lambda_dz(const ResolventAg& r, std::size_t l, std::size_t h,
                  std::size_t lp, std::size_t hp);
Complex lambda_dd(const ResolventAg& r, std::size_t l, std::size_t h,
                  std::size_t lp, std::size_t hp);

/// Kernel entry of the approximating-graph resolvent. Halfline coordinates
/// live on [0, inf), segment coordinates on [0, d]; anything else throws
/// DomainViolation.
Complex eval_kernel_ag(const ResolventAg& r, AgIndex row, AgIndex col,
                       double x, double y);

}  // namespace qgraph
