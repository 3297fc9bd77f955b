#include "coldscat/propagator.hpp"

#include <lapacke.h>

#include <cmath>
#include <string>

#include "coldscat/errors.hpp"
#include "coldscat/units.hpp"

namespace coldscat {

namespace {

// Exact log-derivative propagator pieces for a constant reference
// potential m over a half-sector of width h:
//   d1 = q coth(qh), d2 = q csch(qh)      (m > 0, q = sqrt(m))
//   d1 = k cot(kh),  d2 = k csc(kh)       (m < 0, k = sqrt(-m))
// with the series forms near m = 0 to avoid cancellation.
struct RefPieces {
  double d1, d2;
};

RefPieces reference_pieces(double m, double h) {
  const double mh2 = m * h * h;
  if (std::abs(mh2) < 1e-10)
    return {1.0 / h + m * h / 3.0, 1.0 / h - m * h / 6.0};
  if (m > 0) {
    const double q = std::sqrt(m), x = q * h;
    if (x > 20.0) return {q, 2.0 * q * std::exp(-x)};
    return {q * std::cosh(x) / std::sinh(x), q / std::sinh(x)};
  }
  const double k = std::sqrt(-m), x = k * h;
  const double s = std::sin(x);
  if (std::abs(s) < 1e-12)
    throw NumericalBreakdown("reference propagator pole (k h near n pi)");
  return {k * std::cos(x) / s, k / s};
}

class SymWorkspace {
 public:
  explicit SymWorkspace(int n) : n_(n), ipiv_(n), work_(std::max(64 * n, n)) {}

  // In-place symmetric (Bunch-Kaufman) inverse; only the lower triangle
  // of the result is referenced afterwards. Returns false on breakdown.
  bool invert(Eigen::MatrixXd& a) {
    lapack_int info = LAPACKE_dsytrf_work(
        LAPACK_COL_MAJOR, 'L', n_, a.data(), n_, ipiv_.data(), work_.data(),
        static_cast<lapack_int>(work_.size()));
    if (info != 0) return false;
    info = LAPACKE_dsytri_work(LAPACK_COL_MAJOR, 'L', n_, a.data(), n_,
                               ipiv_.data(), work_.data());
    return info == 0;
  }

 private:
  int n_;
  std::vector<lapack_int> ipiv_;
  std::vector<double> work_;
};

struct SectorContext {
  const CouplingMatrixSet* w;
  double e_total;
  Scheme scheme;
  SymWorkspace* ws;
  Eigen::MatrixXd ma, mc, mb;  // M at sector start / midpoint / end
  Eigen::MatrixXd dc, dct, x, tmp;
  Eigen::VectorXd d1, d2, ref;
};

// One half-step of the invariant-imbedding recursion:
//   Y_out = (D1 + Qr) - D2 (Y + D1 + Ql)^-1 D2
// with diagonal D1, D2 and symmetric quadrature terms Ql, Qr.
bool half_step(SectorContext& c, Eigen::MatrixXd& y,
               const Eigen::MatrixXd& ql, const Eigen::MatrixXd& qr,
               double h) {
  const int n = y.rows();
  c.x = y + ql;
  c.x.diagonal() += c.d1;
  if (!c.ws->invert(c.x)) return false;
  // sandwich with the diagonal d2; only the lower triangle of x is valid
  for (int j = 0; j < n; ++j) {
    for (int i = j; i < n; ++i) {
      const double v = qr(i, j) - c.d2(i) * c.x(i, j) * c.d2(j);
      y(i, j) = v;
      y(j, i) = v;
    }
  }
  y.diagonal() += c.d1;
  (void)h;
  return true;
}

// Propagate Y across [a, b] with one sector (two half-steps around the
// midpoint). Returns false if a factorization breaks down.
bool do_sector(SectorContext& c, Eigen::MatrixXd& y, double a, double b) {
  const int n = y.rows();
  const double mid = 0.5 * (a + b);
  const double h = 0.5 * (b - a);

  c.w->m_at(a, c.e_total, c.ma);
  c.w->m_at(mid, c.e_total, c.mc);
  c.w->m_at(b, c.e_total, c.mb);

  if (c.scheme == Scheme::manolopoulos)
    c.ref = c.mc.diagonal();
  else
    c.ref.setZero(n);

  c.d1.resize(n);
  c.d2.resize(n);
  for (int i = 0; i < n; ++i) {
    RefPieces p;
    try {
      p = reference_pieces(c.ref(i), h);
    } catch (const NumericalBreakdown&) {
      return false;
    }
    c.d1(i) = p.d1;
    c.d2(i) = p.d2;
  }

  c.ma.diagonal() -= c.ref;
  c.mc.diagonal() -= c.ref;
  c.mb.diagonal() -= c.ref;

  // modified midpoint term: (6/h^2) (I - (I + h^2/6 M_c)^-1), symmetric
  const double alpha = h * h / 6.0;
  c.dc = alpha * c.mc;
  c.dc.diagonal().array() += 1.0;
  if (!c.ws->invert(c.dc)) return false;
  for (int j = 0; j < n; ++j)
    for (int i = j; i < n; ++i) {
      const double v = -c.dc(i, j) / alpha;
      c.dct(i, j) = v;
      c.dct(j, i) = v;
    }
  c.dct.diagonal().array() += 1.0 / alpha;

  c.tmp = (2.0 * h / 3.0) * c.dct;
  if (!half_step(c, y, (h / 3.0) * c.ma, c.tmp, h)) return false;
  if (!half_step(c, y, c.tmp, (h / 3.0) * c.mb, h)) return false;
  return true;
}

bool sector_recursive(SectorContext& c, Eigen::MatrixXd& y, double a,
                      double b, int depth) {
  Eigen::MatrixXd trial = y;
  if (do_sector(c, trial, a, b)) {
    y.swap(trial);
    return true;
  }
  if (depth >= 3) return false;
  const double mid = 0.5 * (a + b) * (1.0 + 1e-6);  // perturbed boundary
  Eigen::MatrixXd saved = y;
  if (sector_recursive(c, saved, a, mid, depth + 1) &&
      sector_recursive(c, saved, mid, b, depth + 1)) {
    y.swap(saved);
    return true;
  }
  return false;
}

}  // namespace

std::vector<double> build_sector_grid(const CouplingMatrixSet& w,
                                      const RadialGrid& grid,
                                      double e_top_cm1) {
  if (!(grid.r_min > 0) || !(grid.r_max > grid.r_min) || !(grid.step > 0))
    throw InvalidArgument("build_sector_grid: bad radial grid");

  std::vector<double> bounds{grid.r_min};
  const int n = w.size();
  const double inv_b = 1.0 / units::h2_over_2mu(w.mu_me());
  Eigen::MatrixXd wm;

  double r = grid.r_min;
  while (r < grid.r_max - 1e-12) {
    double h = grid.step;
    if (grid.control != StepControl::fixed) {
      w.w_at(r, wm);
      // fastest local reference wavenumber at the scan's top energy
      double k2max = 0.0, pot = 0.0;
      for (int i = 0; i < n; ++i) {
        k2max = std::max(k2max, inv_b * (e_top_cm1 - wm(i, i)));
        pot = std::max(pot,
                       std::abs(wm(i, i) - w.thresholds_cm1()(i)));
      }
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) pot = std::max(pot, std::abs(wm(i, j)));

      if (grid.control == StepControl::wavelength) {
        if (k2max > 0)
          h = grid.wl_fraction * 2.0 * M_PI / std::sqrt(k2max);
        else
          h = grid.step_max;
      } else {  // StepControl::potential
        const double q = std::sqrt(std::max(inv_b * pot, 1e-30));
        h = grid.kref_cap / q;
      }
      if (k2max > 0) h = std::min(h, grid.kref_cap / std::sqrt(k2max));
      h = std::min(std::max(h, grid.step), grid.step_max);
    }
    r = std::min(r + h, grid.r_max);
    bounds.push_back(r);
  }
  if (bounds.size() < 2)
    throw InvalidArgument("build_sector_grid: empty grid");
  return bounds;
}

LogDerivState propagate_on_grid(const CouplingMatrixSet& w,
                                double e_total_cm1,
                                const std::vector<double>& bounds,
                                Scheme scheme, double y0) {
  const int n = w.size();
  if (n == 0) throw InvalidArgument("propagate: empty channel block");

  {
    // start must lie inside the repulsive wall for every channel
    Eigen::MatrixXd w0 = w.w_at(bounds.front());
    for (int i = 0; i < n; ++i)
      if (w0(i, i) < e_total_cm1)
        throw InvalidArgument(
            "propagate: R_min is classically allowed for channel " +
            std::to_string(i) + "; move R_min inward");
  }

  SymWorkspace ws(n);
  SectorContext ctx;
  ctx.w = &w;
  ctx.e_total = e_total_cm1;
  ctx.scheme = scheme;
  ctx.ws = &ws;
  ctx.dct.resize(n, n);

  LogDerivState st;
  st.y = Eigen::MatrixXd::Identity(n, n) * y0;

  for (size_t s = 0; s + 1 < bounds.size(); ++s) {
    if (!sector_recursive(ctx, st.y, bounds[s], bounds[s + 1], 0))
      throw NumericalBreakdown(
          "propagate: singular sector solve at R = " +
          std::to_string(bounds[s]) + " (sector " + std::to_string(s) + ")");
    if (!st.y.allFinite())
      throw NumericalBreakdown("propagate: non-finite Y at R = " +
                               std::to_string(bounds[s + 1]));
  }

  st.r = bounds.back();
  st.sectors = static_cast<int>(bounds.size()) - 1;
  const double scale = st.y.cwiseAbs().maxCoeff();
  st.symmetry_defect =
      (st.y - st.y.transpose()).cwiseAbs().maxCoeff() / (scale > 0 ? scale : 1);
  return st;
}

LogDerivState propagate(const CouplingMatrixSet& w, double e_total_cm1,
                        const RadialGrid& grid) {
  const auto bounds = build_sector_grid(w, grid, e_total_cm1);
  return propagate_on_grid(w, e_total_cm1, bounds, grid.scheme, grid.y0);
}

}  // namespace coldscat
