#include "coldscat/diatom.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "coldscat/errors.hpp"
#include "coldscat/units.hpp"

namespace coldscat {

DiatomCurve DiatomCurve::morse(MorseParams p, double reduced_mass_me) {
  if (!(p.de_cm1 > 0) || !(p.a_inv_bohr > 0) || !(p.re_bohr > 0))
    throw InvalidArgument("DiatomCurve::morse: parameters must be positive");
  if (!(reduced_mass_me > 0))
    throw InvalidArgument("DiatomCurve::morse: mass must be positive");
  DiatomCurve c;
  c.form_ = Form::morse;
  c.morse_ = p;
  c.mass_ = reduced_mass_me;
  c.re_ = p.re_bohr;
  c.dissociation_ = p.de_cm1;
  return c;
}

DiatomCurve DiatomCurve::tabulated(std::vector<double> r_bohr,
                                   std::vector<double> v_cm1,
                                   double reduced_mass_me) {
  if (r_bohr.size() < 3 || r_bohr.size() != v_cm1.size())
    throw InvalidArgument("DiatomCurve::tabulated: need >= 3 (r, V) points");
  for (size_t i = 1; i < r_bohr.size(); ++i)
    if (!(r_bohr[i] > r_bohr[i - 1]))
      throw InvalidArgument("DiatomCurve::tabulated: grid not increasing");
  if (!(reduced_mass_me > 0))
    throw InvalidArgument("DiatomCurve::tabulated: mass must be positive");

  DiatomCurve c;
  c.form_ = Form::tabulated;
  c.mass_ = reduced_mass_me;
  c.tab_lo_ = r_bohr.front();
  c.tab_hi_ = r_bohr.back();

  // Shift so the minimum sits at zero energy.
  auto it = std::min_element(v_cm1.begin(), v_cm1.end());
  const double vmin = *it;
  c.re_ = r_bohr[static_cast<size_t>(it - v_cm1.begin())];
  for (double& v : v_cm1) v -= vmin;
  c.dissociation_ = v_cm1.back();
  c.spline_ = CubicSpline(std::move(r_bohr), std::move(v_cm1));
  return c;
}

DiatomCurve DiatomCurve::from_file(const std::string& path,
                                   double reduced_mass_me) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open curve file: " + path);
  std::vector<double> r, v;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    double a, b;
    if (ss >> a >> b) {
      r.push_back(a);
      v.push_back(b);
    }
  }
  if (r.size() < 3)
    throw ConfigError("curve file has fewer than 3 data rows: " + path);
  return tabulated(std::move(r), std::move(v), reduced_mass_me);
}

double DiatomCurve::value(double r) const {
  if (form_ == Form::morse) {
    const double e = 1.0 - std::exp(-morse_.a_inv_bohr * (r - morse_.re_bohr));
    return morse_.de_cm1 * e * e;
  }
  return spline_(r);
}

double DiatomCurve::r_min_tab() const { return tab_lo_; }
double DiatomCurve::r_max_tab() const { return tab_hi_; }

namespace {

// Numerov sweep of chi'' = q(r) chi over a uniform grid. Returns the
// number of sign changes. q = 2mu/hbar^2 (Veff - E).
int numerov_outward(const std::vector<double>& q, double h,
                    std::vector<double>& chi) {
  const int n = static_cast<int>(q.size());
  const double h2 = h * h / 12.0;
  chi[0] = 0.0;
  chi[1] = 1e-120;
  int nodes = 0;
  for (int i = 1; i < n - 1; ++i) {
    const double c0 = 1.0 - h2 * q[i - 1];
    const double c1 = 2.0 + 10.0 * h2 * q[i];
    const double c2 = 1.0 - h2 * q[i + 1];
    chi[i + 1] = (c1 * chi[i] - c0 * chi[i - 1]) / c2;
    if (std::abs(chi[i + 1]) > 1e200) {
      const double s = 1e-200;
      for (int k = 0; k <= i + 1; ++k) chi[k] *= s;
    }
    if (chi[i + 1] * chi[i] < 0.0) ++nodes;
  }
  return nodes;
}

void numerov_inward(const std::vector<double>& q, double h, int m,
                    std::vector<double>& chi) {
  const int n = static_cast<int>(q.size());
  const double h2 = h * h / 12.0;
  chi[n - 1] = 0.0;
  chi[n - 2] = 1e-120;
  for (int i = n - 2; i > m; --i) {
    const double c0 = 1.0 - h2 * q[i + 1];
    const double c1 = 2.0 + 10.0 * h2 * q[i];
    const double c2 = 1.0 - h2 * q[i - 1];
    chi[i - 1] = (c1 * chi[i] - c0 * chi[i + 1]) / c2;
    if (std::abs(chi[i - 1]) > 1e200) {
      const double s = 1e-200;
      for (int k = i - 1; k <= n - 1; ++k) chi[k] *= s;
    }
  }
}

}  // namespace

RovibLevel solve_level(const DiatomCurve& curve, int v, int j,
                       const RadialGridSpec& grid) {
  if (v < 0 || j < 0) throw InvalidArgument("solve_level: v, j must be >= 0");
  if (grid.points < 16 || !(grid.r_max > grid.r_min))
    throw InvalidArgument("solve_level: bad radial grid");

  const int n = grid.points;
  const double h = (grid.r_max - grid.r_min) / (n - 1);
  auto r = std::make_shared<std::vector<double>>(n);
  for (int i = 0; i < n; ++i) (*r)[i] = grid.r_min + h * i;

  const double inv_b = 1.0 / units::h2_over_2mu(curve.reduced_mass_me());
  const double cent = j * (j + 1) * units::h2_over_2mu(curve.reduced_mass_me());

  std::vector<double> veff(n);
  for (int i = 0; i < n; ++i) {
    const double ri = (*r)[i];
    veff[i] = curve.value(ri);
    if (j > 0) {
      if (!(ri > 0))
        throw InvalidArgument("solve_level: grid must have r > 0 for j > 0");
      veff[i] += cent / (ri * ri);
    }
  }

  double e_lo = *std::min_element(veff.begin(), veff.end()) + 1e-12;
  double e_hi = veff[n - 1];
  if (!(e_hi > e_lo))
    throw NoSuchLevel("solve_level: no bound region on this grid");

  std::vector<double> q(n), chi(n);
  auto nodes_at = [&](double e) {
    for (int i = 0; i < n; ++i) q[i] = inv_b * (veff[i] - e);
    return numerov_outward(q, h, chi);
  };

  if (nodes_at(e_hi) <= v)
    throw NoSuchLevel("solve_level: level v=" + std::to_string(v) +
                      ", j=" + std::to_string(j) + " is not bound");
  if (nodes_at(e_lo) > v)
    throw ConvergenceError("solve_level: grid too coarse near the well");

  // Bisect on the node count of the outward solution; the count jumps
  // from v to v+1 exactly at the eigenvalue.
  for (int iter = 0; iter < 200 && e_hi - e_lo > 1e-13 * (1.0 + e_hi);
       ++iter) {
    const double mid = 0.5 * (e_lo + e_hi);
    (nodes_at(mid) > v ? e_hi : e_lo) = mid;
  }
  const double energy = 0.5 * (e_lo + e_hi);

  // Two-sided construction at the converged energy, matched at the
  // outermost classically allowed point.
  for (int i = 0; i < n; ++i) q[i] = inv_b * (veff[i] - energy);
  int m = n - 2;
  while (m > 1 && q[m] > 0.0) --m;
  if (m <= 1)
    throw ConvergenceError("solve_level: no classically allowed region");

  std::vector<double> out(n, 0.0), in(n, 0.0);
  numerov_outward(q, h, out);
  numerov_inward(q, h, m, in);
  if (in[m] == 0.0 || out[m] == 0.0)
    throw ConvergenceError("solve_level: degenerate match point");
  const double scale = out[m] / in[m];

  RovibLevel lvl;
  lvl.v = v;
  lvl.j = j;
  lvl.energy_cm1 = energy;
  lvl.r = r;
  lvl.chi.resize(n);
  for (int i = 0; i <= m; ++i) lvl.chi[i] = out[i];
  for (int i = m + 1; i < n; ++i) lvl.chi[i] = in[i] * scale;

  // Simpson normalization (n may be even; fall back to trapezoid tail).
  auto norm2 = [&]() {
    double s = 0.0;
    int last = (n % 2 == 1) ? n - 1 : n - 2;
    for (int i = 0; i + 2 <= last; i += 2)
      s += lvl.chi[i] * lvl.chi[i] + 4.0 * lvl.chi[i + 1] * lvl.chi[i + 1] +
           lvl.chi[i + 2] * lvl.chi[i + 2];
    s *= h / 3.0;
    if (n % 2 == 0)
      s += 0.5 * h * (lvl.chi[n - 2] * lvl.chi[n - 2] +
                      lvl.chi[n - 1] * lvl.chi[n - 1]);
    return s;
  };
  const double nrm = std::sqrt(norm2());
  if (!(nrm > 0)) throw ConvergenceError("solve_level: zero-norm solution");
  for (double& c : lvl.chi) c /= nrm;

  // Sign convention: positive leading lobe.
  for (int i = 0; i < n; ++i) {
    if (std::abs(lvl.chi[i]) > 1e-8) {
      if (lvl.chi[i] < 0)
        for (double& c : lvl.chi) c = -c;
      break;
    }
  }

  // Node count of the assembled wavefunction must equal v.
  int nodes = 0;
  const double floor_mag =
      1e-7 * *std::max_element(lvl.chi.begin(), lvl.chi.end(),
                               [](double a, double b) {
                                 return std::abs(a) < std::abs(b);
                               });
  double prev = 0.0;
  for (int i = 0; i < n; ++i) {
    const double c = lvl.chi[i];
    if (std::abs(c) < std::abs(floor_mag)) continue;
    if (prev != 0.0 && c * prev < 0.0) ++nodes;
    prev = c;
  }
  if (nodes != v)
    throw ConvergenceError("solve_level: node count " + std::to_string(nodes) +
                           " != v = " + std::to_string(v) +
                           " (grid too coarse?)");
  return lvl;
}

std::vector<double> morse_levels(double de_cm1, double a_inv_bohr,
                                 double re_bohr, double reduced_mass_me,
                                 int v_max) {
  if (!(de_cm1 > 0) || !(a_inv_bohr > 0) || !(re_bohr > 0) ||
      !(reduced_mass_me > 0))
    throw InvalidArgument("morse_levels: parameters must be positive");
  const double we =
      a_inv_bohr *
      std::sqrt(2.0 * de_cm1 * units::cm1_per_hartree / reduced_mass_me);
  const double wexe = we * we / (4.0 * de_cm1);
  std::vector<double> out;
  for (int v = 0; v <= v_max; ++v) {
    const double x = v + 0.5;
    if (x >= we / (2.0 * wexe)) break;  // beyond binding
    const double e = we * x - wexe * x * x;
    if (e >= de_cm1) break;
    out.push_back(e);
  }
  return out;
}

double radial_integral(const RovibLevel& a, const RovibLevel& b,
                       const std::function<double(double)>& weight) {
  if (!a.r || !b.r || a.r != b.r)
    throw InvalidArgument("radial_integral: levels not on the same grid");
  const auto& r = *a.r;
  const int n = static_cast<int>(r.size());
  const double h = r[1] - r[0];
  auto f = [&](int i) { return a.chi[i] * weight(r[i]) * b.chi[i]; };
  double s = 0.0;
  int last = (n % 2 == 1) ? n - 1 : n - 2;
  for (int i = 0; i + 2 <= last; i += 2)
    s += f(i) + 4.0 * f(i + 1) + f(i + 2);
  s *= h / 3.0;
  if (n % 2 == 0) s += 0.5 * h * (f(n - 2) + f(n - 1));
  return s;
}

LevelTable::LevelTable(DiatomCurve curve, RadialGridSpec grid)
    : curve_(std::move(curve)), grid_(grid) {}

int LevelTable::index(int v, int j) const {
  for (size_t i = 0; i < levels_.size(); ++i)
    if (levels_[i].v == v && levels_[i].j == j) return static_cast<int>(i);
  return -1;
}

bool LevelTable::has(int v, int j) const { return index(v, j) >= 0; }

void LevelTable::ensure(int v, int j) {
  if (has(v, j)) return;
  RovibLevel lvl = solve_level(curve_, v, j, grid_);
  if (!levels_.empty()) lvl.r = levels_.front().r;  // share one grid object
  if (!levels_.empty() && levels_.front().r->size() != lvl.chi.size())
    throw Error("LevelTable: inconsistent grids");
  levels_.push_back(std::move(lvl));
}

const RovibLevel& LevelTable::level(int v, int j) const {
  const int i = index(v, j);
  if (i < 0)
    throw InvalidArgument("LevelTable: level (" + std::to_string(v) + "," +
                          std::to_string(j) + ") not solved");
  return levels_[i];
}

DiatomPreset diatom_preset(const std::string& name) {
  if (name == "h2-morse") {
    // Morse oscillator tuned to hydrogen-like spectroscopy: we and Be
    // follow H2, and the anharmonicity is adjusted so that the
    // centrifugal-distortion difference B0 - B1 comes out near 2.96 cm^-1.
    const double mass_me = 0.503912516 * units::me_per_amu;
    const double we = 4401.2;    // cm^-1
    const double wexe = 153.1;   // cm^-1 (calibrated, see docs/conventions.md)
    const double be = 60.853;    // cm^-1
    MorseParams p;
    p.de_cm1 = we * we / (4.0 * wexe);
    p.re_bohr = std::sqrt(units::h2_over_2mu(mass_me) / be);
    p.a_inv_bohr =
        we / std::sqrt(2.0 * p.de_cm1 * units::cm1_per_hartree / mass_me);
    return {name, DiatomCurve::morse(p, mass_me)};
  }
  throw ConfigError("unknown diatom preset: " + name);
}

}  // namespace coldscat
