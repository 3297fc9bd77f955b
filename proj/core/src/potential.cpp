#include "coldscat/potential.hpp"

#include <cmath>
#include <map>

#include "coldscat/errors.hpp"
#include "coldscat/units.hpp"

namespace coldscat {

double tang_toennies(int n, double x) {
  if (x <= 0) return 0.0;
  if (x > 60.0) return 1.0;
  double term = 1.0, sum = 1.0;
  for (int k = 1; k <= n; ++k) {
    term *= x / k;
    sum += term;
  }
  return 1.0 - std::exp(-x) * sum;
}

double RadialStrength::eval(double r) const {
  double v = 0.0;
  for (const auto& e : exps) v += e.c * std::exp(-e.alpha * r);
  for (const auto& d : disps) {
    double rn = 1.0;
    for (int k = 0; k < d.n; ++k) rn *= r;
    v -= d.cn * tang_toennies(d.n, d.beta * r) / rn;
  }
  if (table) v += (*table)(r);
  return v;
}

void PotentialExpansion::validate() const {
  bool has_iso = false;
  for (const auto& t : terms) {
    if ((t.lambdas.l1 + t.lambdas.l2) % 2 != 0)
      throw InvalidArgument("PotentialExpansion: l1+l2 must be even in " +
                            name);
    if (t.lambdas.l1 == 0 && t.lambdas.l2 == 0 && t.lambdas.l == 0)
      has_iso = true;
    // identical molecules: the mirrored term must be present
    bool mirrored = false;
    for (const auto& u : terms)
      if (u.lambdas.l1 == t.lambdas.l2 && u.lambdas.l2 == t.lambdas.l1 &&
          u.lambdas.l == t.lambdas.l)
        mirrored = true;
    if (!mirrored)
      throw InvalidArgument(
          "PotentialExpansion: term set not symmetric under (l1,l2) swap");
  }
  if (!has_iso)
    throw InvalidArgument("PotentialExpansion: isotropic (0,0,0) term absent");
}

PotentialExpansion default_model_pes(const std::string& preset) {
  if (preset == "h2h2-model" || preset == "h2h2-model-calibrated") {
    // Hydrogen-like model surface: exponential repulsion with a damped
    // R^-6 isotropic tail, short-range single-quadrupole anisotropies
    // and a quadrupole-quadrupole-like R^-5 term that carries the
    // simultaneous (Dj1, Dj2) = (2, -2) coupling. Magnitudes are tuned
    // for mechanism-level behaviour, not for any ab initio surface.
    const double b = 0.32;
    PotentialExpansion p;
    p.name = preset;

    PesTerm iso;
    iso.lambdas = {0, 0, 0};
    iso.fr.exps.push_back({1.4e6, 3.0});
    iso.fr.disps.push_back({109737.0, 1.7, 6});  // 0.5 au of C6
    iso.linear_b = b;
    p.terms.push_back(iso);

    PesTerm a202;
    a202.lambdas = {2, 0, 2};
    a202.fr.exps.push_back({1.1e5, 3.0});
    a202.fr.disps.push_back({9000.0, 1.7, 6});
    a202.linear_b = b;
    p.terms.push_back(a202);

    PesTerm a022 = a202;
    a022.lambdas = {0, 2, 2};
    p.terms.push_back(a022);

    PesTerm a224;
    a224.lambdas = {2, 2, 4};
    // positive R^-5 tail (quadrupole-quadrupole sign convention folded
    // into the angular normalization)
    a224.fr.disps.push_back({-16000.0, 1.7, 5});
    a224.linear_b = b;
    p.terms.push_back(a224);

    p.validate();
    return p;
  }
  throw ConfigError("unknown PES preset: " + preset);
}

namespace {

// Exchange phase of a channel: (-1)^(j1 + j2 + j12 + l).
inline int exchange_phase(const Channel& c) {
  return ((c.j1 + c.j2 + c.j12 + c.l) % 2 == 0) ? +1 : -1;
}

}  // namespace

CouplingMatrixSet::CouplingMatrixSet(const ChannelBlock& block,
                                     const PotentialExpansion& pes,
                                     const LevelTable& levels,
                                     double mu_collision_me)
    : block_(block), pes_(pes), mu_(mu_collision_me) {
  pes_.validate();
  if (!(mu_ > 0))
    throw InvalidArgument("CouplingMatrixSet: collision mass must be > 0");
  n_ = block_.size();
  const double b_len = units::h2_over_2mu(mu_);

  thresholds_.resize(n_);
  centrifugal_.resize(n_);
  for (int i = 0; i < n_; ++i) {
    const Channel& ch = block_.channels[i];
    if (!levels.has(ch.v1, ch.j1) || !levels.has(ch.v2, ch.j2))
      throw InvalidArgument("CouplingMatrixSet: monomer level missing for " +
                            block_.cms[ch.cms_index].str());
    thresholds_(i) = block_.cms[ch.cms_index].internal_energy_cm1;
    centrifugal_(i) = b_len * ch.l * (ch.l + 1);
  }

  // Monomer integrals <v j| 1 + b (r - re) |v' j'>, cached per term
  // parameter b (terms usually share one b).
  const double re = levels.curve().re();
  std::map<double, std::map<std::pair<int, int>, double>> vib_cache;
  auto level_key = [&](int v, int j) { return v * 1000 + j; };
  auto vib = [&](double b, int va, int ja, int vb, int jb) -> double {
    auto& cache = vib_cache[b];
    int ka = level_key(va, ja), kb = level_key(vb, jb);
    if (ka > kb) std::swap(ka, kb);
    auto it = cache.find({ka, kb});
    if (it != cache.end()) return it->second;
    const RovibLevel& la = levels.level(ka / 1000, ka % 1000);
    const RovibLevel& lb = levels.level(kb / 1000, kb % 1000);
    const double val = radial_integral(
        la, lb, [&](double r) { return 1.0 + b * (r - re); });
    cache[{ka, kb}] = val;
    return val;
  };

  // Direct (and, for indistinguishable blocks, exchange) product of
  // vibrational integrals and angular weights, term by term.
  const bool sym = block_.label.mode == SymmetryMode::indistinguishable;
  const int eps = block_.label.exchange_eps;

  g_.assign(pes_.terms.size(), Eigen::MatrixXd::Zero(n_, n_));
  for (size_t t = 0; t < pes_.terms.size(); ++t) {
    const PesTerm& term = pes_.terms[t];
    Eigen::MatrixXd& g = g_[t];
    for (int p = 0; p < n_; ++p) {
      const Channel& cp = block_.channels[p];
      for (int q = p; q < n_; ++q) {
        const Channel& cq = block_.channels[q];
        double val =
            coupling_coefficient(cp, cq, term.lambdas) *
            vib(term.linear_b, cp.v1, cp.j1, cq.v1, cq.j1) *
            vib(term.linear_b, cp.v2, cp.j2, cq.v2, cq.j2);
        if (sym) {
          // exchanged ket: molecule labels of q swapped
          const double exch =
              coupling_coefficient_q(cp.j1, cp.j2, cp.j12, cp.l, cq.j2,
                                     cq.j1, cq.j12, cq.l, cp.total_j,
                                     term.lambdas) *
              vib(term.linear_b, cp.v1, cp.j1, cq.v2, cq.j2) *
              vib(term.linear_b, cp.v2, cp.j2, cq.v1, cq.j1);
          const double norm =
              1.0 / std::sqrt((1.0 + (block_.cms[cp.cms_index].identical_pair()
                                          ? 1.0
                                          : 0.0)) *
                              (1.0 + (block_.cms[cq.cms_index].identical_pair()
                                          ? 1.0
                                          : 0.0)));
          val = norm * (val + eps * exchange_phase(cq) * exch);
        }
        g(p, q) = val;
        g(q, p) = val;
      }
    }
  }
}

void CouplingMatrixSet::w_at(double r, Eigen::MatrixXd& w) const {
  if (!(r > 0)) throw InvalidArgument("CouplingMatrixSet::w_at: R must be > 0");
  w.setZero(n_, n_);
  for (size_t t = 0; t < pes_.terms.size(); ++t)
    w.noalias() += pes_.terms[t].fr.eval(r) * g_[t];
  const double r2 = r * r;
  for (int i = 0; i < n_; ++i) w(i, i) += thresholds_(i) + centrifugal_(i) / r2;
}

Eigen::MatrixXd CouplingMatrixSet::w_at(double r) const {
  Eigen::MatrixXd w;
  w_at(r, w);
  return w;
}

void CouplingMatrixSet::m_at(double r, double e_total_cm1,
                             Eigen::MatrixXd& m) const {
  w_at(r, m);
  const double inv_b = 1.0 / units::h2_over_2mu(mu_);
  m.diagonal().array() -= e_total_cm1;
  m *= inv_b;
}

Eigen::MatrixXd assemble_w(const ChannelBlock& block,
                           const PotentialExpansion& pes,
                           const LevelTable& levels, double mu_collision_me,
                           double r_bohr) {
  CouplingMatrixSet set(block, pes, levels, mu_collision_me);
  return set.w_at(r_bohr);
}

}  // namespace coldscat
