// Model interaction as a bispherical-harmonic expansion and the
// channel-channel coupling matrix W(R) fed to the propagator.
#pragma once

#include <Eigen/Dense>
#include <memory>
#include <string>
#include <vector>

#include "coldscat/angular.hpp"
#include "coldscat/basis.hpp"
#include "coldscat/diatom.hpp"
#include "coldscat/interp.hpp"

namespace coldscat {

// Radial strength f_R(R): sum of exponential walls and damped inverse
// power terms, or a tabulated curve. Units cm^-1 with R in bohr.
struct RadialStrength {
  struct Exp {
    double c = 0;      // cm^-1
    double alpha = 0;  // bohr^-1
  };
  struct Disp {
    double cn = 0;    // cm^-1 bohr^n; enters as -cn d_n(beta R)/R^n
    double beta = 0;  // Tang-Toennies damping range, bohr^-1
    int n = 6;
  };
  std::vector<Exp> exps;
  std::vector<Disp> disps;
  std::shared_ptr<const CubicSpline> table;

  double eval(double r) const;
};

// One expansion term: f_R(R) * g(r1) * g(r2) with g(r) = 1 + b (r - re).
struct PesTerm {
  LambdaTriple lambdas;
  RadialStrength fr;
  double linear_b = 0.0;  // bohr^-1
};

struct PotentialExpansion {
  std::vector<PesTerm> terms;
  std::string name;
  // Throws InvalidArgument unless the term set contains (0,0,0), has
  // even l1+l2 everywhere and is symmetric under (l1 <-> l2).
  void validate() const;
};

PotentialExpansion default_model_pes(const std::string& preset);

// Tang-Toennies damping 1 - exp(-x) sum_k x^k/k!.
double tang_toennies(int n, double x);

// Per-block coupling machinery. Precomputes, for every expansion term,
// the matrix of angular weights times monomer vibrational integrals
// (exchange-symmetrized in indistinguishable blocks), so that W(R)
// assembly is a cheap linear combination per radius.
class CouplingMatrixSet {
 public:
  CouplingMatrixSet(const ChannelBlock& block,
                    const PotentialExpansion& pes, const LevelTable& levels,
                    double mu_collision_me);

  int size() const { return n_; }
  const ChannelBlock& block() const { return block_; }
  const Eigen::VectorXd& thresholds_cm1() const { return thresholds_; }
  double mu_me() const { return mu_; }

  // Full coupling matrix: potential + internal energy + centrifugal.
  void w_at(double r_bohr, Eigen::MatrixXd& w) const;
  Eigen::MatrixXd w_at(double r_bohr) const;

  // Propagation matrix M = 2 mu (W - E) / hbar^2 in bohr^-2.
  void m_at(double r_bohr, double e_total_cm1, Eigen::MatrixXd& m) const;

  const std::vector<Eigen::MatrixXd>& term_matrices() const { return g_; }
  const PotentialExpansion& pes() const { return pes_; }

 private:
  ChannelBlock block_;
  PotentialExpansion pes_;
  Eigen::VectorXd thresholds_;
  Eigen::VectorXd centrifugal_;  // l(l+1) * hbar^2/(2 mu)
  std::vector<Eigen::MatrixXd> g_;
  double mu_ = 0;
  int n_ = 0;
};

// Convenience one-shot assembly used by tests.
Eigen::MatrixXd assemble_w(const ChannelBlock& block,
                           const PotentialExpansion& pes,
                           const LevelTable& levels, double mu_collision_me,
                           double r_bohr);

}  // namespace coldscat
