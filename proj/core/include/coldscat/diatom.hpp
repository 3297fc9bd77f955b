// Rovibrational structure of a single diatomic molecule: bound levels
// E(v,j) and radial wavefunctions from a Numerov solve on a potential
// curve, plus the analytic Morse spectrum used as a test reference.
#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "coldscat/interp.hpp"

namespace coldscat {

struct MorseParams {
  double de_cm1;      // well depth
  double a_inv_bohr;  // range parameter
  double re_bohr;     // equilibrium distance
};

class DiatomCurve {
 public:
  enum class Form { morse, tabulated };

  static DiatomCurve morse(MorseParams p, double reduced_mass_me);
  static DiatomCurve tabulated(std::vector<double> r_bohr,
                               std::vector<double> v_cm1,
                               double reduced_mass_me);
  // Two-column text file (r, V(r)), '#' comments, units bohr / cm^-1.
  static DiatomCurve from_file(const std::string& path,
                               double reduced_mass_me);

  Form form() const { return form_; }
  double reduced_mass_me() const { return mass_; }
  double value(double r) const;            // cm^-1, zero at the minimum
  double re() const { return re_; }        // minimum position
  double dissociation_cm1() const { return dissociation_; }
  double r_min_tab() const;                // tabulated support, if any
  double r_max_tab() const;
  const MorseParams& morse_params() const { return morse_; }

 private:
  Form form_ = Form::morse;
  MorseParams morse_{};
  CubicSpline spline_;
  double tab_lo_ = 0, tab_hi_ = 0;
  double mass_ = 0;
  double re_ = 0;
  double dissociation_ = 0;
};

struct RadialGridSpec {
  double r_min;
  double r_max;
  int points;  // >= 16
};

struct RovibLevel {
  int v = 0;
  int j = 0;
  double energy_cm1 = 0;  // relative to the curve minimum
  std::shared_ptr<const std::vector<double>> r;  // shared radial grid
  std::vector<double> chi;                       // unit-normalized
};

// Shooting/matching Numerov eigensolver with node counting.
RovibLevel solve_level(const DiatomCurve& curve, int v, int j,
                       const RadialGridSpec& grid);

// Analytic Morse eigenvalues E_v for v = 0..v_max (bound ones only).
std::vector<double> morse_levels(double de_cm1, double a_inv_bohr,
                                 double re_bohr, double reduced_mass_me,
                                 int v_max);

// Simpson quadrature of chi_a(r) w(r) chi_b(r); the levels must share
// one radial grid.
double radial_integral(const RovibLevel& a, const RovibLevel& b,
                       const std::function<double(double)>& weight);

// Immutable set of solved levels on one grid, shared by the scattering
// modules.
class LevelTable {
 public:
  LevelTable(DiatomCurve curve, RadialGridSpec grid);

  const DiatomCurve& curve() const { return curve_; }
  const RovibLevel& level(int v, int j) const;  // solves on demand? no: see ensure
  bool has(int v, int j) const;
  void ensure(int v, int j);  // solve and cache
  double energy(int v, int j) const { return level(v, j).energy_cm1; }

 private:
  DiatomCurve curve_;
  RadialGridSpec grid_;
  std::vector<RovibLevel> levels_;
  int index(int v, int j) const;
};

// Named diatomic presets for run configs.
struct DiatomPreset {
  std::string name;
  DiatomCurve curve;
};
DiatomPreset diatom_preset(const std::string& name);

}  // namespace coldscat
