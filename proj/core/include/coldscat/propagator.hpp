// Sector-by-sector log-derivative propagation of the coupled radial
// equations, Y = Psi' Psi^-1.
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "coldscat/potential.hpp"

namespace coldscat {

enum class Scheme { johnson, manolopoulos };
enum class StepControl { fixed, wavelength, potential };

struct RadialGrid {
  double r_min = 1.7;
  double r_max = 600.0;
  double step = 0.05;          // sector width (fixed) / minimum width
  Scheme scheme = Scheme::manolopoulos;
  StepControl control = StepControl::fixed;
  double step_max = 0.05;      // adaptive modes only
  double wl_fraction = 0.12;   // wavelength rule: h = frac * lambda_min
  double kref_cap = 2.0;       // adaptive cap on h * k_fastest
  double y0 = 1e10;            // wall initialization, bohr^-1
};

struct LogDerivState {
  Eigen::MatrixXd y;
  double r = 0;
  int sectors = 0;
  double symmetry_defect = 0;  // max |Y - Y^T| / max|Y| at r
};

// Sector boundaries for a block; e_top_cm1 bounds the fastest local
// wavenumber so one grid can serve a whole energy scan.
std::vector<double> build_sector_grid(const CouplingMatrixSet& w,
                                      const RadialGrid& grid,
                                      double e_top_cm1);

LogDerivState propagate_on_grid(const CouplingMatrixSet& w,
                                double e_total_cm1,
                                const std::vector<double>& bounds,
                                Scheme scheme, double y0);

// Build the grid for this energy and run it.
LogDerivState propagate(const CouplingMatrixSet& w, double e_total_cm1,
                        const RadialGrid& grid);

}  // namespace coldscat
