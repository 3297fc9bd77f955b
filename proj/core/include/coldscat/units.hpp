// Unit system and physical constants.
//
// Internal working units throughout the library:
//   energy  : cm^-1   (wavenumbers)
//   length  : bohr    (a0)
//   mass    : electron masses (m_e)
// User-facing I/O is kelvin for energies, angstrom^2 for cross sections
// and cm^3 s^-1 for rate constants.
#pragma once

namespace coldscat::units {

// 1 hartree in cm^-1
inline constexpr double cm1_per_hartree = 219474.6313632;
// 1 cm^-1 in kelvin
inline constexpr double kelvin_per_cm1 = 1.4387769;
// 1 u (unified atomic mass unit) in electron masses
inline constexpr double me_per_amu = 1822.888486209;
// 1 bohr in angstrom / in cm
inline constexpr double angstrom_per_bohr = 0.529177210903;
inline constexpr double cm_per_bohr = 0.529177210903e-8;
// atomic unit of velocity in cm/s
inline constexpr double cm_s_per_au_velocity = 2.18769126364e8;

inline constexpr double bohr2_to_angstrom2 =
    angstrom_per_bohr * angstrom_per_bohr;

inline constexpr double kelvin_to_cm1(double k) { return k / kelvin_per_cm1; }
inline constexpr double cm1_to_kelvin(double e) { return e * kelvin_per_cm1; }

// hbar^2/(2 mu) in cm^-1 * bohr^2 for a reduced mass given in m_e
inline constexpr double h2_over_2mu(double mu_me) {
  return cm1_per_hartree / (2.0 * mu_me);
}

}  // namespace coldscat::units
