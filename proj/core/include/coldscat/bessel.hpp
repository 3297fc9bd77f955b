// Riccati-Bessel reference solutions for asymptotic matching.
#pragma once

namespace coldscat {

// Riccati-Bessel pair j^_l(x) = x j_l(x), n^_l(x) = x y_l(x) and their
// derivatives with respect to x. Wronskian convention:
//   j^ n^' - j^' n^ = 1.
struct RiccatiPair {
  double j, jp, n, np;
};

RiccatiPair riccati_bessel(int l, double x);

// Logarithmic derivative k^_l'(x)/k^_l(x) of the exponentially decaying
// modified Riccati-Bessel function (k^_0(x) = exp(-x)); used to eliminate
// closed channels at the matching radius.
double decaying_log_derivative(int l, double x);

}  // namespace coldscat
