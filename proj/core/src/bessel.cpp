#include "coldscat/bessel.hpp"

#include <cmath>
#include <vector>

#include "coldscat/errors.hpp"

namespace coldscat {

namespace {

// Upward recurrence, stable for n^_l at all x and for j^_l when x > l.
// f_{l+1} = (2l+1)/x f_l - f_{l-1}
void riccati_upward(int l, double x, double f0, double f1, double* f,
                    double* fm1) {
  double a = f0, b = f1;
  if (l == 0) {
    *f = a;
    *fm1 = 0.0;  // unused
    return;
  }
  for (int m = 1; m < l; ++m) {
    double c = (2 * m + 1) / x * b - a;
    a = b;
    b = c;
  }
  *f = b;
  *fm1 = a;
}

// Miller downward recurrence for j^_l in the regime x <= l where the
// upward direction is unstable. Normalized against j^_0 = sin x.
void riccati_j_downward(int l, double x, double* j, double* jm1) {
  const int start = l + 24 + static_cast<int>(x);
  std::vector<double> f(start + 2, 0.0);
  f[start + 1] = 0.0;
  f[start] = 1e-280;
  for (int m = start; m >= 1; --m) {
    f[m - 1] = (2 * m + 1) / x * f[m] - f[m + 1];
    if (std::abs(f[m - 1]) > 1e270) {
      for (int k = m - 1; k <= start + 1; ++k) f[k] *= 1e-270;
    }
  }
  const double scale = std::sin(x) / f[0];
  *j = f[l] * scale;
  *jm1 = (l >= 1) ? f[l - 1] * scale : std::cos(x);
}

}  // namespace

RiccatiPair riccati_bessel(int l, double x) {
  if (!(x > 0.0)) throw InvalidArgument("riccati_bessel: x must be positive");
  RiccatiPair out;

  // n^ is always computed upward.
  double n, nm1;
  riccati_upward(l, x, -std::cos(x), -std::cos(x) / x - std::sin(x), &n, &nm1);
  if (l == 0) nm1 = std::sin(x);
  out.n = n;
  out.np = nm1 - l / x * n;

  double j, jm1;
  if (x > l + 2) {
    riccati_upward(l, x, std::sin(x), std::sin(x) / x - std::cos(x), &j, &jm1);
    if (l == 0) jm1 = std::cos(x);
  } else {
    riccati_j_downward(l, x, &j, &jm1);
  }
  out.j = j;
  out.jp = jm1 - l / x * j;
  return out;
}

double decaying_log_derivative(int l, double x) {
  if (!(x > 0.0))
    throw InvalidArgument("decaying_log_derivative: x must be positive");
  if (l == 0) return -1.0;
  // Scaled k~_l = exp(x) k^_l obeys the same upward recurrence
  // k~_{l+1} = k~_{l-1} + (2l+1)/x k~_l and grows only polynomially.
  double a = 1.0;            // k~_0
  double b = 1.0 + 1.0 / x;  // k~_1
  for (int m = 1; m < l; ++m) {
    double c = a + (2 * m + 1) / x * b;
    a = b;
    b = c;
  }
  // k^_l' = -k^_{l-1} - (l/x) k^_l
  return -a / b - l / x;
}

}  // namespace coldscat
