#include "coldscat/angular.hpp"

#include <cmath>

#include "coldscat/errors.hpp"
#include "coldscat/wigner.hpp"

namespace coldscat {

double coupling_coefficient_q(int j1, int j2, int j12, int l, int j1p,
                              int j2p, int j12p, int lp, int total_j,
                              const LambdaTriple& t) {
  const double w1 = wigner3j_i(j1, t.l1, j1p, 0, 0, 0);
  if (w1 == 0.0) return 0.0;
  const double w2 = wigner3j_i(j2, t.l2, j2p, 0, 0, 0);
  if (w2 == 0.0) return 0.0;
  const double wl = wigner3j_i(l, t.l, lp, 0, 0, 0);
  if (wl == 0.0) return 0.0;
  const double w6 = wigner6j_cached(j12, j12p, t.l, lp, l, total_j);
  if (w6 == 0.0) return 0.0;
  const double w9 = wigner9j_cached(j1, j1p, t.l1, j2, j2p, t.l2, j12, j12p,
                                    t.l);
  if (w9 == 0.0) return 0.0;

  const int phase_exp = total_j + j12p + j1 + j2;
  const double phase = (phase_exp % 2 == 0) ? 1.0 : -1.0;
  const double dims = std::sqrt(
      static_cast<double>(2 * j1 + 1) * (2 * j1p + 1) * (2 * j2 + 1) *
      (2 * j2p + 1) * (2 * l + 1) * (2 * lp + 1) * (2 * j12 + 1) *
      (2 * j12p + 1));
  const double lam =
      (2 * t.l + 1) * std::sqrt(static_cast<double>(2 * t.l1 + 1) *
                                (2 * t.l2 + 1));
  return phase * dims * lam * w1 * w2 * wl * w6 * w9;
}

double coupling_coefficient(const Channel& bra, const Channel& ket,
                            const LambdaTriple& t) {
  if (bra.total_j != ket.total_j || bra.parity != ket.parity)
    throw InvalidArgument(
        "coupling_coefficient: channels from different (J, parity) blocks");
  return coupling_coefficient_q(bra.j1, bra.j2, bra.j12, bra.l, ket.j1,
                                ket.j2, ket.j12, ket.l, bra.total_j, t);
}

}  // namespace coldscat
