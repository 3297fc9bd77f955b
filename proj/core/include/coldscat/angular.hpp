// Angular weight of one anisotropy term of the interaction between two
// coupled-basis channels |(j1 j2) j12, l; J>.
//
// The expansion functions are normalized so that the isotropic
// (0,0,0) term is exactly 1 on the channel diagonal; equivalently the
// angular functions are (4 pi)^{3/2} times the Clebsch-Gordan-coupled
// product of spherical harmonics of the two rotor axes and the
// intermolecular axis. Phase conventions are collected in
// docs/conventions.md and validated against a direct quadrature oracle.
#pragma once

#include "coldscat/basis.hpp"

namespace coldscat {

struct LambdaTriple {
  int l1 = 0, l2 = 0, l = 0;
};

struct CouplingCoefficient {
  int bra_channel_index = -1;
  int ket_channel_index = -1;
  LambdaTriple lambdas;
  double value = 0.0;
};

// Raw matrix element over explicit quantum numbers (bra: j1 j2 j12 l,
// ket: j1p j2p j12p lp, shared total J).
double coupling_coefficient_q(int j1, int j2, int j12, int l, int j1p,
                              int j2p, int j12p, int lp, int total_j,
                              const LambdaTriple& t);

// Channel-level interface; throws InvalidArgument when the channels do
// not belong to the same (J, parity) block.
double coupling_coefficient(const Channel& bra, const Channel& ket,
                            const LambdaTriple& t);

}  // namespace coldscat
