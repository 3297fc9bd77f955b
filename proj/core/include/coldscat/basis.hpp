// Combined molecular states and per-(J, parity, symmetry) channel lists.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "coldscat/diatom.hpp"

namespace coldscat {

// One pair of rovibrational labels. In indistinguishable mode the pair
// is well-ordered (v1 > v2, or v1 == v2 and j1 >= j2) and (v1 j1) cannot
// be assigned to a particular molecule; in distinguishable mode the
// first pair labels molecule A and the second molecule B.
struct CMS {
  int v1 = 0, j1 = 0, v2 = 0, j2 = 0;
  double internal_energy_cm1 = 0;

  bool identical_pair() const { return v1 == v2 && j1 == j2; }
  bool well_ordered() const { return v1 > v2 || (v1 == v2 && j1 >= j2); }
  bool same_labels(const CMS& o) const {
    return v1 == o.v1 && j1 == o.j1 && v2 == o.v2 && j2 == o.j2;
  }
  CMS swapped() const {
    CMS s = *this;
    std::swap(s.v1, s.v2);
    std::swap(s.j1, s.j2);
    return s;
  }
  // Rotational degeneracy product (2j1+1)(2j2+1).
  int degeneracy() const { return (2 * j1 + 1) * (2 * j2 + 1); }
  std::string str(bool distinguishable = false) const;
};

enum class Species { para, ortho, any };
enum class SymmetryMode { indistinguishable, distinguishable };

Species species_from_string(const std::string& s);

struct BlockLabel {
  int total_j = 0;
  int parity = +1;  // (-1)^(j1+j2+l)
  SymmetryMode mode = SymmetryMode::indistinguishable;
  int exchange_eps = +1;  // only meaningful for indistinguishable blocks
  std::string str() const;
};

struct Channel {
  int cms_index = -1;  // into the block's CMS list
  int v1 = 0, j1 = 0, v2 = 0, j2 = 0;
  int j12 = 0;
  int l = 0;
  int total_j = 0;
  int parity = +1;
};

struct ChannelBlock {
  BlockLabel label;
  std::vector<CMS> cms;  // the basis the channels refer to
  std::vector<Channel> channels;
  int size() const { return static_cast<int>(channels.size()); }
};

// All pairs with v <= v_max, j <= j_max (species-filtered), internal
// energy at most e_max_cm1 above the lowest pair, sorted by increasing
// internal energy with a lexicographic tie-break. Solves any missing
// monomer levels into the table.
std::vector<CMS> enumerate_cms(LevelTable& levels, int v_max, int j_max,
                               double e_max_cm1, Species species,
                               SymmetryMode mode);

// Every (j12, l) combination compatible with (J, parity) and, for
// indistinguishable blocks with identical pairs, with exchange symmetry.
ChannelBlock build_channels(const std::vector<CMS>& cms, int total_j,
                            int parity, SymmetryMode mode,
                            int exchange_eps = +1);

// Remove channels whose CMS lies more than dv_max vibrational quanta
// (per molecule, under the optimal pairing across the well-ordering)
// from the reference CMS.
ChannelBlock truncate_dv(const ChannelBlock& block, int dv_max,
                         const CMS& reference);
std::vector<CMS> truncate_dv_cms(const std::vector<CMS>& cms, int dv_max,
                                 const CMS& reference);

// Debug dump: one CSV row per channel with threshold energies in K.
void dump_channels_csv(std::ostream& os,
                       const std::vector<ChannelBlock>& blocks,
                       double energy_zero_cm1);

}  // namespace coldscat
