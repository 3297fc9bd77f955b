#include "coldscat/basis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "coldscat/errors.hpp"
#include "coldscat/units.hpp"

namespace coldscat {

std::string CMS::str(bool distinguishable) const {
  char buf[64];
  if (distinguishable)
    std::snprintf(buf, sizeof buf, "[%d-%d;%d-%d]", v1, j1, v2, j2);
  else
    std::snprintf(buf, sizeof buf, "(%d-%d-%d-%d)", v1, j1, v2, j2);
  return buf;
}

Species species_from_string(const std::string& s) {
  if (s == "para") return Species::para;
  if (s == "ortho") return Species::ortho;
  if (s == "any" || s == "hetero") return Species::any;
  throw ConfigError("unknown species: " + s);
}

std::string BlockLabel::str() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "J=%d p=%c %s", total_j,
                parity > 0 ? '+' : '-',
                mode == SymmetryMode::indistinguishable
                    ? (exchange_eps > 0 ? "sym" : "asym")
                    : "dist");
  return buf;
}

namespace {

bool species_allows(Species s, int j) {
  switch (s) {
    case Species::para:
      return j % 2 == 0;
    case Species::ortho:
      return j % 2 == 1;
    case Species::any:
      return true;
  }
  return true;
}

}  // namespace

std::vector<CMS> enumerate_cms(LevelTable& levels, int v_max, int j_max,
                               double e_max_cm1, Species species,
                               SymmetryMode mode) {
  if (v_max < 0 || j_max < 0)
    throw InvalidArgument("enumerate_cms: v_max, j_max must be >= 0");

  for (int v = 0; v <= v_max; ++v)
    for (int j = 0; j <= j_max; ++j)
      if (species_allows(species, j)) levels.ensure(v, j);

  std::vector<CMS> out;
  for (int v1 = 0; v1 <= v_max; ++v1)
    for (int j1 = 0; j1 <= j_max; ++j1) {
      if (!species_allows(species, j1)) continue;
      for (int v2 = 0; v2 <= v_max; ++v2)
        for (int j2 = 0; j2 <= j_max; ++j2) {
          if (!species_allows(species, j2)) continue;
          CMS c{v1, j1, v2, j2, 0.0};
          if (mode == SymmetryMode::indistinguishable && !c.well_ordered())
            continue;
          c.internal_energy_cm1 = levels.energy(v1, j1) + levels.energy(v2, j2);
          out.push_back(c);
        }
    }

  std::sort(out.begin(), out.end(), [](const CMS& a, const CMS& b) {
    if (a.internal_energy_cm1 != b.internal_energy_cm1)
      return a.internal_energy_cm1 < b.internal_energy_cm1;
    return std::tie(a.v1, a.j1, a.v2, a.j2) < std::tie(b.v1, b.j1, b.v2, b.j2);
  });

  if (!out.empty()) {
    const double e0 = out.front().internal_energy_cm1;
    std::erase_if(out, [&](const CMS& c) {
      return c.internal_energy_cm1 - e0 > e_max_cm1;
    });
  }
  return out;
}

ChannelBlock build_channels(const std::vector<CMS>& cms, int total_j,
                            int parity, SymmetryMode mode, int exchange_eps) {
  if (total_j < 0) throw InvalidArgument("build_channels: J must be >= 0");
  if (parity != 1 && parity != -1)
    throw InvalidArgument("build_channels: parity must be +1 or -1");

  ChannelBlock block;
  block.label = {total_j, parity, mode, exchange_eps};
  block.cms = cms;

  for (int ci = 0; ci < static_cast<int>(cms.size()); ++ci) {
    const CMS& c = cms[ci];
    for (int j12 = std::abs(c.j1 - c.j2); j12 <= c.j1 + c.j2; ++j12) {
      for (int l = std::abs(total_j - j12); l <= total_j + j12; ++l) {
        if (((c.j1 + c.j2 + l) % 2 == 0 ? +1 : -1) != parity) continue;
        if (mode == SymmetryMode::indistinguishable && c.identical_pair()) {
          const int phase = ((j12 + l) % 2 == 0) ? +1 : -1;
          if (exchange_eps * phase != +1) continue;
        }
        Channel ch;
        ch.cms_index = ci;
        ch.v1 = c.v1;
        ch.j1 = c.j1;
        ch.v2 = c.v2;
        ch.j2 = c.j2;
        ch.j12 = j12;
        ch.l = l;
        ch.total_j = total_j;
        ch.parity = parity;
        block.channels.push_back(ch);
      }
    }
  }
  // Deterministic ordering: CMS (already energy-sorted), then j12, then l.
  std::stable_sort(block.channels.begin(), block.channels.end(),
                   [](const Channel& a, const Channel& b) {
                     return std::tie(a.cms_index, a.j12, a.l) <
                            std::tie(b.cms_index, b.j12, b.l);
                   });
  return block;
}

namespace {

bool dv_within(const CMS& c, const CMS& ref, int dv_max) {
  const int d1 = std::max(std::abs(c.v1 - ref.v1), std::abs(c.v2 - ref.v2));
  const int d2 = std::max(std::abs(c.v1 - ref.v2), std::abs(c.v2 - ref.v1));
  return std::min(d1, d2) <= dv_max;
}

}  // namespace

std::vector<CMS> truncate_dv_cms(const std::vector<CMS>& cms, int dv_max,
                                 const CMS& reference) {
  std::vector<CMS> out;
  for (const CMS& c : cms)
    if (dv_within(c, reference, dv_max)) out.push_back(c);
  return out;
}

ChannelBlock truncate_dv(const ChannelBlock& block, int dv_max,
                         const CMS& reference) {
  bool found = false;
  for (const CMS& c : block.cms)
    if (c.same_labels(reference)) found = true;
  if (!found)
    throw InvalidArgument("truncate_dv: reference CMS not in the basis");

  ChannelBlock out;
  out.label = block.label;
  out.cms = block.cms;
  for (const Channel& ch : block.channels)
    if (dv_within(block.cms[ch.cms_index], reference, dv_max))
      out.channels.push_back(ch);
  return out;
}

void dump_channels_csv(std::ostream& os,
                       const std::vector<ChannelBlock>& blocks,
                       double energy_zero_cm1) {
  os << "# one row per scattering channel\n";
  os << "# threshold_K is the CMS internal energy relative to the lowest "
        "CMS, in kelvin\n";
  os << "block_J,parity,symmetry,channel,cms,v1,j1,v2,j2,j12,l,threshold_K\n";
  char buf[256];
  for (const auto& b : blocks) {
    const char* sym = b.label.mode == SymmetryMode::indistinguishable
                          ? (b.label.exchange_eps > 0 ? "sym" : "asym")
                          : "dist";
    for (int i = 0; i < b.size(); ++i) {
      const Channel& ch = b.channels[i];
      const CMS& c = b.cms[ch.cms_index];
      std::snprintf(buf, sizeof buf,
                    "%d,%c,%s,%d,%s,%d,%d,%d,%d,%d,%d,%.10E\n", b.label.total_j,
                    b.label.parity > 0 ? '+' : '-', sym, i,
                    c.str(b.label.mode == SymmetryMode::distinguishable).c_str(),
                    c.v1, c.j1, c.v2, c.j2, ch.j12, ch.l,
                    units::cm1_to_kelvin(c.internal_energy_cm1 -
                                         energy_zero_cm1));
      os << buf;
    }
  }
}

}  // namespace coldscat
