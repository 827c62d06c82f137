// Copyright transmon contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
//
// Static policy-set analysis, no simulation involved:
//   - per-master allowed regions per slave and access kind (APU entries
//     clipped to the windows they are placed at, then merged),
//   - shadowed APU entries (effective range already covered by the union
//     of earlier same-master entries with at least the same permission),
//   - dead DPU entries (address range meets no write-capable region of
//     the same master, so no write they could block ever passes the APU).
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "transmon/interval_set.hpp"
#include "transmon/memory_map.hpp"
#include "transmon/policy.hpp"
#include "transmon/scenario.hpp"
#include "transmon/word.hpp"

namespace transmon {

struct AnalysisReport {
  struct Region {
    MasterId mid = 0;
    int slave = 0;
    AccessKind kind = AccessKind::Read;
    IntervalSet set;
  };
  struct ShadowedApu {
    std::size_t index = 0;  // position in the scenario's APU list
    ApuPolicy policy;
  };
  struct DeadDpu {
    std::size_t index = 0;  // position in the scenario's DPU list
    DpuPolicy policy;
  };

  std::vector<Region> regions;  // sorted by (mid, slave, kind), non-empty only
  std::vector<ShadowedApu> shadowed_apu;
  std::vector<DeadDpu> dead_dpu;
  std::size_t apu_entries = 0;
  std::size_t dpu_entries = 0;

  std::string render() const {
    std::string out;
    for (const Region& r : regions) {
      for (const auto& [lo, hi] : r.set.intervals()) {
        out += "region mid=" + hex(r.mid) + " slave=" + std::to_string(r.slave) +
               " op=";
        out += access_kind_letter(r.kind);
        out += " range=" + hex8(lo) + "-" + hex8(hi) + "\n";
      }
    }
    for (const ShadowedApu& s : shadowed_apu) {
      out += "shadowed-apu index=" + std::to_string(s.index) + " mid=" +
             hex(s.policy.mid) + " addr=" + hex8(s.policy.addr) + " mask=" +
             hex8(s.policy.mask) + " perm=" +
             std::string(permission_token(s.policy.perm)) + "\n";
    }
    for (const DeadDpu& d : dead_dpu) {
      out += "dead-dpu index=" + std::to_string(d.index) + " mid=" +
             hex(d.policy.mid) + " addr=" + hex8(d.policy.addr) + " amask=" +
             hex8(d.policy.amask) + "\n";
    }
    out += "summary apu=" + std::to_string(apu_entries) + " dpu=" +
           std::to_string(dpu_entries) + " shadowed=" +
           std::to_string(shadowed_apu.size()) + " dead=" +
           std::to_string(dead_dpu.size()) + "\n";
    return out;
  }
};

namespace detail {

// a grants every access kind b grants. Permission bits are the kind set
// (bit 0 read, bit 1 write), so this is a plain subset test.
inline bool perm_covers_perm(Permission a, Permission b) {
  const auto ba = static_cast<std::uint8_t>(a);
  const auto bb = static_cast<std::uint8_t>(b);
  return (bb & ba) == bb;
}

// Range clipped to the windows the entry is placed at.
template <typename Entry, typename RangeOf>
IntervalSet effective_set(const MemoryMap& map, const Entry& e,
                          RangeOf range) {
  const auto [lo, hi] = range(e);
  IntervalSet set;
  for (int slave : placement_windows(map, lo, hi, e.slave)) {
    const Window* w = map.window_of_slave(slave);
    if (w == nullptr || lo > w->last() || hi < w->base) {
      continue;
    }
    set.insert(std::max(lo, w->base), std::min(hi, w->last()));
  }
  return set;
}

}  // namespace detail

inline AnalysisReport analyze(const Scenario& sc) {
  AnalysisReport report;
  report.apu_entries = sc.apus.size();
  report.dpu_entries = sc.dpus.size();
  const MemoryMap map = sc.memory_map();

  auto apu_range = [](const ApuEntry& e) {
    return range_of(e.policy.addr, e.policy.mask);
  };
  auto dpu_range = [](const DpuEntry& e) {
    return range_of(e.policy.addr, e.policy.amask);
  };

  std::vector<IntervalSet> apu_eff;
  apu_eff.reserve(sc.apus.size());
  for (const ApuEntry& e : sc.apus) {
    apu_eff.push_back(detail::effective_set(map, e, apu_range));
  }

  // Allowed regions per (mid, slave, kind).
  std::map<std::tuple<MasterId, int, int>, IntervalSet> regions;
  for (std::size_t i = 0; i < sc.apus.size(); ++i) {
    const ApuEntry& e = sc.apus[i];
    const auto [lo, hi] = apu_range(e);
    for (int slave : placement_windows(map, lo, hi, e.slave)) {
      const Window* w = map.window_of_slave(slave);
      if (w == nullptr || lo > w->last() || hi < w->base) {
        continue;
      }
      const word32 clo = std::max(lo, w->base);
      const word32 chi = std::min(hi, w->last());
      for (AccessKind kind : {AccessKind::Read, AccessKind::Write}) {
        if (perm_covers(e.policy.perm, kind)) {
          regions[{e.policy.mid, slave, static_cast<int>(kind)}].insert(clo,
                                                                        chi);
        }
      }
    }
  }
  for (const auto& [key, set] : regions) {
    if (!set.empty()) {
      report.regions.push_back({std::get<0>(key), std::get<1>(key),
                                static_cast<AccessKind>(std::get<2>(key)),
                                set});
    }
  }

  // Shadowing: effective range already covered by earlier entries of the
  // same master whose permission covers this one's.
  for (std::size_t i = 0; i < sc.apus.size(); ++i) {
    if (apu_eff[i].empty()) {
      continue;
    }
    IntervalSet earlier;
    for (std::size_t j = 0; j < i; ++j) {
      if (sc.apus[j].policy.mid == sc.apus[i].policy.mid &&
          detail::perm_covers_perm(sc.apus[j].policy.perm,
                                   sc.apus[i].policy.perm)) {
        earlier.insert(apu_eff[j]);
      }
    }
    if (earlier.covers(apu_eff[i])) {
      report.shadowed_apu.push_back({i, sc.apus[i].policy});
    }
  }

  // Dead DPU entries: a DPU rule only ever sees writes, so it is dead
  // unless some write-capable region of the same master meets its range.
  for (std::size_t k = 0; k < sc.dpus.size(); ++k) {
    const DpuEntry& e = sc.dpus[k];
    const IntervalSet eff = detail::effective_set(map, e, dpu_range);
    bool live = false;
    for (const auto& [key, set] : regions) {
      if (std::get<0>(key) != e.policy.mid ||
          std::get<2>(key) != static_cast<int>(AccessKind::Write)) {
        continue;
      }
      for (const auto& [lo, hi] : eff.intervals()) {
        if (set.intersects(lo, hi)) {
          live = true;
          break;
        }
      }
      if (live) {
        break;
      }
    }
    if (!live) {
      report.dead_dpu.push_back({k, e.policy});
    }
  }

  return report;
}

}  // namespace transmon
