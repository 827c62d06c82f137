// Copyright transmon contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "transmon/engine.hpp"
#include "transmon/scenario.hpp"

namespace transmon {

// Builds a started engine from a validated scenario: configuration
// commands run in file order, policies land on every monitor their range
// placement selects, then the master programs are released.
inline Engine build_engine(const Scenario& sc) {
  EngineConfig cfg;
  cfg.num_masters = sc.topology.num_masters;
  cfg.apu_capacity = sc.topology.apu_capacity;
  cfg.dpu_capacity = sc.topology.dpu_capacity;
  cfg.map = sc.memory_map();
  Engine engine(std::move(cfg));

  for (const ApuEntry& e : sc.apus) {
    const auto [lo, hi] = range_of(e.policy.addr, e.policy.mask);
    for (int slave : placement_windows(engine.map(), lo, hi, e.slave)) {
      engine.execute(LoadApuCmd{slave, e.policy});
    }
  }
  for (const DpuEntry& e : sc.dpus) {
    const auto [lo, hi] = range_of(e.policy.addr, e.policy.amask);
    for (int slave : placement_windows(engine.map(), lo, hi, e.slave)) {
      engine.execute(LoadDpuCmd{slave, e.policy});
    }
  }
  for (const LoadMemSpec& lm : sc.loadmems) {
    engine.execute(LoadMemCmd{lm.addr, lm.words});
  }
  for (const SetSrsSpec& s : sc.setsrs) {
    engine.execute(SetSrsCmd{s.reg, s.value});
  }
  for (const auto& [mid, prog] : sc.programs) {
    engine.set_program(mid, prog);
  }
  engine.execute(StartCmd{});
  return engine;
}

inline Engine::RunResult run_scenario(
    const Scenario& sc, std::optional<std::uint64_t> limit_override = {}) {
  Engine engine = build_engine(sc);
  return engine.run(limit_override.value_or(sc.limit));
}

}  // namespace transmon
