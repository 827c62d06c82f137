// Copyright transmon contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
//
// The interposer bus matrix: per-slave round-robin arbitration, address
// decoding, the privileged configuration path, and the global cycle loop.
//
// Timing contract (no contention):
//   allowed read        grant c, memory access c+1, response c+2
//   denied read         response c+2, all-zero data
//   write, APU denied   response c+2 (never enters the data phase)
//   write, APU allowed  data-phase DPU check c+1, commit c+2, response c+3
//   unmapped address    response c+2, no monitor consulted
// Contention adds grant-wait cycles in front. A slave holds one
// transaction at a time; a master issues its next step no earlier than
// its response cycle.
#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "transmon/arbiter.hpp"
#include "transmon/memory_map.hpp"
#include "transmon/monitor.hpp"
#include "transmon/program.hpp"
#include "transmon/sram.hpp"
#include "transmon/trace.hpp"
#include "transmon/word.hpp"

namespace transmon {

// Commands of the trusted configuration unit. They reach the system
// through the secure interface, never through a master port, and run
// before cycle 0.
struct LoadApuCmd {
  int slave = 0;
  ApuPolicy policy;
};
struct LoadDpuCmd {
  int slave = 0;
  DpuPolicy policy;
};
struct LoadMemCmd {
  word32 addr = 0;
  std::vector<word32> words;
};
struct SetSrsCmd {
  int reg = 0;
  word32 value = 0;
};
struct StartCmd {};

using TcuCommand =
    std::variant<LoadApuCmd, LoadDpuCmd, LoadMemCmd, SetSrsCmd, StartCmd>;

class TcuError : public std::runtime_error {
 public:
  enum class Kind {
    CapacityExceeded,
    MalformedPolicy,
    AddressUnmapped,
    UnknownSlave,
  };

  TcuError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct EngineConfig {
  MasterId num_masters = 64;
  std::size_t apu_capacity = 16;
  std::size_t dpu_capacity = 16;
  MemoryMap map;
};

class Engine {
 public:
  struct RunResult {
    std::vector<TraceEvent> events;
    RunReport report;
  };

  explicit Engine(EngineConfig cfg) : cfg_(std::move(cfg)) {
    for (const Window& w : cfg_.map.windows()) {
      units_.push_back(SlaveUnit{
          w, Monitor(w.slave_id, cfg_.apu_capacity, cfg_.dpu_capacity),
          SramModel(w.size), RoundRobinArbiter(cfg_.num_masters), {}, {}});
    }
    std::sort(units_.begin(), units_.end(),
              [](const SlaveUnit& a, const SlaveUnit& b) {
                return a.window.slave_id < b.window.slave_id;
              });
  }

  void execute(const TcuCommand& cmd) {
    std::visit([this](const auto& c) { this->apply(c); }, cmd);
  }

  void set_program(MasterId mid, MasterProgram program) {
    assert(mid < cfg_.num_masters);
    masters_[mid].program = std::move(program);
  }

  // Advances one cycle and returns the responses delivered during it,
  // ordered by slave id then master id. The cycle counter advances even
  // when nothing is pending.
  std::vector<TraceEvent> step() {
    const std::uint64_t now = cycle_;
    std::vector<TraceEvent> events = deliver_responses(now);
    advance_in_flight(now);
    collect_and_grant(now);
    ++cycle_;
    return events;
  }

  bool idle() const {
    for (const auto& [mid, m] : masters_) {
      if (m.in_flight || m.fabric_pending || m.pc < m.program.steps.size()) {
        return false;
      }
    }
    for (const SlaveUnit& u : units_) {
      if (u.current) {
        return false;
      }
    }
    return true;
  }

  RunResult run(std::uint64_t limit) {
    assert(started_);
    RunResult rr;
    while (!idle() && cycle_ < limit) {
      for (TraceEvent& e : step()) {
        rr.report.total += 1;
        if (e.resp == BusResponse::Code::Okay) {
          rr.report.allowed += 1;
        } else {
          rr.report.denied_by_reason[e.reason] += 1;
        }
        rr.events.push_back(e);
      }
    }
    rr.report.mismatches = total_mismatches();
    rr.report.final_cycle = cycle_;
    return rr;
  }

  std::uint64_t cycle() const { return cycle_; }
  bool started() const { return started_; }
  const MemoryMap& map() const { return cfg_.map; }
  MasterId num_masters() const { return cfg_.num_masters; }

  const SramModel& memory(int slave_id) const { return unit(slave_id).mem; }
  const Monitor& monitor(int slave_id) const { return unit(slave_id).monitor; }

  std::uint64_t total_mismatches() const {
    std::uint64_t n = 0;
    for (const auto& [mid, m] : masters_) {
      n += m.mismatch_count;
    }
    return n;
  }

  std::uint64_t mismatches(MasterId mid) const {
    auto it = masters_.find(mid);
    return it == masters_.end() ? 0 : it->second.mismatch_count;
  }

 private:
  struct InFlight {
    Transaction txn;
    word32 local_addr = 0;
    std::uint64_t grant = 0;
    std::uint64_t respond = 0;
    Verdict verdict;                     // APU verdict, then DPU on writes
    bool write_in_data_path = false;     // APU-allowed write
    std::optional<PendingWrite> pending;
    std::optional<BusResponse> response;
  };

  struct SlaveUnit {
    Window window;
    Monitor monitor;
    SramModel mem;
    RoundRobinArbiter arbiter;
    std::optional<InFlight> current;
    std::set<MasterId> requests;  // rebuilt every cycle
  };

  // A transaction the fabric answers itself (unmapped address).
  struct FabricPending {
    ProgramStep step;
    std::uint64_t respond = 0;
  };

  struct MasterCtx {
    MasterProgram program;
    std::size_t pc = 0;
    bool in_flight = false;
    bool requesting = false;
    std::uint64_t issue_cycle = 0;
    std::uint64_t mismatch_count = 0;
    std::optional<FabricPending> fabric_pending;
  };

  // --- configuration path -------------------------------------------------

  void apply(const LoadApuCmd& c) {
    validate_policy_mid(c.policy.mid);
    const auto bits = static_cast<std::uint8_t>(c.policy.perm);
    if (bits < 1 || bits > 3) {
      throw TcuError(TcuError::Kind::MalformedPolicy,
                     "reserved permission encoding");
    }
    if (!unit(c.slave).monitor.load_apu(c.policy)) {
      throw TcuError(TcuError::Kind::CapacityExceeded,
                     "APU policy register space full on slave " +
                         std::to_string(c.slave));
    }
  }

  void apply(const LoadDpuCmd& c) {
    validate_policy_mid(c.policy.mid);
    if (!unit(c.slave).monitor.load_dpu(c.policy)) {
      throw TcuError(TcuError::Kind::CapacityExceeded,
                     "DPU policy register space full on slave " +
                         std::to_string(c.slave));
    }
  }

  void apply(const LoadMemCmd& c) {
    assert(c.addr % 4 == 0);
    for (std::size_t i = 0; i < c.words.size(); ++i) {
      const word32 a = c.addr + static_cast<word32>(4 * i);
      const Window* w = cfg_.map.decode(a);
      if (w == nullptr) {
        throw TcuError(TcuError::Kind::AddressUnmapped,
                       "LOADMEM address " + hex8(a) + " is unmapped");
      }
      unit(w->slave_id).mem.poke(a - w->base, c.words[i]);
    }
  }

  void apply(const SetSrsCmd& c) {
    SlaveUnit* srs = srs_unit();
    if (srs == nullptr ||
        static_cast<word32>(c.reg) * 4 >= srs->window.size || c.reg < 0) {
      throw TcuError(TcuError::Kind::AddressUnmapped,
                     "SRS register " + std::to_string(c.reg) +
                         " does not exist");
    }
    srs->mem.poke(static_cast<word32>(c.reg) * 4, c.value);
  }

  void apply(const StartCmd&) { started_ = true; }

  void validate_policy_mid(MasterId mid) const {
    if (mid >= cfg_.num_masters) {
      throw TcuError(TcuError::Kind::MalformedPolicy,
                     "policy master id " + hex(mid) + " out of range");
    }
  }

  // --- cycle phases --------------------------------------------------------

  std::vector<TraceEvent> deliver_responses(std::uint64_t now) {
    std::vector<TraceEvent> events;
    for (auto& [mid, m] : masters_) {
      if (m.fabric_pending && m.fabric_pending->respond == now) {
        const ProgramStep& s = m.fabric_pending->step;
        TraceEvent e;
        e.cycle = now;
        e.slave_id = -1;
        e.mid = mid;
        e.kind = s.kind;
        e.addr = s.addr;
        e.data = s.kind == AccessKind::Write ? s.wdata : 0;
        e.resp = BusResponse::Code::Error;
        e.reason = Reason::DecodeError;
        events.push_back(e);
        note_response(m, s, /*okay=*/false, 0);
        m.fabric_pending.reset();
        m.in_flight = false;
      }
    }
    for (SlaveUnit& u : units_) {
      if (!u.current || u.current->respond != now) {
        continue;
      }
      InFlight& f = *u.current;
      assert(f.response.has_value());
      TraceEvent e;
      e.cycle = now;
      e.slave_id = u.window.slave_id;
      e.mid = f.txn.mid;
      e.kind = f.txn.kind;
      e.addr = f.txn.addr;
      e.data = f.txn.kind == AccessKind::Write ? f.txn.wdata : f.response->data;
      e.resp = f.response->code;
      e.reason = f.response->reason;
      events.push_back(e);
      MasterCtx& m = masters_.at(f.txn.mid);
      note_response(m, m.program.steps[m.pc - 1], f.response->ok(),
                    f.response->data);
      m.in_flight = false;
      u.current.reset();
    }
    std::sort(events.begin(), events.end(),
              [](const TraceEvent& a, const TraceEvent& b) {
                return std::tie(a.slave_id, a.mid) < std::tie(b.slave_id, b.mid);
              });
    return events;
  }

  void advance_in_flight(std::uint64_t now) {
    for (SlaveUnit& u : units_) {
      if (!u.current) {
        continue;
      }
      InFlight& f = *u.current;
      if (now == f.grant + 1) {
        if (f.write_in_data_path) {
          // Data phase: the registered write meets its data.
          f.verdict = u.monitor.check_data_phase(*f.pending, f.txn.wdata, now);
          f.pending.reset();
        } else {
          f.response = u.monitor.filter_and_respond(
              f.verdict, f.txn, u.mem, f.local_addr, now, f.respond);
        }
      } else if (f.write_in_data_path && now == f.grant + 2) {
        f.response = u.monitor.filter_and_respond(
            f.verdict, f.txn, u.mem, f.local_addr, now, f.respond);
      }
    }
  }

  void collect_and_grant(std::uint64_t now) {
    for (SlaveUnit& u : units_) {
      u.requests.clear();
    }
    if (!started_) {
      return;
    }
    for (auto& [mid, m] : masters_) {
      if (m.in_flight || m.pc >= m.program.steps.size()) {
        continue;
      }
      const ProgramStep& s = m.program.steps[m.pc];
      assert(s.addr % 4 == 0);
      if (!m.requesting) {
        m.requesting = true;
        m.issue_cycle = now;
      }
      const Window* w = cfg_.map.decode(s.addr);
      if (w == nullptr) {
        m.fabric_pending = FabricPending{s, now + 2};
        m.in_flight = true;
        m.requesting = false;
        m.pc += 1;
        continue;
      }
      unit(w->slave_id).requests.insert(mid);
    }
    for (SlaveUnit& u : units_) {
      if (u.current || u.requests.empty()) {
        continue;
      }
      const MasterId granted = u.arbiter.grant(u.requests);
      MasterCtx& m = masters_.at(granted);
      const ProgramStep& s = m.program.steps[m.pc];
      InFlight f;
      f.txn.mid = granted;
      f.txn.kind = s.kind;
      f.txn.addr = s.addr;
      f.txn.wdata = s.kind == AccessKind::Write ? s.wdata : 0;
      f.txn.issue_cycle = m.issue_cycle;
      f.local_addr = s.addr - u.window.base;
      f.grant = now;
      f.verdict = u.monitor.check_address_phase(f.txn);
      if (s.kind == AccessKind::Write && f.verdict.allowed()) {
        f.write_in_data_path = true;
        f.pending = PendingWrite{f.txn, now};
        f.respond = now + 3;
      } else {
        f.respond = now + 2;
      }
      f.txn.complete_cycle = f.respond;
      u.current = f;
      m.in_flight = true;
      m.requesting = false;
      m.pc += 1;
    }
  }

  static void note_response(MasterCtx& m, const ProgramStep& s, bool okay,
                            word32 rdata) {
    bool mismatch = false;
    if (s.expect == Expect::Okay && !okay) {
      mismatch = true;
    }
    if (s.expect == Expect::Error && okay) {
      mismatch = true;
    }
    if (okay && s.kind == AccessKind::Read && s.expect_rdata &&
        rdata != *s.expect_rdata) {
      mismatch = true;
    }
    m.mismatch_count += mismatch ? 1 : 0;
  }

  SlaveUnit& unit(int slave_id) {
    for (SlaveUnit& u : units_) {
      if (u.window.slave_id == slave_id) {
        return u;
      }
    }
    throw TcuError(TcuError::Kind::UnknownSlave,
                   "no slave with id " + std::to_string(slave_id));
  }

  const SlaveUnit& unit(int slave_id) const {
    return const_cast<Engine*>(this)->unit(slave_id);
  }

  SlaveUnit* srs_unit() {
    for (SlaveUnit& u : units_) {
      if (u.window.is_srs) {
        return &u;
      }
    }
    return nullptr;
  }

  EngineConfig cfg_;
  std::vector<SlaveUnit> units_;  // sorted by slave id
  std::map<MasterId, MasterCtx> masters_;
  std::uint64_t cycle_ = 0;
  bool started_ = false;
};

}  // namespace transmon
