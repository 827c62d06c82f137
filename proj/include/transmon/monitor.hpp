// Copyright transmon contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
//
// Per-slave transaction monitor. Every transaction the fabric routes to a
// slave passes through the monitor in two phases:
//
//   address phase: APU check. Denied transactions never reach the slave.
//   data phase (writes only, one cycle later): DPU check on the write
//   data. Address and control are registered in the meantime, so every
//   DPU-checked write completes one cycle after an equivalent read.
//
// The slave access filter is the Allow gate in front of the memory: on
// Deny the access is dropped, the slave state is untouched, and an Error
// response carrying the deny reason goes back to the initiating master
// only. Denied reads return all-zero data.
#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

#include "transmon/policy.hpp"
#include "transmon/sram.hpp"
#include "transmon/word.hpp"

namespace transmon {

// One master-initiated read or write.
struct Transaction {
  MasterId mid = 0;
  AccessKind kind = AccessKind::Read;
  word32 addr = 0;   // global address
  word32 wdata = 0;  // writes only
  std::uint64_t issue_cycle = 0;
  std::uint64_t complete_cycle = 0;
};

struct BusResponse {
  enum class Code : std::uint8_t { Okay, Error };

  Code code = Code::Error;
  Reason reason = Reason::DecodeError;
  std::uint64_t cycle = 0;
  word32 data = 0;  // read data on Okay reads, zero on denied reads

  static BusResponse okay(std::uint64_t cycle, word32 data) {
    return {Code::Okay, Reason::None, cycle, data};
  }
  static BusResponse error(std::uint64_t cycle, Reason r) {
    assert(r != Reason::None);
    return {Code::Error, r, cycle, 0};
  }

  bool ok() const { return code == Code::Okay; }
};

// Registered address/control of a write awaiting its data-phase check.
// Lives for exactly one cycle.
struct PendingWrite {
  Transaction txn;
  std::uint64_t registered_cycle = 0;
};

// Fixed-capacity policy storage, mutable only through the trusted
// configuration path.
struct PolicyRegisterSpace {
  std::vector<ApuPolicy> apu_entries;
  std::vector<DpuPolicy> dpu_entries;
  std::size_t apu_capacity = 16;
  std::size_t dpu_capacity = 16;
  int slave_id = 0;
};

class Monitor {
 public:
  Monitor(int slave_id, std::size_t apu_capacity, std::size_t dpu_capacity) {
    prs_.slave_id = slave_id;
    prs_.apu_capacity = apu_capacity;
    prs_.dpu_capacity = dpu_capacity;
  }

  // Configuration path. Returns false when the register space is full.
  bool load_apu(const ApuPolicy& p) {
    if (prs_.apu_entries.size() >= prs_.apu_capacity) {
      return false;
    }
    prs_.apu_entries.push_back(p);
    return true;
  }

  bool load_dpu(const DpuPolicy& p) {
    if (prs_.dpu_entries.size() >= prs_.dpu_capacity) {
      return false;
    }
    prs_.dpu_entries.push_back(p);
    return true;
  }

  Verdict check_address_phase(const Transaction& txn) const {
    return apu_check(prs_.apu_entries, txn.mid, txn.addr, txn.kind);
  }

  Verdict check_data_phase(const PendingWrite& pw, word32 wdata,
                           std::uint64_t now) const {
    assert(now == pw.registered_cycle + 1);
    (void)now;
    return dpu_check(prs_.dpu_entries, pw.txn.mid, pw.txn.addr, wdata);
  }

  // Slave access filter plus response generation. access_cycle stamps the
  // slave log; respond_cycle stamps the response.
  BusResponse filter_and_respond(const Verdict& verdict, const Transaction& txn,
                                 SramModel& slave, word32 local_addr,
                                 std::uint64_t access_cycle,
                                 std::uint64_t respond_cycle) const {
    if (!verdict.allowed()) {
      return BusResponse::error(respond_cycle, verdict.reason);
    }
    if (txn.kind == AccessKind::Read) {
      return BusResponse::okay(respond_cycle, slave.read(local_addr, access_cycle));
    }
    slave.write(local_addr, txn.wdata, access_cycle);
    return BusResponse::okay(respond_cycle, txn.wdata);
  }

  const PolicyRegisterSpace& prs() const { return prs_; }
  int slave_id() const { return prs_.slave_id; }

 private:
  PolicyRegisterSpace prs_;
};

}  // namespace transmon
