// Copyright transmon contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "transmon/monitor.hpp"
#include "transmon/policy.hpp"
#include "transmon/word.hpp"

namespace transmon {

// One line of the deterministic output trace. Events are emitted at the
// response cycle, ordered by (cycle, slave, mid). slave is -1 when the
// address decoded to no window at all.
struct TraceEvent {
  std::uint64_t cycle = 0;
  int slave_id = -1;
  MasterId mid = 0;
  AccessKind kind = AccessKind::Read;
  word32 addr = 0;
  word32 data = 0;  // wdata for writes, rdata for allowed reads, 0 otherwise
  BusResponse::Code resp = BusResponse::Code::Error;
  Reason reason = Reason::DecodeError;

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

// cycle=<dec> slave=<dec> mid=0x<hex> op=R|W addr=0x<hex8> data=0x<hex8>
// resp=OKAY|ERR reason=<token>
inline std::string format_trace_event(const TraceEvent& e) {
  std::string line;
  line += "cycle=" + std::to_string(e.cycle);
  line += " slave=" + std::to_string(e.slave_id);
  line += " mid=" + hex(e.mid);
  line += " op=";
  line += access_kind_letter(e.kind);
  line += " addr=" + hex8(e.addr);
  line += " data=" + hex8(e.data);
  line += e.resp == BusResponse::Code::Okay ? " resp=OKAY" : " resp=ERR";
  line += " reason=";
  line += reason_token(e.reason);
  return line;
}

inline std::string format_trace(const std::vector<TraceEvent>& events) {
  std::string out;
  for (const TraceEvent& e : events) {
    out += format_trace_event(e);
    out += '\n';
  }
  return out;
}

struct RunReport {
  std::uint64_t total = 0;
  std::uint64_t allowed = 0;
  std::map<Reason, std::uint64_t> denied_by_reason;
  std::uint64_t mismatches = 0;
  std::uint64_t final_cycle = 0;

  std::uint64_t denied() const {
    std::uint64_t n = 0;
    for (const auto& [r, c] : denied_by_reason) {
      n += c;
    }
    return n;
  }

  std::string render() const {
    std::string out;
    out += "total=" + std::to_string(total) + "\n";
    out += "allowed=" + std::to_string(allowed) + "\n";
    out += "denied=" + std::to_string(denied()) + "\n";
    for (const auto& [r, c] : denied_by_reason) {
      out += "denied.";
      out += reason_token(r);
      out += "=" + std::to_string(c) + "\n";
    }
    out += "mismatches=" + std::to_string(mismatches) + "\n";
    out += "final_cycle=" + std::to_string(final_cycle) + "\n";
    return out;
  }
};

}  // namespace transmon
