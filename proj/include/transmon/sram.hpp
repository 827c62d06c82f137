// Copyright transmon contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

#include "transmon/policy.hpp"
#include "transmon/word.hpp"

namespace transmon {

// Word-addressed SRAM slave model, zero initialized. Addresses are byte
// offsets local to the slave's window and must be word aligned (enforced
// at scenario load, asserted here).
//
// The access log records exactly the accesses that reached the memory
// through the bus path; it is the ground truth for checking that denied
// transactions never touch the slave. The privileged configuration path
// (poke/peek) bypasses the log.
class SramModel {
 public:
  struct LogEntry {
    std::uint64_t cycle = 0;
    AccessKind kind = AccessKind::Read;
    word32 addr = 0;  // local byte offset
    word32 data = 0;

    friend bool operator==(const LogEntry&, const LogEntry&) = default;
  };

  explicit SramModel(word32 size_bytes)
      : size_(size_bytes), words_(size_bytes / 4, 0) {
    assert(size_bytes % 4 == 0);
  }

  word32 size() const { return size_; }

  // Bus path.
  word32 read(word32 local_addr, std::uint64_t cycle) {
    const word32 value = words_[index(local_addr)];
    log_.push_back({cycle, AccessKind::Read, local_addr, value});
    return value;
  }

  void write(word32 local_addr, word32 value, std::uint64_t cycle) {
    words_[index(local_addr)] = value;
    log_.push_back({cycle, AccessKind::Write, local_addr, value});
  }

  // Configuration path: no logging.
  word32 peek(word32 local_addr) const { return words_[index(local_addr)]; }
  void poke(word32 local_addr, word32 value) {
    words_[index(local_addr)] = value;
  }

  const std::vector<LogEntry>& access_log() const { return log_; }
  const std::vector<word32>& snapshot() const { return words_; }

 private:
  std::size_t index(word32 local_addr) const {
    assert(local_addr % 4 == 0);
    assert(local_addr < size_);
    return local_addr / 4;
  }

  word32 size_;
  std::vector<word32> words_;
  std::vector<LogEntry> log_;
};

}  // namespace transmon
