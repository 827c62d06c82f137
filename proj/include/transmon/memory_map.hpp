// Copyright transmon contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "transmon/word.hpp"

namespace transmon {

// One slave's slice of the global address space. The shared register
// space (SRS) is carried as an ordinary window flagged is_srs; it gets a
// slave id one past the SRAM slaves and its own transaction monitor.
struct Window {
  int slave_id = 0;
  word32 base = 0;
  word32 size = 0;  // bytes
  bool is_srs = false;

  bool contains(word32 addr) const {
    return addr >= base && static_cast<std::uint64_t>(addr) <
                               static_cast<std::uint64_t>(base) + size;
  }
  word32 last() const { return static_cast<word32>(base + (size - 1)); }

  friend bool operator==(const Window&, const Window&) = default;
};

class MemoryMap {
 public:
  MemoryMap() = default;

  explicit MemoryMap(std::vector<Window> windows) : windows_(std::move(windows)) {
    std::sort(windows_.begin(), windows_.end(),
              [](const Window& a, const Window& b) { return a.base < b.base; });
    for (std::size_t i = 0; i < windows_.size(); ++i) {
      const Window& w = windows_[i];
      if (w.size == 0 || w.size % 4 != 0) {
        throw std::invalid_argument("window size must be a positive multiple of 4");
      }
      if (static_cast<std::uint64_t>(w.base) + w.size > (1ull << 32)) {
        throw std::invalid_argument("window exceeds the 32-bit address space");
      }
      if (i > 0 && windows_[i - 1].last() >= w.base) {
        throw std::invalid_argument("memory map windows overlap");
      }
    }
  }

  // Unique window containing addr, or nullptr when the address is unmapped.
  const Window* decode(word32 addr) const {
    auto it = std::upper_bound(
        windows_.begin(), windows_.end(), addr,
        [](word32 a, const Window& w) { return a < w.base; });
    if (it == windows_.begin()) {
      return nullptr;
    }
    --it;
    return it->contains(addr) ? &*it : nullptr;
  }

  const Window* window_of_slave(int slave_id) const {
    for (const Window& w : windows_) {
      if (w.slave_id == slave_id) {
        return &w;
      }
    }
    return nullptr;
  }

  const std::vector<Window>& windows() const { return windows_; }

 private:
  std::vector<Window> windows_;  // sorted by base
};

}  // namespace transmon
