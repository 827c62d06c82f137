// Copyright transmon contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

namespace transmon {

// All bus addresses, data words and masks are 32 bits wide; arithmetic on
// them is modulo 2^32.
using word32 = std::uint32_t;

// Master identifiers are assigned by the fabric from the physical port
// index, never taken from a transaction payload.
using MasterId = std::uint32_t;

// Renders a word as 0x<8 hex digits>, zero padded, lowercase.
inline std::string hex8(word32 v) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out = "0x00000000";
  for (int i = 0; i < 8; ++i) {
    out[9 - i] = digits[(v >> (4 * i)) & 0xF];
  }
  return out;
}

// Renders a value as 0x<hex>, no padding (used for master ids).
inline std::string hex(std::uint64_t v) {
  static constexpr char digits[] = "0123456789abcdef";
  if (v == 0) {
    return "0x0";
  }
  std::string out;
  while (v != 0) {
    out.insert(out.begin(), digits[v & 0xF]);
    v >>= 4;
  }
  return "0x" + out;
}

}  // namespace transmon
