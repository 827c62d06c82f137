// Copyright transmon contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
//
// Pure matching logic for the two policy kinds held in a transaction
// monitor's policy register space:
//
//   APU (address protection unit): an allow-list keyed on master id,
//   address range and access kind. A request passes iff at least one
//   entry matches; with no matching entry the request is denied.
//
//   DPU (data protection unit): a deny-list for write data. A write is
//   blocked iff some entry matches master id, address range and the
//   masked data comparison.
//
// Address ranges are derived from an (addr, mask) pair:
//   lo = addr AND NOT(mask),  hi = addr OR mask
// and membership is the inclusive interval test lo <= a <= hi. Masks with
// non-contiguous set bits are legal; they yield a range that is a superset
// of the set of addresses reachable by toggling mask bits.
#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>

#include "transmon/word.hpp"

namespace transmon {

enum class AccessKind : std::uint8_t { Read, Write };

inline char access_kind_letter(AccessKind k) {
  return k == AccessKind::Read ? 'R' : 'W';
}

// 2-bit permission encoding. The reserved encoding 00 is rejected when a
// scenario is loaded and never reaches the matcher.
enum class Permission : std::uint8_t {
  ReadOnly = 0b01,
  WriteOnly = 0b10,
  ReadWrite = 0b11,
};

inline std::string_view permission_token(Permission p) {
  switch (p) {
    case Permission::ReadOnly: return "RO";
    case Permission::WriteOnly: return "WO";
    case Permission::ReadWrite: return "RW";
  }
  assert(false && "reserved permission encoding");
  return "??";
}

struct ApuPolicy {
  MasterId mid = 0;
  word32 addr = 0;
  word32 mask = 0;
  Permission perm = Permission::ReadWrite;

  friend bool operator==(const ApuPolicy&, const ApuPolicy&) = default;
};

struct DpuPolicy {
  MasterId mid = 0;
  word32 addr = 0;
  word32 data = 0;
  word32 dmask = 0;  // data bits set here are ignored by the comparison
  word32 amask = 0;

  friend bool operator==(const DpuPolicy&, const DpuPolicy&) = default;
};

enum class Reason : std::uint8_t {
  None,
  ApuNoMatch,
  ApuPermission,
  DpuDataBlocked,
  DecodeError,
};

inline std::string_view reason_token(Reason r) {
  switch (r) {
    case Reason::None: return "None";
    case Reason::ApuNoMatch: return "ApuNoMatch";
    case Reason::ApuPermission: return "ApuPermission";
    case Reason::DpuDataBlocked: return "DpuDataBlocked";
    case Reason::DecodeError: return "DecodeError";
  }
  return "?";
}

// Allow carries no reason; Deny always carries one.
struct Verdict {
  enum class Decision : std::uint8_t { Allow, Deny };

  Decision decision = Decision::Deny;
  Reason reason = Reason::ApuNoMatch;

  static Verdict allow() { return {Decision::Allow, Reason::None}; }
  static Verdict deny(Reason r) {
    assert(r != Reason::None);
    return {Decision::Deny, r};
  }

  bool allowed() const { return decision == Decision::Allow; }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// Inclusive address range derived from an address/mask pair.
inline std::pair<word32, word32> range_of(word32 addr, word32 mask) {
  return {addr & ~mask, addr | mask};
}

inline bool in_range(word32 a, word32 addr, word32 mask) {
  const auto [lo, hi] = range_of(addr, mask);
  return lo <= a && a <= hi;
}

inline bool perm_covers(Permission perm, AccessKind kind) {
  switch (perm) {
    case Permission::ReadOnly: return kind == AccessKind::Read;
    case Permission::WriteOnly: return kind == AccessKind::Write;
    case Permission::ReadWrite: return true;
  }
  assert(false && "reserved permission encoding");
  return false;
}

inline bool apu_match(const ApuPolicy& p, MasterId mid, word32 addr,
                      AccessKind kind) {
  return mid == p.mid && in_range(addr, p.addr, p.mask) &&
         perm_covers(p.perm, kind);
}

// Allow iff some entry matches. When no entry matches, the deny reason is
// ApuPermission if at least one entry matched on master id and address
// range but not on the access kind, otherwise ApuNoMatch.
inline Verdict apu_check(std::span<const ApuPolicy> prs, MasterId mid,
                         word32 addr, AccessKind kind) {
  bool range_hit = false;
  for (const ApuPolicy& p : prs) {
    if (p.mid != mid || !in_range(addr, p.addr, p.mask)) {
      continue;
    }
    if (perm_covers(p.perm, kind)) {
      return Verdict::allow();
    }
    range_hit = true;
  }
  return Verdict::deny(range_hit ? Reason::ApuPermission : Reason::ApuNoMatch);
}

// Data equality is masked on both sides: bits set in dmask never
// participate in the comparison, regardless of what the entry stores
// there.
inline bool dpu_match(const DpuPolicy& p, MasterId mid, word32 addr,
                      word32 wdata) {
  return mid == p.mid && in_range(addr, p.addr, p.amask) &&
         (wdata & ~p.dmask) == (p.data & ~p.dmask);
}

// Deny-list: a write is blocked iff some entry matches. Reads are never
// evaluated here.
inline Verdict dpu_check(std::span<const DpuPolicy> prs, MasterId mid,
                         word32 addr, word32 wdata) {
  for (const DpuPolicy& p : prs) {
    if (dpu_match(p, mid, addr, wdata)) {
      return Verdict::deny(Reason::DpuDataBlocked);
    }
  }
  return Verdict::allow();
}

}  // namespace transmon
