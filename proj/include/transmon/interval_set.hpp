// Copyright transmon contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "transmon/word.hpp"

namespace transmon {

// Set of 32-bit addresses kept as sorted, disjoint, non-adjacent inclusive
// intervals [lo, hi]. Adjacent inserts merge ([0,3] + [4,9] -> [0,9]).
class IntervalSet {
 public:
  using Interval = std::pair<word32, word32>;

  void insert(word32 lo, word32 hi) {
    if (lo > hi) {
      std::swap(lo, hi);
    }
    // Widen to 64 bits so hi+1 cannot wrap at 0xffffffff.
    const std::uint64_t nlo = lo;
    const std::uint64_t nhi = hi;
    std::vector<Interval> merged;
    merged.reserve(iv_.size() + 1);
    std::uint64_t mlo = nlo;
    std::uint64_t mhi = nhi;
    for (const auto& [a, b] : iv_) {
      const std::uint64_t la = a;
      const std::uint64_t lb = b;
      if (lb + 1 < mlo || mhi + 1 < la) {
        merged.emplace_back(a, b);
      } else {
        mlo = std::min(mlo, la);
        mhi = std::max(mhi, lb);
      }
    }
    merged.emplace_back(static_cast<word32>(mlo), static_cast<word32>(mhi));
    std::sort(merged.begin(), merged.end());
    iv_ = std::move(merged);
  }

  void insert(const IntervalSet& other) {
    for (const auto& [a, b] : other.iv_) {
      insert(a, b);
    }
  }

  bool contains(word32 a) const {
    for (const auto& [lo, hi] : iv_) {
      if (lo <= a && a <= hi) {
        return true;
      }
    }
    return false;
  }

  // True iff the whole inclusive interval [lo, hi] is inside the set.
  bool covers(word32 lo, word32 hi) const {
    if (lo > hi) {
      std::swap(lo, hi);
    }
    for (const auto& [a, b] : iv_) {
      if (a <= lo && hi <= b) {
        return true;
      }
    }
    return false;
  }

  // True iff other is a subset. Intervals are merged, so each interval of
  // other must fit inside a single interval here.
  bool covers(const IntervalSet& other) const {
    for (const auto& [lo, hi] : other.iv_) {
      if (!covers(lo, hi)) {
        return false;
      }
    }
    return true;
  }

  bool intersects(word32 lo, word32 hi) const {
    if (lo > hi) {
      std::swap(lo, hi);
    }
    for (const auto& [a, b] : iv_) {
      if (lo <= b && a <= hi) {
        return true;
      }
    }
    return false;
  }

  bool empty() const { return iv_.empty(); }
  const std::vector<Interval>& intervals() const { return iv_; }

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> iv_;
};

}  // namespace transmon
