// Copyright transmon contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cassert>
#include <set>

#include "transmon/word.hpp"

namespace transmon {

// Per-slave round-robin arbiter: grants the first requester at or after
// the pointer in cyclic order; the pointer advances past the grant.
class RoundRobinArbiter {
 public:
  explicit RoundRobinArbiter(MasterId num_masters)
      : num_masters_(num_masters) {
    assert(num_masters > 0);
  }

  MasterId grant(const std::set<MasterId>& requests) {
    assert(!requests.empty());
    auto it = requests.lower_bound(pointer_);
    const MasterId granted = (it != requests.end()) ? *it : *requests.begin();
    pointer_ = (granted + 1) % num_masters_;
    return granted;
  }

  MasterId pointer() const { return pointer_; }

 private:
  MasterId num_masters_;
  MasterId pointer_ = 0;
};

}  // namespace transmon
