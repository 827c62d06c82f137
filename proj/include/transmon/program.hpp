// Copyright transmon contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "transmon/policy.hpp"
#include "transmon/word.hpp"

namespace transmon {

// Masters are trace driven: each runs a fixed list of steps, strictly in
// order, one outstanding transaction at a time. A step carries an expected
// response so a scenario doubles as its own checker; mismatches are
// recorded, they never abort the run.
enum class Expect : std::uint8_t { Okay, Error, Any };

inline std::string_view expect_token(Expect e) {
  switch (e) {
    case Expect::Okay: return "OKAY";
    case Expect::Error: return "ERROR";
    case Expect::Any: return "ANY";
  }
  return "?";
}

struct ProgramStep {
  AccessKind kind = AccessKind::Read;
  word32 addr = 0;
  word32 wdata = 0;  // writes only
  Expect expect = Expect::Any;
  std::optional<word32> expect_rdata;  // reads only, checked on OKAY

  friend bool operator==(const ProgramStep&, const ProgramStep&) = default;
};

struct MasterProgram {
  std::vector<ProgramStep> steps;

  friend bool operator==(const MasterProgram&, const MasterProgram&) = default;
};

}  // namespace transmon
