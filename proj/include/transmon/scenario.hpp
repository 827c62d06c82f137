// Copyright transmon contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
//
// Declarative scenario files: topology, memory map, configuration
// commands, policies and per-master transaction programs. Line oriented,
// `#` starts a comment, keywords are case-insensitive, numeric literals
// are hex with a mandatory 0x prefix (underscores ignored):
//
//   TOPOLOGY masters <int> slaves <int> prs_apu <int> prs_dpu <int>
//   MEMMAP slave <int> base <hex> size <hex>
//   SRS base <hex> regs <int>
//   APU slave <int|auto> mid <hex> addr <hex> mask <hex> perm RO|WO|RW
//   DPU slave <int|auto> mid <hex> addr <hex> amask <hex> data <hex> dmask <hex>
//   LOADMEM <hex-addr> <hex-word> [<hex-word> ...]
//   SETSRS <int> <hex>
//   MASTER <hex-mid> READ <hex> EXPECT OKAY|ERROR|ANY [RDATA <hex>]
//   MASTER <hex-mid> WRITE <hex> <hex> EXPECT OKAY|ERROR|ANY
//   LIMIT <int>
//
// `slave auto` places a policy at every monitor whose window the derived
// address range intersects. There is deliberately no token that could set
// a transaction-level master id: the id of every transaction is the port
// the program runs on.
#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "transmon/interval_set.hpp"
#include "transmon/memory_map.hpp"
#include "transmon/policy.hpp"
#include "transmon/program.hpp"
#include "transmon/word.hpp"

namespace transmon {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, std::string token, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message +
                           (token.empty() ? "" : " (at '" + token + "')")),
        line_(line),
        token_(std::move(token)) {}

  int line() const { return line_; }
  const std::string& token() const { return token_; }

 private:
  int line_;
  std::string token_;
};

struct Topology {
  MasterId num_masters = 64;
  int num_slaves = 4;
  std::size_t apu_capacity = 16;
  std::size_t dpu_capacity = 16;

  friend bool operator==(const Topology&, const Topology&) = default;
};

struct WindowSpec {
  int slave = 0;
  word32 base = 0;
  word32 size = 0;
  int line = 0;

  friend bool operator==(const WindowSpec& a, const WindowSpec& b) {
    return a.slave == b.slave && a.base == b.base && a.size == b.size;
  }
};

struct SrsSpec {
  word32 base = 0x5000'0000;
  int regs = 64;
  int line = 0;

  friend bool operator==(const SrsSpec& a, const SrsSpec& b) {
    return a.base == b.base && a.regs == b.regs;
  }
};

// std::nullopt slave = auto placement.
struct ApuEntry {
  std::optional<int> slave;
  ApuPolicy policy;
  int line = 0;

  friend bool operator==(const ApuEntry& a, const ApuEntry& b) {
    return a.slave == b.slave && a.policy == b.policy;
  }
};

struct DpuEntry {
  std::optional<int> slave;
  DpuPolicy policy;
  int line = 0;

  friend bool operator==(const DpuEntry& a, const DpuEntry& b) {
    return a.slave == b.slave && a.policy == b.policy;
  }
};

struct LoadMemSpec {
  word32 addr = 0;
  std::vector<word32> words;
  int line = 0;

  friend bool operator==(const LoadMemSpec& a, const LoadMemSpec& b) {
    return a.addr == b.addr && a.words == b.words;
  }
};

struct SetSrsSpec {
  int reg = 0;
  word32 value = 0;
  int line = 0;

  friend bool operator==(const SetSrsSpec& a, const SetSrsSpec& b) {
    return a.reg == b.reg && a.value == b.value;
  }
};

struct Finding {
  enum class Severity { Warning, Error };

  Severity severity = Severity::Warning;
  int line = 0;
  std::string message;

  bool is_error() const { return severity == Severity::Error; }
};

struct Scenario {
  Topology topology;
  std::vector<WindowSpec> windows;
  SrsSpec srs;
  std::vector<ApuEntry> apus;
  std::vector<DpuEntry> dpus;
  std::vector<LoadMemSpec> loadmems;
  std::vector<SetSrsSpec> setsrs;
  std::map<MasterId, MasterProgram> programs;
  std::uint64_t limit = 10000;

  // The SRS monitor sits one slave id past the SRAM slaves.
  int srs_slave_id() const { return topology.num_slaves; }

  MemoryMap memory_map() const {
    std::vector<Window> ws;
    ws.reserve(windows.size() + 1);
    for (const WindowSpec& w : windows) {
      ws.push_back({w.slave, w.base, w.size, false});
    }
    ws.push_back({srs_slave_id(), srs.base,
                  static_cast<word32>(srs.regs) * 4, true});
    return MemoryMap(std::move(ws));
  }

  friend bool operator==(const Scenario& a, const Scenario& b) {
    return a.topology == b.topology && a.windows == b.windows &&
           a.srs == b.srs && a.apus == b.apus && a.dpus == b.dpus &&
           a.loadmems == b.loadmems && a.setsrs == b.setsrs &&
           a.programs == b.programs && a.limit == b.limit;
  }
};

namespace detail {

inline std::string upcase(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return out;
}

// Cursor over the tokens of one scenario line.
class LineParser {
 public:
  LineParser(int line, std::vector<std::string> tokens)
      : line_(line), tokens_(std::move(tokens)) {}

  bool at_end() const { return pos_ >= tokens_.size(); }

  const std::string& next(const char* what) {
    if (at_end()) {
      throw ParseError(line_, "", std::string("expected ") + what +
                                      ", got end of line");
    }
    return tokens_[pos_++];
  }

  void keyword(const char* kw) {
    const std::string& t = next(kw);
    if (upcase(t) != upcase(kw)) {
      throw ParseError(line_, t, std::string("expected keyword '") + kw + "'");
    }
  }

  bool peek_keyword(const char* kw) const {
    return pos_ < tokens_.size() && upcase(tokens_[pos_]) == upcase(kw);
  }

  word32 hex(const char* what) {
    const std::string& t = next(what);
    std::string digits = t;
    digits.erase(std::remove(digits.begin(), digits.end(), '_'), digits.end());
    if (digits.size() < 3 || digits[0] != '0' ||
        (digits[1] != 'x' && digits[1] != 'X')) {
      throw ParseError(line_, t, std::string(what) +
                                     " must be a 0x-prefixed hex literal");
    }
    std::uint64_t value = 0;
    for (std::size_t i = 2; i < digits.size(); ++i) {
      const char c = digits[i];
      int d = 0;
      if (c >= '0' && c <= '9') {
        d = c - '0';
      } else if (c >= 'a' && c <= 'f') {
        d = c - 'a' + 10;
      } else if (c >= 'A' && c <= 'F') {
        d = c - 'A' + 10;
      } else {
        throw ParseError(line_, t, std::string("bad hex digit in ") + what);
      }
      value = value * 16 + static_cast<std::uint64_t>(d);
      if (value > 0xFFFF'FFFFull) {
        throw ParseError(line_, t, std::string(what) + " exceeds 32 bits");
      }
    }
    return static_cast<word32>(value);
  }

  std::int64_t integer(const char* what) {
    const std::string& t = next(what);
    if (t.empty() ||
        !std::all_of(t.begin(), t.end(), [](unsigned char c) {
          return std::isdigit(c) != 0;
        })) {
      throw ParseError(line_, t, std::string(what) +
                                     " must be a decimal integer");
    }
    std::int64_t value = 0;
    for (char c : t) {
      value = value * 10 + (c - '0');
      if (value > 0xFFFF'FFFFll) {
        throw ParseError(line_, t, std::string(what) + " is too large");
      }
    }
    return value;
  }

  // <int> or the keyword `auto`.
  std::optional<int> slave_or_auto() {
    if (peek_keyword("auto")) {
      ++pos_;
      return std::nullopt;
    }
    return static_cast<int>(integer("slave id"));
  }

  void finish() {
    if (!at_end()) {
      throw ParseError(line_, tokens_[pos_], "unexpected trailing token");
    }
  }

  int line() const { return line_; }

 private:
  int line_;
  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
};

inline std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : line) {
    if (c == '#') {
      break;
    }
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      if (!cur.empty()) {
        tokens.push_back(std::move(cur));
        cur.clear();
      }
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) {
    tokens.push_back(std::move(cur));
  }
  return tokens;
}

}  // namespace detail

// Where a policy's derived range places it: the monitors of every window
// the range intersects (auto), or exactly the named slave. Clipping to
// mapped space happens by construction: a monitor only ever sees addresses
// decoded into its own window.
inline std::vector<int> placement_windows(const MemoryMap& map, word32 lo,
                                          word32 hi,
                                          std::optional<int> explicit_slave) {
  if (explicit_slave) {
    return {*explicit_slave};
  }
  std::vector<int> out;
  for (const Window& w : map.windows()) {
    if (lo <= w.last() && w.base <= hi) {
      out.push_back(w.slave_id);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Semantic checks over a syntactically parsed scenario. Errors block the
// run; warnings do not.
inline std::vector<Finding> validate(const Scenario& sc) {
  std::vector<Finding> findings;
  auto error = [&](int line, std::string msg) {
    findings.push_back({Finding::Severity::Error, line, std::move(msg)});
  };
  auto warn = [&](int line, std::string msg) {
    findings.push_back({Finding::Severity::Warning, line, std::move(msg)});
  };

  if (sc.topology.num_masters == 0) {
    error(0, "topology must have at least one master");
  }
  if (sc.topology.num_slaves < 0) {
    error(0, "topology slave count must be non-negative");
  }
  if (sc.limit == 0) {
    error(0, "run limit must be positive");
  }
  if (sc.srs.regs <= 0 || sc.srs.regs > (1 << 24)) {
    error(sc.srs.line, "SRS register count out of range");
  }
  if (sc.srs.base % 4 != 0) {
    error(sc.srs.line, "SRS base must be word aligned");
  }

  std::vector<bool> has_window(
      sc.topology.num_slaves > 0 ? static_cast<std::size_t>(sc.topology.num_slaves) : 0,
      false);
  for (const WindowSpec& w : sc.windows) {
    if (w.slave < 0 || w.slave >= sc.topology.num_slaves) {
      error(w.line, "MEMMAP slave id " + std::to_string(w.slave) +
                        " out of range for a " +
                        std::to_string(sc.topology.num_slaves) +
                        "-slave topology");
      continue;
    }
    if (has_window[static_cast<std::size_t>(w.slave)]) {
      error(w.line, "duplicate MEMMAP window for slave " +
                        std::to_string(w.slave));
    }
    has_window[static_cast<std::size_t>(w.slave)] = true;
    if (w.size == 0 || w.size % 4 != 0) {
      error(w.line, "window size must be a positive multiple of 4");
    }
    if (w.base % 4 != 0) {
      error(w.line, "window base must be word aligned");
    }
    if (static_cast<std::uint64_t>(w.base) + w.size > (1ull << 32)) {
      error(w.line, "window exceeds the 32-bit address space");
    }
  }
  for (std::size_t i = 0; i < has_window.size(); ++i) {
    if (!has_window[i]) {
      warn(0, "slave " + std::to_string(i) + " has no memory window");
    }
  }

  // Overlap check across all windows including the SRS block.
  {
    struct Span {
      std::uint64_t lo, hi;
      std::string name;
      int line;
    };
    std::vector<Span> spans;
    for (const WindowSpec& w : sc.windows) {
      if (w.size == 0) {
        continue;
      }
      spans.push_back({w.base, static_cast<std::uint64_t>(w.base) + w.size - 1,
                       "slave " + std::to_string(w.slave), w.line});
    }
    if (sc.srs.regs > 0) {
      spans.push_back({sc.srs.base,
                       static_cast<std::uint64_t>(sc.srs.base) +
                           static_cast<std::uint64_t>(sc.srs.regs) * 4 - 1,
                       "SRS", sc.srs.line});
    }
    std::sort(spans.begin(), spans.end(),
              [](const Span& a, const Span& b) { return a.lo < b.lo; });
    for (std::size_t i = 1; i < spans.size(); ++i) {
      if (spans[i - 1].hi >= spans[i].lo) {
        error(spans[i].line, "memory windows overlap (" + spans[i - 1].name +
                                 " and " + spans[i].name + ")");
      }
    }
  }

  const bool map_ok =
      std::none_of(findings.begin(), findings.end(),
                   [](const Finding& f) { return f.is_error(); });
  std::optional<MemoryMap> map;
  if (map_ok) {
    map = sc.memory_map();
  }

  auto window_exists = [&](int slave) {
    return map && (map->window_of_slave(slave) != nullptr);
  };

  std::map<int, std::size_t> apu_load_count;
  std::map<int, std::size_t> dpu_load_count;

  auto check_policy_range = [&](int line, std::optional<int> slave, word32 lo,
                                word32 hi, const char* unit_name,
                                std::map<int, std::size_t>& counts) {
    if (!map) {
      return;
    }
    if (slave) {
      if (*slave < 0 || *slave >= sc.topology.num_slaves) {
        error(line, std::string(unit_name) + " policy names slave id " +
                        std::to_string(*slave) + " which does not exist");
        return;
      }
      if (!window_exists(*slave)) {
        error(line, std::string(unit_name) + " policy names slave " +
                        std::to_string(*slave) + " which has no window");
        return;
      }
      counts[*slave] += 1;
      const Window* w = map->window_of_slave(*slave);
      if (lo > w->last() || hi < w->base) {
        warn(line, std::string(unit_name) +
                       " policy range never reaches slave " +
                       std::to_string(*slave));
      } else if (lo < w->base || hi > w->last()) {
        warn(line, std::string(unit_name) +
                       " policy range extends beyond the slave window; "
                       "clipped to mapped space");
      }
      return;
    }
    const std::vector<int> placed = placement_windows(*map, lo, hi, slave);
    for (int s : placed) {
      counts[s] += 1;
    }
    if (placed.empty()) {
      warn(line, std::string(unit_name) +
                     " policy range matches no mapped window; not loaded");
      return;
    }
    if (placed.size() > 1) {
      warn(line, std::string(unit_name) + " policy range spans " +
                     std::to_string(placed.size()) +
                     " windows; split across their monitors");
    }
    IntervalSet mapped;
    for (int s : placed) {
      const Window* w = map->window_of_slave(s);
      mapped.insert(std::max(lo, w->base), std::min(hi, w->last()));
    }
    if (!mapped.covers(lo, hi)) {
      warn(line, std::string(unit_name) +
                     " policy range touches unmapped space; clipped");
    }
  };

  for (const ApuEntry& e : sc.apus) {
    if (e.policy.mid >= sc.topology.num_masters) {
      error(e.line, "APU policy master id " + hex(e.policy.mid) +
                        " out of range");
    }
    const auto [lo, hi] = range_of(e.policy.addr, e.policy.mask);
    check_policy_range(e.line, e.slave, lo, hi, "APU", apu_load_count);
  }
  for (const DpuEntry& e : sc.dpus) {
    if (e.policy.mid >= sc.topology.num_masters) {
      error(e.line, "DPU policy master id " + hex(e.policy.mid) +
                        " out of range");
    }
    const auto [lo, hi] = range_of(e.policy.addr, e.policy.amask);
    check_policy_range(e.line, e.slave, lo, hi, "DPU", dpu_load_count);
  }

  for (const auto& [slave, n] : apu_load_count) {
    if (n > sc.topology.apu_capacity) {
      error(0, "APU policy register space of slave " + std::to_string(slave) +
                   " exceeded (" + std::to_string(n) + " > " +
                   std::to_string(sc.topology.apu_capacity) + ")");
    }
  }
  for (const auto& [slave, n] : dpu_load_count) {
    if (n > sc.topology.dpu_capacity) {
      error(0, "DPU policy register space of slave " + std::to_string(slave) +
                   " exceeded (" + std::to_string(n) + " > " +
                   std::to_string(sc.topology.dpu_capacity) + ")");
    }
  }

  for (const LoadMemSpec& lm : sc.loadmems) {
    if (lm.addr % 4 != 0) {
      error(lm.line, "LOADMEM address must be word aligned");
      continue;
    }
    if (map) {
      for (std::size_t i = 0; i < lm.words.size(); ++i) {
        const word32 a = lm.addr + static_cast<word32>(4 * i);
        if (map->decode(a) == nullptr) {
          error(lm.line, "LOADMEM address " + hex8(a) + " is unmapped");
          break;
        }
      }
    }
  }

  for (const SetSrsSpec& s : sc.setsrs) {
    if (s.reg < 0 || s.reg >= sc.srs.regs) {
      error(s.line, "SETSRS register " + std::to_string(s.reg) +
                        " does not exist (" + std::to_string(sc.srs.regs) +
                        " registers)");
    }
  }

  for (const auto& [mid, prog] : sc.programs) {
    if (mid >= sc.topology.num_masters) {
      error(0, "program master id " + hex(mid) + " out of range");
    }
    for (const ProgramStep& st : prog.steps) {
      if (st.addr % 4 != 0) {
        error(0, "program address " + hex8(st.addr) +
                     " must be word aligned");
      }
    }
  }

  std::stable_sort(findings.begin(), findings.end(),
                   [](const Finding& a, const Finding& b) {
                     return a.line < b.line;
                   });
  return findings;
}

// Syntax-only pass; use parse() for the validated result.
inline Scenario parse_text(std::string_view text) {
  Scenario sc;
  bool saw_topology = false;
  bool saw_srs = false;
  bool saw_memmap = false;
  bool saw_limit = false;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                       : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    std::vector<std::string> tokens = detail::tokenize(line);
    if (tokens.empty()) {
      continue;
    }
    detail::LineParser lp(line_no, std::move(tokens));
    const std::string kw = detail::upcase(lp.next("keyword"));

    if (kw == "TOPOLOGY") {
      if (saw_topology) {
        throw ParseError(line_no, "TOPOLOGY", "duplicate TOPOLOGY line");
      }
      saw_topology = true;
      lp.keyword("masters");
      sc.topology.num_masters = static_cast<MasterId>(lp.integer("masters"));
      lp.keyword("slaves");
      sc.topology.num_slaves = static_cast<int>(lp.integer("slaves"));
      lp.keyword("prs_apu");
      sc.topology.apu_capacity =
          static_cast<std::size_t>(lp.integer("prs_apu"));
      lp.keyword("prs_dpu");
      sc.topology.dpu_capacity =
          static_cast<std::size_t>(lp.integer("prs_dpu"));
      lp.finish();
    } else if (kw == "MEMMAP") {
      saw_memmap = true;
      WindowSpec w;
      w.line = line_no;
      lp.keyword("slave");
      w.slave = static_cast<int>(lp.integer("slave id"));
      lp.keyword("base");
      w.base = lp.hex("base");
      lp.keyword("size");
      w.size = lp.hex("size");
      lp.finish();
      sc.windows.push_back(w);
    } else if (kw == "SRS") {
      if (saw_srs) {
        throw ParseError(line_no, "SRS", "duplicate SRS line");
      }
      saw_srs = true;
      sc.srs.line = line_no;
      lp.keyword("base");
      sc.srs.base = lp.hex("base");
      lp.keyword("regs");
      sc.srs.regs = static_cast<int>(lp.integer("regs"));
      lp.finish();
    } else if (kw == "APU") {
      ApuEntry e;
      e.line = line_no;
      lp.keyword("slave");
      e.slave = lp.slave_or_auto();
      lp.keyword("mid");
      e.policy.mid = lp.hex("mid");
      lp.keyword("addr");
      e.policy.addr = lp.hex("addr");
      lp.keyword("mask");
      e.policy.mask = lp.hex("mask");
      lp.keyword("perm");
      const std::string perm = detail::upcase(lp.next("permission"));
      if (perm == "RO") {
        e.policy.perm = Permission::ReadOnly;
      } else if (perm == "WO") {
        e.policy.perm = Permission::WriteOnly;
      } else if (perm == "RW") {
        e.policy.perm = Permission::ReadWrite;
      } else if (perm == "00") {
        throw ParseError(line_no, perm, "permission encoding 00 is reserved");
      } else {
        throw ParseError(line_no, perm, "expected permission RO, WO or RW");
      }
      lp.finish();
      sc.apus.push_back(e);
    } else if (kw == "DPU") {
      DpuEntry e;
      e.line = line_no;
      lp.keyword("slave");
      e.slave = lp.slave_or_auto();
      lp.keyword("mid");
      e.policy.mid = lp.hex("mid");
      lp.keyword("addr");
      e.policy.addr = lp.hex("addr");
      lp.keyword("amask");
      e.policy.amask = lp.hex("amask");
      lp.keyword("data");
      e.policy.data = lp.hex("data");
      lp.keyword("dmask");
      e.policy.dmask = lp.hex("dmask");
      lp.finish();
      sc.dpus.push_back(e);
    } else if (kw == "LOADMEM") {
      LoadMemSpec lm;
      lm.line = line_no;
      lm.addr = lp.hex("address");
      lm.words.push_back(lp.hex("word"));
      while (!lp.at_end()) {
        lm.words.push_back(lp.hex("word"));
      }
      sc.loadmems.push_back(lm);
    } else if (kw == "SETSRS") {
      SetSrsSpec s;
      s.line = line_no;
      s.reg = static_cast<int>(lp.integer("register index"));
      s.value = lp.hex("value");
      lp.finish();
      sc.setsrs.push_back(s);
    } else if (kw == "MASTER") {
      const MasterId mid = lp.hex("master id");
      const std::string op = detail::upcase(lp.next("READ or WRITE"));
      ProgramStep st;
      if (op == "READ") {
        st.kind = AccessKind::Read;
        st.addr = lp.hex("address");
      } else if (op == "WRITE") {
        st.kind = AccessKind::Write;
        st.addr = lp.hex("address");
        st.wdata = lp.hex("write data");
      } else {
        throw ParseError(line_no, op, "expected READ or WRITE");
      }
      lp.keyword("EXPECT");
      const std::string exp = detail::upcase(lp.next("OKAY, ERROR or ANY"));
      if (exp == "OKAY") {
        st.expect = Expect::Okay;
      } else if (exp == "ERROR") {
        st.expect = Expect::Error;
      } else if (exp == "ANY") {
        st.expect = Expect::Any;
      } else {
        throw ParseError(line_no, exp, "expected OKAY, ERROR or ANY");
      }
      if (st.kind == AccessKind::Read && lp.peek_keyword("RDATA")) {
        lp.keyword("RDATA");
        st.expect_rdata = lp.hex("expected read data");
      }
      lp.finish();
      sc.programs[mid].steps.push_back(st);
    } else if (kw == "LIMIT") {
      if (saw_limit) {
        throw ParseError(line_no, "LIMIT", "duplicate LIMIT line");
      }
      saw_limit = true;
      sc.limit = static_cast<std::uint64_t>(lp.integer("cycle limit"));
      lp.finish();
    } else {
      throw ParseError(line_no, kw, "unknown keyword");
    }
  }

  // Absent sections fall back to the default topology: four 1 MB SRAM
  // windows from 0x2000_0000 and a 64-register SRS block at 0x5000_0000.
  if (!saw_memmap) {
    for (int i = 0; i < sc.topology.num_slaves; ++i) {
      sc.windows.push_back({i,
                            static_cast<word32>(0x2000'0000u +
                                                0x0010'0000u *
                                                    static_cast<word32>(i)),
                            0x0010'0000u, 0});
    }
  }
  return sc;
}

// Parse + validate; the first validation error is promoted to ParseError.
inline Scenario parse(std::string_view text) {
  Scenario sc = parse_text(text);
  for (const Finding& f : validate(sc)) {
    if (f.is_error()) {
      throw ParseError(f.line, "", f.message);
    }
  }
  return sc;
}

// Canonical text form; parse(render(sc)) == sc.
inline std::string render(const Scenario& sc) {
  std::string out;
  out += "TOPOLOGY masters " + std::to_string(sc.topology.num_masters) +
         " slaves " + std::to_string(sc.topology.num_slaves) + " prs_apu " +
         std::to_string(sc.topology.apu_capacity) + " prs_dpu " +
         std::to_string(sc.topology.dpu_capacity) + "\n";
  std::vector<WindowSpec> windows = sc.windows;
  std::sort(windows.begin(), windows.end(),
            [](const WindowSpec& a, const WindowSpec& b) {
              return a.slave < b.slave;
            });
  for (const WindowSpec& w : windows) {
    out += "MEMMAP slave " + std::to_string(w.slave) + " base " +
           hex8(w.base) + " size " + hex8(w.size) + "\n";
  }
  out += "SRS base " + hex8(sc.srs.base) + " regs " +
         std::to_string(sc.srs.regs) + "\n";
  auto slave_token = [](std::optional<int> s) {
    return s ? std::to_string(*s) : std::string("auto");
  };
  for (const ApuEntry& e : sc.apus) {
    out += "APU slave " + slave_token(e.slave) + " mid " + hex(e.policy.mid) +
           " addr " + hex8(e.policy.addr) + " mask " + hex8(e.policy.mask) +
           " perm " + std::string(permission_token(e.policy.perm)) + "\n";
  }
  for (const DpuEntry& e : sc.dpus) {
    out += "DPU slave " + slave_token(e.slave) + " mid " + hex(e.policy.mid) +
           " addr " + hex8(e.policy.addr) + " amask " + hex8(e.policy.amask) +
           " data " + hex8(e.policy.data) + " dmask " + hex8(e.policy.dmask) +
           "\n";
  }
  for (const LoadMemSpec& lm : sc.loadmems) {
    out += "LOADMEM " + hex8(lm.addr);
    for (word32 w : lm.words) {
      out += " " + hex8(w);
    }
    out += "\n";
  }
  for (const SetSrsSpec& s : sc.setsrs) {
    out += "SETSRS " + std::to_string(s.reg) + " " + hex8(s.value) + "\n";
  }
  for (const auto& [mid, prog] : sc.programs) {
    for (const ProgramStep& st : prog.steps) {
      out += "MASTER " + hex(mid);
      if (st.kind == AccessKind::Read) {
        out += " READ " + hex8(st.addr);
      } else {
        out += " WRITE " + hex8(st.addr) + " " + hex8(st.wdata);
      }
      out += " EXPECT " + std::string(expect_token(st.expect));
      if (st.expect_rdata) {
        out += " RDATA " + hex8(*st.expect_rdata);
      }
      out += "\n";
    }
  }
  out += "LIMIT " + std::to_string(sc.limit) + "\n";
  return out;
}

}  // namespace transmon
