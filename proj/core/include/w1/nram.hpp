#pragma once

// Nondeterministic RAM: an accumulator machine over nonnegative integer
// registers with a GUESS instruction, plus per-run resource accounting.
//
// ISA (register 0 is the accumulator, uniform cost, one step per executed
// instruction):
//   LOADI c      acc <- c
//   LOAD r       acc <- reg[r]
//   STORE r      reg[r] <- acc
//   LOADIND r    acc <- reg[reg[r]]
//   STOREIND r   reg[reg[r]] <- acc
//   ADD r        acc <- acc + reg[r]
//   SUB r        acc <- max(acc - reg[r], 0)
//   DIV2         acc <- floor(acc / 2)
//   JUMP l       goto l
//   JZERO l      goto l if acc == 0
//   GUESS        acc <- some g with 0 <= g <= acc
//   ACCEPT, REJECT
// Running past the last instruction rejects.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "w1/error.hpp"

namespace w1::nram {

/// Assembly failure with the 1-based source line.
class AssemblyError : public Error {
 public:
  AssemblyError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Runtime failure: exhausted guess tape, out-of-range guess, register or
/// value overflow.
class VmError : public Error {
 public:
  using Error::Error;
};

enum class Opcode { LoadI, Load, Store, LoadInd, StoreInd, Add, Sub, Div2, Jump, JZero, Guess, Accept, Reject };

std::string_view mnemonic(Opcode op);

struct Instruction {
  Opcode op = Opcode::Reject;
  /// Constant, register index, or resolved jump target.
  std::uint64_t operand = 0;
  std::size_t source_line = 0;

  friend bool operator==(const Instruction& a, const Instruction& b) {
    return a.op == b.op && a.operand == b.operand;
  }
};

struct NramProgram {
  std::vector<Instruction> code;
  std::map<std::string, std::size_t> labels;
};

/// One instruction per line, optional `label:` prefix, `;` starts a comment.
/// Register operands may be written `5` or `r5`. Mnemonics are
/// case-insensitive.
NramProgram assemble(std::string_view text);

/// Canonical listing; assembling it yields the same code.
std::string disassemble(const NramProgram& program);

/// Sparse register preload: index -> value.
using Registers = std::map<std::uint64_t, std::uint64_t>;

/// "r1=5,r2=3" or "1=5,2=3"; empty string is no preload.
Registers parse_registers(std::string_view text);

enum class Outcome { Accept, Reject, OutOfBudget };
std::string_view to_string(Outcome o);

enum class DivRounding { Floor, HalfUp };

struct ResourceAudit {
  std::uint64_t total_steps = 0;
  /// 1-based step numbers of executed GUESS instructions.
  std::vector<std::uint64_t> nondet_steps;
  std::uint64_t max_register_index = 0;
  std::uint64_t max_value_stored = 0;
  Outcome outcome = Outcome::Reject;

  std::uint64_t nondet_count() const noexcept { return nondet_steps.size(); }
  /// Steps from the first GUESS to the end of the run, inclusive (0 when
  /// the run made no guess). Tail-nondeterminism within a window w means
  /// tail_span() <= w.
  std::uint64_t tail_span() const noexcept {
    return nondet_steps.empty() ? 0 : total_steps - nondet_steps.front() + 1;
  }
};

struct TraceEntry {
  std::uint64_t step = 0;
  std::size_t pc = 0;
  Opcode op = Opcode::Reject;
  /// Register written by this step (0 for the accumulator), if any.
  std::optional<std::uint64_t> written;
  std::uint64_t value = 0;
};

/// How GUESS instructions are resolved.
struct GuessStrategy {
  enum class Kind { Tape, Exhaustive, Random };
  Kind kind = Kind::Tape;
  std::vector<std::uint64_t> tape;
  std::uint64_t seed = 0;

  static GuessStrategy from_tape(std::vector<std::uint64_t> tape) { return {Kind::Tape, std::move(tape), 0}; }
  static GuessStrategy exhaustive() { return {Kind::Exhaustive, {}, 0}; }
  static GuessStrategy random(std::uint64_t seed) { return {Kind::Random, {}, seed}; }
  /// "tape:3,1,4" | "exhaustive" | "random" | "random:SEED".
  static GuessStrategy parse(std::string_view text);
};

struct RunOptions {
  /// Per-path step cap.
  std::uint64_t budget = 1'000'000;
  DivRounding rounding = DivRounding::Floor;
  /// Exhaustive mode: stop exploring once a path accepts.
  bool stop_at_accept = true;
  /// Record a step trace (tape/random modes only).
  bool record_trace = false;
  /// Register indices at or above this raise VmError.
  std::uint64_t register_limit = std::uint64_t{1} << 24;
};

/// Component-wise worst case over every explored path.
struct AuditSummary {
  std::uint64_t max_steps = 0;
  std::uint64_t max_nondet = 0;
  std::uint64_t max_register_index = 0;
  std::uint64_t max_value_stored = 0;
  std::uint64_t max_tail_span = 0;

  void absorb(const ResourceAudit& a);
};

struct Execution {
  /// Accept if any explored path accepts; otherwise OutOfBudget if any path
  /// ran out of budget; otherwise Reject.
  Outcome outcome = Outcome::Reject;
  /// The accepting path, or the last explored path.
  ResourceAudit audit;
  AuditSummary worst;
  std::uint64_t paths = 0;
  std::vector<TraceEntry> trace;
  /// Final register file of the reported path (accumulator included).
  Registers registers;
};

Execution run(const NramProgram& program, const Registers& init, const GuessStrategy& guesses,
              const RunOptions& options = {});

struct AuditBounds {
  std::uint64_t step_bound = 0;
  std::uint64_t nondet_bound = 0;
  std::uint64_t register_bound = 0;
  std::uint64_t value_bound = 0;
  std::uint64_t tail_window = 0;
};

/// "steps=...,nondet=...,reg=...,value=...,tail=..."; every key required.
AuditBounds parse_bounds(std::string_view text);

struct AuditCheck {
  std::string name;
  bool pass = false;
  std::uint64_t observed = 0;
  std::uint64_t bound = 0;
};

struct AuditReport {
  Outcome outcome = Outcome::Reject;
  std::uint64_t paths = 0;
  std::vector<AuditCheck> checks;

  bool passed() const;
  /// One `CHECK name PASS|FAIL observed=... bound=...` line per check.
  std::string render() const;
};

/// Runs every path (stop_at_accept is forced off) and checks the worst case
/// of each audited quantity against `bounds`.
AuditReport audit(const NramProgram& program, const Registers& init, const GuessStrategy& guesses,
                  const AuditBounds& bounds, RunOptions options = {});

}  // namespace w1::nram
