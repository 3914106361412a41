#include "w1/nram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <random>
#include <sstream>
#include <utility>

namespace w1::nram {

namespace {

struct OpInfo {
  Opcode op;
  std::string_view name;
  enum class Operand { None, Constant, Register, Label } operand;
};

constexpr OpInfo kOps[] = {
    {Opcode::LoadI, "LOADI", OpInfo::Operand::Constant},  {Opcode::Load, "LOAD", OpInfo::Operand::Register},
    {Opcode::Store, "STORE", OpInfo::Operand::Register},  {Opcode::LoadInd, "LOADIND", OpInfo::Operand::Register},
    {Opcode::StoreInd, "STOREIND", OpInfo::Operand::Register}, {Opcode::Add, "ADD", OpInfo::Operand::Register},
    {Opcode::Sub, "SUB", OpInfo::Operand::Register},      {Opcode::Div2, "DIV2", OpInfo::Operand::None},
    {Opcode::Jump, "JUMP", OpInfo::Operand::Label},       {Opcode::JZero, "JZERO", OpInfo::Operand::Label},
    {Opcode::Guess, "GUESS", OpInfo::Operand::None},      {Opcode::Accept, "ACCEPT", OpInfo::Operand::None},
    {Opcode::Reject, "REJECT", OpInfo::Operand::None},
};

const OpInfo& info(Opcode op) {
  for (const auto& i : kOps) {
    if (i.op == op) return i;
  }
  throw InternalError("unknown opcode");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<std::uint64_t> parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

bool valid_label(std::string_view s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.'; });
}

}  // namespace

std::string_view mnemonic(Opcode op) { return info(op).name; }

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Accept: return "accept";
    case Outcome::Reject: return "reject";
    case Outcome::OutOfBudget: return "out-of-budget";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Assembler

NramProgram assemble(std::string_view text) {
  NramProgram prog;
  struct Pending {
    std::size_t index;
    std::string label;
    std::size_t line;
  };
  std::vector<Pending> fixups;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    if (auto semi = line.find(';'); semi != std::string_view::npos) line = line.substr(0, semi);
    line = trim(line);
    while (true) {
      auto colon = line.find(':');
      if (colon == std::string_view::npos) break;
      std::string_view label = trim(line.substr(0, colon));
      if (!valid_label(label)) throw AssemblyError(line_no, "malformed label '" + std::string(label) + "'");
      if (!prog.labels.emplace(std::string(label), prog.code.size()).second) {
        throw AssemblyError(line_no, "duplicate label '" + std::string(label) + "'");
      }
      line = trim(line.substr(colon + 1));
    }
    if (line.empty()) continue;

    std::size_t split = 0;
    while (split < line.size() && !std::isspace(static_cast<unsigned char>(line[split]))) ++split;
    std::string name(line.substr(0, split));
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::toupper(c); });
    std::string_view operand = trim(line.substr(split));

    const OpInfo* op = nullptr;
    for (const auto& i : kOps) {
      if (i.name == name) op = &i;
    }
    if (!op) throw AssemblyError(line_no, "unknown mnemonic '" + name + "'");

    Instruction ins;
    ins.op = op->op;
    ins.source_line = line_no;
    switch (op->operand) {
      case OpInfo::Operand::None:
        if (!operand.empty()) throw AssemblyError(line_no, name + " takes no operand");
        break;
      case OpInfo::Operand::Constant: {
        auto v = parse_u64(operand);
        if (!v) throw AssemblyError(line_no, "malformed constant '" + std::string(operand) + "'");
        ins.operand = *v;
        break;
      }
      case OpInfo::Operand::Register: {
        std::string_view r = operand;
        if (!r.empty() && (r.front() == 'r' || r.front() == 'R')) r.remove_prefix(1);
        auto v = parse_u64(r);
        if (!v) throw AssemblyError(line_no, "malformed register '" + std::string(operand) + "'");
        ins.operand = *v;
        break;
      }
      case OpInfo::Operand::Label:
        if (!valid_label(operand)) throw AssemblyError(line_no, "malformed label operand '" + std::string(operand) + "'");
        fixups.push_back({prog.code.size(), std::string(operand), line_no});
        break;
    }
    prog.code.push_back(ins);
  }

  for (const auto& f : fixups) {
    auto it = prog.labels.find(f.label);
    if (it == prog.labels.end()) throw AssemblyError(f.line, "unresolved label '" + f.label + "'");
    prog.code[f.index].operand = it->second;
  }
  return prog;
}

std::string disassemble(const NramProgram& program) {
  std::ostringstream out;
  for (std::size_t pc = 0; pc < program.code.size(); ++pc) {
    const Instruction& ins = program.code[pc];
    const OpInfo& oi = info(ins.op);
    out << 'L' << pc << ": " << oi.name;
    switch (oi.operand) {
      case OpInfo::Operand::None: break;
      case OpInfo::Operand::Constant: out << ' ' << ins.operand; break;
      case OpInfo::Operand::Register: out << " r" << ins.operand; break;
      case OpInfo::Operand::Label: out << " L" << ins.operand; break;
    }
    out << '\n';
  }
  // Labels that point one past the end (fall-off targets).
  for (const auto& [name, target] : program.labels) {
    if (target == program.code.size()) out << 'L' << target << ":\n";
  }
  return out.str();
}

Registers parse_registers(std::string_view text) {
  Registers regs;
  text = trim(text);
  if (text.empty()) return regs;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = trim(text.substr(start, end - start));
    start = end + 1;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw UsageError("register preload '" + std::string(item) + "' lacks '='");
    std::string_view r = trim(item.substr(0, eq));
    if (!r.empty() && (r.front() == 'r' || r.front() == 'R')) r.remove_prefix(1);
    auto idx = parse_u64(r);
    auto val = parse_u64(trim(item.substr(eq + 1)));
    if (!idx || !val) throw UsageError("malformed register preload '" + std::string(item) + "'");
    regs[*idx] = *val;
  }
  return regs;
}

GuessStrategy GuessStrategy::parse(std::string_view text) {
  if (text == "exhaustive") return exhaustive();
  if (text == "random") return random(0);
  if (text.starts_with("random:")) {
    auto seed = parse_u64(text.substr(7));
    if (!seed) throw UsageError("malformed random seed");
    return random(*seed);
  }
  if (text.starts_with("tape:")) {
    std::vector<std::uint64_t> tape;
    std::string_view rest = text.substr(5);
    std::size_t start = 0;
    while (!rest.empty() && start <= rest.size()) {
      std::size_t end = rest.find(',', start);
      if (end == std::string_view::npos) end = rest.size();
      auto v = parse_u64(trim(rest.substr(start, end - start)));
      if (!v) throw UsageError("malformed guess tape entry");
      tape.push_back(*v);
      start = end + 1;
    }
    return from_tape(std::move(tape));
  }
  throw UsageError("guess strategy must be tape:..., exhaustive, or random[:SEED]");
}

// ---------------------------------------------------------------------------
// Interpreter

void AuditSummary::absorb(const ResourceAudit& a) {
  max_steps = std::max(max_steps, a.total_steps);
  max_nondet = std::max(max_nondet, a.nondet_count());
  max_register_index = std::max(max_register_index, a.max_register_index);
  max_value_stored = std::max(max_value_stored, a.max_value_stored);
  max_tail_span = std::max(max_tail_span, a.tail_span());
}

namespace {

class Machine {
 public:
  enum class Status { Running, AtGuess, Halted };

  Machine(const NramProgram& prog, const Registers& init, const RunOptions& options)
      : prog_(&prog), options_(&options) {
    for (const auto& [idx, value] : init) write(idx, value);
  }

  /// Executes deterministic instructions until the next GUESS (not yet
  /// executed), a halt, or the budget.
  Status advance(std::vector<TraceEntry>* trace) {
    while (true) {
      if (pc_ >= prog_->code.size()) return halt(Outcome::Reject);
      if (audit_.total_steps >= options_->budget) return halt(Outcome::OutOfBudget);
      const Instruction& ins = prog_->code[pc_];
      if (ins.op == Opcode::Guess) return Status::AtGuess;

      const std::size_t pc = pc_;
      ++audit_.total_steps;
      std::optional<std::uint64_t> written;
      ++pc_;
      switch (ins.op) {
        case Opcode::LoadI: written = write(0, ins.operand); break;
        case Opcode::Load: written = write(0, read(ins.operand)); break;
        case Opcode::Store: written = write(ins.operand, acc()); break;
        case Opcode::LoadInd: written = write(0, read(read(ins.operand))); break;
        case Opcode::StoreInd: written = write(read(ins.operand), acc()); break;
        case Opcode::Add: {
          std::uint64_t sum;
          if (__builtin_add_overflow(acc(), read(ins.operand), &sum)) throw VmError("ADD overflowed 64 bits");
          written = write(0, sum);
          break;
        }
        case Opcode::Sub: {
          const std::uint64_t a = acc(), b = read(ins.operand);
          written = write(0, a > b ? a - b : 0);
          break;
        }
        case Opcode::Div2: {
          const std::uint64_t a = acc();
          written = write(0, options_->rounding == DivRounding::Floor ? a / 2 : a / 2 + (a & 1));
          break;
        }
        case Opcode::Jump: pc_ = ins.operand; break;
        case Opcode::JZero:
          if (acc() == 0) pc_ = ins.operand;
          break;
        case Opcode::Accept: record(trace, pc, ins.op, written); return halt(Outcome::Accept);
        case Opcode::Reject: record(trace, pc, ins.op, written); return halt(Outcome::Reject);
        case Opcode::Guess: break;
      }
      record(trace, pc, ins.op, written);
    }
  }

  std::uint64_t acc() const { return read(0); }

  /// Executes the pending GUESS with `value`.
  void resolve_guess(std::uint64_t value, std::vector<TraceEntry>* trace) {
    if (value > acc()) {
      throw VmError("guess " + std::to_string(value) + " exceeds accumulator " + std::to_string(acc()));
    }
    if (audit_.total_steps >= options_->budget) {
      halt(Outcome::OutOfBudget);
      return;
    }
    const std::size_t pc = pc_++;
    ++audit_.total_steps;
    audit_.nondet_steps.push_back(audit_.total_steps);
    write(0, value);
    record(trace, pc, Opcode::Guess, 0);
  }

  bool halted() const { return halted_; }
  const ResourceAudit& audit() const { return audit_; }

  Registers registers() const {
    Registers out;
    for (std::size_t i = 0; i < regs_.size(); ++i) {
      if (regs_[i] != 0) out[i] = regs_[i];
    }
    return out;
  }

 private:
  Status halt(Outcome o) {
    halted_ = true;
    audit_.outcome = o;
    return Status::Halted;
  }

  std::uint64_t read(std::uint64_t idx) const {
    if (idx >= options_->register_limit) throw VmError("register index " + std::to_string(idx) + " out of range");
    return idx < regs_.size() ? regs_[idx] : 0;
  }

  std::uint64_t write(std::uint64_t idx, std::uint64_t value) {
    if (idx >= options_->register_limit) throw VmError("register index " + std::to_string(idx) + " out of range");
    if (idx >= regs_.size()) regs_.resize(idx + 1, 0);
    regs_[idx] = value;
    audit_.max_register_index = std::max(audit_.max_register_index, idx);
    audit_.max_value_stored = std::max(audit_.max_value_stored, value);
    return idx;
  }

  void record(std::vector<TraceEntry>* trace, std::size_t pc, Opcode op, std::optional<std::uint64_t> written) {
    if (!trace) return;
    TraceEntry e;
    e.step = audit_.total_steps;
    e.pc = pc;
    e.op = op;
    e.written = written;
    if (written) e.value = regs_[*written];
    trace->push_back(e);
  }

  const NramProgram* prog_;
  const RunOptions* options_;
  std::vector<std::uint64_t> regs_;
  std::size_t pc_ = 0;
  bool halted_ = false;
  ResourceAudit audit_;
};

struct Explorer {
  const RunOptions& options;
  Execution& out;
  bool seen_budget = false;

  // Returns true once an accepting path was found and exploration should stop.
  bool explore(Machine m) {
    if (m.advance(nullptr) == Machine::Status::Halted) return finish(m);
    const std::uint64_t bound = m.acc();
    for (std::uint64_t g = 0; g <= bound; ++g) {
      Machine branch = m;
      branch.resolve_guess(g, nullptr);
      if (branch.halted() ? finish(branch) : explore(std::move(branch))) return true;
    }
    return false;
  }

  bool finish(const Machine& m) {
    ++out.paths;
    out.worst.absorb(m.audit());
    if (out.outcome != Outcome::Accept) {
      out.audit = m.audit();
      out.registers = m.registers();
    }
    if (m.audit().outcome == Outcome::OutOfBudget) seen_budget = true;
    if (m.audit().outcome == Outcome::Accept) {
      out.outcome = Outcome::Accept;
      return options.stop_at_accept;
    }
    return false;
  }
};

}  // namespace

Execution run(const NramProgram& program, const Registers& init, const GuessStrategy& guesses,
              const RunOptions& options) {
  Execution out;
  Machine m(program, init, options);

  if (guesses.kind == GuessStrategy::Kind::Exhaustive) {
    Explorer ex{options, out};
    ex.explore(std::move(m));
    if (out.outcome != Outcome::Accept) out.outcome = ex.seen_budget ? Outcome::OutOfBudget : Outcome::Reject;
    return out;
  }

  std::vector<TraceEntry>* trace = options.record_trace ? &out.trace : nullptr;
  std::mt19937_64 rng(guesses.seed);
  std::size_t tape_pos = 0;
  while (m.advance(trace) == Machine::Status::AtGuess) {
    std::uint64_t g = 0;
    if (guesses.kind == GuessStrategy::Kind::Tape) {
      if (tape_pos >= guesses.tape.size()) throw VmError("guess tape exhausted");
      g = guesses.tape[tape_pos++];
    } else {
      const std::uint64_t bound = m.acc();
      g = bound == std::numeric_limits<std::uint64_t>::max() ? rng() : rng() % (bound + 1);
    }
    m.resolve_guess(g, trace);
    if (m.halted()) break;
  }
  out.outcome = m.audit().outcome;
  out.audit = m.audit();
  out.worst.absorb(m.audit());
  out.paths = 1;
  out.registers = m.registers();
  return out;
}

// ---------------------------------------------------------------------------
// Audit

AuditBounds parse_bounds(std::string_view text) {
  AuditBounds b;
  bool seen[5] = {};
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = trim(text.substr(start, end - start));
    start = end + 1;
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw UsageError("bound '" + std::string(item) + "' lacks '='");
    std::string_view key = item.substr(0, eq);
    auto v = parse_u64(item.substr(eq + 1));
    if (!v) throw UsageError("malformed bound '" + std::string(item) + "'");
    if (key == "steps") b.step_bound = *v, seen[0] = true;
    else if (key == "nondet") b.nondet_bound = *v, seen[1] = true;
    else if (key == "reg") b.register_bound = *v, seen[2] = true;
    else if (key == "value") b.value_bound = *v, seen[3] = true;
    else if (key == "tail") b.tail_window = *v, seen[4] = true;
    else throw UsageError("unknown bound '" + std::string(key) + "'");
  }
  if (!std::all_of(std::begin(seen), std::end(seen), [](bool s) { return s; })) {
    throw UsageError("bounds need steps, nondet, reg, value and tail");
  }
  return b;
}

bool AuditReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AuditCheck& c) { return c.pass; });
}

std::string AuditReport::render() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << "CHECK " << c.name << ' ' << (c.pass ? "PASS" : "FAIL") << " observed=" << c.observed
        << " bound=" << c.bound << '\n';
  }
  return out.str();
}

AuditReport audit(const NramProgram& program, const Registers& init, const GuessStrategy& guesses,
                  const AuditBounds& bounds, RunOptions options) {
  options.stop_at_accept = false;
  // One step past the bound is enough to observe a violation.
  options.budget = std::min(options.budget, bounds.step_bound + 1);
  Execution ex = run(program, init, guesses, options);

  AuditReport report;
  report.outcome = ex.outcome;
  report.paths = ex.paths;
  auto add = [&](const char* name, std::uint64_t observed, std::uint64_t bound) {
    report.checks.push_back({name, observed <= bound, observed, bound});
  };
  add("steps", ex.worst.max_steps, bounds.step_bound);
  add("nondet", ex.worst.max_nondet, bounds.nondet_bound);
  add("registers", ex.worst.max_register_index, bounds.register_bound);
  add("values", ex.worst.max_value_stored, bounds.value_bound);
  add("tail", ex.worst.max_tail_span, bounds.tail_window);
  return report;
}

}  // namespace w1::nram
