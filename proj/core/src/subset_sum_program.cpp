#include "w1/subset_sum_program.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include <w1/embedded_programs.hpp>

namespace w1::nram {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

SubsetSumManifest SubsetSumManifest::parse(std::string_view text) {
  SubsetSumManifest m;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) throw UsageError("manifest line lacks '='");
    std::string_view key = trim(line.substr(0, eq));
    std::string_view val = trim(line.substr(eq + 1));
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
    if (ec != std::errc() || ptr != val.data() + val.size()) throw UsageError("manifest value is not an integer");
    if (key == "layout_base") m.layout_base = v;
    else if (key == "nondet_per_k") m.nondet_per_k = v;
    else if (key == "tail_c") m.tail_c = v;
    else if (key == "steps_c") m.steps_c = v;
    else if (key == "steps_const") m.steps_const = v;
    else throw UsageError("unknown manifest key '" + std::string(key) + "'");
  }
  return m;
}

const SubsetSumManifest& SubsetSumManifest::bundled() {
  static const SubsetSumManifest m = parse(embedded::kSubsetSumManifest);
  return m;
}

AuditBounds SubsetSumManifest::bounds(std::uint64_t n, std::uint64_t k, std::uint64_t base,
                                      std::uint64_t width) const {
  AuditBounds b;
  b.nondet_bound = nondet_per_k * k;
  b.tail_window = tail_c * k * width;
  b.step_bound = steps_const + steps_c * (k + 1) * width;
  b.register_bound = layout_base + n + (n + 1) * width + k;
  b.value_bound = std::max(b.register_bound, (k + 1) * base);
  return b;
}

std::string_view subset_sum_source() { return embedded::kSubsetSumAsm; }
std::string_view subset_sum_manifest_source() { return embedded::kSubsetSumManifest; }

const NramProgram& subset_sum_program() {
  static const NramProgram p = assemble(embedded::kSubsetSumAsm);
  return p;
}

SubsetSumLayout SubsetSumLayout::of(std::uint64_t n, std::uint64_t width, const SubsetSumManifest& m) {
  SubsetSumLayout l;
  l.row_table = m.layout_base;
  l.x_digits = l.row_table + n;
  l.t_digits = l.x_digits + n * width;
  l.guesses = l.t_digits + width;
  return l;
}

Registers subset_sum_registers(const DigitTables& tables, unsigned k, const SubsetSumManifest& manifest) {
  const std::uint64_t n = tables.count();
  const auto layout = SubsetSumLayout::of(n, tables.width, manifest);
  Registers r;
  r[1] = n;
  r[2] = k;
  r[3] = tables.base;
  r[4] = tables.width;
  r[5] = layout.row_table;
  r[6] = layout.t_digits;
  r[7] = layout.guesses;
  r[8] = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    r[layout.row_table + i] = layout.x_digits + i * tables.width;
    for (std::uint64_t j = 0; j < tables.width; ++j) {
      if (tables.x(i, j) != 0) r[layout.x_digits + i * tables.width + j] = tables.x(i, j);
    }
  }
  for (std::uint64_t j = 0; j < tables.width; ++j) {
    if (tables.t_digits[j] != 0) r[layout.t_digits + j] = tables.t_digits[j];
  }
  return r;
}

ProgramSubsetSum run_subset_sum_program(const SubsetSumInstance& inst, const GuessStrategy& guesses,
                                        RunOptions options) {
  DigitTables tables = make_digit_tables(inst);
  const auto& manifest = SubsetSumManifest::bundled();
  ProgramSubsetSum out;
  out.bounds = manifest.bounds(tables.count(), inst.k, tables.base, tables.width);
  out.execution = run(subset_sum_program(), subset_sum_registers(tables, inst.k, manifest), guesses, options);
  out.accepted = out.execution.outcome == Outcome::Accept;
  if (out.accepted) {
    const auto layout = SubsetSumLayout::of(tables.count(), tables.width, manifest);
    std::vector<std::size_t> w;
    for (unsigned i = 0; i < inst.k; ++i) {
      auto it = out.execution.registers.find(layout.guesses + i);
      w.push_back(it == out.execution.registers.end() ? 0 : it->second);
    }
    std::sort(w.begin(), w.end());
    out.witness = std::move(w);
  }
  return out;
}

}  // namespace w1::nram
