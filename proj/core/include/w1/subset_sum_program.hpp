#pragma once

// The bundled NRAM program for k-element subset sum (programs/subset_sum.asm)
// together with its register layout and frozen audit manifest.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "w1/nram.hpp"
#include "w1/subset_sum.hpp"

namespace w1::nram {

struct SubsetSumManifest {
  std::uint64_t layout_base = 32;
  std::uint64_t nondet_per_k = 1;
  std::uint64_t tail_c = 0;
  std::uint64_t steps_c = 0;
  std::uint64_t steps_const = 0;

  /// `key = value` lines; `#` comments. Unknown keys are rejected.
  static SubsetSumManifest parse(std::string_view text);
  static const SubsetSumManifest& bundled();

  AuditBounds bounds(std::uint64_t n, std::uint64_t k, std::uint64_t base, std::uint64_t width) const;
};

std::string_view subset_sum_source();
std::string_view subset_sum_manifest_source();
const NramProgram& subset_sum_program();

/// Register addresses of the layout documented in the program header.
struct SubsetSumLayout {
  std::uint64_t row_table = 0;
  std::uint64_t x_digits = 0;
  std::uint64_t t_digits = 0;
  std::uint64_t guesses = 0;

  static SubsetSumLayout of(std::uint64_t n, std::uint64_t width, const SubsetSumManifest& m);
};

/// Preload for the program: parameters, row table, both digit tables.
Registers subset_sum_registers(const DigitTables& tables, unsigned k,
                               const SubsetSumManifest& manifest = SubsetSumManifest::bundled());

struct ProgramSubsetSum {
  bool accepted = false;
  /// 0-based indices guessed on the accepting path, sorted.
  std::optional<std::vector<std::size_t>> witness;
  Execution execution;
  AuditBounds bounds;
};

ProgramSubsetSum run_subset_sum_program(const SubsetSumInstance& inst, const GuessStrategy& guesses,
                                        RunOptions options = {});

}  // namespace w1::nram
