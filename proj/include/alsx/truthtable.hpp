#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "alsx/library.hpp"
#include "alsx/netlist.hpp"

namespace alsx {

constexpr int kDefaultPiCap = 20;

/// Complete output vector of a Boolean function over all 2^num_vars input
/// patterns, packed 64 patterns per word.
class TruthTable {
public:
  TruthTable() = default;
  explicit TruthTable(int num_vars);

  int num_vars() const { return num_vars_; }
  uint64_t num_bits() const { return uint64_t{1} << num_vars_; }

  bool get(uint64_t pattern) const {
    return (words_[pattern >> 6] >> (pattern & 63)) & 1u;
  }
  void set(uint64_t pattern, bool value) {
    const uint64_t mask = uint64_t{1} << (pattern & 63);
    if (value)
      words_[pattern >> 6] |= mask;
    else
      words_[pattern >> 6] &= ~mask;
  }

  std::span<uint64_t> words() { return words_; }
  std::span<const uint64_t> words() const { return words_; }

  uint64_t count_ones() const;
  uint64_t hamming_distance(const TruthTable& other) const;

  /// Table of input variable `var` over num_vars variables: bit p = (p >> var) & 1.
  static TruthTable input_variable(int num_vars, int var);
  static TruthTable from_cell(const Cell& cell);

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

private:
  int num_vars_ = 0;
  std::vector<uint64_t> words_;
};

/// Re-expresses `cell` (arity |pin_map|) as a truth table over target_arity
/// variables, pin i of the cell reading variable pin_map[i]. This is how
/// constants and per-fanin pass-throughs are compared against the node they
/// replace.
uint64_t remap_cell_table(const Cell& cell, std::span<const int> pin_map, int target_arity);

/// Fraction of input patterns on which `replacement` disagrees with
/// `current`. Arities must match, except that zero-input replacements and
/// one-input replacements with passthrough_pin >= 0 are widened to the
/// current cell's arity. Throws std::invalid_argument otherwise.
double local_replacement_error(const Cell& current, const Cell& replacement,
                               int passthrough_pin = -1);

/// Exhaustive simulation: one table per primary output over all 2^|PI|
/// patterns. Throws std::invalid_argument when |PI| exceeds pi_cap.
std::vector<TruthTable> simulate_output_tables(const Netlist& nl, const TechLibrary& lib,
                                               int pi_cap = kDefaultPiCap);

struct ErrorRates {
  std::vector<double> per_po;
  double max = 0.0;
  double mean = 0.0;
};

/// Per-output normalized Hamming distance between two netlists with
/// identical ordered PI/PO name lists, plus the max/mean aggregates.
ErrorRates exact_error_rate(const Netlist& exact, const Netlist& approx,
                            const TechLibrary& lib, int pi_cap = kDefaultPiCap);

} // namespace alsx
