#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "alsx/errors.hpp"

namespace alsx {

constexpr int kMaxCellInputs = 6;

/// A technology-library cell: a single-output gate with a fixed Boolean
/// function, area, pin capacitances, a linear delay model and an intrinsic
/// error probability (the chance the gate flips its own correct output).
struct Cell {
  std::string name;
  int num_inputs = 0;                   // 0..6
  uint64_t truth_table = 0;             // bit i = output for input pattern i, pin A = bit 0
  double area = 0.0;
  std::vector<double> input_caps;       // pin order A,B,C,...
  double output_cap = 0.0;
  double intrinsic_error = 0.0;         // in [0,1]
  double delay_intrinsic = 0.0;
  double delay_slope = 0.0;             // delay per unit of load capacitance

  int num_patterns() const { return 1 << num_inputs; }
  bool eval(unsigned pattern) const { return (truth_table >> pattern) & 1u; }

  double total_input_cap() const {
    double sum = 0.0;
    for (double c : input_caps) sum += c;
    return sum;
  }
};

/// Ordered collection of cells indexed by name. The library must provide
/// CONST0/CONST1 (zero-input) and BUF/INV (one-input) cells; these are the
/// backbone of gate-removal moves.
class TechLibrary {
public:
  TechLibrary() = default;

  /// Validates invariants (unique names, table widths, required cells) and
  /// builds the name index. Throws ParseError on violation.
  static TechLibrary from_cells(std::vector<Cell> cells);

  const std::vector<Cell>& cells() const { return cells_; }
  int size() const { return static_cast<int>(cells_.size()); }

  const Cell& cell(int id) const { return cells_[static_cast<size_t>(id)]; }
  /// Returns the cell index for `name`, or -1 if absent.
  int find(std::string_view name) const;
  const Cell& cell(std::string_view name) const;

  int const0_id() const { return const0_; }
  int const1_id() const { return const1_; }
  int buf_id() const { return buf_; }
  int inv_id() const { return inv_; }

private:
  std::vector<Cell> cells_;
  std::unordered_map<std::string, int> index_;
  int const0_ = -1;
  int const1_ = -1;
  int buf_ = -1;
  int inv_ = -1;
};

/// Parses the line-oriented library format:
///   GATE <name> <area> <num_inputs> <tt_hex> <eps_g> <out_cap> <delay_intrinsic> <delay_slope> IN <cap_A> ...
/// `#` starts a comment. tt_hex encodes the truth table LSB-first.
TechLibrary parse_library(std::string_view text);

TechLibrary load_library(const std::string& path);

/// Inverse of parse_library, used by tests and tooling.
std::string library_to_string(const TechLibrary& lib);

} // namespace alsx
