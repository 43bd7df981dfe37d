#include "alsx/library.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace alsx {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size() || line[i] == '#') break;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' &&
           line[j] != '#')
      ++j;
    tokens.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

double parse_real(const std::string& tok, long line, const char* what) {
  double value = 0.0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw ParseError(fmt::format("malformed {} '{}'", what, tok), line);
  return value;
}

long parse_int(const std::string& tok, long line, const char* what) {
  long value = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw ParseError(fmt::format("malformed {} '{}'", what, tok), line);
  return value;
}

void check_function(const TechLibrary& lib, int id, const char* name, int arity, uint64_t table) {
  if (id < 0) throw ParseError(fmt::format("required cell absent: {}", name));
  const Cell& cell = lib.cell(id);
  if (cell.num_inputs != arity)
    throw ParseError(fmt::format("required cell {} must have {} input(s)", name, arity));
  if (cell.truth_table != table)
    throw ParseError(fmt::format("required cell {} has the wrong function", name));
}

} // namespace

TechLibrary TechLibrary::from_cells(std::vector<Cell> cells) {
  TechLibrary lib;
  lib.cells_ = std::move(cells);
  for (int i = 0; i < lib.size(); ++i) {
    const Cell& cell = lib.cells_[static_cast<size_t>(i)];
    if (cell.num_inputs < 0 || cell.num_inputs > kMaxCellInputs)
      throw ParseError(fmt::format("cell {}: arity {} out of range", cell.name, cell.num_inputs));
    if (static_cast<int>(cell.input_caps.size()) != cell.num_inputs)
      throw ParseError(fmt::format("cell {}: {} input caps for {} inputs", cell.name,
                                   cell.input_caps.size(), cell.num_inputs));
    if (cell.num_inputs < kMaxCellInputs &&
        cell.truth_table >> (uint64_t{1} << cell.num_inputs) != 0)
      throw ParseError(fmt::format("cell {}: truth table wider than 2^{} bits", cell.name,
                                   cell.num_inputs));
    if (cell.intrinsic_error < 0.0 || cell.intrinsic_error > 1.0)
      throw ParseError(fmt::format("cell {}: intrinsic error outside [0,1]", cell.name));
    if (!lib.index_.emplace(cell.name, i).second)
      throw ParseError(fmt::format("duplicate cell name {}", cell.name));
  }
  lib.const0_ = lib.find("CONST0");
  lib.const1_ = lib.find("CONST1");
  lib.buf_ = lib.find("BUF");
  lib.inv_ = lib.find("INV");
  check_function(lib, lib.const0_, "CONST0", 0, 0x0);
  check_function(lib, lib.const1_, "CONST1", 0, 0x1);
  check_function(lib, lib.buf_, "BUF", 1, 0x2);
  check_function(lib, lib.inv_, "INV", 1, 0x1);
  return lib;
}

int TechLibrary::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? -1 : it->second;
}

const Cell& TechLibrary::cell(std::string_view name) const {
  int id = find(name);
  if (id < 0) throw ParseError(fmt::format("unknown cell {}", name));
  return cells_[static_cast<size_t>(id)];
}

TechLibrary parse_library(std::string_view text) {
  std::vector<Cell> cells;
  long line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    ++line_no;
    auto tokens = tokenize(text.substr(pos, eol - pos));
    pos = eol + 1;
    if (tokens.empty()) {
      if (pos > text.size()) break;
      continue;
    }
    if (tokens[0] != "GATE")
      throw ParseError(fmt::format("expected GATE, got '{}'", tokens[0]), line_no);
    if (tokens.size() < 10) throw ParseError("truncated GATE line", line_no);

    Cell cell;
    cell.name = tokens[1];
    cell.area = parse_real(tokens[2], line_no, "area");
    long arity = parse_int(tokens[3], line_no, "input count");
    if (arity < 0 || arity > kMaxCellInputs)
      throw ParseError(fmt::format("input count {} out of range 0..{}", arity, kMaxCellInputs),
                       line_no);
    cell.num_inputs = static_cast<int>(arity);

    uint64_t table = 0;
    {
      const std::string& tok = tokens[4];
      const auto* end = tok.data() + tok.size();
      auto [ptr, ec] = std::from_chars(tok.data(), end, table, 16);
      if (ec != std::errc{} || ptr != end)
        throw ParseError(fmt::format("malformed truth table '{}'", tok), line_no);
    }
    const int bits = 1 << cell.num_inputs;
    if (bits < 64 && (table >> bits) != 0)
      throw ParseError(
          fmt::format("truth table {:x} does not fit {} bit(s)", table, bits), line_no);
    cell.truth_table = table;

    cell.intrinsic_error = parse_real(tokens[5], line_no, "intrinsic error");
    if (cell.intrinsic_error < 0.0 || cell.intrinsic_error > 1.0)
      throw ParseError("intrinsic error outside [0,1]", line_no);
    cell.output_cap = parse_real(tokens[6], line_no, "output cap");
    cell.delay_intrinsic = parse_real(tokens[7], line_no, "intrinsic delay");
    cell.delay_slope = parse_real(tokens[8], line_no, "delay slope");

    if (tokens[9] != "IN") throw ParseError("expected IN before pin capacitances", line_no);
    if (static_cast<int>(tokens.size()) != 10 + cell.num_inputs)
      throw ParseError(fmt::format("expected {} pin capacitance(s), got {}", cell.num_inputs,
                                   tokens.size() - 10),
                       line_no);
    for (int i = 0; i < cell.num_inputs; ++i)
      cell.input_caps.push_back(parse_real(tokens[10 + static_cast<size_t>(i)], line_no,
                                           "pin capacitance"));
    cells.push_back(std::move(cell));
  }
  return TechLibrary::from_cells(std::move(cells));
}

TechLibrary load_library(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(fmt::format("cannot open library file {}", path));
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_library(buf.str());
}

std::string library_to_string(const TechLibrary& lib) {
  std::string out;
  for (const Cell& cell : lib.cells()) {
    out += fmt::format("GATE {} {:g} {} {:X} {:g} {:g} {:g} {:g} IN", cell.name, cell.area,
                       cell.num_inputs, cell.truth_table, cell.intrinsic_error, cell.output_cap,
                       cell.delay_intrinsic, cell.delay_slope);
    for (double cap : cell.input_caps) out += fmt::format(" {:g}", cap);
    out += '\n';
  }
  return out;
}

} // namespace alsx
