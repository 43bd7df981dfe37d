#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "alsx/library.hpp"

namespace alsx {

/// Reference to a signal source: either a primary input or a gate output.
struct SignalRef {
  enum class Kind : uint8_t { primary_input, node };

  Kind kind = Kind::node;
  int index = -1;

  static SignalRef pi(int i) { return {Kind::primary_input, i}; }
  static SignalRef node(int i) { return {Kind::node, i}; }

  bool is_pi() const { return kind == Kind::primary_input; }
  bool is_node() const { return kind == Kind::node; }

  friend bool operator==(const SignalRef&, const SignalRef&) = default;
  friend auto operator<=>(const SignalRef&, const SignalRef&) = default;
};

struct Node {
  int id = -1;                      // dense, assigned in file order
  int cell = -1;                    // index into the technology library
  std::vector<SignalRef> fanins;    // pin order A,B,...
  std::string output;               // driven net name
  int level = 0;                    // 1 + max(level of fanins), level(PI) = 0
};

enum class ConeDirection { fanin, fanout };

/// Technology-mapped combinational netlist: a DAG of library-cell instances
/// between ordered primary inputs and outputs. Structure is fixed after
/// construction; only the optimizer rewrites node cells/fanins, and it does
/// so single-threaded.
class Netlist {
public:
  std::string name;
  std::vector<std::string> primary_inputs;
  std::vector<std::string> primary_outputs;
  std::vector<SignalRef> po_drivers;    // parallel to primary_outputs
  std::vector<Node> nodes;
  int depth = 0;                        // max node level

  int num_pis() const { return static_cast<int>(primary_inputs.size()); }
  int num_pos() const { return static_cast<int>(primary_outputs.size()); }
  int num_nodes() const { return static_cast<int>(nodes.size()); }
  int num_edges() const;

  /// Recomputes levels and depth; throws ParseError on a combinational cycle.
  void recompute_levels();

  /// Checks per-node arity against the library and PO driver validity.
  void validate(const TechLibrary& lib) const;

  /// Deterministic topological order (Kahn, ready set keyed by node id).
  std::vector<int> topo_order() const;

  /// Nodes reachable from `node` in the given direction, breadth-first,
  /// nearest ring first, ids ascending within a ring, the node itself and
  /// primary inputs excluded, truncated after depth_limit rings.
  std::vector<int> cone(int node, ConeDirection direction, int depth_limit) const;
};

/// Parses the BLIF subset (.model/.inputs/.outputs/.gate/.end, `\`
/// continuations, `#` comments). Gate pins bind by name: inputs A,B,C,...
/// and output Y.
Netlist parse_blif(std::string_view text, const TechLibrary& lib);

Netlist load_blif(const std::string& path, const TechLibrary& lib);

/// Canonical BLIF: declarations in interface order, .gate lines in
/// topological order, original net names preserved. Re-parsing the output
/// yields a structurally identical netlist.
std::string export_blif(const Netlist& nl);

void save_blif(const Netlist& nl, const std::string& path);

/// Graph equality after canonical (topological) renumbering, including
/// interface order and net names.
bool structurally_equal(const Netlist& a, const Netlist& b);

} // namespace alsx
