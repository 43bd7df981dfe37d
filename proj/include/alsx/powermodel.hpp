#pragma once

#include <span>
#include <vector>

#include "alsx/library.hpp"
#include "alsx/netlist.hpp"

namespace alsx {

struct PinRef {
  int node = -1;  // consuming node
  int pin = -1;   // pin index on that node
};

/// Sink lists per signal: which node pins and how many primary outputs each
/// node / primary input drives.
struct FanoutInfo {
  std::vector<std::vector<PinRef>> node_sinks;  // per node
  std::vector<int> node_po_count;               // POs driven per node
  std::vector<std::vector<PinRef>> pi_sinks;    // per primary input
  std::vector<int> pi_po_count;

  int fanout_count(int node) const {
    return static_cast<int>(node_sinks[static_cast<size_t>(node)].size()) +
           node_po_count[static_cast<size_t>(node)];
  }
};

FanoutInfo fanout_info(const Netlist& nl);

/// Toggle rate per cycle under the memoryless model: 2 p (1 - p).
std::vector<double> switching_activity(std::span<const double> node_probs);

/// load(n) = own output cap + input caps of every driven pin; primary
/// outputs add no load (no wire model).
std::vector<double> node_load_caps(const Netlist& nl, const TechLibrary& lib);
std::vector<double> node_load_caps(const Netlist& nl, const TechLibrary& lib,
                                   const FanoutInfo& fo);

/// Dynamic power in normalized units (Vdd^2 * f = 1): activity * load.
std::vector<double> node_powers(std::span<const double> activities,
                                std::span<const double> load_caps);

double total_power(std::span<const double> node_powers);
double total_area(const Netlist& nl, const TechLibrary& lib);

struct TimingInfo {
  std::vector<double> arrival;     // per node
  std::vector<int> critical_path;  // node ids, input side first
  double critical_delay = 0.0;
};

/// Linear delay model: arrival(n) = max fanin arrival + delay_intrinsic +
/// delay_slope * load(n); PI arrival is 0. Ties along the path break toward
/// the smaller node id.
TimingInfo critical_path(const Netlist& nl, const TechLibrary& lib);

/// Everything the optimizer's cost functions produce, in one pass.
struct CostReport {
  std::vector<double> signal_prob;
  std::vector<double> activity;
  std::vector<double> load_cap;
  std::vector<double> power;
  std::vector<double> arrival;
  std::vector<int> critical_path;
  double total_power = 0.0;
  double total_area = 0.0;
  double critical_delay = 0.0;
};

CostReport cost_report(const Netlist& nl, const TechLibrary& lib,
                       std::span<const double> pi_probs = {});

} // namespace alsx
