#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "alsx/dataset.hpp"
#include "alsx/errorprop.hpp"
#include "alsx/mlp.hpp"
#include "alsx/netlist.hpp"
#include "alsx/powermodel.hpp"

namespace alsx {

enum class PredictorKind { oracle, dnn };
enum class OptMode { power, delay };

struct OptimizerConfig {
  double e_max = 0.05;
  OptMode mode = OptMode::power;
  PredictorKind predictor = PredictorKind::oracle;
  const MlpModel* model = nullptr;  // required for PredictorKind::dnn
  bool preserve_delay = false;
  int pi_cap = kDefaultPiCap;       // exact verification skipped above this
  int feature_depth_limit = 2;
  uint64_t seed = 1;                // recorded in the report; the flow itself is deterministic

  // Test hook: when set, replaces the predictor backend entirely.
  std::function<double(int node, const Candidate&)> predictor_override;
};

struct OptimizationReport {
  double power_before = 0.0, power_after = 0.0;
  double area_before = 0.0, area_after = 0.0;
  double delay_before = 0.0, delay_after = 0.0;
  double e_out = 0.0;  // running predicted max PO error
  std::vector<std::string> po_names;
  std::vector<double> e_out_exact_per_po;  // filled when |PI| <= pi_cap
  double e_out_exact_max = 0.0;
  bool exact_available = false;
  std::vector<std::string> flagged_pos;  // POs whose exact error exceeds e_max
  uint64_t accepted = 0, rejected = 0;
  uint64_t predictor_calls = 0, visited_nodes = 0;
  bool budget_invariant_ok = true;  // E_out <= E_max held at every accepted step
  PredictorKind predictor = PredictorKind::oracle;
  OptMode mode = OptMode::power;
  double e_max = 0.05;
  uint64_t seed = 1;
};

/// One accepted rewrite, enough to put the node back exactly.
struct UndoEntry {
  int node = -1;
  int prev_cell = -1;
  std::vector<SignalRef> prev_fanins;
  std::vector<int> prev_pin_map;
  double prev_local_error = 0.0;
};

/// Greedy error-budgeted gate replacement / removal. Power mode first
/// rewrites the highest switching-power nodes (cheaper output caps) and a
/// slice of their fanouts (cheaper input caps), retries with removals while
/// budget remains, then sweeps every node for area. Delay mode speeds up the
/// critical path instead, then runs the same area sweep. Every candidate is
/// accepted only if the predicted max primary-output error stays within
/// e_max; rejected trials are rolled back immediately.
class Optimizer {
public:
  Optimizer(const Netlist& nl, const TechLibrary& lib, OptimizerConfig cfg);

  void run();

  // Individual stages, exposed for focused tests. `run` calls them in order.
  struct CandidateSets {
    std::vector<int> critical;  // top power nodes, V'
    std::vector<int> fanouts;   // selected immediate fanouts, V''
  };
  CandidateSets select_candidates() const;
  void power_phase();
  void area_phase();
  void delay_area_phase();

  /// Predicted max PO error if `node` were switched to `cand` now.
  double predict(int node, const Candidate& cand);

  const Netlist& result() const { return work_; }
  const Netlist& original() const { return original_; }
  double e_out() const { return e_out_; }
  const std::vector<UndoEntry>& undo_log() const { return undo_log_; }
  const std::vector<double>& local_errors() const { return local_error_; }

  /// Replays the undo log backwards onto a copy of the result; the return
  /// value must equal the original netlist.
  Netlist replay_undo() const;

  OptimizationReport report() const { return report_; }
  void finalize_report();

private:
  struct EditState {
    std::vector<SignalRef> fanins;
    std::vector<int> pin_map;  // current pin -> original pin index
    int cell = -1;
    double local_error = 0.0;
  };

  enum class PhaseMetric { output_cap, input_cap, area, delay };

  double candidate_metric(const Cell& cell, PhaseMetric metric) const;
  std::vector<Candidate> replacement_list(int node, PhaseMetric metric) const;
  std::vector<Candidate> removal_list(int node, PhaseMetric metric) const;
  double candidate_local_error(int node, const Candidate& cand) const;

  EditState capture(int node) const;
  void apply(int node, const Candidate& cand, double local_error);
  void restore(int node, const EditState& saved);

  /// Visits `nodes` in (level, id) order, trying `removals ? removal :
  /// replacement` candidates under `metric`; first accepted candidate per
  /// node wins.
  void sweep(const std::vector<int>& nodes, PhaseMetric metric, bool removals);
  bool try_node(int node, const std::vector<Candidate>& cands, bool check_delay);

  void refresh_errors();
  double propagate_with(int node, double trial_error, double* node_error_out = nullptr);

  const TechLibrary& lib_;
  OptimizerConfig cfg_;
  Netlist original_;
  Netlist work_;

  // Frozen structural snapshot from the exact netlist (signal probabilities
  // are not recomputed during optimization).
  std::vector<double> pi_probs_;
  std::vector<double> node_probs_;
  std::vector<double> activities_;
  std::vector<double> load_caps_;
  FanoutInfo fanout_;
  FeatureContext feature_ctx_;

  std::vector<double> local_error_;  // per node, vs. the original function
  std::vector<double> node_errors_;  // propagated, refreshed per sweep
  std::vector<std::vector<int>> pin_maps_;
  double e_out_ = 0.0;
  std::vector<UndoEntry> undo_log_;
  OptimizationReport report_;
  double fixed_activity_power_ = 0.0;  // bookkeeping for the monotonicity invariant
};

struct ApproxResult {
  Netlist netlist;
  OptimizationReport report;
};

ApproxResult approximate(const Netlist& nl, const TechLibrary& lib, const OptimizerConfig& cfg);

/// Labeled text block, one field per line.
std::string format_report(const OptimizationReport& report);

} // namespace alsx
