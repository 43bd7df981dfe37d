#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "alsx/library.hpp"
#include "alsx/netlist.hpp"

namespace alsx {

/// Serial composition of two independent flip probabilities: a flip survives
/// unless both sources fire, so e = a + (1 - 2a) * b.
inline double compose_error(double a, double b) { return a + (1.0 - 2.0 * a) * b; }

/// Per-node probability of evaluating to 1 under independent inputs,
/// computed in topological order. Empty pi_probs means 0.5 everywhere.
std::vector<double> signal_probabilities(const Netlist& nl, const TechLibrary& lib,
                                         std::span<const double> pi_probs = {});

/// Probability that the gate's observed output differs from its correct
/// value, given independent per-input signal probabilities and error
/// probabilities plus the gate's own intrinsic error. Exact under the
/// independent-flip model: enumerates all input values v and flip patterns e,
///   flip = sum_v P(v) sum_{e != 0} P(e) [f(v^e) != f(v)]
/// and composes the intrinsic error on top. Result clamped to [0,1].
double gate_output_error(const Cell& cell, std::span<const double> input_probs,
                         std::span<const double> input_errors, double intrinsic_error);

/// Literal two-input OR formula from probabilistic error-propagation
/// calculus, kept as a published reference point next to the enumeration:
///   e = eg + (1-2eg) * (e1(1-p2) + e2(1-p1) - 2 e1 e2 (2 p1 p2 - 1))
/// The two agree whenever e1*e2 = 0; the joint-flip coefficient differs
/// otherwise (enumeration and Monte Carlo support +e1e2(2p1p2-1)).
double gate_output_error_or2_eq1(double p1, double p2, double e1, double e2, double eps_g);

/// Local error probabilities injected at signal sources. Either vector may
/// be empty (treated as all-zero); otherwise sizes must match the netlist.
struct ErrorInjection {
  std::vector<double> pi_errors;
  std::vector<double> node_errors;

  double pi(int i) const { return pi_errors.empty() ? 0.0 : pi_errors[static_cast<size_t>(i)]; }
  double node(int i) const {
    return node_errors.empty() ? 0.0 : node_errors[static_cast<size_t>(i)];
  }
};

struct PropagatedErrors {
  std::vector<double> node_errors;  // per node, after composing injections
  std::vector<double> po_errors;    // per primary output
  double max_po_error = 0.0;
};

/// Network-wide propagation in topological order: each node's error is
/// gate_output_error over its fanins' propagated errors, composed with the
/// locally injected error. Fanin independence is assumed throughout, as in
/// the per-gate calculus; reconvergence is not tracked.
PropagatedErrors propagate_error(const Netlist& nl, const TechLibrary& lib,
                                 std::span<const double> node_probs,
                                 std::span<const double> pi_probs,
                                 const ErrorInjection& injected);

/// Convenience overload computing signal probabilities internally (PIs 0.5).
PropagatedErrors propagate_error(const Netlist& nl, const TechLibrary& lib,
                                 const ErrorInjection& injected);

struct MonteCarloErrors {
  std::vector<double> po_errors;
  double max_po_error = 0.0;
  uint64_t samples = 0;
};

/// Fault-injection oracle for the same model: random PI vectors (Bernoulli
/// pi_probs, default 0.5), every signal flipped independently with its
/// injected probability composed with the cell's intrinsic error, observed
/// PO disagreement vs. the fault-free run. Deterministic given the seed.
MonteCarloErrors monte_carlo_error(const Netlist& nl, const TechLibrary& lib,
                                   const ErrorInjection& injected, uint64_t samples,
                                   uint64_t seed, std::span<const double> pi_probs = {});

} // namespace alsx
