#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "alsx/library.hpp"
#include "alsx/netlist.hpp"

namespace alsx {

constexpr int kFeatureDim = 93;
constexpr int kNumClasses = 51;
constexpr double kClassWidth = 0.02;

/// Identifies the feature layout below. Datasets and models carry this tag
/// so vectors produced under one layout never feed a model trained on
/// another.
inline constexpr const char* kFeatureLayoutTag = "fl1-d2-8x8";

// Feature layout (all entries scaled into [0,1], absent slots zero):
//   [0]      node cell id, (index+1)/|lib|
//   [1]      replacing cell id, same scale
//   [2]      local replacement error
//   [3]      fanin count / 6
//   [4]      fanout count, capped at 32, / 32
//   [5]      level / depth
//   [6]      depth / 256, capped at 1
//   [7..10]  error probabilities of up to 4 immediate fanins
//   [11]     switching activity
//   [12]     load cap / library worst-case load
//   [13..52] 8 fanin-cone slots x (cell id, level/depth, fanin/6, fanout/32, error)
//   [53..92] 8 fanout-cone slots x the same 5 fields
// Cones are breadth-first with depth limit 2, truncated / zero-padded to 8.

struct TrainingSample {
  std::array<double, kFeatureDim> features{};
  int label = 0;         // quantized class 0..50
  double raw_label = 0;  // error rate before quantization
};

/// Nearest 2%-wide bin: class = round(e / 0.02), clamped to 0..50.
int quantize_label(double e);
double dequantize_label(int cls);

/// Frozen structural snapshot feature extraction reads from. Building it
/// once per netlist keeps repeated extractions O(1) and keeps training and
/// inference feature distributions identical.
struct FeatureContext {
  const Netlist* netlist = nullptr;
  const TechLibrary* lib = nullptr;
  std::vector<double> node_errors;  // current propagated error per node
  std::vector<double> activities;
  std::vector<double> load_caps;
  std::vector<int> fanout_counts;
  double load_norm = 1.0;  // library worst-case load (max out cap + 32 max pin cap)
  int depth_limit = 2;

  static FeatureContext make(const Netlist& nl, const TechLibrary& lib, int depth_limit = 2,
                             std::span<const double> pi_probs = {});
};

std::array<double, kFeatureDim> extract_features(const FeatureContext& ctx, int node,
                                                 int replacing_cell, double local_error);

/// One candidate move for a node: a same-arity cell, or a removal (constant
/// or a BUF pass-through of pin `passthrough_pin`).
struct Candidate {
  int cell = -1;
  int passthrough_pin = -1;
  bool removal = false;
};

/// All candidates for a node of the given arity, in library order; BUF
/// expands to one pass-through per pin (ascending). Same-arity candidates
/// include the identity replacement.
std::vector<Candidate> enumerate_candidates(int arity, const TechLibrary& lib);

/// Runs every (node, candidate) pair of every network: computes the local
/// truth-table error, injects it, propagates to the primary outputs, and
/// labels the feature vector with the quantized max PO error. Output order
/// is (network, node id, library order) regardless of `jobs`.
std::vector<TrainingSample> generate_training_data(std::span<const Netlist> networks,
                                                   const TechLibrary& lib, int depth_limit = 2,
                                                   uint64_t seed = 1, int jobs = 1);

struct DatasetSplit {
  std::vector<TrainingSample> train, val, test;
};

/// Seeded shuffle, then sizes floor(r0 N) / floor(r1 N) / remainder.
DatasetSplit split_dataset(std::vector<TrainingSample> samples, std::array<double, 3> ratios,
                           uint64_t seed);

/// Text format: header `ALSX-DATA v1 93 51`, then one sample per line as 93
/// comma-separated values, `;`, the integer label.
std::string dataset_to_string(std::span<const TrainingSample> samples);
void save_dataset(std::span<const TrainingSample> samples, const std::string& path);
std::vector<TrainingSample> load_dataset(const std::string& path);

} // namespace alsx
