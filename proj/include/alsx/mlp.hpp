#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "alsx/dataset.hpp"

namespace alsx {

struct MlpConfig {
  double lr = 0.001;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double adam_eps = 1e-8;
  int epochs = 30;
  int batch_size = 32;
};

/// Fully connected 93-400-300-51 classifier: rectified-linear hidden layers,
/// per-class sigmoid outputs trained with one-hot binary cross entropy.
class MlpModel {
public:
  static constexpr std::array<int, 4> kDims{93, 400, 300, 51};
  static constexpr int kLayers = 3;

  // weights[l] is kDims[l+1] x kDims[l], row-major; biases[l] has kDims[l+1].
  std::array<std::vector<double>, kLayers> weights;
  std::array<std::vector<double>, kLayers> biases;

  // Adam state, shaped like the parameters.
  std::array<std::vector<double>, kLayers> m_w, v_w, m_b, v_b;
  long step = 0;

  uint64_t init_seed = 0;
  std::string layout_tag = kFeatureLayoutTag;

  /// Glorot-uniform initialization, seeded; Adam state zeroed.
  static MlpModel init(uint64_t seed, std::string layout_tag = kFeatureLayoutTag);

  bool finite() const;  // no NaN/Inf anywhere in the parameters
};

struct Activations {
  std::array<std::vector<double>, MlpModel::kLayers> pre;   // pre-activations z
  std::array<std::vector<double>, MlpModel::kLayers> post;  // activations; post[2] = probs
};

/// Forward pass; fills `cache` when given (needed for backprop).
std::vector<double> feedforward(const MlpModel& model, std::span<const double> x,
                                Activations* cache = nullptr);

/// One-hot binary cross entropy over the 51 outputs, probabilities clamped
/// to [1e-7, 1 - 1e-7].
double bce_loss(std::span<const double> probs, int target_class);

struct Gradients {
  std::array<std::vector<double>, MlpModel::kLayers> w, b;
  void resize_like(const MlpModel& model);
  void zero();
};

/// Accumulates (sums) the exact loss gradient for one sample into `grads`.
void backprop(const MlpModel& model, std::span<const double> x, const Activations& acts,
              int target_class, Gradients& grads);

/// Standard bias-corrected Adam step, in place. Throws on non-finite
/// gradients.
void adam_update(MlpModel& model, const Gradients& grads, const MlpConfig& cfg = {});

struct EpochStats {
  double train_loss = 0.0;   // mean per-sample loss over the epoch
  double val_exact = 0.0;    // exact-class accuracy
  double val_within1 = 0.0;  // |class - label| <= 1 accuracy
};

struct TrainHistory {
  std::vector<EpochStats> epochs;
  int best_epoch = -1;  // epoch whose snapshot the model holds on return
};

/// Seeded mini-batch training; after the final epoch the model is restored
/// to the best-validation snapshot. Throws on a feature-layout mismatch
/// between model and data.
TrainHistory train(MlpModel& model, std::span<const TrainingSample> train_set,
                   std::span<const TrainingSample> val_set, const MlpConfig& cfg,
                   uint64_t seed);

struct Prediction {
  int cls = 0;
  double rate = 0.0;
};

/// Argmax class (ties resolve to the higher class) and its bin center.
Prediction predict_error(const MlpModel& model, std::span<const double> features);

/// (exact, within-1) accuracy over a sample set.
std::pair<double, double> evaluate(const MlpModel& model, std::span<const TrainingSample> set);

/// Text serialization: header line `ALSX-MLP v1 93 400 300 51 LAYOUT=<tag>`,
/// then per layer all weights row-major then biases, one value per line at
/// 17 significant digits. Optimizer state is not persisted.
void save_model(const MlpModel& model, const std::string& path);
MlpModel load_model(const std::string& path);

} // namespace alsx
