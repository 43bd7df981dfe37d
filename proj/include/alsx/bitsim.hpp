#pragma once

#include <cstdint>
#include <random>

#include "alsx/library.hpp"

namespace alsx {

/// Evaluates a cell over one 64-pattern word per input pin.
/// Bit j of the result is the cell output for the inputs' bits j.
inline uint64_t eval_cell_word(const Cell& cell, const uint64_t* inputs) {
  uint64_t out = 0;
  const unsigned patterns = 1u << cell.num_inputs;
  for (unsigned m = 0; m < patterns; ++m) {
    if (!((cell.truth_table >> m) & 1u)) continue;
    uint64_t term = ~0ull;
    for (int i = 0; i < cell.num_inputs; ++i)
      term &= ((m >> i) & 1u) ? inputs[i] : ~inputs[i];
    out |= term;
  }
  return out;
}

/// 64 independent Bernoulli(p) bits. Each bit consumes 32 bits of generator
/// output, so one mt19937_64 draw yields two sample bits; the 2^-32 threshold
/// quantization is far below Monte-Carlo noise at any feasible sample count.
class BernoulliWordGen {
public:
  explicit BernoulliWordGen(uint64_t seed) : rng_(seed) {}

  static uint64_t threshold_for(double p) {
    if (p <= 0.0) return 0;
    if (p >= 1.0) return uint64_t{1} << 32;
    return static_cast<uint64_t>(p * 4294967296.0);
  }

  uint64_t word(uint64_t threshold) {
    if (threshold == 0) return 0;
    uint64_t out = 0;
    for (int j = 0; j < 64; j += 2) {
      const uint64_t draw = rng_();
      out |= uint64_t{(draw & 0xffffffffull) < threshold} << j;
      out |= uint64_t{(draw >> 32) < threshold} << (j + 1);
    }
    return out;
  }

  std::mt19937_64& raw() { return rng_; }

private:
  std::mt19937_64 rng_;
};

} // namespace alsx
