#pragma once

#include <cstdint>
#include <vector>

#include "lrcvrp/qubo.hpp"

namespace lrcvrp {

struct SamplerConfig {
  int shots = 256;
  double temperature = 1.0;
  int sweeps = 200;
  double noise_flip_prob = 0.02;
  std::uint64_t rng_seed = 0;
  double cvar_alpha = 1.0;
};

struct SampleBatch {
  int width = 0;
  int shots = 0;
  std::vector<std::vector<std::uint8_t>> bits;  // shots x width
  std::vector<double> energies;                 // recomputed from the model
  std::vector<std::uint8_t> feasible;           // filled by feasibility_yield
};

// Exact 0-1 knapsack minimizer (selected customer ids). DP over capacity with
// an enumeration fallback for tiny widths when the capacity is too large to
// tabulate; ties prefer the lexicographically smallest bit vector, i.e. the
// one leaving the lowest-index items unselected.
std::vector<int> solve_exact(const KnapsackSub& sub);

// Draws cfg.shots independent single-spin-flip Gibbs chains at fixed
// temperature, then applies readout bit-flip noise. Deterministic under
// cfg.rng_seed regardless of thread count (one RNG substream per shot).
SampleBatch sample_noisy(const QuboModel& model, const SamplerConfig& cfg);
SampleBatch sample_noisy_serial(const QuboModel& model,
                                const SamplerConfig& cfg);

// Mean of the ceil(alpha*S) lowest energies.
double cvar_score(const SampleBatch& batch, double alpha);

// Fraction of samples whose selected load fits the capacity; also fills
// batch.feasible.
double feasibility_yield(SampleBatch& batch, const KnapsackSub& sub);

// Best capacity-feasible decoded selection in the batch, compared against the
// empty selection (value 0); used when a sampled batch stands in for an exact
// subproblem minimizer.
std::vector<int> best_feasible_selection(const SampleBatch& batch,
                                         const KnapsackSub& sub);

}  // namespace lrcvrp
