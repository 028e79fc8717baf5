#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lrcvrp/dual.hpp"

namespace lrcvrp {

enum class PenaltyKind { kTilted, kTaylor };

struct PenaltyConfig {
  PenaltyKind kind = PenaltyKind::kTilted;
  double rho = 1.0;    // tilted penalty strength
  double s = 2.0;      // tilted headroom; preferred load band is [Q-s, Q]
  double alpha = 1.0;  // taylor penalty scale

  // rho (or alpha) = 2*(max|cost|+1)/max(1, min_i w_i^2), scaled per sub.
  static PenaltyConfig scaled_default(const KnapsackSub& sub, PenaltyKind kind);
};

// Unconstrained binary quadratic model for one vehicle subproblem. The
// quadratic part is stored as a packed strictly-upper-triangular matrix.
struct QuboModel {
  int width = 0;
  std::vector<double> linear;      // size width
  std::vector<double> quad_upper;  // size width*(width-1)/2, row-major i<j
  double constant = 0.0;
  std::vector<int> item_map;       // variable index -> customer id
  std::vector<int> weights;        // variable index -> demand
  long long capacity = 0;

  double& quad(int i, int j);
  double quad(int i, int j) const;
  double energy(const std::vector<std::uint8_t>& y) const;
};

// E(y) = sum ~a_i y_i + rho((W-Q)^2 + s(W-Q)); minimized over the penalty
// alone at load W = Q - s/2.
QuboModel encode_tilted(const KnapsackSub& sub, const PenaltyConfig& cfg);

// E(y) = sum ~a_i y_i + alpha(1 - t + t^2/2) with slack t = Q - W; the
// penalty alone prefers the capacity-hugging load W = Q - 1.
QuboModel encode_taylor(const KnapsackSub& sub, const PenaltyConfig& cfg);

QuboModel encode(const KnapsackSub& sub, const PenaltyConfig& cfg);

// Sparse coefficient triples, one "i j value" line per entry with linear
// terms on the diagonal.
std::string export_triples(const QuboModel& model);

enum class WidthScheme { kDirect, kFjLr, kFjLrSlack };

// Logical-width accounting. Direct uses the K*n^2 time-indexed convention;
// fj_lr is the widest candidate set; fj_lr_slack adds ceil(log2(Q+1)) slack
// bits.
long long width_accounting(const Instance& inst, WidthScheme scheme,
                           const std::vector<KnapsackSub>* subs = nullptr);

}  // namespace lrcvrp
