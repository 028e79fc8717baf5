#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lrcvrp/common.hpp"

namespace lrcvrp {

// A CVRP instance. Node 0 is the depot, customers are 1..n. The cost matrix
// is symmetric with a zero diagonal; instances are immutable after
// construction and safe to share across threads.
struct Instance {
  std::string name;
  int n = 0;  // customer count (depot excluded)
  std::optional<std::vector<std::array<double, 2>>> coords;  // size n+1
  std::vector<int> demands;                                  // size n+1, [0]=0
  long long capacity = 0;
  int fleet = 0;
  std::vector<std::vector<double>> cost_matrix;  // (n+1) x (n+1)
  std::optional<double> bks;

  int node_count() const { return n + 1; }
  long long total_demand() const;
  double cost(int i, int j) const;

  // Checks the structural invariants (symmetric costs, zero diagonal,
  // demands within capacity, fleet can cover total demand).
  void validate() const;
};

struct GeneratorConfig {
  int n_min = 10;
  int n_max = 30;
  long long capacity = 100;
  int demand_min = 1;
  int demand_max = 29;
  std::uint64_t rng_seed = 0;
};

// Parses a CVRPLIB-format .vrp file. Supports EUC_2D (nearest-integer
// rounded distances) and EXPLICIT edge weights (FULL_MATRIX, UPPER_ROW,
// LOWER_ROW, UPPER_DIAG_ROW, LOWER_DIAG_ROW). Fleet size is taken from the
// "-k<K>" name suffix or the COMMENT trucks field, defaulting to the minimum
// capacity-feasible fleet; BKS is read from the COMMENT "Optimal value" or a
// "BEST_KNOWN:" line when present.
Instance parse_instance(const std::string& text);

// Reads an instance from disk; a sidecar "<stem>.bks" file containing
// "BEST_KNOWN: <number>" supplies the BKS when the file itself has none.
Instance load_instance(const std::string& path);

// Serializes an instance back to CVRPLIB text (EUC_2D when coordinates are
// present, EXPLICIT FULL_MATRIX otherwise).
std::string write_instance(const Instance& inst);

Instance generate_instance(const GeneratorConfig& cfg);

}  // namespace lrcvrp
