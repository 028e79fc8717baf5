#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "lrcvrp/assign.hpp"
#include "lrcvrp/instance.hpp"

namespace lrcvrp {

struct KnapsackItem {
  int customer;
  int weight;
  double cost;  // adjusted cost a_ik - lambda_i
};

// One vehicle's relaxed subproblem: minimize the summed adjusted cost of the
// selected items subject to the capacity bound. Built via candidate
// restriction all items carry negative adjusted cost.
struct KnapsackSub {
  int vehicle = 0;
  std::vector<KnapsackItem> items;
  long long capacity = 0;

  int width() const { return static_cast<int>(items.size()); }
};

struct DualState {
  std::vector<double> lambda;  // size n+1, index 0 unused
  std::vector<double> g;       // size n+1, index 0 zero
  double lb = -std::numeric_limits<double>::infinity();
  double ub = std::numeric_limits<double>::infinity();
  int t = 0;
};

// Vehicle k keeps exactly the customers with positive reduced profit
// lambda_i - a_ik > 0 (items heavier than the capacity can never be packed
// and are dropped as well).
std::vector<KnapsackSub> restrict_candidates(const GapModel& model,
                                             const Instance& inst,
                                             const std::vector<double>& lambda);

// Full (unrestricted) subproblems; used to check that restriction does not
// change the dual value.
std::vector<KnapsackSub> full_subproblems(const GapModel& model,
                                          const Instance& inst,
                                          const std::vector<double>& lambda);

// Returns the selected customer ids (any minimizing selection; the empty
// selection is always feasible).
using SubSolver = std::function<std::vector<int>(const KnapsackSub&)>;

struct DualValue {
  double value = 0.0;
  std::vector<std::vector<int>> selections;  // per vehicle customer ids
};

// L(lambda) = sum_i lambda_i + sum_k (value of the solver's selection for
// sub k). Subproblems are independent and solved in parallel; the serial
// variant is the reference used by the consistency tests and benchmark.
DualValue dual_value(const std::vector<KnapsackSub>& subs,
                     const std::vector<double>& lambda, const SubSolver& solver);
DualValue dual_value_serial(const std::vector<KnapsackSub>& subs,
                            const std::vector<double>& lambda,
                            const SubSolver& solver);

// g_i = 1 - (number of vehicles selecting customer i).
std::vector<double> subgradient(const std::vector<std::vector<int>>& selections,
                                int n);

// lambda_i = min_k a[k][i]; puts every customer on the profitability
// boundary of its cheapest vehicle.
std::vector<double> initial_multipliers(const GapModel& model);

}  // namespace lrcvrp
