#pragma once

#include <string>
#include <vector>

#include "lrcvrp/instance.hpp"

namespace lrcvrp {

enum class SeedMode { kAngular, kFarthest };

// Surrogate assignment model anchored at one seed customer per vehicle.
// a[k][i] is the marginal cost of serving customer i on vehicle k's
// seed-anchored route (a[k][0] is unused and zero). By construction
// a[k][seeds[k]] == 0.
struct GapModel {
  std::vector<int> seeds;                  // K distinct customer ids
  std::vector<std::vector<double>> a;      // K x (n+1)
  std::string instance_name;

  int vehicles() const { return static_cast<int>(seeds.size()); }
  int customers() const {
    return a.empty() ? 0 : static_cast<int>(a.front().size()) - 1;
  }
};

// Picks one seed customer per vehicle. Angular mode sorts customers by polar
// angle about the depot, splits the order into K contiguous equal-count
// sectors and takes the customer farthest from the depot in each; farthest
// mode takes the K customers with the largest depot distance. Ties go to the
// lower customer id.
std::vector<int> select_seeds(const Instance& inst, SeedMode mode);

GapModel surrogate_costs(const Instance& inst, const std::vector<int>& seeds);

struct GapSolution {
  std::vector<int> vehicle_of;  // size n+1, [0] = -1
  double value = 0.0;
};

// Exhaustive GAP minimizer, guarded to n <= 10 and K <= 3. Test oracle for
// the relaxation bounds.
GapSolution gap_brute_force(const GapModel& model, const Instance& inst);

}  // namespace lrcvrp
