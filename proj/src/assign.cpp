#include "lrcvrp/assign.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace lrcvrp {

std::vector<int> select_seeds(const Instance& inst, SeedMode mode) {
  const int k = inst.fleet;
  const int n = inst.n;
  if (k > n) {
    fail(ErrorCode::kTooFewCustomers,
         "need at least one customer per vehicle");
  }

  if (mode == SeedMode::kFarthest) {
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 1);
    std::stable_sort(ids.begin(), ids.end(), [&](int a, int b) {
      if (inst.cost(0, a) != inst.cost(0, b)) {
        return inst.cost(0, a) > inst.cost(0, b);
      }
      return a < b;
    });
    std::vector<int> seeds(ids.begin(), ids.begin() + k);
    std::sort(seeds.begin(), seeds.end());
    return seeds;
  }

  if (!inst.coords) {
    fail(ErrorCode::kNoCoordinates, "angular seed selection needs coordinates");
  }
  const auto& c = *inst.coords;
  const double two_pi = 6.283185307179586;

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::vector<double> angle(n + 1, 0.0);
  for (int i = 1; i <= n; ++i) {
    double a = std::atan2(c[i][1] - c[0][1], c[i][0] - c[0][0]);
    if (a < 0.0) a += two_pi;
    angle[i] = a;
  }
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (angle[a] != angle[b]) return angle[a] < angle[b];
    return a < b;
  });

  // Equal-count contiguous sectors; the first (n mod K) sectors get one
  // extra customer, so every sector is nonempty when K <= n.
  std::vector<int> seeds;
  seeds.reserve(k);
  const int base = n / k;
  const int extra = n % k;
  int pos = 0;
  for (int s = 0; s < k; ++s) {
    const int len = base + (s < extra ? 1 : 0);
    int best = order[pos];
    for (int t = pos; t < pos + len; ++t) {
      const int cand = order[t];
      if (inst.cost(0, cand) > inst.cost(0, best) ||
          (inst.cost(0, cand) == inst.cost(0, best) && cand < best)) {
        best = cand;
      }
    }
    seeds.push_back(best);
    pos += len;
  }
  std::sort(seeds.begin(), seeds.end());
  return seeds;
}

GapModel surrogate_costs(const Instance& inst, const std::vector<int>& seeds) {
  GapModel model;
  model.seeds = seeds;
  model.instance_name = inst.name;
  model.a.assign(seeds.size(), std::vector<double>(inst.n + 1, 0.0));
  for (std::size_t k = 0; k < seeds.size(); ++k) {
    const int s = seeds[k];
    if (s < 1 || s > inst.n) {
      fail(ErrorCode::kIndexOutOfRange, "seed id out of range");
    }
    for (int i = 1; i <= inst.n; ++i) {
      model.a[k][i] = inst.cost(0, i) + inst.cost(i, s) - inst.cost(0, s);
    }
  }
  return model;
}

GapSolution gap_brute_force(const GapModel& model, const Instance& inst) {
  const int n = inst.n;
  const int k = model.vehicles();
  if (n > 10 || k > 3) {
    fail(ErrorCode::kTooLarge, "brute-force GAP limited to n<=10, K<=3");
  }

  GapSolution best;
  best.value = std::numeric_limits<double>::infinity();

  std::vector<int> choice(n + 1, 0);  // choice[i] in [0, k)
  std::vector<long long> load(k, 0);
  bool done = false;
  while (!done) {
    std::fill(load.begin(), load.end(), 0);
    double value = 0.0;
    bool feasible = true;
    for (int i = 1; i <= n && feasible; ++i) {
      const int v = choice[i];
      load[v] += inst.demands[i];
      if (load[v] > inst.capacity) feasible = false;
      value += model.a[v][i];
    }
    if (feasible && value < best.value) {
      best.value = value;
      best.vehicle_of.assign(n + 1, -1);
      for (int i = 1; i <= n; ++i) best.vehicle_of[i] = choice[i];
    }
    // Advance the mixed-radix counter.
    int i = 1;
    for (; i <= n; ++i) {
      if (++choice[i] < k) break;
      choice[i] = 0;
    }
    done = i > n;
  }

  if (!std::isfinite(best.value)) {
    fail(ErrorCode::kInfeasible, "no capacity-feasible assignment exists");
  }
  return best;
}

}  // namespace lrcvrp
