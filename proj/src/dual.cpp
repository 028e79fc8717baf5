#include "lrcvrp/dual.hpp"

#include <algorithm>

namespace lrcvrp {

namespace {

double selection_value(const KnapsackSub& sub, const std::vector<int>& picked) {
  double v = 0.0;
  for (int customer : picked) {
    const auto it = std::find_if(
        sub.items.begin(), sub.items.end(),
        [customer](const KnapsackItem& item) { return item.customer == customer; });
    if (it == sub.items.end()) {
      fail(ErrorCode::kIndexOutOfRange, "selection contains a non-item customer");
    }
    v += it->cost;
  }
  return v;
}

}  // namespace

std::vector<KnapsackSub> restrict_candidates(const GapModel& model,
                                             const Instance& inst,
                                             const std::vector<double>& lambda) {
  const int n = inst.n;
  std::vector<KnapsackSub> subs(model.vehicles());
  for (int k = 0; k < model.vehicles(); ++k) {
    subs[k].vehicle = k;
    subs[k].capacity = inst.capacity;
    for (int i = 1; i <= n; ++i) {
      if (lambda[i] - model.a[k][i] > 0.0 && inst.demands[i] <= inst.capacity) {
        subs[k].items.push_back({i, inst.demands[i], model.a[k][i] - lambda[i]});
      }
    }
  }
  return subs;
}

std::vector<KnapsackSub> full_subproblems(const GapModel& model,
                                          const Instance& inst,
                                          const std::vector<double>& lambda) {
  const int n = inst.n;
  std::vector<KnapsackSub> subs(model.vehicles());
  for (int k = 0; k < model.vehicles(); ++k) {
    subs[k].vehicle = k;
    subs[k].capacity = inst.capacity;
    for (int i = 1; i <= n; ++i) {
      if (inst.demands[i] <= inst.capacity) {
        subs[k].items.push_back({i, inst.demands[i], model.a[k][i] - lambda[i]});
      }
    }
  }
  return subs;
}

DualValue dual_value_serial(const std::vector<KnapsackSub>& subs,
                            const std::vector<double>& lambda,
                            const SubSolver& solver) {
  DualValue out;
  out.selections.resize(subs.size());
  std::vector<double> values(subs.size(), 0.0);
  for (std::size_t k = 0; k < subs.size(); ++k) {
    out.selections[k] = solver(subs[k]);
    values[k] = selection_value(subs[k], out.selections[k]);
  }
  double l = 0.0;
  for (std::size_t i = 1; i < lambda.size(); ++i) l += lambda[i];
  for (double v : values) l += v;
  out.value = l;
  return out;
}

DualValue dual_value(const std::vector<KnapsackSub>& subs,
                     const std::vector<double>& lambda,
                     const SubSolver& solver) {
  DualValue out;
  out.selections.resize(subs.size());
  std::vector<double> values(subs.size(), 0.0);
  const int count = static_cast<int>(subs.size());
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < count; ++k) {
    out.selections[k] = solver(subs[k]);
    values[k] = selection_value(subs[k], out.selections[k]);
  }
  // Fixed-order reduction so parallel and serial results match bit for bit.
  double l = 0.0;
  for (std::size_t i = 1; i < lambda.size(); ++i) l += lambda[i];
  for (double v : values) l += v;
  out.value = l;
  return out;
}

std::vector<double> subgradient(const std::vector<std::vector<int>>& selections,
                                int n) {
  std::vector<double> g(n + 1, 0.0);
  for (int i = 1; i <= n; ++i) g[i] = 1.0;
  for (const auto& sel : selections) {
    for (int customer : sel) {
      if (customer < 1 || customer > n) {
        fail(ErrorCode::kIndexOutOfRange, "selection id out of range");
      }
      g[customer] -= 1.0;
    }
  }
  return g;
}

std::vector<double> initial_multipliers(const GapModel& model) {
  const int n = model.customers();
  std::vector<double> lambda(n + 1, 0.0);
  for (int i = 1; i <= n; ++i) {
    double m = model.a[0][i];
    for (int k = 1; k < model.vehicles(); ++k) m = std::min(m, model.a[k][i]);
    lambda[i] = m;
  }
  return lambda;
}

}  // namespace lrcvrp
