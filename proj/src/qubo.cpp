#include "lrcvrp/qubo.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace lrcvrp {

PenaltyConfig PenaltyConfig::scaled_default(const KnapsackSub& sub,
                                            PenaltyKind kind) {
  double max_abs = 0.0;
  double min_w2 = 1.0;
  bool first = true;
  for (const auto& item : sub.items) {
    max_abs = std::max(max_abs, std::fabs(item.cost));
    const double w2 = static_cast<double>(item.weight) * item.weight;
    min_w2 = first ? w2 : std::min(min_w2, w2);
    first = false;
  }
  const double scale = 2.0 * (max_abs + 1.0) / std::max(1.0, min_w2);
  PenaltyConfig cfg;
  cfg.kind = kind;
  cfg.rho = scale;
  cfg.alpha = scale;
  cfg.s = 2.0;
  return cfg;
}

double& QuboModel::quad(int i, int j) {
  // Packed strictly-upper-triangular index for i < j.
  return quad_upper[static_cast<std::size_t>(i) * (2 * width - i - 1) / 2 +
                    (j - i - 1)];
}

double QuboModel::quad(int i, int j) const {
  return quad_upper[static_cast<std::size_t>(i) * (2 * width - i - 1) / 2 +
                    (j - i - 1)];
}

double QuboModel::energy(const std::vector<std::uint8_t>& y) const {
  double e = constant;
  for (int i = 0; i < width; ++i) {
    if (!y[i]) continue;
    e += linear[i];
    for (int j = i + 1; j < width; ++j) {
      if (y[j]) e += quad(i, j);
    }
  }
  return e;
}

namespace {

QuboModel base_model(const KnapsackSub& sub) {
  QuboModel m;
  m.width = sub.width();
  m.linear.assign(m.width, 0.0);
  m.quad_upper.assign(static_cast<std::size_t>(m.width) * (m.width - 1) / 2,
                      0.0);
  m.item_map.resize(m.width);
  m.weights.resize(m.width);
  m.capacity = sub.capacity;
  for (int i = 0; i < m.width; ++i) {
    m.item_map[i] = sub.items[i].customer;
    m.weights[i] = sub.items[i].weight;
  }
  return m;
}

}  // namespace

QuboModel encode_tilted(const KnapsackSub& sub, const PenaltyConfig& cfg) {
  QuboModel m = base_model(sub);
  const double rho = cfg.rho;
  const double s = cfg.s;
  const double q = static_cast<double>(sub.capacity);
  for (int i = 0; i < m.width; ++i) {
    const double w = sub.items[i].weight;
    m.linear[i] = sub.items[i].cost + rho * w * w + rho * (s - 2.0 * q) * w;
    for (int j = i + 1; j < m.width; ++j) {
      m.quad(i, j) = 2.0 * rho * w * sub.items[j].weight;
    }
  }
  m.constant = rho * (q * q - s * q);
  return m;
}

QuboModel encode_taylor(const KnapsackSub& sub, const PenaltyConfig& cfg) {
  QuboModel m = base_model(sub);
  const double alpha = cfg.alpha;
  const double q = static_cast<double>(sub.capacity);
  for (int i = 0; i < m.width; ++i) {
    const double w = sub.items[i].weight;
    m.linear[i] = sub.items[i].cost + alpha * (1.0 - q) * w + 0.5 * alpha * w * w;
    for (int j = i + 1; j < m.width; ++j) {
      m.quad(i, j) = alpha * w * sub.items[j].weight;
    }
  }
  m.constant = alpha * (1.0 - q + 0.5 * q * q);
  return m;
}

QuboModel encode(const KnapsackSub& sub, const PenaltyConfig& cfg) {
  return cfg.kind == PenaltyKind::kTilted ? encode_tilted(sub, cfg)
                                          : encode_taylor(sub, cfg);
}

std::string export_triples(const QuboModel& model) {
  std::ostringstream out;
  out.precision(17);
  out << "# constant " << model.constant << "\n";
  for (int i = 0; i < model.width; ++i) {
    if (model.linear[i] != 0.0) {
      out << i << " " << i << " " << model.linear[i] << "\n";
    }
  }
  for (int i = 0; i < model.width; ++i) {
    for (int j = i + 1; j < model.width; ++j) {
      if (model.quad(i, j) != 0.0) {
        out << i << " " << j << " " << model.quad(i, j) << "\n";
      }
    }
  }
  return out.str();
}

long long width_accounting(const Instance& inst, WidthScheme scheme,
                           const std::vector<KnapsackSub>* subs) {
  switch (scheme) {
    case WidthScheme::kDirect:
      return static_cast<long long>(inst.fleet) * inst.n * inst.n;
    case WidthScheme::kFjLr: {
      if (subs == nullptr) {
        fail(ErrorCode::kInvalidConfig, "fj_lr accounting needs subproblems");
      }
      long long w = 0;
      for (const auto& sub : *subs) w = std::max<long long>(w, sub.width());
      return w;
    }
    case WidthScheme::kFjLrSlack: {
      const long long base = width_accounting(inst, WidthScheme::kFjLr, subs);
      long long bits = 0;
      while ((1LL << bits) < inst.capacity + 1) ++bits;
      return base + bits;
    }
  }
  fail(ErrorCode::kInvalidConfig, "unknown width scheme");
}

}  // namespace lrcvrp
