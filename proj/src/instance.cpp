#include "lrcvrp/instance.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace lrcvrp {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return s;
}

// Splits "KEY : value" headers; section names come through with empty value.
bool split_header(const std::string& line, std::string& key,
                  std::string& value) {
  const std::size_t colon = line.find(':');
  if (colon == std::string::npos) {
    key = upper(trim(line));
    value = "";
    return !key.empty();
  }
  key = upper(trim(line.substr(0, colon)));
  value = trim(line.substr(colon + 1));
  return !key.empty();
}

std::optional<int> fleet_from_name(const std::string& name) {
  // Trailing "-k<K>" suffix, CVRPLIB naming convention.
  const std::size_t pos = name.rfind("-k");
  if (pos == std::string::npos) return std::nullopt;
  int k = 0;
  bool any = false;
  for (std::size_t i = pos + 2; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) break;
    k = k * 10 + (name[i] - '0');
    any = true;
  }
  return (any && k > 0) ? std::optional<int>(k) : std::nullopt;
}

std::optional<double> value_after(const std::string& text,
                                  const std::string& tag) {
  const std::string hay = upper(text);
  std::size_t pos = hay.find(upper(tag));
  if (pos == std::string::npos) return std::nullopt;
  pos += tag.size();
  while (pos < hay.size() &&
         (hay[pos] == ':' || hay[pos] == ' ' || hay[pos] == '=')) {
    ++pos;
  }
  std::size_t end = pos;
  while (end < hay.size() &&
         (std::isdigit(static_cast<unsigned char>(hay[end])) ||
          hay[end] == '.' || hay[end] == '-')) {
    ++end;
  }
  if (end == pos) return std::nullopt;
  try {
    return std::stod(text.substr(pos, end - pos));
  } catch (...) {
    return std::nullopt;
  }
}

std::vector<double> read_numbers(std::istream& in, std::size_t count,
                                 const char* what) {
  std::vector<double> out;
  out.reserve(count);
  double v;
  while (out.size() < count && in >> v) out.push_back(v);
  if (out.size() < count) {
    fail(ErrorCode::kMalformedFile,
         std::string("truncated ") + what + " section");
  }
  return out;
}

}  // namespace

long long Instance::total_demand() const {
  long long s = 0;
  for (int d : demands) s += d;
  return s;
}

double Instance::cost(int i, int j) const {
  if (i < 0 || j < 0 || i > n || j > n) {
    fail(ErrorCode::kIndexOutOfRange,
         "node index out of range: (" + std::to_string(i) + "," +
             std::to_string(j) + ") for n=" + std::to_string(n));
  }
  return cost_matrix[i][j];
}

void Instance::validate() const {
  if (n < 1) fail(ErrorCode::kInconsistentDimension, "instance has no customers");
  if (static_cast<int>(demands.size()) != n + 1 ||
      static_cast<int>(cost_matrix.size()) != n + 1) {
    fail(ErrorCode::kInconsistentDimension, "field sizes disagree with n");
  }
  if (demands[0] != 0) fail(ErrorCode::kNegativeDemand, "depot demand must be 0");
  for (int i = 1; i <= n; ++i) {
    if (demands[i] < 0) fail(ErrorCode::kNegativeDemand, "negative demand");
    if (demands[i] > capacity) {
      fail(ErrorCode::kInfeasible,
           "customer demand exceeds vehicle capacity");
    }
  }
  for (int i = 0; i <= n; ++i) {
    if (static_cast<int>(cost_matrix[i].size()) != n + 1) {
      fail(ErrorCode::kInconsistentDimension, "cost matrix is not square");
    }
    if (cost_matrix[i][i] != 0.0) {
      fail(ErrorCode::kMalformedFile, "cost diagonal must be zero");
    }
    for (int j = 0; j < i; ++j) {
      if (cost_matrix[i][j] != cost_matrix[j][i]) {
        fail(ErrorCode::kMalformedFile, "cost matrix must be symmetric");
      }
      if (cost_matrix[i][j] < 0.0) {
        fail(ErrorCode::kMalformedFile, "negative travel cost");
      }
    }
  }
  const long long needed =
      (total_demand() + capacity - 1) / std::max<long long>(capacity, 1);
  if (fleet < needed) {
    fail(ErrorCode::kInfeasible, "fleet cannot cover total demand");
  }
}

Instance parse_instance(const std::string& text) {
  std::istringstream in(text);
  std::string line;

  Instance inst;
  std::string comment;
  int dimension = -1;
  std::string weight_type;
  std::string weight_format = "FULL_MATRIX";
  std::vector<std::array<double, 2>> coords;
  std::vector<double> explicit_weights;
  std::vector<int> demands;
  int depot_id = -1;
  bool saw_demand = false;

  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    std::string key, value;
    if (!split_header(line, key, value)) continue;

    if (key == "NAME") {
      inst.name = value;
    } else if (key == "COMMENT") {
      comment += value + " ";
    } else if (key == "TYPE") {
      if (upper(value) != "CVRP" && upper(value) != "TSP") {
        fail(ErrorCode::kUnsupportedFormat, "unsupported TYPE: " + value);
      }
    } else if (key == "DIMENSION") {
      dimension = static_cast<int>(std::stol(value));
    } else if (key == "CAPACITY") {
      inst.capacity = std::stoll(value);
    } else if (key == "EDGE_WEIGHT_TYPE") {
      weight_type = upper(value);
    } else if (key == "EDGE_WEIGHT_FORMAT") {
      weight_format = upper(value);
    } else if (key == "BEST_KNOWN") {
      inst.bks = std::stod(value);
    } else if (key == "NODE_COORD_SECTION") {
      if (dimension <= 0) {
        fail(ErrorCode::kMalformedFile, "NODE_COORD_SECTION before DIMENSION");
      }
      coords.assign(dimension, {0.0, 0.0});
      for (int i = 0; i < dimension; ++i) {
        int id;
        double x, y;
        if (!(in >> id >> x >> y)) {
          fail(ErrorCode::kMalformedFile, "truncated NODE_COORD_SECTION");
        }
        if (id < 1 || id > dimension) {
          fail(ErrorCode::kInconsistentDimension, "node id out of range");
        }
        coords[id - 1] = {x, y};
      }
    } else if (key == "EDGE_WEIGHT_SECTION") {
      if (dimension <= 0) {
        fail(ErrorCode::kMalformedFile, "EDGE_WEIGHT_SECTION before DIMENSION");
      }
      const std::size_t nn = static_cast<std::size_t>(dimension);
      std::size_t count;
      if (weight_format == "FULL_MATRIX") {
        count = nn * nn;
      } else if (weight_format == "UPPER_ROW" || weight_format == "LOWER_ROW") {
        count = nn * (nn - 1) / 2;
      } else if (weight_format == "UPPER_DIAG_ROW" ||
                 weight_format == "LOWER_DIAG_ROW") {
        count = nn * (nn + 1) / 2;
      } else {
        fail(ErrorCode::kUnsupportedFormat,
             "unsupported EDGE_WEIGHT_FORMAT: " + weight_format);
      }
      explicit_weights = read_numbers(in, count, "EDGE_WEIGHT");
    } else if (key == "DEMAND_SECTION") {
      if (dimension <= 0) {
        fail(ErrorCode::kMalformedFile, "DEMAND_SECTION before DIMENSION");
      }
      demands.assign(dimension, 0);
      for (int i = 0; i < dimension; ++i) {
        int id, d;
        if (!(in >> id >> d)) {
          fail(ErrorCode::kMalformedFile, "truncated DEMAND_SECTION");
        }
        if (id < 1 || id > dimension) {
          fail(ErrorCode::kInconsistentDimension, "demand id out of range");
        }
        if (d < 0) fail(ErrorCode::kNegativeDemand, "negative demand");
        demands[id - 1] = d;
      }
      saw_demand = true;
    } else if (key == "DEPOT_SECTION") {
      int id;
      while (in >> id && id != -1) {
        if (depot_id != -1) {
          fail(ErrorCode::kUnsupportedFormat, "multiple depots not supported");
        }
        depot_id = id;
      }
    } else if (key == "EOF") {
      break;
    }
  }

  if (dimension <= 1) fail(ErrorCode::kMalformedFile, "missing DIMENSION");
  if (inst.capacity <= 0) fail(ErrorCode::kMalformedFile, "missing CAPACITY");
  if (!saw_demand) fail(ErrorCode::kMalformedFile, "missing DEMAND_SECTION");
  if (depot_id == -1) fail(ErrorCode::kMalformedFile, "missing DEPOT_SECTION");
  if (depot_id < 1 || depot_id > dimension) {
    fail(ErrorCode::kInconsistentDimension, "depot id out of range");
  }

  const bool euclid = weight_type == "EUC_2D";
  const bool explicit_w = weight_type == "EXPLICIT";
  if (!euclid && !explicit_w) {
    // GEO and friends are accepted only through an explicit matrix.
    fail(ErrorCode::kUnsupportedFormat,
         "unsupported EDGE_WEIGHT_TYPE: " + weight_type);
  }
  if (euclid && coords.empty()) {
    fail(ErrorCode::kMalformedFile, "EUC_2D requires NODE_COORD_SECTION");
  }
  if (explicit_w && explicit_weights.empty()) {
    fail(ErrorCode::kMalformedFile, "EXPLICIT requires EDGE_WEIGHT_SECTION");
  }

  // Remap nodes so the depot sits at index 0 while keeping customer order.
  const int nn = dimension;
  std::vector<int> order(nn);
  order[0] = depot_id - 1;
  for (int i = 0, slot = 1; i < nn; ++i) {
    if (i != depot_id - 1) order[slot++] = i;
  }

  inst.n = nn - 1;
  inst.demands.resize(nn);
  for (int i = 0; i < nn; ++i) inst.demands[i] = demands[order[i]];
  if (inst.demands[0] != 0) {
    fail(ErrorCode::kMalformedFile, "depot demand must be 0");
  }

  if (!coords.empty()) {
    std::vector<std::array<double, 2>> remapped(nn);
    for (int i = 0; i < nn; ++i) remapped[i] = coords[order[i]];
    inst.coords = std::move(remapped);
  }

  inst.cost_matrix.assign(nn, std::vector<double>(nn, 0.0));
  if (euclid) {
    const auto& c = *inst.coords;
    for (int i = 0; i < nn; ++i) {
      for (int j = i + 1; j < nn; ++j) {
        const double dx = c[i][0] - c[j][0];
        const double dy = c[i][1] - c[j][1];
        const double w = nint(std::sqrt(dx * dx + dy * dy));
        inst.cost_matrix[i][j] = inst.cost_matrix[j][i] = w;
      }
    }
  } else {
    std::vector<std::vector<double>> full(nn, std::vector<double>(nn, 0.0));
    std::size_t pos = 0;
    if (weight_format == "FULL_MATRIX") {
      for (int i = 0; i < nn; ++i)
        for (int j = 0; j < nn; ++j) full[i][j] = explicit_weights[pos++];
    } else if (weight_format == "UPPER_ROW") {
      for (int i = 0; i < nn; ++i)
        for (int j = i + 1; j < nn; ++j)
          full[i][j] = full[j][i] = explicit_weights[pos++];
    } else if (weight_format == "LOWER_ROW") {
      for (int i = 1; i < nn; ++i)
        for (int j = 0; j < i; ++j)
          full[i][j] = full[j][i] = explicit_weights[pos++];
    } else if (weight_format == "UPPER_DIAG_ROW") {
      for (int i = 0; i < nn; ++i)
        for (int j = i; j < nn; ++j)
          full[i][j] = full[j][i] = explicit_weights[pos++];
    } else {  // LOWER_DIAG_ROW
      for (int i = 0; i < nn; ++i)
        for (int j = 0; j <= i; ++j)
          full[i][j] = full[j][i] = explicit_weights[pos++];
    }
    for (int i = 0; i < nn; ++i) {
      for (int j = 0; j < nn; ++j) {
        inst.cost_matrix[i][j] = full[order[i]][order[j]];
      }
    }
    for (int i = 0; i < nn; ++i) inst.cost_matrix[i][i] = 0.0;
  }

  if (!inst.bks) inst.bks = value_after(comment, "OPTIMAL VALUE");
  const long long min_fleet =
      (inst.total_demand() + inst.capacity - 1) / inst.capacity;
  if (auto k = fleet_from_name(inst.name)) {
    inst.fleet = *k;
  } else if (auto k = value_after(comment, "NO OF TRUCKS")) {
    inst.fleet = static_cast<int>(*k);
  } else {
    inst.fleet = static_cast<int>(min_fleet);
  }
  inst.fleet = std::max<int>(inst.fleet, static_cast<int>(min_fleet));

  inst.validate();
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(ErrorCode::kMalformedFile, "cannot open instance: " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  Instance inst = parse_instance(buf.str());

  if (!inst.bks) {
    std::string stem = path;
    const std::size_t dot = stem.rfind('.');
    if (dot != std::string::npos) stem = stem.substr(0, dot);
    std::ifstream side(stem + ".bks");
    if (side) {
      std::stringstream sbuf;
      sbuf << side.rdbuf();
      inst.bks = value_after(sbuf.str(), "BEST_KNOWN");
    }
  }
  return inst;
}

std::string write_instance(const Instance& inst) {
  std::ostringstream out;
  out << "NAME : " << inst.name << "\n";
  out << "COMMENT : (no of trucks: " << inst.fleet;
  if (inst.bks) out << ", Optimal value: " << *inst.bks;
  out << ")\n";
  out << "TYPE : CVRP\n";
  out << "DIMENSION : " << inst.n + 1 << "\n";
  if (inst.coords) {
    out << "EDGE_WEIGHT_TYPE : EUC_2D\n";
  } else {
    out << "EDGE_WEIGHT_TYPE : EXPLICIT\n";
    out << "EDGE_WEIGHT_FORMAT : FULL_MATRIX\n";
  }
  out << "CAPACITY : " << inst.capacity << "\n";
  if (inst.coords) {
    out << "NODE_COORD_SECTION\n";
    const auto& c = *inst.coords;
    for (int i = 0; i <= inst.n; ++i) {
      out << i + 1 << " " << c[i][0] << " " << c[i][1] << "\n";
    }
  } else {
    out << "EDGE_WEIGHT_SECTION\n";
    for (int i = 0; i <= inst.n; ++i) {
      for (int j = 0; j <= inst.n; ++j) {
        out << inst.cost_matrix[i][j] << (j == inst.n ? "\n" : " ");
      }
    }
  }
  out << "DEMAND_SECTION\n";
  for (int i = 0; i <= inst.n; ++i) {
    out << i + 1 << " " << inst.demands[i] << "\n";
  }
  out << "DEPOT_SECTION\n1\n-1\nEOF\n";
  return out.str();
}

Instance generate_instance(const GeneratorConfig& cfg) {
  if (cfg.n_min < 1 || cfg.n_max < cfg.n_min) {
    fail(ErrorCode::kEmptyRange, "invalid customer-count range");
  }
  if (cfg.demand_min < 1 || cfg.demand_max < cfg.demand_min ||
      cfg.demand_max > cfg.capacity) {
    fail(ErrorCode::kEmptyRange, "demand range must lie within [1, capacity]");
  }

  Rng rng(substream(cfg.rng_seed, 0x67656e)); // "gen"
  Instance inst;
  inst.n = cfg.n_min + static_cast<int>(rng.next_below(
                           static_cast<std::uint64_t>(cfg.n_max - cfg.n_min) + 1));
  inst.capacity = cfg.capacity;

  const int nn = inst.n + 1;
  std::vector<std::array<double, 2>> coords(nn);
  for (int i = 0; i < nn; ++i) {
    coords[i] = {static_cast<double>(rng.next_int(0, 100)),
                 static_cast<double>(rng.next_int(0, 100))};
  }
  inst.coords = std::move(coords);

  inst.demands.assign(nn, 0);
  for (int i = 1; i < nn; ++i) {
    inst.demands[i] = rng.next_int(cfg.demand_min, cfg.demand_max);
  }
  inst.fleet = static_cast<int>(
      (inst.total_demand() + inst.capacity - 1) / inst.capacity);

  inst.cost_matrix.assign(nn, std::vector<double>(nn, 0.0));
  const auto& c = *inst.coords;
  for (int i = 0; i < nn; ++i) {
    for (int j = i + 1; j < nn; ++j) {
      const double dx = c[i][0] - c[j][0];
      const double dy = c[i][1] - c[j][1];
      const double w = nint(std::sqrt(dx * dx + dy * dy));
      inst.cost_matrix[i][j] = inst.cost_matrix[j][i] = w;
    }
  }

  inst.name = "gen-n" + std::to_string(inst.n + 1) + "-k" +
              std::to_string(inst.fleet) + "-s" + std::to_string(cfg.rng_seed);
  inst.validate();
  return inst;
}

}  // namespace lrcvrp
