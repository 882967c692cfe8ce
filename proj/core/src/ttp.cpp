#include "pwt/ttp.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace pwt {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

}  // namespace

TtpData parse_ttp(std::istream& in) {
  TtpData data;
  std::string line;
  int line_no = 0;
  enum { Header, Coords, Items } state = Header;
  int coords_seen = 0, items_seen = 0;

  auto value_of = [](const std::string& l) {
    std::size_t colon = l.find(':');
    if (colon == std::string::npos) return std::string();
    return trim(l.substr(colon + 1));
  };

  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty()) continue;

    if (state == Header) {
      if (starts_with(t, "NODE_COORD_SECTION")) {
        state = Coords;
        continue;
      }
      if (starts_with(t, "PROBLEM NAME")) data.name = value_of(t);
      else if (starts_with(t, "DIMENSION")) data.dimension = std::stoi(value_of(t));
      else if (starts_with(t, "NUMBER OF ITEMS")) data.num_items = std::stoi(value_of(t));
      else if (starts_with(t, "CAPACITY OF KNAPSACK")) data.capacity = std::stod(value_of(t));
      else if (starts_with(t, "MIN SPEED")) data.min_speed = std::stod(value_of(t));
      else if (starts_with(t, "MAX SPEED")) data.max_speed = std::stod(value_of(t));
      else if (starts_with(t, "RENTING RATIO")) data.renting_ratio = std::stod(value_of(t));
      else if (starts_with(t, "EDGE_WEIGHT_TYPE")) data.edge_weight_type = value_of(t);
      // other header keys (KNAPSACK DATA TYPE, ...) are ignored
      continue;
    }

    if (state == Coords) {
      if (starts_with(t, "ITEMS SECTION")) {
        state = Items;
        continue;
      }
      TtpNode node;
      std::istringstream ss(t);
      if (!(ss >> node.index >> node.x >> node.y))
        throw ParseError("malformed node coordinate line", line_no);
      data.nodes.push_back(node);
      ++coords_seen;
      continue;
    }

    TtpItem item;
    std::istringstream ss(t);
    if (!(ss >> item.index >> item.profit >> item.weight >> item.node))
      throw ParseError("malformed item line", line_no);
    if (item.node == 1)
      throw ParseError("item assigned to node 1, which is free of items", line_no);
    if (item.node < 2 || item.node > data.dimension)
      throw ParseError("item node out of range", line_no);
    data.items.push_back(item);
    ++items_seen;
  }

  if (data.dimension <= 1) throw ParseError("missing or invalid DIMENSION");
  if (coords_seen != data.dimension)
    throw CountMismatch("node count " + std::to_string(coords_seen) +
                        " does not match DIMENSION " + std::to_string(data.dimension));
  if (items_seen != data.num_items)
    throw CountMismatch("item count " + std::to_string(items_seen) +
                        " does not match NUMBER OF ITEMS " +
                        std::to_string(data.num_items));
  return data;
}

TtpData parse_ttp_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_ttp(in);
}

std::vector<int> parse_tour(std::istream& in, int dimension) {
  std::vector<int> tour;
  std::string tok;
  bool in_section = false;
  while (in >> tok) {
    if (tok == "TOUR_SECTION") {
      in_section = true;
      continue;
    }
    if (tok == "-1" || tok == "EOF") break;
    // Skip TSPLIB header tokens (NAME:, TYPE:, DIMENSION: value, ...).
    if (!in_section) {
      bool numeric = !tok.empty() && std::all_of(tok.begin(), tok.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      });
      if (!numeric) {
        // A "KEY: value" header; if the key expects a value, the value token
        // is numeric and would be misread, so drop the rest of the line.
        if (tok.back() == ':') {
          std::string rest;
          std::getline(in, rest);
        }
        continue;
      }
    }
    try {
      tour.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw ParseError("invalid tour token: " + tok);
    }
  }

  if (static_cast<int>(tour.size()) != dimension)
    throw InvalidPermutation("tour has " + std::to_string(tour.size()) +
                             " entries, expected " + std::to_string(dimension));
  std::vector<char> seen(static_cast<std::size_t>(dimension) + 1, 0);
  for (int v : tour) {
    if (v < 1 || v > dimension || seen[static_cast<std::size_t>(v)])
      throw InvalidPermutation("tour is not a permutation of 1.." +
                               std::to_string(dimension));
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return tour;
}

std::vector<int> parse_tour_file(const std::string& path, int dimension) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_tour(in, dimension);
}

std::vector<int> identity_tour(int dimension) {
  std::vector<int> tour(static_cast<std::size_t>(dimension));
  for (int i = 0; i < dimension; ++i) tour[static_cast<std::size_t>(i)] = i + 1;
  return tour;
}

Instance apply_tour(const TtpData& raw, const std::vector<int>& tour,
                    DistanceMetric metric) {
  const int dim = raw.dimension;
  if (static_cast<int>(tour.size()) != dim)
    throw InvalidPermutation("tour length does not match DIMENSION");
  std::vector<char> seen(static_cast<std::size_t>(dim) + 1, 0);
  for (int v : tour) {
    if (v < 1 || v > dim || seen[static_cast<std::size_t>(v)])
      throw InvalidPermutation("tour is not a permutation");
    seen[static_cast<std::size_t>(v)] = 1;
  }

  std::vector<const TtpNode*> by_index(static_cast<std::size_t>(dim) + 1, nullptr);
  for (const TtpNode& node : raw.nodes) {
    if (node.index < 1 || node.index > dim)
      throw ParseError("node index out of range");
    by_index[static_cast<std::size_t>(node.index)] = &node;
  }
  for (int i = 1; i <= dim; ++i)
    if (!by_index[static_cast<std::size_t>(i)])
      throw ParseError("missing coordinates for node " + std::to_string(i));

  // Route: tour[1], ..., tour[dim-1], then tour[0] as destination.
  std::vector<int> route;
  route.reserve(static_cast<std::size_t>(dim));
  for (int i = 1; i < dim; ++i) route.push_back(tour[static_cast<std::size_t>(i)]);
  route.push_back(tour[0]);

  for (const TtpItem& item : raw.items)
    if (item.node == tour[0])
      throw InvalidPermutation("destination node " + std::to_string(tour[0]) +
                               " carries items");

  auto dist = [&](int a, int b) {
    const TtpNode& na = *by_index[static_cast<std::size_t>(a)];
    const TtpNode& nb = *by_index[static_cast<std::size_t>(b)];
    const double d = std::hypot(na.x - nb.x, na.y - nb.y);
    return metric == DistanceMetric::Ceil2D ? std::ceil(d) : d;
  };

  const int n = dim - 1;  // legs
  std::vector<double> distances(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    distances[static_cast<std::size_t>(i)] =
        dist(route[static_cast<std::size_t>(i)], route[static_cast<std::size_t>(i) + 1]);

  // Re-bucket items by route position; file order fixes the slot order.
  std::vector<int> city_of_node(static_cast<std::size_t>(dim) + 1, 0);
  for (int i = 0; i < n; ++i)
    city_of_node[static_cast<std::size_t>(route[static_cast<std::size_t>(i)])] = i + 1;
  std::vector<std::vector<Item>> items_per_city(static_cast<std::size_t>(n));
  for (const TtpItem& item : raw.items) {
    const int city = city_of_node[static_cast<std::size_t>(item.node)];
    items_per_city[static_cast<std::size_t>(city - 1)].push_back(
        {item.profit, item.weight, 0, 0});
  }

  return Instance(std::move(distances), std::move(items_per_city), raw.capacity,
                  raw.min_speed, raw.max_speed, raw.renting_ratio);
}

}  // namespace pwt
