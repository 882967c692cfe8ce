#ifndef PWT_TTP_HPP
#define PWT_TTP_HPP

#include <istream>
#include <string>
#include <vector>

#include "pwt/model.hpp"

namespace pwt {

struct TtpNode {
  int index = 0;
  double x = 0.0;
  double y = 0.0;
};

struct TtpItem {
  int index = 0;
  double profit = 0.0;
  double weight = 0.0;
  int node = 0;  // in [2, dimension]; node 1 is free of items
};

/// Raw contents of a TTP benchmark file, before a tour turns it into an
/// Instance.
struct TtpData {
  std::string name;
  int dimension = 0;
  int num_items = 0;
  double capacity = 0.0;
  double min_speed = 0.0;
  double max_speed = 0.0;
  double renting_ratio = 0.0;
  std::string edge_weight_type;  // usually CEIL_2D
  std::vector<TtpNode> nodes;
  std::vector<TtpItem> items;
};

enum class DistanceMetric { Ceil2D, Euclid };

TtpData parse_ttp(std::istream& in);
TtpData parse_ttp_file(const std::string& path);

/// Tour file: a permutation of 1..dimension, whitespace separated, with
/// optional TSPLIB framing (TOUR_SECTION, -1 terminator, EOF).
std::vector<int> parse_tour(std::istream& in, int dimension);
std::vector<int> parse_tour_file(const std::string& path, int dimension);

std::vector<int> identity_tour(int dimension);

/// Build the route from a tour pi: cities pi_2..pi_D in order, pi_1 as the
/// destination. The destination node must be item-free.
Instance apply_tour(const TtpData& raw, const std::vector<int>& tour,
                    DistanceMetric metric = DistanceMetric::Ceil2D);

}  // namespace pwt

#endif
