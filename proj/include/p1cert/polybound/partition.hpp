#ifndef P1CERT_POLYBOUND_PARTITION_HPP
#define P1CERT_POLYBOUND_PARTITION_HPP

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "p1cert/numerics/rational.hpp"

namespace p1cert::polybound {

// Strictly increasing points x_0 < ... < x_n in the absolute variable t.
struct PartitionPlan {
  std::string name;
  std::vector<Rational> points;

  const Rational& front() const { return points.front(); }
  const Rational& back() const { return points.back(); }
  size_t pieces() const { return points.size() - 1; }
  std::string str() const;
};

// Throws std::invalid_argument unless there are >= 2 strictly increasing points.
PartitionPlan make_plan(std::string name, std::vector<Rational> points);
// Bisects every subinterval once.
PartitionPlan refine(const PartitionPlan& plan);

// Named plans from a versioned data file. Line format:
//   partition <name> <x0> <x1> ... <xn>
struct PartitionSet {
  std::map<std::string, PartitionPlan> plans;
  std::string source;
  std::string sha256;

  const PartitionPlan& at(const std::string& name) const;
};

PartitionSet parse_partitions(const std::string& text, std::string source = "<memory>");
PartitionSet load_partitions(const std::filesystem::path& path);

}  // namespace p1cert::polybound

#endif
