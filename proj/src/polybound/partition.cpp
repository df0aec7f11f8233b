#include "p1cert/polybound/partition.hpp"

#include <stdexcept>

#include "p1cert/data/data_files.hpp"

namespace p1cert::polybound {

std::string PartitionPlan::str() const {
  std::string s = name + " <";
  for (size_t i = 0; i < points.size(); ++i) s += (i ? ", " : "") + points[i].str();
  return s + ">";
}

PartitionPlan make_plan(std::string name, std::vector<Rational> points) {
  if (points.size() < 2) throw std::invalid_argument("partition " + name + " needs at least two points");
  for (size_t i = 1; i < points.size(); ++i)
    if (!(points[i - 1] < points[i]))
      throw std::invalid_argument("partition " + name + " is not strictly increasing");
  return PartitionPlan{std::move(name), std::move(points)};
}

PartitionPlan refine(const PartitionPlan& plan) {
  std::vector<Rational> pts;
  for (size_t i = 0; i + 1 < plan.points.size(); ++i) {
    pts.push_back(plan.points[i]);
    pts.push_back((plan.points[i] + plan.points[i + 1]) / Rational(2));
  }
  pts.push_back(plan.points.back());
  return PartitionPlan{plan.name, std::move(pts)};
}

const PartitionPlan& PartitionSet::at(const std::string& name) const {
  auto it = plans.find(name);
  if (it == plans.end()) throw std::out_of_range("no partition named '" + name + "' in " + source);
  return it->second;
}

PartitionSet parse_partitions(const std::string& text, std::string source) {
  PartitionSet set;
  set.source = std::move(source);
  set.sha256 = data::sha256_hex(text);
  for (const auto& line : data::tokenize(text)) {
    const auto& f = line.fields;
    auto where = set.source + ":" + std::to_string(line.number);
    if (f[0] != "partition" || f.size() < 4) throw std::invalid_argument(where + ": expected 'partition <name> <points...>'");
    std::vector<Rational> pts;
    for (size_t i = 2; i < f.size(); ++i) pts.push_back(Rational::parse(f[i]));
    try {
      auto plan = make_plan(f[1], std::move(pts));
      if (!set.plans.emplace(f[1], std::move(plan)).second)
        throw std::invalid_argument("duplicate partition " + f[1]);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(where + ": " + e.what());
    }
  }
  return set;
}

PartitionSet load_partitions(const std::filesystem::path& path) {
  return parse_partitions(data::read_file(path), path.string());
}

}  // namespace p1cert::polybound
