#include "p1cert/formal/tables.hpp"

#include <stdexcept>

#include "p1cert/data/data_files.hpp"

namespace p1cert::formal {

const FormalSeries& AppendixData::table(const std::string& name) const {
  auto it = tables.find(name);
  if (it == tables.end()) throw std::out_of_range("no table '" + name + "' in " + source);
  return it->second;
}

const std::vector<ClosedTerm>& AppendixData::closed_form(const std::string& name) const {
  auto it = closed.find(name);
  if (it == closed.end()) throw std::out_of_range("no closed form '" + name + "' in " + source);
  return it->second;
}

const PrintedValue& AppendixData::value(const std::string& name) const {
  auto it = values.find(name);
  if (it == values.end()) throw std::out_of_range("no printed value '" + name + "' in " + source);
  return it->second;
}

AppendixData parse_appendix(const std::string& text, std::string source) {
  AppendixData d;
  d.source = std::move(source);
  d.sha256 = data::sha256_hex(text);
  for (const auto& line : data::tokenize(text)) {
    const auto& f = line.fields;
    auto where = d.source + ":" + std::to_string(line.number);
    try {
      if (f[0] == "table" && f.size() == 6) {
        TermKey key{std::stoi(f[3]), std::stoi(f[2]), std::stoi(f[4])};
        auto& t = d.tables[f[1]];
        if (!t.coeff(key).is_zero()) throw std::invalid_argument("duplicate table entry");
        t.add_term(key, Rational::parse(f[5]));
      } else if (f[0] == "closed" && f.size() == 6) {
        d.closed[f[1]].push_back(
            ClosedTerm{std::stoi(f[2]), std::stoi(f[3]), std::stoi(f[4]), Rational::parse(f[5]), line.number});
      } else if (f[0] == "value" && f.size() == 4) {
        if (f[3] != "truncated" && f[3] != "rounded") throw std::invalid_argument("unknown rounding '" + f[3] + "'");
        d.values[f[1]] = PrintedValue{f[2], f[3] == "truncated"};
      } else {
        throw std::invalid_argument("unrecognised line");
      }
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(where + ": " + e.what());
    }
  }
  return d;
}

AppendixData load_appendix(const std::filesystem::path& path) {
  return parse_appendix(data::read_file(path), path.string());
}

const AppendixData& default_appendix() {
  static const AppendixData d = load_appendix(data::default_tables_path());
  return d;
}

}  // namespace p1cert::formal
