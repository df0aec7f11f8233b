#ifndef P1CERT_FORMAL_TABLES_HPP
#define P1CERT_FORMAL_TABLES_HPP

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "p1cert/formal/series.hpp"

namespace p1cert::formal {

// coeff * |S|^k * sqrt(2)^r * rho^(-e/2)
struct ClosedTerm {
  int e = 0;
  int k = 0;
  int r = 0;
  Rational coeff;
  int line = 0;
};

struct PrintedValue {
  std::string text;     // exactly as printed, e.g. "0.282580"
  bool truncated = true;  // false: rounded to the printed digits
};

// Contents of the shipped appendix data file.
struct AppendixData {
  std::map<std::string, FormalSeries> tables;  // name -> sum_j x^(-j/2) table_j(e^x)
  std::map<std::string, std::vector<ClosedTerm>> closed;
  std::map<std::string, PrintedValue> values;
  std::string source;
  std::string sha256;

  const FormalSeries& table(const std::string& name) const;
  const std::vector<ClosedTerm>& closed_form(const std::string& name) const;
  const PrintedValue& value(const std::string& name) const;
};

AppendixData parse_appendix(const std::string& text, std::string source = "<memory>");
AppendixData load_appendix(const std::filesystem::path& path);
// Loaded once from the data directory.
const AppendixData& default_appendix();

}  // namespace p1cert::formal

#endif
