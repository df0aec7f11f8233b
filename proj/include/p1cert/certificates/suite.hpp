#ifndef P1CERT_CERTIFICATES_SUITE_HPP
#define P1CERT_CERTIFICATES_SUITE_HPP

#include <string>
#include <vector>

#include "p1cert/certificates/inner_interval.hpp"
#include "p1cert/certificates/report.hpp"
#include "p1cert/formal/tables.hpp"

namespace p1cert::certificates {

enum class Scope { all, tables, omegaI, omega12, omega4, inner, radius };
Scope parse_scope(const std::string& s);  // throws std::invalid_argument
std::string to_string(Scope s);

struct SuiteConfig {
  Scope scope = Scope::all;
  Rational rho4{3};
  int panels = 0;  // 0: the Omega_12 default
  InnerConfig inner;
  const formal::AppendixData* tables = nullptr;  // nullptr: shipped tables
};

struct SuiteResult {
  std::vector<CertificateReport> reports;  // sorted by name
  bool verdict = false;
  bool precondition_violated = false;
  std::string region;  // set only when every certificate of a full run passes
};

// Formal table suites and the functional crosscheck as one report.
CertificateReport check_tables(const formal::AppendixData& data);

inline const char* kRegionStatement =
    "y_t is analytic in {z != 0 : arg z in [-3pi/5, pi]} ∪ {|z| < 37/20}";

// Runs the selected certificates concurrently and merges by name.
SuiteResult run_all(const SuiteConfig& cfg = {});

std::string region_narrative();

}  // namespace p1cert::certificates

#endif
