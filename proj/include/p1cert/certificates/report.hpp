#ifndef P1CERT_CERTIFICATES_REPORT_HPP
#define P1CERT_CERTIFICATES_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "p1cert/numerics/interval.hpp"

namespace p1cert::certificates {

// holds: a boolean fact (exact identity, table suite item) encoded as lhs = 1.
enum class Relation { lt, le, gt, ge, within, holds };

std::string to_string(Relation r);

// One checked inequality. Pass is decided on endpoints in the direction that
// makes a pass a proof: lhs < rhs needs lhs.hi < rhs.lo, "within" needs
// lhs ⊆ rhs.
struct Inequality {
  std::string desc;
  Interval lhs;
  Relation rel = Relation::le;
  Interval rhs;
  bool pass = false;
};

Inequality make_inequality(std::string desc, const Interval& lhs, Relation rel, const Interval& rhs);

struct CertificateReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<Inequality> inequalities;
  std::vector<std::string> notes;
  // Set when the certificate refused to run, e.g. rho < 3 for Omega_4.
  std::optional<std::string> precondition_violation;

  void check(std::string desc, const Interval& lhs, Relation rel, const Interval& rhs) {
    inequalities.push_back(make_inequality(std::move(desc), lhs, rel, rhs));
  }
  void input(std::string key, std::string value) { inputs.emplace_back(std::move(key), std::move(value)); }
  // Result of a boolean check with no natural interval form (exact identities, table suites).
  void check_flag(std::string desc, bool pass);

  bool verdict() const;
  std::vector<const Inequality*> failures() const;
};

std::string to_json(const CertificateReport& r, int indent = 2);
std::string to_json(const std::vector<CertificateReport>& rs, const std::string& region, bool verdict, int indent = 2);
std::string to_text(const CertificateReport& r);

// Decimal rendering of an interval, e.g. "[0.2239831818, 0.2239831819]".
std::string decimal(const Interval& x, int digits = 12);

}  // namespace p1cert::certificates

#endif
