#ifndef P1CERT_FORMAL_VERIFY_HPP
#define P1CERT_FORMAL_VERIFY_HPP

#include <string>
#include <vector>

#include "p1cert/formal/tables.hpp"

namespace p1cert::formal {

struct CheckItem {
  std::string desc;
  bool pass = false;
  std::string detail;  // offending terms on failure
};

struct TableCheckReport {
  std::string name;
  std::vector<CheckItem> items;

  bool pass() const;
  std::vector<const CheckItem*> failures() const;
};

// Exact coefficient comparison of computed against shipped tables. S is
// never substituted.
TableCheckReport verify_r_table(const AppendixData& data = default_appendix());
TableCheckReport verify_q_table(const AppendixData& data = default_appendix());
TableCheckReport verify_E_table(const AppendixData& data = default_appendix());
TableCheckReport verify_G04_tables(const AppendixData& data = default_appendix());
TableCheckReport verify_auxiliary_identities();

std::vector<TableCheckReport> verify_all_tables(const AppendixData& data = default_appendix());

// Term-wise inverse of the e^(-m x) part of d/dx: S^k x^(-j/2) e^(-m x) ->
// -(1/m) S^k x^(-j/2) e^(-m x). Requires m != 0 everywhere.
FormalSeries exp_antiderivative(const FormalSeries& f);

// Sum_{j=0..k} (j+1)(k-j+1) == (k+1)(k+2)(k+3)/6, exactly.
bool majorant_identity_holds(int k);

}  // namespace p1cert::formal

#endif
