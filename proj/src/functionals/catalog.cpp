#include "p1cert/functionals/catalog.hpp"

#include <map>
#include <stdexcept>

#include "p1cert/formal/quasi_solutions.hpp"

namespace p1cert::functionals {

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{
      "j_m",  "J_M",  "Y1M",  "Y1RM",  "E_M",   "z2RM",  "z2M",  "M_q",  "M_Lq", "V_M", "T_M",
      "M_G1", "M_G2", "M_G3", "M_G40", "M_G41", "M_G4",  "M_G5", "M_G6", "M_G7", "M1",  "M2",
      "M3",   "M4",   "M5",   "M6",    "M7",    "sum_M"};
  return names;
}

const std::vector<std::string>& reference_names() {
  static const std::vector<std::string> names{"J_M", "j_m", "Y1M", "Y1RM", "E_M", "z2RM", "z2M", "M_q", "M_Lq",
                                              "V_M", "T_M", "M1",  "M2",   "M3",  "M4",   "M5",  "M6",  "M7"};
  return names;
}

PowerSum closed_form(const std::string& name, const formal::AppendixData& data) {
  PowerSum ps;
  for (const auto& t : data.closed_form(name)) ps.add(PowerSum::Key{t.e, t.k, t.r}, t.coeff);
  return ps;
}

PowerSum abs_majorant(const formal::FormalSeries& f) {
  PowerSum ps;
  for (const auto& [key, c] : f.terms()) {
    if (key.j < 0 || key.m < 0) throw DomainError("abs_majorant: growing term " + formal::describe(key));
    ps.add(PowerSum::Key{key.j, key.k, 0}, c.abs());
  }
  return ps;
}

namespace {

using CE = ConstantExpr;

PowerSum S(int k, const Rational& c = Rational(1)) { return PowerSum::term(c, 0, k); }
PowerSum rho_half(int e, const Rational& c = Rational(1)) { return PowerSum::term(c, e, 0); }

CE pow(const CE& x, int n) {
  CE r(Rational(1));
  for (int i = 0; i < n; ++i) r = r * x;
  return r;
}

class Builder {
 public:
  explicit Builder(const formal::AppendixData& d) : d_(d) {}

  CE get(const std::string& n) {
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    CE v = make(n);
    memo_.emplace(n, v);
    return v;
  }

 private:
  CE make(const std::string& n) {
    if (n == "j_m") return abs_majorant(formal::j_aux());
    if (n == "J_M") return CE(S(1, Rational(1, 3))) * (CE(Rational(1)) + get("j_m") * CE(rho_half(1)));
    if (n == "Y1M") return CE(Rational(1)) + get("J_M") * CE(rho_half(1));
    if (n == "Y1RM") return CE(S(1, Rational(1, 3))) * get("j_m");
    if (n == "E_M" || n == "M_q" || n == "M_Lq" || n == "M_G1" || n == "M_G2" || n == "M_G3" || n == "M_G40" ||
        n == "M_G41" || n == "M_G5" || n == "M_G6" || n == "M_G7")
      return closed_form(n, d_);
    if (n == "M_G4") return get("M_G40") + get("M_G41");
    if (n == "z2RM") return z2RM();
    if (n == "z2M")
      return CE(Rational(1, 2)) + CE(PowerSum::term(Rational(2, 3), 1, 1)) + get("z2RM") * CE(rho_half(2));
    const CE five_s2_24(S(2, Rational(5, 24)));
    if (n == "V_M") {
      CE y = get("Y1M"), z = get("z2M");
      CE first = CE(Rational(2)) * z * get("M_q") + five_s2_24 * get("M_Lq");
      CE lin = CE(PowerSum::term(Rational(1, 14), 2, 0, 1) + PowerSum::term(Rational(1, 14), 2, 0, 0)) * z +
               CE(PowerSum::term(Rational(5, 288), 2, 2));
      return y * (first + y * lin);
    }
    if (n == "T_M") {
      CE y = get("Y1M");
      CE inner = CE(PowerSum::term(Rational(1, 9), 0, 0, 0) + PowerSum::term(Rational(1, 9), 0, 0, 1)) * get("z2M") +
                 CE(S(2, Rational(5, 192)));
      return y * y * CE(rho_half(4)) * inner;
    }
    if (n == "M1") return get("Y1M") * get("Y1M") * get("z2M") * get("M_G1");
    if (n == "M2") return CE(Rational(2)) * get("Y1M") * get("z2M") * get("Y1RM") * get("M_G2");
    if (n == "M3")
      return get("Y1M") * get("z2RM") * CE(PowerSum(Rational(1)) + PowerSum::term(Rational(1, 3), 1, 1)) * get("M_G3");
    if (n == "M4") return get("Y1M") * get("M_G4");
    if (n == "M5") return five_s2_24 * get("Y1M") * get("Y1M") * get("M_G5");
    if (n == "M6") return five_s2_24 * get("Y1M") * get("Y1RM") * get("M_G6");
    if (n == "M7") return five_s2_24 * get("Y1M") * get("M_G7");
    if (n == "sum_M") {
      CE s(Rational(0));
      for (int i = 1; i <= 7; ++i) s = s + get("M" + std::to_string(i));
      return s;
    }
    throw std::out_of_range("unknown constant '" + n + "'");
  }

  // Bound on |x z_{2,R}| assembled from its pieces: z_{2,R,0}, the E
  // integral, the 7S/36 term, the J^3 term and the two J^4, J^5 remainders.
  CE z2RM() {
    CE jm = get("j_m"), JM = get("J_M");
    CE z = CE(S(2, Rational(23, 72))) + CE(PowerSum::term(Rational(23, 216), 1, 3)) +
           CE(PowerSum::term(Rational(361, 3456), 2, 2) + PowerSum::term(Rational(577, 41472), 2, 4));
    z = z + get("E_M");
    z = z + CE(PowerSum::term(Rational(7, 36), 1, 1, 1) + PowerSum::term(Rational(7, 36), 1, 1, 0));
    z = z + CE(PowerSum::term(Rational(8, 27), 1, 3));
    CE poly = CE(Rational(1)) + jm * CE(rho_half(1)) + jm * jm * CE(rho_half(2, Rational(1, 3)));
    z = z + CE(S(3, Rational(4, 9))) * jm * poly;
    CE w = JM * CE(rho_half(1));  // J_M / sqrt(rho)
    CE inv = CE::inv_one_minus(w);
    z = z + CE(Rational(5)) * pow(JM, 4) * inv;
    z = z + CE(rho_half(1, Rational(2, 3))) * pow(JM, 5) * inv * inv;
    return z;
  }

  const formal::AppendixData& d_;
  std::map<std::string, CE> memo_;
};

}  // namespace

ConstantExpr build_constant(const std::string& name, const formal::AppendixData& data) {
  Builder b(data);
  return b.get(name);
}

Interval eval_constant(const ConstantExpr& c, const Rational& rho) { return c.eval(make_context(Interval(rho))); }

DerivedConstant derive(const std::string& name, const Rational& rho, const formal::AppendixData& data) {
  return DerivedConstant{name, eval_constant(build_constant(name, data), rho), rho};
}

Interval printed_range(const formal::PrintedValue& printed) {
  Rational p = Rational::parse(printed.text);
  auto dot = printed.text.find('.');
  int decimals = dot == std::string::npos ? 0 : static_cast<int>(printed.text.size() - dot - 1);
  Rational ulp = Rational::pow10(-decimals);
  if (!printed.truncated) return Interval(p - ulp / Rational(2), p + ulp / Rational(2));
  bool negative = printed.text[0] == '-';
  return negative ? Interval(p - ulp, p) : Interval(p, p + ulp);
}

bool matches_printed(const Interval& enclosure, const formal::PrintedValue& printed) {
  Interval r = printed_range(printed);
  if (!printed.truncated) return r.contains(enclosure);
  bool negative = printed.text[0] == '-';
  // Half-open: the far end (away from zero) is excluded.
  return negative ? (r.lo() < enclosure.lo() && enclosure.hi() <= r.hi())
                  : (r.lo() <= enclosure.lo() && enclosure.hi() < r.hi());
}

}  // namespace p1cert::functionals
