#include "p1cert/certificates/report.hpp"

#include <sstream>

#include "json.hpp"

namespace p1cert::certificates {

std::string to_string(Relation r) {
  switch (r) {
    case Relation::lt: return "<";
    case Relation::le: return "<=";
    case Relation::gt: return ">";
    case Relation::ge: return ">=";
    case Relation::within: return "within";
    case Relation::holds: return "holds";
  }
  return "?";
}

namespace {

// Sums of many panel or piece bounds can carry thousand-digit denominators.
// Those are rounded outward to a 2^-96 grid before comparison, so what the
// report prints is exactly what was compared.
constexpr std::size_t kMaxBits = 128;
constexpr int kGridBits = 96;

bool oversized(const Rational& x) {
  return mpz_sizeinbase(x.raw().get_num_mpz_t(), 2) > kMaxBits ||
         mpz_sizeinbase(x.raw().get_den_mpz_t(), 2) > kMaxBits;
}

Interval tame(const Interval& x) {
  if (!oversized(x.lo()) && !oversized(x.hi())) return x;
  return x.outward(kGridBits);
}

}  // namespace

Inequality make_inequality(std::string desc, const Interval& lhs0, Relation rel, const Interval& rhs0) {
  Interval lhs = tame(lhs0), rhs = tame(rhs0);
  bool pass = false;
  switch (rel) {
    case Relation::lt: pass = lhs.hi() < rhs.lo(); break;
    case Relation::le: pass = lhs.hi() <= rhs.lo(); break;
    case Relation::gt: pass = lhs.lo() > rhs.hi(); break;
    case Relation::ge: pass = lhs.lo() >= rhs.hi(); break;
    case Relation::within: pass = rhs.contains(lhs); break;
    case Relation::holds: pass = lhs == rhs; break;
  }
  return Inequality{std::move(desc), lhs, rel, rhs, pass};
}

void CertificateReport::check_flag(std::string desc, bool pass) {
  inequalities.push_back(make_inequality(std::move(desc), Interval(pass ? 1 : 0), Relation::holds, Interval(1)));
}

bool CertificateReport::verdict() const {
  if (precondition_violation || inequalities.empty()) return false;
  for (const auto& q : inequalities)
    if (!q.pass) return false;
  return true;
}

std::vector<const Inequality*> CertificateReport::failures() const {
  std::vector<const Inequality*> out;
  for (const auto& q : inequalities)
    if (!q.pass) out.push_back(&q);
  return out;
}

std::string decimal(const Interval& x, int digits) {
  if (x.is_point()) return x.lo().sci(digits, Round::nearest);
  return "[" + x.lo().sci(digits, Round::down) + ", " + x.hi().sci(digits, Round::up) + "]";
}

namespace {

nlohmann::ordered_json pair_json(const Interval& x) { return {x.lo().str(), x.hi().str()}; }

nlohmann::ordered_json report_json(const CertificateReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  nlohmann::ordered_json in = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.inputs) in[k] = v;
  j["inputs"] = in;
  nlohmann::ordered_json qs = nlohmann::ordered_json::array();
  for (const auto& q : r.inequalities) {
    nlohmann::ordered_json e;
    e["desc"] = q.desc;
    e["lhs"] = pair_json(q.lhs);
    e["rel"] = to_string(q.rel);
    e["rhs"] = pair_json(q.rhs);
    e["lhs_decimal"] = decimal(q.lhs);
    e["pass"] = q.pass;
    qs.push_back(e);
  }
  j["inequalities"] = qs;
  j["notes"] = r.notes;
  if (r.precondition_violation)
    j["precondition_violation"] = *r.precondition_violation;
  else
    j["precondition_violation"] = nullptr;
  j["verdict"] = r.verdict();
  return j;
}

}  // namespace

std::string to_json(const CertificateReport& r, int indent) { return report_json(r).dump(indent); }

std::string to_json(const std::vector<CertificateReport>& rs, const std::string& region, bool verdict, int indent) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rs) arr.push_back(report_json(r));
  j["reports"] = arr;
  j["region"] = region.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(region);
  j["verdict"] = verdict;
  return j.dump(indent);
}

std::string to_text(const CertificateReport& r) {
  std::ostringstream os;
  os << "== " << r.name << ": " << (r.verdict() ? "PASS" : "FAIL") << "\n";
  for (const auto& [k, v] : r.inputs) os << "   " << k << " = " << v << "\n";
  if (r.precondition_violation) os << "   precondition violated: " << *r.precondition_violation << "\n";
  for (const auto& q : r.inequalities) {
    os << "  [" << (q.pass ? "pass" : "FAIL") << "] " << q.desc << "\n";
    if (q.rel == Relation::holds) continue;
    os << "         " << decimal(q.lhs) << " " << to_string(q.rel) << " " << decimal(q.rhs);
    // Exact form of the right side is usually short, like 9/40.
    if (q.rhs.is_point() && q.rhs.lo().str().size() <= 24) os << "  (" << q.rhs.lo().str() << ")";
    os << "\n";
  }
  for (const auto& n : r.notes) os << "   note: " << n << "\n";
  return os.str();
}

}  // namespace p1cert::certificates
