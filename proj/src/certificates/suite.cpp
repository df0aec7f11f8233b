#include "p1cert/certificates/suite.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <stdexcept>

#include "p1cert/certificates/omega4.hpp"
#include "p1cert/certificates/outer.hpp"
#include "p1cert/certificates/taylor_radius.hpp"
#include "p1cert/formal/verify.hpp"
#include "p1cert/numerics/constants.hpp"

namespace p1cert::certificates {

Scope parse_scope(const std::string& s) {
  if (s == "all") return Scope::all;
  if (s == "tables") return Scope::tables;
  if (s == "omegaI") return Scope::omegaI;
  if (s == "omega12") return Scope::omega12;
  if (s == "omega4") return Scope::omega4;
  if (s == "inner") return Scope::inner;
  if (s == "radius") return Scope::radius;
  throw std::invalid_argument("unknown scope '" + s + "'");
}

std::string to_string(Scope s) {
  switch (s) {
    case Scope::all: return "all";
    case Scope::tables: return "tables";
    case Scope::omegaI: return "omegaI";
    case Scope::omega12: return "omega12";
    case Scope::omega4: return "omega4";
    case Scope::inner: return "inner";
    case Scope::radius: return "radius";
  }
  return "?";
}

CertificateReport check_tables(const formal::AppendixData& data) {
  CertificateReport r;
  r.name = "tables";
  r.input("tables", data.source);
  r.input("tables_sha256", data.sha256);
  for (const auto& suite : formal::verify_all_tables(data))
    for (const auto& item : suite.items)
      r.check_flag(suite.name + ": " + item.desc + (item.detail.empty() ? "" : " (" + item.detail + ")"), item.pass);
  return r;
}

std::string region_narrative() {
  return "outer sector |z| >= 1.7: Omega_I (anti-Stokes line), Omega_1 ∪ Omega_2 and Omega_4 contractions; "
         "matching at z_0 = 1.7 e^{i pi/5} (t_0 = -1.7) gives the inner initial data; the inner interval "
         "[t_0, 0] contraction encloses g(0), g'(0); the Maclaurin majorant gives radius >= 37/20. "
         "The sector arg z in [pi/5, pi] follows by reflection symmetry (prose step, not machine-checked).";
}

SuiteResult run_all(const SuiteConfig& cfg) {
  const formal::AppendixData& data = cfg.tables ? *cfg.tables : formal::default_appendix();
  auto want = [&](Scope s) { return cfg.scope == Scope::all || cfg.scope == s; };
  // Static data is initialized before the threads start.
  (void)constants();

  std::vector<std::function<CertificateReport()>> jobs;
  if (want(Scope::tables)) jobs.emplace_back([&] { return check_tables(data); });
  if (want(Scope::omegaI)) {
    jobs.emplace_back([] {
      auto r = check_omega_I(Interval(1), Rational(3, 20));
      r.name = "omega_I_rho1";
      return r;
    });
    jobs.emplace_back([] {
      auto r = check_omega_I(constants().abs_x0, Rational(1, 40));
      r.name = "omega_I_x0";
      return r;
    });
    jobs.emplace_back([&] { return check_z0_bounds(data); });
  }
  if (want(Scope::omega12))
    jobs.emplace_back([&] { return check_omega_12(Rational(3, 2), cfg.panels > 0 ? cfg.panels : kOmega12Panels); });
  if (want(Scope::omega4)) jobs.emplace_back([&] { return check_omega_4(cfg.rho4, data); });
  if (want(Scope::inner)) jobs.emplace_back([&] { return check_inner_interval(cfg.inner); });
  if (want(Scope::radius)) jobs.emplace_back([] { return check_taylor_radius(); });

  std::vector<std::future<CertificateReport>> futs;
  for (auto& j : jobs) futs.push_back(std::async(std::launch::async, j));
  SuiteResult res;
  for (auto& f : futs) {
    try {
      res.reports.push_back(f.get());
    } catch (const std::exception& e) {
      CertificateReport r;
      r.name = "error";
      r.precondition_violation = e.what();
      res.reports.push_back(r);
    }
  }
  std::sort(res.reports.begin(), res.reports.end(),
            [](const CertificateReport& a, const CertificateReport& b) { return a.name < b.name; });
  res.verdict = !res.reports.empty();
  for (const auto& r : res.reports) {
    res.verdict = res.verdict && r.verdict();
    res.precondition_violated = res.precondition_violated || r.precondition_violation.has_value();
  }
  if (res.verdict && cfg.scope == Scope::all) res.region = kRegionStatement;
  return res;
}

}  // namespace p1cert::certificates
