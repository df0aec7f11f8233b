// One line per acceptance criterion; exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "p1cert/certificates/inner_interval.hpp"
#include "p1cert/certificates/suite.hpp"
#include "p1cert/data/data_files.hpp"
#include "p1cert/evaluator/poles.hpp"
#include "p1cert/evaluator/taylor.hpp"
#include "p1cert/formal/verify.hpp"
#include "p1cert/functionals/catalog.hpp"
#include "suites.hpp"

using namespace p1cert;
namespace ev = p1cert::evaluator;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail.str("");
      detail << (pass ? "" : "; ") << what;
      pass = false;
    }
  }
};

int failures = 0;

void criterion(int n, const char* title, double limit_seconds, const std::function<void(Verdict&)>& body) {
  Verdict v;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.require(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_seconds > 0)
    v.require(secs < limit_seconds, "runtime " + std::to_string(secs) + " s over " + std::to_string(limit_seconds));
  if (!v.pass) ++failures;
  std::printf("criterion %d: %s  %s (%.1f s) %s\n", n, v.pass ? "PASS" : "FAIL", title, secs, v.detail.str().c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  ev::set_working_precision(ev::kMinPrecisionBits);

  criterion(1, "appendix constants at rho=3 contained, width < 1e-4", 10, [](Verdict& v) {
    const auto& data = formal::default_appendix();
    int n = 0;
    for (const auto& name : functionals::reference_names()) {
      Interval x = functionals::derive(name, Rational(3), data).value;
      v.require(functionals::matches_printed(x, data.value(name)), name + " not contained");
      v.require(x.width() < Rational::pow10(-4), name + " too wide");
      ++n;
    }
    v.require(n == 18, "expected 18 reference values");
    if (v.pass) v.detail << "[" << n << " values]";
  });

  criterion(2, "symbolic table suites, exact equality", 30, [](Verdict& v) {
    const auto& data = formal::default_appendix();
    for (const auto& r : {formal::verify_r_table(data), formal::verify_q_table(data), formal::verify_E_table(data),
                          formal::verify_G04_tables(data), formal::verify_auxiliary_identities()}) {
      for (const auto* f : r.failures()) v.require(false, r.name + ": " + f->desc);
      v.require(!r.items.empty(), r.name + " is empty");
    }
  });

  criterion(3, "certificate suite", 120, [](Verdict& v) {
    certificates::SuiteResult res = certificates::run_all();
    for (const auto& r : res.reports) {
      if (r.precondition_violation) v.require(false, r.name + ": " + *r.precondition_violation);
      for (const auto* f : r.failures()) v.require(false, r.name + ": " + f->desc);
    }
    for (const char* name : {"omega_I_rho1", "omega_I_x0", "z0_bounds", "omega_12", "omega_4", "inner_interval",
                             "taylor_radius"}) {
      bool found = false;
      for (const auto& r : res.reports) found = found || r.name == name;
      v.require(found, std::string(name) + " missing");
    }
    v.require(res.verdict, "suite verdict false");
    v.require(res.region == certificates::kRegionStatement, "region not emitted");
    if (v.pass) v.detail << "[" << res.reports.size() << " reports]";
  });

  criterion(4, "ODE from t0 lands in the g(0), g'(0) enclosures; round-trip defect < 1e-20 at 100 bits", 0,
            [](Verdict& v) {
              ev::Real tol = boost::multiprecision::pow(ev::Real(2), -100);
              ev::OriginData o = ev::origin_data(tol);
              auto inside = [](const ev::Real& x, const Rational& c, const Rational& r) {
                return ev::Real((c - r).to_double()) < x && x < ev::Real((c + r).to_double());
              };
              v.require(inside(o.g.re, certificates::kG0Center, certificates::kG0Radius), "g(0) outside");
              v.require(inside(o.gp.re, certificates::kG0pCenter, certificates::kG0pRadius), "g'(0) outside");
              ev::RoundTrip rt =
                  ev::forward_backward(ev::ic_t0(), ev::ic_g(), ev::ic_gp(), ev::ComplexValue(ev::Real(0)), tol);
              v.require(rt.defect < ev::Real(1e-20), "defect " + ev::to_string(rt.defect, 3));
              v.detail << "[g(0) = " << ev::to_string(o.g.re, 8) << ", g'(0) = " << ev::to_string(o.gp.re, 8)
                       << ", defect " << ev::to_string(rt.defect, 3) << "]";
            });

  criterion(5, "minimum pole distance 2.38 within 5%", 0, [](Verdict& v) {
    ev::PoleScan s = ev::min_pole_distance(41, boost::multiprecision::pow(ev::Real(2), -88));
    v.require(s.nearest.has_value(), "no pole found");
    if (!s.nearest) return;
    ev::Real d = s.nearest->distance;
    v.require(boost::multiprecision::abs(d - ev::Real(2.38)) <= ev::Real(0.05 * 2.38), "distance off");
    v.detail << "[|t_p| = " << ev::to_string(d, 6) << "]";
  });

  criterion(6, "property suites", 0, [](Verdict& v) {
    for (auto [name, o] : {std::pair{"interval containment", testing::interval_containment(10000)},
                           std::pair{"sup_bound grids", testing::sup_bound_grid(10000)},
                           std::pair{"Leibniz", testing::leibniz(10000)},
                           std::pair{"F homogeneity", testing::f_homogeneity(10000)},
                           std::pair{"frame round trips", testing::frame_roundtrips(1000, 1e-25)}}) {
      v.require(o.pass, std::string(name) + ": " + o.detail);
    }
  });

  criterion(7, "fault injection: perturbed coefficients and alpha1 = 1/50 fail by name", 0, [](Verdict& v) {
    std::string text = data::read_file(data::default_tables_path());
    auto results = testing::perturb_all(text);
    int caught = 0;
    for (const auto& r : results) {
      v.require(r.detected && r.named, "line " + std::to_string(r.line.index) + " (" + r.line.name + ") " +
                                           (r.detected ? "not named" : "silent"));
      caught += r.detected && r.named;
    }
    testing::Outcome a = testing::alpha1_fault();
    v.require(a.pass, a.detail);
    testing::Outcome p = testing::tampered_partition_fault();
    v.require(p.pass, p.detail);
    if (v.pass) v.detail << "[" << caught << "/" << results.size() << " perturbations caught]";
  });

  return failures == 0 ? 0 : 1;
}
