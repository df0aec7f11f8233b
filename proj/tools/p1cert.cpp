// p1cert: run the certificates, print constants, evaluate the tritronquee.
//
// Exit codes: 0 all selected checks pass, 1 some check failed,
// 2 precondition violation or bad input.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "p1cert/certificates/suite.hpp"
#include "p1cert/data/data_files.hpp"
#include "p1cert/evaluator/asymptotics.hpp"
#include "p1cert/evaluator/poles.hpp"
#include "p1cert/formal/verify.hpp"
#include "p1cert/functionals/catalog.hpp"
#include "p1cert/functionals/crosscheck.hpp"

using namespace p1cert;
namespace ev = p1cert::evaluator;
namespace cert = p1cert::certificates;
using json = nlohmann::ordered_json;

namespace {

constexpr int kPass = 0, kFail = 1, kPrecondition = 2;

struct Options {
  std::string scope = "all";
  std::string rho;
  std::string format = "text";
  int order = 20;
  std::string z;
  unsigned precision_bits = ev::kDefaultPrecisionBits;
  std::string tables;
  std::string partitions;
  std::string trajectory;
  int directions = 41;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational parse_rational(const std::string& s, const char* what) {
  try {
    return Rational::parse(s);
  } catch (const std::exception&) {
    throw InputError(std::string("cannot parse ") + what + " '" + s + "'");
  }
}

const formal::AppendixData& tables(const Options& o) {
  static std::optional<formal::AppendixData> loaded;
  if (o.tables.empty()) return formal::default_appendix();
  if (!loaded) loaded = formal::load_appendix(o.tables);
  return *loaded;
}

// "re,im" or "r<theta" with theta in radians, optionally written "0.2pi".
ev::ComplexValue parse_z(const std::string& s) {
  auto real = [&](std::string t) {
    bool times_pi = t.size() > 2 && t.compare(t.size() - 2, 2, "pi") == 0;
    if (times_pi) t.resize(t.size() - 2);
    try {
      size_t used = 0;
      Rational q = Rational::parse(t.empty() ? "1" : t);
      (void)used;
      ev::Real v = ev::Real(q.num().get_str()) / ev::Real(q.den().get_str());
      return times_pi ? v * ev::pi() : v;
    } catch (const std::exception&) {
      throw InputError("cannot parse --z component '" + t + "'");
    }
  };
  if (auto p = s.find('<'); p != std::string::npos)
    return ev::ComplexValue::polar(real(s.substr(0, p)), real(s.substr(p + 1)));
  if (auto p = s.find(','); p != std::string::npos) return {real(s.substr(0, p)), real(s.substr(p + 1))};
  return {real(s), ev::Real(0)};
}

int cmd_verify(const Options& o) {
  cert::SuiteConfig cfg;
  cfg.scope = cert::parse_scope(o.scope);
  if (!o.rho.empty()) cfg.rho4 = parse_rational(o.rho, "--rho");
  cfg.tables = &tables(o);
  std::optional<polybound::PartitionSet> parts;
  if (!o.partitions.empty()) {
    parts = polybound::load_partitions(o.partitions);
    cfg.inner.partitions = &*parts;
  }
  cert::SuiteResult res = cert::run_all(cfg);
  if (o.format == "json") {
    std::cout << cert::to_json(res.reports, res.region, res.verdict) << "\n";
  } else {
    for (const auto& r : res.reports) std::cout << cert::to_text(r) << "\n";
    std::cout << "verdict: " << (res.verdict ? "PASS" : "FAIL") << "\n";
    if (!res.region.empty()) std::cout << "region: " << res.region << "\n" << cert::region_narrative() << "\n";
    for (const auto& r : res.reports)
      for (const auto* f : r.failures()) std::cerr << "failed: " << r.name << ": " << f->desc << "\n";
  }
  if (res.precondition_violated) return kPrecondition;
  return res.verdict ? kPass : kFail;
}

int cmd_constants(const Options& o) {
  Rational rho = o.rho.empty() ? Rational(3) : parse_rational(o.rho, "--rho");
  if (rho < Rational(3)) {
    std::cerr << "constants: the Omega_4 constants need rho >= 3\n";
    return kPrecondition;
  }
  const formal::AppendixData& data = tables(o);
  bool at_reference = rho == Rational(3);
  bool all_ok = true;
  json rows = json::array();
  std::ostringstream text, csv;
  csv << "name,lo,hi,reference,contained\n";
  text << "constants at rho = " << rho.str() << "\n";
  for (const auto& name : functionals::catalog_names()) {
    Interval v = functionals::derive(name, rho, data).value;
    std::string ref;
    std::optional<bool> ok;
    if (at_reference && data.values.count(name)) {
      ref = data.value(name).text;
      ok = functionals::matches_printed(v, data.value(name));
      all_ok = all_ok && *ok;
    }
    json row;
    row["name"] = name;
    row["enclosure"] = {v.lo().str(), v.hi().str()};
    row["decimal"] = cert::decimal(v, 12);
    row["reference"] = ref.empty() ? json(nullptr) : json(ref);
    row["contained"] = ok ? json(*ok) : json(nullptr);
    rows.push_back(row);
    text << "  " << std::left << std::setw(7) << name << " " << cert::decimal(v, 12);
    if (ok) text << "   ref " << ref << (*ok ? "  ok" : "  MISMATCH");
    text << "\n";
    csv << name << "," << v.lo().sci(15, Round::down) << "," << v.hi().sci(15, Round::up) << "," << ref << ","
        << (ok ? (*ok ? "true" : "false") : "") << "\n";
  }
  if (o.format == "json") {
    json j;
    j["rho"] = rho.str();
    j["tables_sha256"] = data.sha256;
    j["constants"] = rows;
    std::cout << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << csv.str();
  } else {
    std::cout << text.str();
  }
  return all_ok ? kPass : kFail;
}

int cmd_identities(const Options& o) {
  const formal::AppendixData& data = tables(o);
  std::vector<formal::TableCheckReport> suites = formal::verify_all_tables(data);
  suites.push_back(functionals::crosscheck_functional_tables(data));
  bool ok = true;
  json arr = json::array();
  for (const auto& s : suites) {
    ok = ok && s.pass();
    json js;
    js["name"] = s.name;
    js["pass"] = s.pass();
    json items = json::array();
    for (const auto& it : s.items) items.push_back({{"desc", it.desc}, {"pass", it.pass}, {"detail", it.detail}});
    js["items"] = items;
    arr.push_back(js);
    if (o.format != "json") {
      std::cout << s.name << ": " << (s.pass() ? "PASS" : "FAIL") << " (" << s.items.size() << " items)\n";
      for (const auto* f : s.failures()) std::cout << "  FAIL " << f->desc << ": " << f->detail << "\n";
    }
  }
  if (o.format == "json") std::cout << json{{"suites", arr}, {"pass", ok}}.dump(2) << "\n";
  return ok ? kPass : kFail;
}

json complex_json(const ev::ComplexValue& z) { return {ev::to_string(z.re, 25), ev::to_string(z.im, 25)}; }

int cmd_eval(const Options& o) {
  if (o.z.empty()) throw InputError("eval needs --z");
  ev::ComplexValue z = parse_z(o.z);
  json j;
  j["z"] = complex_json(z);
  std::ostringstream text;
  if (ev::abs(z) == 0) {
    ev::ZeroEnclosure e = ev::y_at_zero();
    j["method"] = "inner-interval enclosure";
    j["rigorous"] = true;
    j["y"] = complex_json(e.y_center);
    j["y_radius"] = e.y_radius.str();
    j["yp"] = complex_json(e.yp_center);
    j["yp_radius"] = e.yp_radius.str();
    j["g"] = {e.g.lo().str(), e.g.hi().str()};
    j["gp"] = {e.gp.lo().str(), e.gp.hi().str()};
    text << "y(0)  = " << ev::to_string(e.y_center) << "  ± " << e.y_radius.str() << "\n"
         << "y'(0) = " << ev::to_string(e.yp_center) << "  ± " << e.yp_radius.str() << "\n"
         << "g(0) in " << cert::decimal(e.g) << ", g'(0) in " << cert::decimal(e.gp) << " (rigorous)\n";
  } else {
    std::optional<ev::AsymptoticValue> a;
    std::string method;
    for (auto [region, name] : {std::pair{ev::Region::omegaI, "Omega_I asymptotics"},
                                std::pair{ev::Region::omega4, "Omega_4 asymptotics"}}) {
      try {
        a = ev::asymptotic_y(z, region);
        method = name;
        break;
      } catch (const ev::RegionError&) {
      }
    }
    if (a) {
      j["method"] = method;
      j["rigorous"] = true;
      j["y"] = complex_json(a->value);
      j["error_bound"] = ev::to_string(a->error_bound, 6);
      text << "y(z) = " << ev::to_string(a->value) << "  ± " << ev::to_string(a->error_bound, 6) << " (" << method
           << ", rigorous bound)\n";
    } else {
      // Numerical: t_0 -> 0 -> t from the inner initial data.
      ev::Real tol = boost::multiprecision::pow(ev::Real(2), -static_cast<int>(o.precision_bits) + 24);
      ev::ComplexValue t = ev::z_to_t(z);
      std::vector<ev::TrajectoryPoint> traj;
      j["method"] = "Taylor integration from t_0 = -1.7";
      j["rigorous"] = false;
      try {
        ev::IntegrationResult r = ev::integrate_path({ev::ic_t0(), ev::ComplexValue(ev::Real(0)), t}, ev::ic_g(),
                                                     ev::ic_gp(), tol, ev::kDefaultOrder, &traj);
        ev::Pair y = ev::g_to_y({r.g, r.gp});
        j["y"] = complex_json(y.v);
        j["yp"] = complex_json(y.d);
        j["truncation_estimate"] = ev::to_string(r.error_estimate, 3);
        text << "y(z)  = " << ev::to_string(y.v) << "\ny'(z) = " << ev::to_string(y.d)
             << "\n(numerical, not rigorous; initial data carry the 3/890 matching error)\n";
      } catch (const ev::PoleProximityError& e) {
        std::cerr << "warning: " << e.what() << "; value is a best-effort estimate\n";
        ev::Pair y = ev::g_to_y({traj.back().g, ev::ComplexValue()});
        j["y"] = complex_json(y.v);
        j["warning"] = e.what();
        text << "y ~ " << ev::to_string(y.v) << " at t = " << ev::to_string(traj.back().t, 8)
             << " (best effort near a pole, not rigorous)\n";
      }
      if (!o.trajectory.empty()) {
        std::ofstream f(o.trajectory);
        f << "t_re,t_im,g_re,g_im\n";
        for (const auto& p : traj)
          f << ev::to_string(p.t.re) << "," << ev::to_string(p.t.im) << "," << ev::to_string(p.g.re) << ","
            << ev::to_string(p.g.im) << "\n";
      }
    }
  }
  if (o.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text.str();
  return kPass;
}

int cmd_series(const Options& o) {
  if (o.order < 2) throw InputError("--order must be at least 2");
  ev::ComplexValue c0(ev::Real(-87) / 469), c1(ev::Real(41) / 134);
  ev::SeriesState s = ev::taylor_coeffs(c0, c1, ev::ComplexValue(ev::Real(0)), o.order);
  if (o.format == "json") {
    json arr = json::array();
    for (int k = 0; k <= s.order(); ++k) arr.push_back({{"k", k}, {"c", complex_json(s.coeffs[k])}});
    std::cout << json{{"center", "0"}, {"c0", "-87/469"}, {"c1", "41/134"}, {"coeffs", arr}}.dump(2) << "\n";
  } else {
    std::cout << "k,re,im\n";
    for (int k = 0; k <= s.order(); ++k)
      std::cout << k << "," << ev::to_string(s.coeffs[k].re, 25) << "," << ev::to_string(s.coeffs[k].im, 25) << "\n";
  }
  return kPass;
}

int cmd_pole(const Options& o) {
  ev::Real tol = boost::multiprecision::pow(ev::Real(2), -static_cast<int>(o.precision_bits) + 40);
  ev::PoleScan scan = ev::min_pole_distance(o.directions, tol);
  if (!scan.nearest) {
    std::cerr << "pole: no blowup found in the scanned directions\n";
    return kFail;
  }
  if (o.format == "json") {
    json j;
    j["directions"] = scan.directions;
    j["hits"] = scan.hits.size();
    j["distance"] = ev::to_string(scan.nearest->distance, 15);
    j["pole"] = complex_json(scan.nearest->pole);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "nearest pole of g: |t_p| = " << ev::to_string(scan.nearest->distance, 10) << " at t_p = "
              << ev::to_string(scan.nearest->pole, 10) << "\n"
              << "(" << scan.hits.size() << " of " << scan.directions
              << " directions in |arg t| <= pi/5 reached a pole; numerical estimate)\n";
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Validated checks and numerics for the Painleve I tritronquee"};
  app.require_subcommand(1);
  Options o;
  auto data_flags = [&](CLI::App* c) {
    c->add_option("--tables", o.tables, "Appendix tables file (default: $P1CERT_DATA_DIR/" +
                                            std::string(data::kTablesFile) + ")");
    c->add_option("--partitions", o.partitions, "Partitions file (default: $P1CERT_DATA_DIR/" +
                                                    std::string(data::kPartitionsFile) + ")");
  };
  auto format_flag = [&](CLI::App* c, std::vector<std::string> allowed) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember(allowed));
  };
  auto precision_flag = [&](CLI::App* c) {
    c->add_option("--precision-bits", o.precision_bits, "Working precision in bits (>= 100)")
        ->check(CLI::Range(ev::kMinPrecisionBits, 4096u));
  };

  auto* verify = app.add_subcommand("verify", "Run certificates");
  verify->add_option("--scope", o.scope, "all|tables|omegaI|omega12|omega4|inner|radius")
      ->check(CLI::IsMember({"all", "tables", "omegaI", "omega12", "omega4", "inner", "radius"}));
  verify->add_option("--rho", o.rho, "rho for Omega_4 (default 3)");
  format_flag(verify, {"text", "json"});
  data_flags(verify);

  auto* constants_cmd = app.add_subcommand("constants", "Print the Omega_4 constants");
  constants_cmd->add_option("--rho", o.rho, "rho (default 3; reference values exist only at 3)");
  format_flag(constants_cmd, {"text", "json", "csv"});
  data_flags(constants_cmd);

  auto* identities = app.add_subcommand("identities", "Check the symbolic tables and identities");
  format_flag(identities, {"text", "json"});
  data_flags(identities);

  auto* eval = app.add_subcommand("eval", "Evaluate y_t(z)");
  eval->add_option("--z", o.z, "z as re,im or r<theta (theta in radians, e.g. 1.7<0.2pi)")->required();
  eval->add_option("--trajectory", o.trajectory, "CSV of the integration path (numerical points only)");
  format_flag(eval, {"text", "json"});
  precision_flag(eval);

  auto* series = app.add_subcommand("series", "Maclaurin coefficients of g at the enclosure centers");
  series->add_option("--order", o.order, "Highest coefficient index");
  format_flag(series, {"csv", "json"});
  precision_flag(series);

  auto* pole = app.add_subcommand("pole", "Estimate the distance to the nearest pole of g");
  pole->add_option("--directions", o.directions, "Directions scanned in |arg t| <= pi/5")->check(CLI::Range(1, 10000));
  format_flag(pole, {"text", "json"});
  precision_flag(pole);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kPrecondition;
  }
  if (series->parsed() && o.format == "text") o.format = "csv";
  ev::set_working_precision(o.precision_bits);

  try {
    if (verify->parsed()) return cmd_verify(o);
    if (constants_cmd->parsed()) return cmd_constants(o);
    if (identities->parsed()) return cmd_identities(o);
    if (eval->parsed()) return cmd_eval(o);
    if (series->parsed()) return cmd_series(o);
    if (pole->parsed()) return cmd_pole(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  }
  return kPrecondition;
}
