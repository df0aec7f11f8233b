#include "suites.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <sstream>
#include <thread>

#include "p1cert/certificates/inner_interval.hpp"
#include "p1cert/certificates/inner_polys.hpp"
#include "p1cert/certificates/omega4.hpp"
#include "p1cert/certificates/outer.hpp"
#include "p1cert/data/data_files.hpp"
#include "p1cert/evaluator/frames.hpp"
#include "p1cert/formal/verify.hpp"
#include "p1cert/functionals/catalog.hpp"
#include "p1cert/functionals/crosscheck.hpp"
#include "p1cert/functionals/exp_poly.hpp"
#include "p1cert/polybound/sup_bound.hpp"

namespace p1cert::testing {

namespace {

Rational random_rational(std::mt19937_64& rng, long span, long den_max) {
  std::uniform_int_distribution<long> num(-span * den_max, span * den_max), den(1, den_max);
  return Rational(num(rng), den(rng));
}

// a + u (b - a) with u in [0, 1] rational.
Rational point_in(std::mt19937_64& rng, const Interval& x) {
  std::uniform_int_distribution<long> u(0, 1000);
  return x.lo() + Rational(u(rng), 1000) * x.width();
}

Interval random_interval(std::mt19937_64& rng, long span) {
  Rational a = random_rational(rng, span, 97), b = random_rational(rng, span, 97);
  return Interval(min(a, b), max(a, b));
}

// The certificate item that compares against a printed value.
std::string printed_item(const std::string& name) {
  if (name == "abs_S") return "|S| = ";
  if (name == "abs_x0") return "|x_0| = ";
  if (name == "C1" || name == "C2") return name + " = ";
  return name + " at rho = 3 matches ";
}

}  // namespace

Outcome interval_containment(long samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Outcome out;
  const Rational tol(1, 1000000);
  for (long i = 0; i < samples && out.pass; ++i) {
    Interval X = random_interval(rng, 5), Y = random_interval(rng, 5);
    Rational x = point_in(rng, X), y = point_in(rng, Y);
    auto expect = [&](const char* op, const Interval& r, const Rational& v) {
      if (!r.contains(v))
        out.fail(std::string(op) + ": " + v.str() + " not in " + r.str() + " for X=" + X.str() + " Y=" + Y.str());
    };
    expect("add", X + Y, x + y);
    expect("sub", X - Y, x - y);
    expect("mul", X * Y, x * y);
    if (!Y.contains_zero()) expect("div", X / Y, x / y);
    unsigned n = static_cast<unsigned>(i % 6);
    expect("pow", X.pow(n), x.pow(static_cast<int>(n)));
    expect("abs", X.abs(), x.abs());
    Interval Xp = X.abs();
    Rational xp = point_in(rng, Xp);
    Interval s = sqrt(Xp, tol);
    if (s.lo().sign() < 0 || s.lo() * s.lo() > xp || s.hi() * s.hi() < xp)
      out.fail("sqrt: " + s.str() + " misses sqrt(" + xp.str() + ")");
    ++out.cases;
  }
  if (out.pass) out.detail = std::to_string(out.cases) + " samples";
  return out;
}

Outcome sup_bound_grid(long points) {
  using polybound::Poly;
  const certificates::InnerPolys& P = certificates::inner_polys();
  const polybound::PartitionSet& parts = certificates::default_partitions();
  Rational a1 = certificates::InnerConfig{}.alpha1, a2 = certificates::InnerConfig{}.alpha2;
  Poly fp = P.J1 * a1 + P.J2 * a2, fm = P.J1 * a1 - P.J2 * a2;
  Poly wm1 = P.W - Poly::constant(Rational(1), P.W.basepoint());
  std::vector<std::pair<Poly, std::string>> cases{
      {P.R, "R"},
      {wm1, "W_minus_1"},
      {P.J1, "J1"},
      {polybound::differentiate(P.J1), "J1_prime"},
      {P.J2, "J2"},
      {polybound::differentiate(P.J2), "J2_prime"},
      {P.A_num, "A"},
      {P.B1_num, "B1"},
      {fp, "f_plus"},
      {fm, "f_minus"},
      {polybound::differentiate(fp), "f_plus_prime"},
      {polybound::differentiate(fm), "f_minus_prime"},
  };
  std::vector<std::future<Outcome>> jobs;
  for (const auto& [poly, name] : cases) {
    jobs.push_back(std::async(std::launch::async, [&, points] {
      Outcome o;
      const polybound::PartitionPlan& plan = parts.at(name);
      polybound::SupBoundResult res = polybound::sup_bound_detail(poly, plan);
      Rational a = plan.front(), b = plan.back();
      size_t piece = 0;
      for (long i = 0; i < points; ++i) {
        Rational t = a + (b - a) * Rational(i, points - 1);
        while (piece + 1 < res.pieces.size() && t > res.pieces[piece].hi) ++piece;
        Rational v = poly.eval(t).abs();
        if (v > res.pieces[piece].bound()) o.fail(name + ": |p(" + t.str() + ")| exceeds its piece bound");
        ++o.cases;
      }
      return o;
    }));
  }
  // The ratio bounds |A| and |B1| go through W as well.
  Outcome out;
  for (auto& j : jobs) {
    Outcome o = j.get();
    out.cases += o.cases;
    if (!o.pass) out.fail(o.detail);
  }
  for (auto [num, name] : {std::pair{&P.A_num, "A"}, std::pair{&P.B1_num, "B1"}}) {
    polybound::RationalBound rb =
        polybound::rational_sup_bound(*num, P.W, parts.at(name), Rational(1), &parts.at("W_minus_1"));
    if (!rb.ratio_bound) {
      out.fail(std::string(name) + ": no ratio bound");
      continue;
    }
    for (long i = 0; i < points; i += 10) {
      Rational t = Rational(-17, 10) * Rational(points - 1 - i, points - 1);
      if ((num->eval(t) / P.W.eval(t)).abs() > *rb.ratio_bound) out.fail(std::string(name) + "/W exceeds its bound");
      ++out.cases;
    }
  }
  if (out.pass) out.detail = std::to_string(cases.size()) + " polynomials, " + std::to_string(points) + " points each";
  return out;
}

Outcome leibniz(long samples, std::uint64_t seed) {
  using formal::FormalSeries;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> k(0, 3), j(-2, 9), m(-2, 3), n(1, 5);
  auto random_series = [&] {
    FormalSeries s;
    for (int i = n(rng); i > 0; --i) s.add_term({k(rng), j(rng), m(rng)}, random_rational(rng, 3, 50));
    return s;
  };
  Outcome out;
  for (long i = 0; i < samples && out.pass; ++i) {
    FormalSeries a = random_series(), b = random_series();
    FormalSeries lhs = formal::differentiate(a * b);
    FormalSeries rhs = formal::differentiate(a) * b + a * formal::differentiate(b);
    if (!(lhs == rhs)) out.fail("D(ab) != D(a)b + aD(b) for a = " + a.str() + ", b = " + b.str());
    // Additivity and the power rule ride along.
    if (!(formal::differentiate(a + b) == formal::differentiate(a) + formal::differentiate(b)))
      out.fail("D not additive at a = " + a.str());
    if (!(formal::differentiate(formal::power(a, 3)) == formal::power(a, 2) * formal::differentiate(a) * Rational(3)))
      out.fail("power rule fails at a = " + a.str());
    ++out.cases;
  }
  if (out.pass) out.detail = std::to_string(out.cases) + " random pairs";
  return out;
}

Outcome f_homogeneity(long samples, std::uint64_t seed) {
  using functionals::ExpPoly;
  using functionals::FKind;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> k(0, 5), m(1, 6), j(5, 14), n(1, 6);
  Outcome out;
  for (long i = 0; i < samples && out.pass; ++i) {
    ExpPoly p;
    for (int t = n(rng); t > 0; --t) p.add(m(rng), k(rng), random_rational(rng, 2, 40));
    Rational c = random_rational(rng, 4, 30), jj(j(rng));
    if (c.is_zero()) c = Rational(1, 3);
    for (FKind kind : {FKind::F1, FKind::F2, FKind::F3, FKind::F4}) {
      functionals::AbsSPoly base = functionals::f_functional_symbolic(kind, p, jj);
      functionals::AbsSPoly scaled = functionals::f_functional_symbolic(kind, p * c, jj);
      for (auto& [power, coef] : base) coef *= c.abs();
      std::erase_if(base, [](const auto& kv) { return kv.second.is_zero(); });
      std::erase_if(scaled, [](const auto& kv) { return kv.second.is_zero(); });
      if (base != scaled)
        out.fail(std::string(functionals::to_string(kind)) + "(c p) != |c| " + functionals::to_string(kind) +
                 "(p) at c = " + c.str() + ", j = " + jj.str());
      // Sub-additivity of the majorant: F(p + q) <= F(p) + F(q).
      Interval fpq = functionals::f_functional(kind, p + p * c, jj);
      Interval bound = functionals::f_functional(kind, p, jj) + functionals::f_functional(kind, p * c, jj);
      if (fpq.lo() > bound.hi()) out.fail("F(p + q) > F(p) + F(q)");
    }
    ++out.cases;
  }
  if (out.pass) out.detail = std::to_string(out.cases) + " random slices x 4 kinds";
  return out;
}

Outcome frame_roundtrips(long samples, double tolerance, std::uint64_t seed) {
  namespace ev = evaluator;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> logr(-2, 2), u(0, 1);
  Outcome out;
  ev::Real worst(0);
  for (long i = 0; i < samples; ++i) {
    ev::Real r = boost::multiprecision::pow(ev::Real(10), ev::Real(logr(rng)));
    // arg z in (-pi, 3pi/5]
    ev::Real theta = ev::pi() * (ev::Real(u(rng)) * 8 / 5 - 1);
    if (theta <= -ev::pi()) theta = ev::pi() * 3 / 5;
    ev::ComplexValue z = ev::ComplexValue::polar(r, theta);
    ev::Real ex = ev::abs(ev::x_to_z(ev::z_to_x(z)) - z) / r;
    ev::Real et = ev::abs(ev::t_to_z(ev::z_to_t(z)) - z) / r;
    ev::FramePoint fx = ev::frame_map(*ev::frame_map(z, ev::Frame::z).x, ev::Frame::x);
    ev::Real ef = ev::abs(fx.z - z) / r;
    ev::Real e = std::max({ex, et, ef});
    worst = std::max(worst, e);
    if (e > tolerance) out.fail("round trip error " + ev::to_string(e, 5) + " at z = " + ev::to_string(z, 10));
    ++out.cases;
  }
  out.detail = (out.pass ? std::to_string(out.cases) + " points, " : out.detail + "; ") +
               "worst relative error " + ev::to_string(worst, 3);
  return out;
}

std::vector<DataLine> appendix_lines(const std::string& text) {
  std::vector<DataLine> lines;
  for (const data::Line& l : data::tokenize(text)) {
    const auto& f = l.fields;
    if (f.size() < 3) continue;
    DataLine d{l.number, f[0], f[1], ""};
    if (f[0] == "table")
      d.expected = f[1] + "_" + f[2] + " ";
    else if (f[0] == "closed")
      d.expected = f[1] + " closed form";
    else if (f[0] == "value")
      d.expected = printed_item(f[1]);
    else
      continue;
    lines.push_back(d);
  }
  return lines;
}

std::string perturb_line(const std::string& text, int index) {
  std::istringstream in(text);
  std::ostringstream out;
  std::string line;
  for (int n = 1; std::getline(in, line); ++n) {
    if (n == index) {
      std::istringstream ls(line);
      std::vector<std::string> f;
      for (std::string w; ls >> w;) f.push_back(w);
      const Rational delta(1, 1000);
      if (f[0] == "value") {
        size_t dot = f[2].find('.');
        int decimals = dot == std::string::npos ? 0 : static_cast<int>(f[2].size() - dot - 1);
        f[2] = (Rational::parse(f[2]) + delta).fixed(std::max(decimals, 3));
      } else {
        f.back() = (Rational::parse(f.back()) + delta).str();
      }
      line.clear();
      for (size_t i = 0; i < f.size(); ++i) line += (i ? " " : "") + f[i];
    }
    out << line << "\n";
  }
  return out.str();
}

FaultResult run_perturbation(const std::string& text, const DataLine& line) {
  FaultResult res{line};
  formal::AppendixData data = formal::parse_appendix(perturb_line(text, line.index), "<perturbed>");
  std::vector<std::string> failed;
  if (line.kind == "value") {
    // Printed values are compared by the certificates that quote them.
    for (const auto& r : {certificates::check_omega_4(Rational(3), data), certificates::check_z0_bounds(data)})
      for (const auto* f : r.failures()) failed.push_back(f->desc);
  } else {
    std::vector<formal::TableCheckReport> suites = formal::verify_all_tables(data);
    suites.push_back(functionals::crosscheck_functional_tables(data));
    for (const auto& s : suites)
      for (const auto* f : s.failures()) failed.push_back(f->desc);
  }
  res.detected = !failed.empty();
  for (const auto& d : failed) {
    res.named = res.named || d.rfind(line.expected, 0) == 0 || d == line.expected;
    res.failures += (res.failures.empty() ? "" : "; ") + d;
  }
  return res;
}

std::vector<FaultResult> perturb_all(const std::string& text) {
  std::vector<DataLine> lines = appendix_lines(text);
  std::vector<FaultResult> out(lines.size());
  unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::future<void>> jobs;
  for (unsigned w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (size_t i = w; i < lines.size(); i += workers) out[i] = run_perturbation(text, lines[i]);
    }));
  for (auto& j : jobs) j.get();
  return out;
}

Outcome alpha1_fault() {
  certificates::InnerConfig cfg;
  cfg.alpha1 = Rational(1, 50);
  certificates::CertificateReport r = certificates::check_inner_interval(cfg);
  Outcome out;
  out.cases = 1;
  if (r.verdict()) {
    out.fail("inner_interval passed with alpha1 = 1/50");
    return out;
  }
  bool corner = false;
  std::string names;
  for (const auto* f : r.failures()) {
    corner = corner || f->desc.find("alpha1 J1") != std::string::npos;
    names += (names.empty() ? "" : "; ") + f->desc;
  }
  if (!corner) out.fail("failure does not name a corner bound: " + names);
  else out.detail = "failed: " + names;
  return out;
}

Outcome tampered_partition_fault() {
  std::string text = data::read_file(data::default_partitions_path());
  size_t at = text.find("partition R ");
  size_t end = text.find('\n', at);
  text.replace(at, end - at, "partition R -17/10 -4/5 0");
  polybound::PartitionSet parts = polybound::parse_partitions(text, "<tampered>");
  certificates::InnerConfig cfg;
  cfg.partitions = &parts;
  certificates::CertificateReport r = certificates::check_inner_interval(cfg);
  Outcome out;
  out.cases = 1;
  if (r.verdict()) {
    out.fail("inner_interval passed with a coarsened R partition");
    return out;
  }
  auto f = r.failures();
  if (f.empty() || f.front()->desc != "|R| < 1/8619")
    out.fail("expected the |R| bound to fail first, got " + (f.empty() ? std::string("nothing") : f.front()->desc));
  else
    out.detail = "failed: " + f.front()->desc;
  return out;
}

}  // namespace p1cert::testing
