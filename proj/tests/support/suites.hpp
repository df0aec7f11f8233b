#ifndef P1CERT_TESTS_SUITES_HPP
#define P1CERT_TESTS_SUITES_HPP

// Property and fault-injection suites shared by the unit tests and the
// acceptance binary.

#include <cstdint>
#include <string>
#include <vector>

namespace p1cert::testing {

struct Outcome {
  bool pass = true;
  long cases = 0;
  std::string detail;  // first counterexample, or a summary

  void fail(std::string why) {
    if (pass) detail = std::move(why);
    pass = false;
  }
};

inline constexpr std::uint64_t kSeed = 20240611;

// Random intervals and points inside them; the result of + - * / pow sqrt
// must contain the pointwise result.
Outcome interval_containment(long samples, std::uint64_t seed = kSeed);

// Every inner-interval polynomial: the partition bound dominates an exact
// evaluation on a uniform grid of `points` points.
Outcome sup_bound_grid(long points);

// D(ab) = D(a) b + a D(b) on random formal series.
Outcome leibniz(long samples, std::uint64_t seed = kSeed);

// F(c p) = |c| F(p) for every kind, random slices and scalars.
Outcome f_homogeneity(long samples, std::uint64_t seed = kSeed);

// z -> x -> z and z -> t -> z on random points of arg z in (-pi, 3pi/5].
Outcome frame_roundtrips(long samples, double tolerance, std::uint64_t seed = kSeed);

// One coefficient (or printed value) of the shipped appendix file.
struct DataLine {
  int index = 0;         // line number in the file
  std::string kind;      // table, closed or value
  std::string name;
  std::string expected;  // the item that must be named in the failure
};

struct FaultResult {
  DataLine line;
  bool detected = false;
  bool named = false;
  std::string failures;  // failed item descriptions, joined
};

std::vector<DataLine> appendix_lines(const std::string& text);
// The file text with that line's number increased by 1/1000.
std::string perturb_line(const std::string& text, int index);
// Reparses the perturbed file and runs the table suites, the functional
// crosscheck and the printed-value comparison.
FaultResult run_perturbation(const std::string& text, const DataLine& line);
// Every line; parallel.
std::vector<FaultResult> perturb_all(const std::string& text);

// alpha1 = 1/50 must fail the inner-interval corner checks.
Outcome alpha1_fault();
// A partition with a point dropped must fail its bound, by name.
Outcome tampered_partition_fault();

}  // namespace p1cert::testing

#endif
