#ifndef P1CERT_CERTIFICATES_INNER_INTERVAL_HPP
#define P1CERT_CERTIFICATES_INNER_INTERVAL_HPP

#include "p1cert/certificates/report.hpp"
#include "p1cert/polybound/partition.hpp"

namespace p1cert::certificates {

struct InnerConfig {
  Rational alpha1{1, 290};
  Rational alpha2{1, 152};
  Rational ball{1, 158};  // radius in ||d||^(1/2) = max(||d||, ||d'||/2)
  // nullptr: the shipped partitions file.
  const polybound::PartitionSet* partitions = nullptr;
};

// Sup-norm bounds on [t_0, 0], the contraction of the delta system and the
// enclosures of g(0), g'(0).
CertificateReport check_inner_interval(const InnerConfig& cfg = {});

// Centers and radii of the certified g(0), g'(0) enclosures.
inline const Rational kG0Center{-87, 469};
inline const Rational kG0Radius{1, 167};
inline const Rational kG0pCenter{41, 134};
inline const Rational kG0pRadius{1, 108};

const polybound::PartitionSet& default_partitions();

}  // namespace p1cert::certificates

#endif
