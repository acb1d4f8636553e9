#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "elorder/group.hpp"
#include "elorder/partition.hpp"
#include "elorder/psi_stats.hpp"
#include "elorder/structure.hpp"

namespace elorder {

// Published figures for Q8 x| C9 (SmallGroup(72,3)).
inline const std::map<std::uint64_t, std::uint64_t> kReferenceSpectrum{
    {1, 1}, {2, 1}, {3, 2}, {4, 6}, {6, 2}, {9, 24}, {12, 12}, {18, 24}};
inline constexpr std::uint64_t kReferencePsi2 = 387;
inline constexpr std::uint64_t kReferencePsi3 = 488;

/// Published (L_d) table as a class flow: (element order, divisor) -> count.
ClassFlow reference_partition_shape();

struct ReferenceExample {
  FiniteGroup group;
  OrderSpectrum spectrum;
  PartitionCertificate certificate;
  CertificateCheck certificate_check;
  PsiReport psi2;
  PsiReport psi3;
  EqualityStructure structure2;
  EqualityStructure structure3;
  std::map<std::string, bool> checks;

  bool ok() const;
};

/// Builds smallgroup_72_3 and compares every computed figure with the
/// published ones.
ReferenceExample run_reference_example();

}  // namespace elorder
