#include "elorder/reference_example.hpp"

#include <algorithm>

#include "elorder/catalog.hpp"

namespace elorder {

ClassFlow reference_partition_shape() {
  ClassFlow f;
  f.n = 72;
  f.amounts = {
      {{1, 1}, 1},   {{2, 2}, 1},    {{3, 3}, 2},    {{4, 4}, 2},   {{6, 6}, 2},
      {{4, 8}, 4},   {{9, 9}, 6},    {{12, 12}, 4},  {{9, 18}, 6},  {{12, 24}, 8},
      {{9, 36}, 12}, {{18, 72}, 24},
  };
  return f;
}

bool ReferenceExample::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second; });
}

ReferenceExample run_reference_example() {
  FiniteGroup g = build(GroupSpec{spec::Preset{"smallgroup_72_3"}});
  const PartitionResult part = max_flow_partition(g);
  if (!part.ok()) throw ConsistencyError("no partition certificate for smallgroup_72_3");

  ReferenceExample ex{g,
                      order_spectrum(g),
                      *part.certificate,
                      validate_certificate(g, *part.certificate),
                      psi_report(g, {2}),
                      psi_report(g, {3}),
                      detect_equality_structure(g, {2}),
                      detect_equality_structure(g, {3}),
                      {}};

  std::uint64_t covered = 0;
  for (const auto& [e, members] : ex.certificate.classes) covered += members.size();
  const ClassFlow shape = reference_partition_shape();
  const bool shape_ok = is_feasible_class_flow(build_network(ex.spectrum), shape) &&
                        validate_certificate(g, expand_certificate(g, shape)).ok();

  auto& c = ex.checks;
  c["spectrum_matches_expected"] = ex.spectrum.group_order == 72 && ex.spectrum.counts == kReferenceSpectrum;
  c["psi_2_group_equals_387"] = ex.psi2.psi_pi_group == kReferencePsi2;
  c["psi_2_cyclic_equals_387"] = ex.psi2.psi_pi_cyclic == kReferencePsi2;
  c["psi_3_group_equals_488"] = ex.psi3.psi_pi_group == kReferencePsi3;
  c["psi_3_cyclic_equals_488"] = ex.psi3.psi_pi_cyclic == kReferencePsi3;
  c["partition_certificate_valid"] = ex.certificate_check.ok();
  c["partition_covers_group"] = covered == 72 && ex.certificate.classes.size() == 12;
  c["published_partition_shape_feasible"] = shape_ok;
  c["structure_pi_2_matches_equality"] = ex.structure2.classified == ex.psi2.equality;
  c["structure_pi_3_matches_equality"] = ex.structure3.classified == ex.psi3.equality;
  return ex;
}

}  // namespace elorder
