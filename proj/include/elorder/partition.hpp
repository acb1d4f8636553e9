#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "elorder/arithmetic.hpp"
#include "elorder/group.hpp"
#include "elorder/psi_stats.hpp"

namespace elorder {

struct ClassNode {
  std::uint64_t key;     ///< element order (left) or divisor of n (right)
  std::uint64_t amount;  ///< supply (left) or phi(divisor) demand (right)
};

/// Order classes of G on the left, divisor classes of C_n on the right,
/// with an edge d -> e whenever d divides e.
struct DivisorFlowNetwork {
  std::uint64_t n = 0;
  std::vector<ClassNode> orders;
  std::vector<ClassNode> divisors;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

DivisorFlowNetwork build_network(const OrderSpectrum& spectrum);
DivisorFlowNetwork build_network(const FiniteGroup& g);

/// Number of order-d elements routed into L_e, keyed by (d, e).
struct ClassFlow {
  std::uint64_t n = 0;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> amounts;
};

/// Divisor classes whose admissible suppliers cannot cover their demand.
struct HallViolation {
  std::vector<std::uint64_t> divisors;
  std::uint64_t demand = 0;
  std::vector<std::uint64_t> admissible_orders;
  std::uint64_t supply = 0;
};

std::variant<ClassFlow, HallViolation> solve_class_flow(const DivisorFlowNetwork& net);

/// True iff `flow` respects divisibility and meets every supply and demand.
bool is_feasible_class_flow(const DivisorFlowNetwork& net, const ClassFlow& flow);

/// The (L_e) partition and the bijection f : G -> C_n, with f(x) a residue
/// mod n.
struct PartitionCertificate {
  std::uint64_t n = 0;
  std::map<std::uint64_t, std::vector<Element>> classes;
  std::vector<std::uint64_t> bijection;
};

/// Expands a feasible class flow: within each order class, ascending
/// elements fill ascending divisors; within L_e, ascending elements take
/// the smallest unused residues of order e.
PartitionCertificate expand_certificate(const FiniteGroup& g, const ClassFlow& flow);

struct PartitionResult {
  std::optional<ClassFlow> flow;
  std::optional<PartitionCertificate> certificate;
  std::optional<HallViolation> violation;

  bool ok() const { return certificate.has_value(); }
};

PartitionResult max_flow_partition(const FiniteGroup& g);

/// From-scratch re-check of a certificate, sharing no code with the solver.
struct CertificateCheck {
  bool disjoint_cover = true;
  bool class_sizes = true;      ///< |L_e| = phi(e)
  bool annihilated = true;      ///< x^e = 1 on L_e
  bool bijection_onto = true;   ///< f(L_e) = residues of order e
  bool order_divides = true;    ///< o(x) | o(f(x))
  std::vector<std::string> problems;

  bool ok() const {
    return disjoint_cover && class_sizes && annihilated && bijection_onto && order_divides;
  }
};

CertificateCheck validate_certificate(const FiniteGroup& g, const PartitionCertificate& cert);

/// Sum over x of o(f(x)_pi), computed in C_n.
std::uint64_t certificate_psi_pi(const PartitionCertificate& cert, const PrimeSet& pi);

struct SolutionCount {
  std::uint64_t d = 0;
  std::uint64_t count = 0;
  bool multiple_of_d = false;
  bool exact = false;
  std::optional<bool> subgroup;  ///< set when exact
  std::optional<bool> normal;    ///< set when exact and a subgroup
};

/// Counts {x : x^d = 1}. Throws std::invalid_argument unless d divides |G|.
SolutionCount count_solutions(const FiniteGroup& g, std::uint64_t d);

std::vector<SolutionCount> frobenius_sweep(const FiniteGroup& g);

}  // namespace elorder
