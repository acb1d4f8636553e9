#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "elorder/arithmetic.hpp"
#include "elorder/catalog.hpp"
#include "elorder/group.hpp"
#include "elorder/partition.hpp"
#include "elorder/psi_stats.hpp"

namespace elorder {

/// Structural side of the equality case psi_pi(G) = psi_pi(C_n):
/// H = {x : x^{n_pi'} = 1} of order n_pi' and normal, plus a cyclic
/// subgroup of order n_pi.
struct EqualityStructure {
  PrimeSet pi;
  std::uint64_t n_pi = 1;
  std::uint64_t n_pi_prime = 1;
  std::optional<Element> cyclic_witness;  ///< an element of order n_pi
  std::vector<Element> h_set;
  bool h_is_subgroup = false;
  bool h_is_normal = false;
  bool classified = false;

  bool has_element_of_order_n_pi() const { return cyclic_witness.has_value(); }
  std::size_t h_size() const { return h_set.size(); }
};

EqualityStructure detect_equality_structure(const FiniteGroup& g, const PrimeSet& pi);

/// Instance of the corollary: if both psi_pi and psi_pi' meet the cyclic
/// benchmark (pi' = pi(n) \ pi), G must be cyclic.
struct CorollaryCheck {
  bool premise = false;  ///< both deficits zero
  bool cyclic = false;
  bool holds() const { return !premise || cyclic; }
};

CorollaryCheck check_corollary(const FiniteGroup& g, const PrimeSet& pi);

enum class PiPolicy { kPrimes, kSubsets };

inline constexpr std::size_t kMaxSubsetPrimes = 4;

/// The sets of primes a policy visits for order n: singletons {p}, or all
/// subsets of pi(n) (including the empty set) in a fixed order.
std::vector<PrimeSet> pi_sets(std::uint64_t n, PiPolicy policy);

struct PiRecord {
  PsiReport psi;
  EqualityStructure structure;
  CorollaryCheck corollary;
  bool bound_ok = false;          ///< deficit >= 0
  bool biconditional_ok = false;  ///< deficit == 0 <=> classified
};

struct GroupVerification {
  std::string label;
  std::uint64_t order = 0;
  std::vector<PiRecord> records;
  std::size_t frobenius_divisors = 0;
  bool frobenius_ok = false;  ///< every count a multiple of d; exact sets normal subgroups
  bool certificate_ok = false;
  bool certificate_psi_ok = false;  ///< sum o(f(x)_pi) = psi_pi(C_n) for every visited pi

  bool ok() const;
};

struct VerificationReport {
  PiPolicy policy = PiPolicy::kPrimes;
  std::vector<GroupVerification> groups;

  bool ok() const;
};

VerificationReport verify_main_theorem(const Corpus& corpus, PiPolicy policy);

struct QuestionVerdict {
  std::string label;
  std::uint64_t prime = 0;
  bool sylow_cyclic = false;
  std::uint64_t n_p_prime = 0;
  std::uint64_t solution_set_size = 0;
  bool size_matches = false;
  bool is_subgroup = false;
  bool counterexample = false;
  std::vector<Element> solution_set;

  bool consistent() const { return counterexample == (sylow_cyclic && size_matches && !is_subgroup); }
};

std::vector<QuestionVerdict> search_question(const FiniteGroup& g);
std::vector<QuestionVerdict> search_question(const Corpus& corpus);

/// Exact non-negative fraction, kept reduced.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Rational reduced(std::uint64_t num, std::uint64_t den);
  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<unsigned __int128>(a.num) * b.den < static_cast<unsigned __int128>(b.num) * a.den;
  }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

struct RatioEntry {
  std::string label;
  Rational ratio;
};

/// psi_p(G) / psi_p(C_n) per group, ascending (ties by label).
std::vector<RatioEntry> ratio_scan(const Corpus& corpus, std::uint64_t p);

}  // namespace elorder
