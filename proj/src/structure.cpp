#include "elorder/structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace elorder {

EqualityStructure detect_equality_structure(const FiniteGroup& g, const PrimeSet& pi) {
  EqualityStructure s;
  s.pi = pi;
  s.n_pi = pi_part(g.order(), pi);
  s.n_pi_prime = g.order() / s.n_pi;

  const auto orders = g.element_orders();
  for (Element x = 0; x < g.order(); ++x) {
    if (orders[x] == s.n_pi) {
      s.cyclic_witness = x;
      break;
    }
  }

  const ElementSet h = solution_set(g, s.n_pi_prime);
  s.h_set = h.elements();
  s.h_is_subgroup = is_subgroup(h);
  s.h_is_normal = s.h_is_subgroup && is_normal(h);
  // H normal of order n_pi' and <x> of coprime order n_pi meet trivially
  // and |H<x>| = |G|, so G = H x| <x>.
  s.classified = s.h_size() == s.n_pi_prime && s.h_is_subgroup && s.h_is_normal &&
                 s.has_element_of_order_n_pi();
  return s;
}

CorollaryCheck check_corollary(const FiniteGroup& g, const PrimeSet& pi) {
  PrimeSet complement;
  for (const auto p : prime_divisors(g.order())) {
    if (!pi.contains(p)) complement.insert(p);
  }
  CorollaryCheck c;
  c.premise = psi_report(g, pi, PsiMode::kFast).equality &&
              psi_report(g, complement, PsiMode::kFast).equality;
  const auto orders = g.element_orders();
  c.cyclic = std::find(orders.begin(), orders.end(), g.order()) != orders.end();
  return c;
}

std::vector<PrimeSet> pi_sets(std::uint64_t n, PiPolicy policy) {
  const PrimeSet primes = prime_divisors(n);
  std::vector<PrimeSet> out;
  if (policy == PiPolicy::kPrimes) {
    for (const auto p : primes) out.push_back({p});
    return out;
  }
  if (primes.size() > kMaxSubsetPrimes) {
    throw std::invalid_argument("subset policy supports at most " + std::to_string(kMaxSubsetPrimes) +
                                " prime divisors; order " + std::to_string(n) + " has " +
                                std::to_string(primes.size()));
  }
  const std::vector<std::uint64_t> list(primes.begin(), primes.end());
  for (std::uint32_t mask = 0; mask < (1U << list.size()); ++mask) {
    PrimeSet s;
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (mask & (1U << i)) s.insert(list[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

bool GroupVerification::ok() const {
  return frobenius_ok && certificate_ok && certificate_psi_ok &&
         std::all_of(records.begin(), records.end(),
                     [](const PiRecord& r) { return r.bound_ok && r.biconditional_ok; });
}

bool VerificationReport::ok() const {
  return std::all_of(groups.begin(), groups.end(), [](const auto& g) { return g.ok(); });
}

VerificationReport verify_main_theorem(const Corpus& corpus, PiPolicy policy) {
  VerificationReport report;
  report.policy = policy;
  for (const auto& [label, g] : corpus) {
    GroupVerification gv;
    gv.label = label;
    gv.order = g.order();

    const auto sweep = frobenius_sweep(g);
    gv.frobenius_divisors = sweep.size();
    gv.frobenius_ok = std::all_of(sweep.begin(), sweep.end(), [](const SolutionCount& sc) {
      return sc.count >= 1 && sc.multiple_of_d && (!sc.exact || (sc.subgroup.value_or(false) &&
                                                                 sc.normal.value_or(false)));
    });

    const PartitionResult part = max_flow_partition(g);
    gv.certificate_ok = part.ok() && validate_certificate(g, *part.certificate).ok();
    gv.certificate_psi_ok = part.ok();

    for (const auto& pi : pi_sets(g.order(), policy)) {
      PiRecord rec;
      rec.psi = psi_report(g, pi);
      rec.structure = detect_equality_structure(g, pi);
      rec.corollary = check_corollary(g, pi);
      rec.bound_ok = rec.psi.deficit >= 0;
      rec.biconditional_ok = rec.psi.equality == rec.structure.classified;
      if (part.ok() && certificate_psi_pi(*part.certificate, pi) != rec.psi.psi_pi_cyclic) {
        gv.certificate_psi_ok = false;
      }
      gv.records.push_back(std::move(rec));
    }
    report.groups.push_back(std::move(gv));
  }
  return report;
}

std::vector<QuestionVerdict> search_question(const FiniteGroup& g) {
  std::vector<QuestionVerdict> out;
  const auto orders = g.element_orders();
  for (const auto& [p, a] : factorize(g.order())) {
    QuestionVerdict v;
    v.label = g.label();
    v.prime = p;
    const std::uint64_t sylow = checked_pow(p, a);
    v.sylow_cyclic = std::find(orders.begin(), orders.end(), sylow) != orders.end();
    v.n_p_prime = g.order() / sylow;
    const ElementSet sols = solution_set(g, v.n_p_prime);
    v.solution_set_size = sols.size();
    v.size_matches = v.solution_set_size == v.n_p_prime;
    v.is_subgroup = is_subgroup(sols);
    v.counterexample = v.sylow_cyclic && v.size_matches && !v.is_subgroup;
    if (v.counterexample) v.solution_set = sols.elements();
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<QuestionVerdict> search_question(const Corpus& corpus) {
  std::vector<QuestionVerdict> out;
  for (const auto& entry : corpus) {
    auto vs = search_question(entry.group);
    for (auto& v : vs) v.label = entry.label;
    out.insert(out.end(), vs.begin(), vs.end());
  }
  return out;
}

Rational Rational::reduced(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  const std::uint64_t g = gcd(num, den);
  return {num / g, den / g};
}

std::vector<RatioEntry> ratio_scan(const Corpus& corpus, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  std::vector<RatioEntry> out;
  for (const auto& [label, g] : corpus) {
    const PsiReport r = psi_report(g, {p}, PsiMode::kFast);
    out.push_back({label, Rational::reduced(r.psi_pi_group, r.psi_pi_cyclic)});
  }
  std::stable_sort(out.begin(), out.end(), [](const RatioEntry& a, const RatioEntry& b) {
    if (a.ratio < b.ratio) return true;
    if (b.ratio < a.ratio) return false;
    return a.label < b.label;
  });
  return out;
}

}  // namespace elorder
