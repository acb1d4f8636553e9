#include "elorder/psi_stats.hpp"

namespace elorder {

OrderSpectrum order_spectrum(const FiniteGroup& g) {
  OrderSpectrum s{g.order(), {}};
  for (const auto o : g.element_orders()) ++s.counts[o];
  return s;
}

OrderSpectrum cyclic_spectrum(std::uint64_t n) {
  OrderSpectrum s{n, {}};
  for (const auto d : divisors(n)) s.counts[d] = euler_phi(d);
  return s;
}

PiDecomposition pi_decompose(const FiniteGroup& g, Element x, const PrimeSet& pi) {
  const std::uint64_t d = g.element_order(x);
  const std::uint64_t u = pi_part(d, pi);
  const std::uint64_t v = d / u;
  // s*u + t*v = 1, so x = x^{t v} * x^{s u}; x^{t v} has order u and
  // x^{s u} has order v.
  const Bezout b = bezout(u, v);
  auto reduce = [d](std::int64_t coeff, std::uint64_t factor) {
    const auto sd = static_cast<std::int64_t>(d);
    const std::int64_t c = ((coeff % sd) + sd) % sd;
    return static_cast<std::uint64_t>(c) * factor % d;
  };
  return {g.power(x, reduce(b.t, v)), g.power(x, reduce(b.s, u)), u, v};
}

std::uint64_t psi(const FiniteGroup& g) {
  std::uint64_t sum = 0;
  for (const auto& [d, c] : order_spectrum(g).counts) sum = checked_add(sum, checked_mul(d, c));
  return sum;
}

std::uint64_t psi_pi(const FiniteGroup& g, const PrimeSet& pi, PsiMode mode) {
  const std::uint64_t m = pi_complement_part(g.order(), pi);
  std::uint64_t via_power = 0;
  for (Element x = 0; x < g.order(); ++x) {
    via_power = checked_add(via_power, g.element_order(g.power(x, m)));
  }
  if (mode == PsiMode::kFast) return via_power;

  std::uint64_t via_parts = 0;
  for (Element x = 0; x < g.order(); ++x) {
    via_parts = checked_add(via_parts, g.element_order(pi_decompose(g, x, pi).pi_part));
  }
  if (via_parts != via_power) {
    throw ConsistencyError("psi_pi mismatch on " + g.label() + " for pi=" + format_prime_set(pi) +
                           ": sum o(x_pi) = " + std::to_string(via_parts) +
                           ", sum o(x^m) = " + std::to_string(via_power));
  }
  return via_parts;
}

PsiReport psi_report(const FiniteGroup& g, const PrimeSet& pi, PsiMode mode) {
  PsiReport r;
  r.label = g.label();
  r.n = g.order();
  r.pi = pi;
  r.psi_pi_group = psi_pi(g, pi, mode);
  r.psi_pi_cyclic = psi_pi_cyclic(r.n, pi);
  r.deficit = static_cast<std::int64_t>(r.psi_pi_cyclic) - static_cast<std::int64_t>(r.psi_pi_group);
  r.equality = r.deficit == 0;
  return r;
}

}  // namespace elorder
