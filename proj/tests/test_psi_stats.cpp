#include <doctest.h>

#include "elorder/catalog.hpp"
#include "elorder/psi_stats.hpp"

using namespace elorder;

namespace {

const Corpus& corpus() {
  static const Corpus c = default_corpus();
  return c;
}

FiniteGroup make(const std::string& s) { return build(*parse_group_spec(s)); }

using Counts = std::map<std::uint64_t, std::uint64_t>;

}  // namespace

TEST_CASE("order spectrum") {
  CHECK(order_spectrum(make("C:6")).counts == Counts{{1, 1}, {2, 1}, {3, 2}, {6, 2}});
  CHECK(order_spectrum(make("S:3")).counts == Counts{{1, 1}, {2, 3}, {3, 2}});
  CHECK(order_spectrum(make("C:36")) == cyclic_spectrum(36));
  for (const auto& [label, g] : corpus()) {
    CAPTURE(label);
    const auto s = order_spectrum(g);
    std::uint64_t total = 0;
    for (const auto& [d, c] : s.counts) {
      CHECK(g.order() % d == 0);
      total += c;
    }
    CHECK(total == g.order());
    CHECK(s.count(1) == 1);
  }
}

TEST_CASE("pi decomposition examples") {
  const FiniteGroup c12 = make("C:12");
  const auto id = pi_decompose(c12, kIdentity, {2});
  CHECK(id.pi_part == kIdentity);
  CHECK(id.pi_prime_part == kIdentity);
  CHECK(id.pi_order == 1);
  CHECK(id.pi_prime_order == 1);

  // g^2 has order 6: its 2-part is g^6, its 2'-part g^8.
  const auto d = pi_decompose(c12, 2, {2});
  CHECK(d.pi_part == 6);
  CHECK(d.pi_prime_part == 8);
  CHECK(d.pi_order == 2);
  CHECK(d.pi_prime_order == 3);

  // g^3 has order 4, a 2-number.
  const auto e = pi_decompose(c12, 3, {2});
  CHECK(e.pi_part == 3);
  CHECK(e.pi_prime_part == kIdentity);
}

TEST_CASE("pi decomposition invariants") {
  for (const auto& [label, g] : corpus()) {
    if (g.order() > 200) continue;
    CAPTURE(label);
    for (const auto p : prime_divisors(g.order())) {
      const PrimeSet pi{p};
      for (Element x = 0; x < g.order(); ++x) {
        const auto d = pi_decompose(g, x, pi);
        CHECK(g(d.pi_part, d.pi_prime_part) == x);
        CHECK(g(d.pi_prime_part, d.pi_part) == x);
        CHECK(g.element_order(d.pi_part) == d.pi_order);
        CHECK(g.element_order(d.pi_prime_part) == d.pi_prime_order);
        CHECK(pi_part(d.pi_order, pi) == d.pi_order);
        CHECK(pi_part(d.pi_prime_order, pi) == 1);
        CHECK(d.pi_order * d.pi_prime_order == g.element_order(x));
      }
    }
  }
}

TEST_CASE("psi") {
  CHECK(psi(make("C:6")) == 21);
  CHECK(psi(make("S:3")) == 13);
  CHECK(psi(make("Q8")) == 27);
}

TEST_CASE("psi_pi on the Q8 x| C9 example") {
  const FiniteGroup g = make("P:smallgroup_72_3");
  // Oracle: sum of count * pi-part over the published spectrum.
  const Counts published{{1, 1}, {2, 1}, {3, 2}, {4, 6}, {6, 2}, {9, 24}, {12, 12}, {18, 24}};
  std::uint64_t two = 0, three = 0;
  for (const auto& [d, c] : published) {
    two += c * pi_part(d, {2});
    three += c * pi_part(d, {3});
  }
  CHECK(three == 488);
  CHECK(psi_pi(g, {3}) == 488);
  CHECK(psi_pi_cyclic(72, {3}) == 488);
  // The spectrum has no element of order 8, so psi_2 falls short of the
  // cyclic value 387.
  CHECK(two == 153);
  CHECK(psi_pi(g, {2}) == 153);
  CHECK(psi_pi_cyclic(72, {2}) == 387);
}

TEST_CASE("psi_pi trivial cases") {
  for (const auto& [label, g] : corpus()) {
    CAPTURE(label);
    CHECK(psi_pi(g, {}) == g.order());
    CHECK(psi_pi(g, {101}) == g.order());
    CHECK(psi_pi(g, prime_divisors(g.order())) == psi(g));
    CHECK(psi_pi(g, {2}, PsiMode::kFast) == psi_pi(g, {2}, PsiMode::kVerify));
  }
}

TEST_CASE("psi_report") {
  const auto r = psi_report(make("S:3"), {3});
  CHECK(r.psi_pi_group == 10);
  CHECK(r.psi_pi_cyclic == 14);
  CHECK(r.deficit == 4);
  CHECK_FALSE(r.equality);

  const auto eq = psi_report(make("P:smallgroup_72_3"), {3});
  CHECK(eq.deficit == 0);
  CHECK(eq.equality);

  for (const std::uint64_t n : {1, 7, 12, 36, 72}) {
    const FiniteGroup c = build(GroupSpec{spec::Cyclic{n}});
    for (const auto p : prime_divisors(n)) CHECK(psi_report(c, {p}).equality);
  }
}

TEST_CASE("psi(G) <= psi(C_n), equal exactly for cyclic spectra") {
  for (const auto& [label, g] : corpus()) {
    CAPTURE(label);
    const auto value = psi(g);
    CHECK(value <= psi_cyclic(g.order()));
    CHECK((value == psi_cyclic(g.order())) == (order_spectrum(g) == cyclic_spectrum(g.order())));
  }
}
