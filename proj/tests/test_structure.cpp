#include <doctest.h>

#include <algorithm>

#include "elorder/catalog.hpp"
#include "elorder/structure.hpp"

using namespace elorder;

namespace {

const Corpus& corpus() {
  static const Corpus c = default_corpus();
  return c;
}

FiniteGroup make(const std::string& s) { return build(*parse_group_spec(s)); }

Corpus single(const std::string& s) {
  Corpus c;
  FiniteGroup g = make(s);
  c.push_back({g.label(), std::move(g)});
  return c;
}

}  // namespace

TEST_CASE("equality structure of cyclic groups") {
  const FiniteGroup c12 = make("C:12");
  for (const auto& pi : pi_sets(12, PiPolicy::kSubsets)) {
    const auto s = detect_equality_structure(c12, pi);
    CHECK(s.classified);
    CHECK(s.h_size() == s.n_pi_prime);
  }
}

TEST_CASE("equality structure of Q8 x| C9") {
  const FiniteGroup g = make("P:smallgroup_72_3");
  const auto s3 = detect_equality_structure(g, {3});
  CHECK(s3.n_pi == 9);
  CHECK(s3.has_element_of_order_n_pi());
  CHECK(s3.h_size() == 8);
  CHECK(s3.h_is_subgroup);
  CHECK(s3.h_is_normal);
  CHECK(s3.classified);

  // Sylow 2-subgroup is Q8: no element of order 8.
  const auto s2 = detect_equality_structure(g, {2});
  CHECK(s2.n_pi == 8);
  CHECK_FALSE(s2.has_element_of_order_n_pi());
  // Every element of order 1, 3 or 9 solves x^9 = 1: 1 + 2 + 24 of them.
  CHECK(s2.h_size() == 27);
  CHECK_FALSE(s2.h_is_subgroup);
  CHECK_FALSE(s2.h_is_normal);
  CHECK_FALSE(s2.classified);
  CHECK(psi_report(g, {2}).deficit == 234);
}

TEST_CASE("equality structure of S_3") {
  const FiniteGroup s3 = make("S:3");
  const auto three = detect_equality_structure(s3, {3});
  CHECK(three.h_size() == 4);
  CHECK_FALSE(three.classified);

  const auto two = detect_equality_structure(s3, {2});
  CHECK(two.h_size() == 3);
  CHECK(two.classified);
}

TEST_CASE("verify_main_theorem small cases") {
  const auto c72 = verify_main_theorem(single("C:72"), PiPolicy::kSubsets);
  REQUIRE(c72.groups.size() == 1);
  CHECK(c72.groups[0].records.size() == 4);
  for (const auto& r : c72.groups[0].records) {
    CHECK(r.psi.equality);
    CHECK(r.structure.classified);
  }
  CHECK(c72.ok());

  const auto s3 = verify_main_theorem(single("S:3"), PiPolicy::kPrimes);
  const auto& rec = s3.groups[0].records.front();
  CHECK(rec.psi.pi == PrimeSet{2});
  CHECK(rec.psi.psi_pi_group == 9);
  CHECK(rec.psi.psi_pi_cyclic == 9);
  CHECK(rec.psi.equality);
  CHECK(rec.structure.classified);
  CHECK(s3.ok());

  const auto q8 = verify_main_theorem(single("Q8"), PiPolicy::kPrimes);
  CHECK(q8.groups[0].records.front().psi.psi_pi_group == 27);
  CHECK(q8.groups[0].records.front().psi.psi_pi_cyclic == 43);
  CHECK(q8.ok());
}

TEST_CASE("equality iff classified across the corpus") {
  const auto report = verify_main_theorem(corpus(), PiPolicy::kSubsets);
  REQUIRE(report.groups.size() == corpus().size());
  for (std::size_t i = 0; i < corpus().size(); ++i) {
    const auto& gv = report.groups[i];
    CAPTURE(gv.label);
    CHECK(gv.frobenius_ok);
    CHECK(gv.certificate_ok);
    CHECK(gv.certificate_psi_ok);
    for (const auto& r : gv.records) {
      CAPTURE(format_prime_set(r.psi.pi));
      CHECK(r.bound_ok);
      CHECK(r.biconditional_ok);
      CHECK(r.corollary.holds());
      // Conjugation closure of H holds whether or not H is a subgroup.
      CHECK(is_conjugation_closed(ElementSet(corpus()[i].group, r.structure.h_set)));
    }
  }
  CHECK(report.ok());
}

TEST_CASE("cyclic-Sylow witness matches known Sylow structure") {
  // (spec, prime, Sylow p-subgroup cyclic?)
  const std::vector<std::tuple<std::string, std::uint64_t, bool>> known{
      {"Q8", 2, false},   {"S:4", 2, false}, {"S:4", 3, true},  {"A:4", 2, false}, {"A:4", 3, true},
      {"D:3", 2, true},   {"D:5", 2, true},  {"D:4", 2, false}, {"D:6", 2, false}, {"A:5", 5, true},
      {"A:5", 2, false},  {"C:36", 2, true}, {"C:2xC:2", 2, false},
      {"P:sl_2_3", 2, false}, {"P:sl_2_3", 3, true}, {"P:smallgroup_72_3", 3, true},
      {"P:smallgroup_72_3", 2, false}};
  for (const auto& [s, p, cyclic] : known) {
    CAPTURE(s);
    CAPTURE(p);
    const auto verdicts = search_question(make(s));
    const auto it = std::find_if(verdicts.begin(), verdicts.end(), [&](const auto& v) { return v.prime == p; });
    REQUIRE(it != verdicts.end());
    CHECK(it->sylow_cyclic == cyclic);
  }
}

TEST_CASE("equality for a single prime forces an element of full p-part") {
  for (const auto& [label, g] : corpus()) {
    for (const auto& [p, a] : factorize(g.order())) {
      if (!psi_report(g, {p}, PsiMode::kFast).equality) continue;
      CAPTURE(label);
      const std::uint64_t pa = checked_pow(p, a);
      bool found = false;
      for (Element x = 0; x < g.order(); ++x) found = found || pi_part(g.element_order(x), {p}) == pa;
      CHECK(found);
      // Averaging bound: some o(x_p) >= (p^{2a+1}+1) / (p^a (p+1)) > p^{a-1}.
      const std::uint64_t num = checked_pow(p, 2 * a + 1) + 1;
      const std::uint64_t den = pa * (p + 1);
      CHECK(num > den * (pa / p));
    }
  }
}

TEST_CASE("check_corollary") {
  const FiniteGroup c12 = make("C:12");
  for (const auto& pi : pi_sets(12, PiPolicy::kSubsets)) {
    const auto c = check_corollary(c12, pi);
    CHECK(c.premise);
    CHECK(c.cyclic);
    CHECK(c.holds());
  }
  const auto ex = check_corollary(make("P:smallgroup_72_3"), {2});
  CHECK_FALSE(ex.premise);
  CHECK_FALSE(ex.cyclic);
  CHECK(ex.holds());

  const auto s3 = check_corollary(make("S:3"), {2});
  CHECK_FALSE(s3.premise);
  CHECK(s3.holds());
}

TEST_CASE("question search") {
  for (const auto& v : search_question(make("C:60"))) {
    CHECK(v.sylow_cyclic);
    CHECK(v.size_matches);
    CHECK(v.is_subgroup);
  }
  const auto s3 = search_question(make("S:3"));
  REQUIRE(s3.front().prime == 2);
  CHECK(s3.front().sylow_cyclic);
  CHECK(s3.front().solution_set_size == 3);
  CHECK(s3.front().size_matches);
  CHECK(s3.front().is_subgroup);
  CHECK_FALSE(s3.front().counterexample);

  const auto all = search_question(corpus());
  for (const auto& v : all) {
    CHECK(v.consistent());
    CHECK_FALSE(v.counterexample);
  }
}

TEST_CASE("ratio scan") {
  Corpus c = single("Q8");
  auto more = single("S:3");
  c.push_back(std::move(more.front()));
  auto cyc = single("C:8");
  c.push_back(std::move(cyc.front()));
  const auto r = ratio_scan(c, 2);
  REQUIRE(r.size() == 3);
  CHECK(r[0].label == "Q8");
  CHECK(r[0].ratio == Rational{27, 43});
  CHECK(r[1].ratio == Rational{1, 1});
  CHECK(r[2].ratio == Rational{1, 1});
  CHECK(r[1].label == "C_8");

  const auto full = ratio_scan(corpus(), 3);
  for (std::size_t i = 1; i < full.size(); ++i) CHECK_FALSE(full[i].ratio < full[i - 1].ratio);
  CHECK_THROWS_AS(ratio_scan(c, 4), std::invalid_argument);
}

TEST_CASE("pi_sets") {
  CHECK(pi_sets(72, PiPolicy::kPrimes) == std::vector<PrimeSet>{{2}, {3}});
  CHECK(pi_sets(72, PiPolicy::kSubsets) == std::vector<PrimeSet>{{}, {2}, {3}, {2, 3}});
  CHECK(pi_sets(1, PiPolicy::kSubsets) == std::vector<PrimeSet>{{}});
  CHECK_THROWS_AS(pi_sets(2 * 3 * 5 * 7 * 11, PiPolicy::kSubsets), std::invalid_argument);
}
