#include <doctest.h>

#include "elorder/catalog.hpp"
#include "elorder/partition.hpp"
#include "elorder/reference_example.hpp"

using namespace elorder;

namespace {

const Corpus& corpus() {
  static const Corpus c = default_corpus();
  return c;
}

FiniteGroup make(const std::string& s) { return build(*parse_group_spec(s)); }

}  // namespace

TEST_CASE("network for S_3") {
  const auto net = build_network(make("S:3"));
  CHECK(net.n == 6);
  REQUIRE(net.orders.size() == 3);
  CHECK(net.orders[1].key == 2);
  CHECK(net.orders[1].amount == 3);
  CHECK(net.orders[2].key == 3);
  CHECK(net.orders[2].amount == 2);
  REQUIRE(net.divisors.size() == 4);
  CHECK(net.divisors[3].key == 6);
  CHECK(net.divisors[3].amount == 2);
  // 1 -> {1,2,3,6}, 2 -> {2,6}, 3 -> {3,6}
  CHECK(net.edges.size() == 8);
  for (const auto& [l, r] : net.edges) CHECK(net.divisors[r].key % net.orders[l].key == 0);
}

TEST_CASE("cyclic groups get the diagonal partition") {
  for (const std::uint64_t n : {1, 8, 12, 36, 72}) {
    const FiniteGroup c = build(GroupSpec{spec::Cyclic{n}});
    const auto r = max_flow_partition(c);
    REQUIRE(r.ok());
    for (const auto& [e, members] : r.certificate->classes) {
      for (const auto x : members) CHECK(c.element_order(x) == e);
    }
    CHECK(validate_certificate(c, *r.certificate).ok());
  }
}

TEST_CASE("S_3 and Q8 x| C9 certificates") {
  const FiniteGroup s3 = make("S:3");
  const auto r = max_flow_partition(s3);
  REQUIRE(r.ok());
  CHECK(validate_certificate(s3, *r.certificate).ok());
  CHECK(r.certificate->classes.at(1) == std::vector<Element>{kIdentity});
  CHECK(r.certificate->classes.at(6).size() == 2);

  const FiniteGroup g = make("P:smallgroup_72_3");
  const auto rg = max_flow_partition(g);
  REQUIRE(rg.ok());
  CHECK(validate_certificate(g, *rg.certificate).ok());
  CHECK(rg.certificate->classes.at(72).size() == 24);
  for (const auto x : rg.certificate->classes.at(72)) CHECK(g.element_order(x) == 18);
}

TEST_CASE("published (L_d) shape is a feasible flow") {
  const FiniteGroup g = make("P:smallgroup_72_3");
  const ClassFlow shape = reference_partition_shape();
  const auto net = build_network(g);
  CHECK(is_feasible_class_flow(net, shape));
  const auto cert = expand_certificate(g, shape);
  CHECK(validate_certificate(g, cert).ok());
  CHECK(cert.classes.at(8).size() == 4);
  for (const auto x : cert.classes.at(8)) CHECK(g.element_order(x) == 4);
  for (const auto x : cert.classes.at(36)) CHECK(g.element_order(x) == 9);

  ClassFlow broken = shape;
  broken.amounts[{4, 8}] = 3;
  broken.amounts[{4, 4}] = 3;
  CHECK_FALSE(is_feasible_class_flow(net, broken));
  ClassFlow wrong_edge = shape;
  wrong_edge.amounts.erase({4, 8});
  wrong_edge.amounts[{4, 9}] = 4;
  CHECK_FALSE(is_feasible_class_flow(net, wrong_edge));
  CHECK_THROWS_AS(expand_certificate(g, broken), std::invalid_argument);
}

TEST_CASE("infeasible spectrum yields a Hall violation") {
  // Not a group: five elements of order 3 in a set of size 6.
  OrderSpectrum fake{6, {{1, 1}, {3, 5}}};
  const auto solved = solve_class_flow(build_network(fake));
  REQUIRE(std::holds_alternative<HallViolation>(solved));
  const auto& w = std::get<HallViolation>(solved);
  CHECK(w.demand > w.supply);
  CHECK_FALSE(w.divisors.empty());
  // The witness lists exactly the orders that may feed its divisors.
  std::set<std::uint64_t> admissible;
  for (const auto e : w.divisors) {
    for (const auto& [d, c] : fake.counts) {
      if (e % d == 0) admissible.insert(d);
    }
  }
  CHECK(std::vector<std::uint64_t>(admissible.begin(), admissible.end()) == w.admissible_orders);
}

TEST_CASE("validator catches corrupted certificates") {
  const FiniteGroup g = make("D:4");
  const auto good = *max_flow_partition(g).certificate;
  REQUIRE(validate_certificate(g, good).ok());

  auto moved = good;
  const Element x = moved.classes.at(8).back();
  moved.classes.at(8).pop_back();
  moved.classes.at(2).push_back(x);
  const auto c1 = validate_certificate(g, moved);
  CHECK_FALSE(c1.class_sizes);
  CHECK_FALSE(c1.ok());

  auto bad_f = good;
  std::swap(bad_f.bijection[0], bad_f.bijection[moved.classes.at(8).front()]);
  CHECK_FALSE(validate_certificate(g, bad_f).ok());

  auto dup = good;
  dup.classes.at(4).front() = dup.classes.at(8).front();
  CHECK_FALSE(validate_certificate(g, dup).disjoint_cover);

  // Order-4 elements cannot sit in L_2.
  auto lattice = good;
  std::swap(lattice.classes.at(2).front(), lattice.classes.at(4).front());
  const Element four = [&] {
    for (const auto y : lattice.classes.at(2)) {
      if (g.element_order(y) == 4) return y;
    }
    return Element{0};
  }();
  if (four != 0) CHECK_FALSE(validate_certificate(g, lattice).annihilated);
}

TEST_CASE("certificates exist for every corpus group and reproduce psi_pi(C_n)") {
  for (const auto& [label, g] : corpus()) {
    CAPTURE(label);
    const auto r = max_flow_partition(g);
    REQUIRE(r.ok());
    CHECK(validate_certificate(g, *r.certificate).ok());
    const PrimeSet all = prime_divisors(g.order());
    CHECK(certificate_psi_pi(*r.certificate, all) == psi_cyclic(g.order()));
    for (const auto p : all) CHECK(certificate_psi_pi(*r.certificate, {p}) == psi_pi_cyclic(g.order(), {p}));
    CHECK(max_flow_partition(g).certificate->bijection == r.certificate->bijection);
  }
}

TEST_CASE("count_solutions") {
  const FiniteGroup s3 = make("S:3");
  const auto two = count_solutions(s3, 2);
  CHECK(two.count == 4);
  CHECK(two.multiple_of_d);
  CHECK_FALSE(two.exact);
  CHECK_FALSE(two.subgroup.has_value());

  const auto three = count_solutions(s3, 3);
  CHECK(three.count == 3);
  CHECK(three.exact);
  CHECK(three.subgroup == true);
  CHECK(three.normal == true);

  const auto all = count_solutions(s3, 6);
  CHECK(all.count == 6);
  CHECK(all.subgroup == true);

  CHECK_THROWS_AS(count_solutions(s3, 4), std::invalid_argument);
  CHECK_THROWS_AS(count_solutions(s3, 0), std::invalid_argument);
}

TEST_CASE("frobenius sweep") {
  for (const auto& sc : frobenius_sweep(make("C:24"))) CHECK(sc.count == sc.d);

  for (const auto& sc : frobenius_sweep(make("Q8"))) {
    if (sc.d == 2) {
      CHECK(sc.count == 2);
      CHECK(sc.exact);
      CHECK(sc.subgroup == true);
    }
  }
  for (const auto& sc : frobenius_sweep(make("A:4"))) {
    if (sc.d == 4) {
      CHECK(sc.count == 4);
      CHECK(sc.subgroup == true);
      CHECK(sc.normal == true);
    }
  }

  for (const auto& [label, g] : corpus()) {
    CAPTURE(label);
    for (const auto& sc : frobenius_sweep(g)) {
      CHECK(sc.count >= 1);
      CHECK(sc.count % sc.d == 0);
      if (sc.exact) {
        CHECK(sc.subgroup == true);
        CHECK(sc.normal == true);
      }
    }
  }
}
