#include "elorder/partition.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "elorder/max_flow.hpp"

namespace elorder {

DivisorFlowNetwork build_network(const OrderSpectrum& spectrum) {
  DivisorFlowNetwork net;
  net.n = spectrum.group_order;
  for (const auto& [d, c] : spectrum.counts) net.orders.push_back({d, c});
  for (const auto e : divisors(net.n)) net.divisors.push_back({e, euler_phi(e)});
  for (std::size_t l = 0; l < net.orders.size(); ++l) {
    for (std::size_t r = 0; r < net.divisors.size(); ++r) {
      if (net.divisors[r].key % net.orders[l].key == 0) net.edges.emplace_back(l, r);
    }
  }
  return net;
}

DivisorFlowNetwork build_network(const FiniteGroup& g) { return build_network(order_spectrum(g)); }

std::variant<ClassFlow, HallViolation> solve_class_flow(const DivisorFlowNetwork& net) {
  const std::size_t left = net.orders.size();
  const std::size_t right = net.divisors.size();
  const std::size_t source = left + right;
  const std::size_t sink = source + 1;
  MaxFlow mf(sink + 1);

  std::uint64_t demand_total = 0;
  for (std::size_t l = 0; l < left; ++l) {
    mf.add_edge(source, l, static_cast<std::int64_t>(net.orders[l].amount));
  }
  std::vector<std::size_t> edge_ids;
  edge_ids.reserve(net.edges.size());
  for (const auto& [l, r] : net.edges) {
    edge_ids.push_back(mf.add_edge(l, left + r, static_cast<std::int64_t>(net.n)));
  }
  for (std::size_t r = 0; r < right; ++r) {
    mf.add_edge(left + r, sink, static_cast<std::int64_t>(net.divisors[r].amount));
    demand_total += net.divisors[r].amount;
  }

  const auto value = static_cast<std::uint64_t>(mf.solve(source, sink));
  if (value == demand_total) {
    std::uint64_t supply_total = 0;
    for (const auto& node : net.orders) supply_total += node.amount;
    if (supply_total == demand_total) {
      ClassFlow flow{net.n, {}};
      for (std::size_t i = 0; i < net.edges.size(); ++i) {
        const auto f = mf.flow_on(edge_ids[i]);
        if (f > 0) {
          const auto& [l, r] = net.edges[i];
          flow.amounts[{net.orders[l].key, net.divisors[r].key}] = static_cast<std::uint64_t>(f);
        }
      }
      return flow;
    }
  }

  // Divisor classes outside the residual-reachable set form a deficient set:
  // every supplier that can reach them is itself unreachable, and the cut
  // bound gives supply(those suppliers) < demand(those divisors).
  const auto reach = mf.residual_reachable(source);
  HallViolation witness;
  std::set<std::size_t> suppliers;
  for (std::size_t r = 0; r < right; ++r) {
    if (reach[left + r]) continue;
    witness.divisors.push_back(net.divisors[r].key);
    witness.demand += net.divisors[r].amount;
    for (const auto& [l, rr] : net.edges) {
      if (rr == r) suppliers.insert(l);
    }
  }
  for (const auto l : suppliers) {
    witness.admissible_orders.push_back(net.orders[l].key);
    witness.supply += net.orders[l].amount;
  }
  return witness;
}

bool is_feasible_class_flow(const DivisorFlowNetwork& net, const ClassFlow& flow) {
  std::map<std::uint64_t, std::uint64_t> out, in;
  for (const auto& [key, amount] : flow.amounts) {
    const auto& [d, e] = key;
    if (e % d != 0) return false;
    out[d] += amount;
    in[e] += amount;
  }
  for (const auto& node : net.orders) {
    if (out[node.key] != node.amount) return false;
    out.erase(node.key);
  }
  for (const auto& node : net.divisors) {
    if (in[node.key] != node.amount) return false;
    in.erase(node.key);
  }
  auto all_zero = [](const auto& m) {
    return std::all_of(m.begin(), m.end(), [](const auto& kv) { return kv.second == 0; });
  };
  return all_zero(out) && all_zero(in);
}

PartitionCertificate expand_certificate(const FiniteGroup& g, const ClassFlow& flow) {
  const std::uint64_t n = g.order();
  if (!is_feasible_class_flow(build_network(g), flow)) {
    throw std::invalid_argument("class flow is not a saturating flow for " + g.label());
  }
  std::map<std::uint64_t, std::vector<Element>> by_order;
  for (Element x = 0; x < n; ++x) by_order[g.element_order(x)].push_back(x);

  PartitionCertificate cert;
  cert.n = n;
  for (const auto e : divisors(n)) cert.classes[e];
  for (const auto& [d, elems] : by_order) {
    std::size_t next = 0;
    for (auto it = flow.amounts.lower_bound({d, 0}); it != flow.amounts.end() && it->first.first == d;
         ++it) {
      auto& target = cert.classes[it->first.second];
      for (std::uint64_t i = 0; i < it->second; ++i) target.push_back(elems[next++]);
    }
  }

  std::map<std::uint64_t, std::vector<std::uint64_t>> residues;
  for (std::uint64_t r = 0; r < n; ++r) residues[n / gcd(r, n)].push_back(r);
  cert.bijection.assign(n, 0);
  for (auto& [e, members] : cert.classes) {
    std::sort(members.begin(), members.end());
    const auto& pool = residues[e];
    for (std::size_t i = 0; i < members.size(); ++i) cert.bijection[members[i]] = pool[i];
  }
  return cert;
}

PartitionResult max_flow_partition(const FiniteGroup& g) {
  PartitionResult result;
  auto solved = solve_class_flow(build_network(g));
  if (auto* violation = std::get_if<HallViolation>(&solved)) {
    result.violation = std::move(*violation);
    return result;
  }
  result.flow = std::get<ClassFlow>(std::move(solved));
  result.certificate = expand_certificate(g, *result.flow);
  return result;
}

namespace {

std::uint64_t naive_order(const FiniteGroup& g, Element x) {
  std::uint64_t k = 1;
  for (Element y = x; y != kIdentity; y = g(y, x)) ++k;
  return k;
}

Element naive_power(const FiniteGroup& g, Element x, std::uint64_t e) {
  Element y = kIdentity;
  for (std::uint64_t i = 0; i < e; ++i) y = g(y, x);
  return y;
}

std::uint64_t residue_order(std::uint64_t r, std::uint64_t n) {
  std::uint64_t k = 1;
  for (std::uint64_t y = r % n; y != 0; y = (y + r) % n) ++k;
  return k;
}

}  // namespace

CertificateCheck validate_certificate(const FiniteGroup& g, const PartitionCertificate& cert) {
  CertificateCheck check;
  const std::uint64_t n = g.order();
  auto fail = [&](bool& flag, std::string msg) {
    flag = false;
    if (check.problems.size() < 32) check.problems.push_back(std::move(msg));
  };

  if (cert.n != n || cert.bijection.size() != n) {
    fail(check.disjoint_cover, "certificate size does not match the group order");
    return check;
  }

  std::vector<std::uint64_t> residue_orders(n);
  std::map<std::uint64_t, std::set<std::uint64_t>> residues_of_order;
  for (std::uint64_t r = 0; r < n; ++r) {
    residue_orders[r] = residue_order(r, n);
    residues_of_order[residue_orders[r]].insert(r);
  }

  std::vector<int> seen(n, 0);
  for (std::uint64_t e = 1; e <= n; ++e) {
    if (n % e == 0 && !cert.classes.contains(e)) {
      fail(check.disjoint_cover, "divisor " + std::to_string(e) + " has no class");
    }
  }
  for (const auto& [e, members] : cert.classes) {
    if (e == 0 || n % e != 0) {
      fail(check.disjoint_cover, "class key " + std::to_string(e) + " does not divide n");
      continue;
    }
    const auto& target = residues_of_order[e];
    if (members.size() != target.size()) {
      fail(check.class_sizes, "|L_" + std::to_string(e) + "| = " + std::to_string(members.size()) +
                                  ", expected " + std::to_string(target.size()));
    }
    std::set<std::uint64_t> images;
    for (const auto x : members) {
      if (x >= n) {
        fail(check.disjoint_cover, "element " + std::to_string(x) + " out of range");
        continue;
      }
      ++seen[x];
      if (naive_power(g, x, e) != kIdentity) {
        fail(check.annihilated, "x^" + std::to_string(e) + " != 1 for x = " + std::to_string(x));
      }
      const std::uint64_t fx = cert.bijection[x];
      images.insert(fx);
      if (fx >= n || residue_orders[fx % n] % naive_order(g, x) != 0) {
        fail(check.order_divides, "o(" + std::to_string(x) + ") does not divide o(f(x))");
      }
    }
    if (images != target) {
      fail(check.bijection_onto, "f(L_" + std::to_string(e) + ") is not the set of order-" +
                                     std::to_string(e) + " residues");
    }
  }
  for (Element x = 0; x < n; ++x) {
    if (seen[x] != 1) {
      fail(check.disjoint_cover,
           "element " + std::to_string(x) + " appears " + std::to_string(seen[x]) + " times");
    }
  }
  return check;
}

std::uint64_t certificate_psi_pi(const PartitionCertificate& cert, const PrimeSet& pi) {
  std::uint64_t sum = 0;
  for (const auto fx : cert.bijection) {
    sum = checked_add(sum, pi_part(cert.n / gcd(fx, cert.n), pi));
  }
  return sum;
}

SolutionCount count_solutions(const FiniteGroup& g, std::uint64_t d) {
  if (d == 0 || g.order() % d != 0) {
    throw std::invalid_argument(std::to_string(d) + " does not divide |G| = " +
                                std::to_string(g.order()));
  }
  const ElementSet sols = solution_set(g, d);
  SolutionCount sc;
  sc.d = d;
  sc.count = sols.size();
  sc.multiple_of_d = sc.count % d == 0;
  sc.exact = sc.count == d;
  if (sc.exact) {
    sc.subgroup = is_subgroup(sols);
    if (*sc.subgroup) sc.normal = is_normal(sols);
  }
  return sc;
}

std::vector<SolutionCount> frobenius_sweep(const FiniteGroup& g) {
  std::vector<SolutionCount> out;
  for (const auto d : divisors(g.order())) out.push_back(count_solutions(g, d));
  return out;
}

}  // namespace elorder
