#include "elorder/report.hpp"

namespace elorder {

using nlohmann::json;

json to_json(const PrimeSet& pi) { return json(std::vector<std::uint64_t>(pi.begin(), pi.end())); }

json to_json(const OrderSpectrum& s) {
  json arr = json::array();
  for (const auto& [d, c] : s.counts) arr.push_back({{"order", d}, {"count", c}});
  return arr;
}

json to_json(const PsiReport& r) {
  return {{"label", r.label},
          {"n", r.n},
          {"pi", to_json(r.pi)},
          {"psi_pi_group", r.psi_pi_group},
          {"psi_pi_cyclic", r.psi_pi_cyclic},
          {"deficit", r.deficit},
          {"equality", r.equality}};
}

json to_json(const EqualityStructure& s) {
  return {{"pi", to_json(s.pi)},
          {"n_pi", s.n_pi},
          {"n_pi_prime", s.n_pi_prime},
          {"has_element_of_order_n_pi", s.has_element_of_order_n_pi()},
          {"cyclic_witness", s.cyclic_witness ? json(*s.cyclic_witness) : json(nullptr)},
          {"h_size", s.h_size()},
          {"h_is_subgroup", s.h_is_subgroup},
          {"h_is_normal", s.h_is_normal},
          {"classified", s.classified}};
}

json to_json(const CorollaryCheck& c) {
  return {{"premise", c.premise}, {"cyclic", c.cyclic}, {"holds", c.holds()}};
}

json to_json(const PartitionCertificate& c, const FiniteGroup& g) {
  json classes = json::array();
  for (const auto& [e, members] : c.classes) {
    std::map<std::uint64_t, std::uint64_t> by_order;
    for (const auto x : members) ++by_order[g.element_order(x)];
    json orders = json::array();
    for (const auto& [d, k] : by_order) orders.push_back({{"order", d}, {"count", k}});
    json images = json::array();
    for (const auto x : members) images.push_back(c.bijection[x]);
    classes.push_back({{"divisor", e},
                       {"size", members.size()},
                       {"elements", members},
                       {"images", images},
                       {"element_orders", orders}});
  }
  return {{"n", c.n}, {"classes", classes}};
}

json to_json(const CertificateCheck& c) {
  return {{"disjoint_cover", c.disjoint_cover}, {"class_sizes", c.class_sizes},
          {"annihilated", c.annihilated},       {"bijection_onto", c.bijection_onto},
          {"order_divides", c.order_divides},   {"problems", c.problems},
          {"ok", c.ok()}};
}

json to_json(const HallViolation& v) {
  return {{"divisors", v.divisors},
          {"demand", v.demand},
          {"admissible_orders", v.admissible_orders},
          {"supply", v.supply}};
}

json to_json(const SolutionCount& s) {
  return {{"d", s.d},
          {"count", s.count},
          {"multiple_of_d", s.multiple_of_d},
          {"exact", s.exact},
          {"subgroup", s.subgroup ? json(*s.subgroup) : json(nullptr)},
          {"normal", s.normal ? json(*s.normal) : json(nullptr)}};
}

json to_json(const GroupVerification& v) {
  json records = json::array();
  for (const auto& r : v.records) {
    records.push_back({{"psi", to_json(r.psi)},
                       {"structure", to_json(r.structure)},
                       {"corollary", to_json(r.corollary)},
                       {"bound_ok", r.bound_ok},
                       {"biconditional_ok", r.biconditional_ok}});
  }
  return {{"label", v.label},
          {"order", v.order},
          {"records", records},
          {"frobenius_divisors", v.frobenius_divisors},
          {"frobenius_ok", v.frobenius_ok},
          {"certificate_ok", v.certificate_ok},
          {"certificate_psi_ok", v.certificate_psi_ok},
          {"ok", v.ok()}};
}

json to_json(const QuestionVerdict& v) {
  json j = {{"label", v.label},
            {"prime", v.prime},
            {"sylow_cyclic", v.sylow_cyclic},
            {"n_p_prime", v.n_p_prime},
            {"solution_set_size", v.solution_set_size},
            {"size_matches", v.size_matches},
            {"is_subgroup", v.is_subgroup},
            {"counterexample", v.counterexample}};
  if (v.counterexample) j["solution_set"] = v.solution_set;
  return j;
}

json to_json(const RatioEntry& r) {
  return {{"label", r.label},
          {"numerator", r.ratio.num},
          {"denominator", r.ratio.den},
          {"ratio", r.ratio.str()}};
}

json make_report(const std::string& command, json inputs, json results, const CheckMap& checks) {
  json c = json::object();
  for (const auto& [name, pass] : checks) c[name] = pass ? "pass" : "fail";
  return {{"command", command},
          {"inputs", std::move(inputs)},
          {"results", std::move(results)},
          {"checks", std::move(c)},
          {"version", kReportVersion}};
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace elorder
