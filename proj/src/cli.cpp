#include "elorder/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "elorder/catalog.hpp"
#include "elorder/reference_example.hpp"
#include "elorder/report.hpp"

namespace elorder {

namespace {

using nlohmann::json;

struct Options {
  std::string group;
  std::string corpus;
  std::string pi;
  std::string pi_policy = "primes";
  std::string format = "text";
  std::string out;
  std::size_t cap = kDefaultOrderCap;
  std::uint64_t prime = 2;
};

struct Outcome {
  json results = json::array();
  CheckMap checks;
  std::string text;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Corpus load_groups(const Options& o) {
  if (!o.group.empty() && !o.corpus.empty()) throw InputError("give either --group or --corpus, not both");
  if (!o.corpus.empty()) {
    if (o.corpus != "default") throw InputError("unknown corpus '" + o.corpus + "' (only 'default')");
    Corpus c = default_corpus();
    for (const auto& e : c) {
      if (e.group.order() > o.cap) throw InputError("corpus group " + e.label + " exceeds --cap");
    }
    return c;
  }
  if (o.group.empty()) throw InputError("missing --group or --corpus");
  FiniteGroup g = build(*parse_group_spec(o.group), BuildOptions{o.cap});
  std::string label = g.label();
  Corpus c;
  c.push_back({std::move(label), std::move(g)});
  return c;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string pi_text(const json& pi) {
  std::string s = "{";
  for (std::size_t i = 0; i < pi.size(); ++i) s += (i ? "," : "") + pi[i].dump();
  return s + "}";
}

std::string orders_text(const json& arr) {
  std::string s = "{";
  for (std::size_t i = 0; i < arr.size(); ++i) {
    s += (i ? ", " : "") + arr[i]["order"].dump() + ":" + arr[i]["count"].dump();
  }
  return s + "}";
}

std::string psi_line(const json& r) {
  const std::string pi = pi_text(r["pi"]);
  std::ostringstream s;
  s << "pi=" << pi << ": psi_pi = " << r["psi_pi_group"] << ", psi_pi(C_" << r["n"].get<std::uint64_t>()
    << ") = " << r["psi_pi_cyclic"] << ", deficit " << r["deficit"] << ", "
    << (r["equality"].get<bool>() ? "EQUAL" : "STRICT");
  return s.str();
}

Outcome cmd_spectrum(const Corpus& corpus) {
  Outcome o;
  std::ostringstream t;
  for (const auto& [label, g] : corpus) {
    const json spec = to_json(order_spectrum(g));
    o.results.push_back({{"label", label}, {"order", g.order()}, {"spectrum", spec}});
    t << label << " (order " << g.order() << ")\n";
    for (const auto& e : spec) t << "  " << e["order"] << ": " << e["count"] << "\n";
  }
  o.text = t.str();
  return o;
}

Outcome cmd_psi(const Corpus& corpus, const std::optional<PrimeSet>& pi) {
  Outcome o;
  std::ostringstream t;
  bool bound = true;
  for (const auto& [label, g] : corpus) {
    std::vector<PrimeSet> sets;
    if (pi) {
      sets.push_back(*pi);
    } else {
      sets = pi_sets(g.order(), PiPolicy::kPrimes);
    }
    json reports = json::array();
    const std::uint64_t total = psi(g);
    t << label << " (order " << g.order() << "): psi = " << total << ", psi(C_" << g.order()
      << ") = " << psi_cyclic(g.order()) << "\n";
    for (const auto& s : sets) {
      const PsiReport r = psi_report(g, s);
      bound = bound && r.deficit >= 0;
      reports.push_back(to_json(r));
      t << "  " << psi_line(reports.back()) << "\n";
    }
    o.results.push_back({{"label", label},
                         {"order", g.order()},
                         {"psi", total},
                         {"psi_cyclic", psi_cyclic(g.order())},
                         {"reports", reports}});
  }
  o.checks["psi_pi_within_cyclic_bound"] = bound;
  o.text = t.str();
  return o;
}

std::string partition_text(const json& cert) {
  std::ostringstream t;
  std::uint64_t total = 0;
  for (const auto& c : cert["classes"]) {
    t << "  L_" << c["divisor"] << ": " << c["size"] << " element(s), orders "
      << orders_text(c["element_orders"]) << "\n";
    total += c["size"].get<std::uint64_t>();
  }
  t << "  total: " << total << "\n";
  return t.str();
}

Outcome cmd_partition(const Corpus& corpus) {
  Outcome o;
  std::ostringstream t;
  bool all_ok = true;
  for (const auto& [label, g] : corpus) {
    const PartitionResult r = max_flow_partition(g);
    json entry = {{"label", label}, {"order", g.order()}};
    t << label << " (order " << g.order() << ")\n";
    if (r.ok()) {
      const CertificateCheck check = validate_certificate(g, *r.certificate);
      entry["certificate"] = to_json(*r.certificate, g);
      entry["validation"] = to_json(check);
      all_ok = all_ok && check.ok();
      t << partition_text(entry["certificate"]) << "  validator: " << (check.ok() ? "ok" : "FAILED") << "\n";
      for (const auto& p : check.problems) t << "    " << p << "\n";
    } else {
      entry["hall_violation"] = to_json(*r.violation);
      all_ok = false;
      t << "  no saturating flow: divisors " << json(r.violation->divisors).dump() << " demand "
        << r.violation->demand << " but admissible orders " << json(r.violation->admissible_orders).dump()
        << " supply only " << r.violation->supply << "\n";
    }
    o.results.push_back(std::move(entry));
  }
  o.checks["certificates_valid"] = all_ok;
  o.text = t.str();
  return o;
}

Outcome cmd_frobenius(const Corpus& corpus) {
  Outcome o;
  std::ostringstream t;
  bool multiples = true, subgroups = true;
  auto flag = [](const json& v) { return v.is_null() ? std::string("-") : yes_no(v.get<bool>()); };
  for (const auto& [label, g] : corpus) {
    json counts = json::array();
    t << label << " (order " << g.order() << ")\n";
    for (const auto& sc : frobenius_sweep(g)) {
      multiples = multiples && sc.multiple_of_d;
      if (sc.exact) subgroups = subgroups && sc.subgroup.value_or(false) && sc.normal.value_or(false);
      counts.push_back(to_json(sc));
      const auto& j = counts.back();
      t << "  d=" << sc.d << ": count " << sc.count << ", multiple " << yes_no(sc.multiple_of_d)
        << ", exact " << yes_no(sc.exact) << ", subgroup " << flag(j["subgroup"]) << ", normal "
        << flag(j["normal"]) << "\n";
    }
    o.results.push_back({{"label", label}, {"order", g.order()}, {"counts", counts}});
  }
  o.checks["counts_are_multiples"] = multiples;
  o.checks["exact_sets_are_normal_subgroups"] = subgroups;
  o.text = t.str();
  return o;
}

Outcome cmd_verify(const Corpus& corpus, PiPolicy policy) {
  Outcome o;
  std::ostringstream t;
  const VerificationReport report = verify_main_theorem(corpus, policy);
  bool bound = true, bicond = true, frob = true, cert = true, corollary = true;
  std::size_t records = 0, equalities = 0;
  for (const auto& gv : report.groups) {
    o.results.push_back(to_json(gv));
    frob = frob && gv.frobenius_ok;
    cert = cert && gv.certificate_ok && gv.certificate_psi_ok;
    std::size_t eq = 0;
    for (const auto& r : gv.records) {
      ++records;
      bound = bound && r.bound_ok;
      bicond = bicond && r.biconditional_ok;
      corollary = corollary && r.corollary.holds();
      if (r.psi.equality) ++eq;
    }
    equalities += eq;
    t << (gv.ok() ? "ok   " : "FAIL ") << gv.label << " (order " << gv.order << "): " << gv.records.size()
      << " pi-sets, " << eq << " equality case(s), frobenius " << (gv.frobenius_ok ? "ok" : "FAIL")
      << ", certificate " << (gv.certificate_ok && gv.certificate_psi_ok ? "ok" : "FAIL") << "\n";
    for (const auto& r : gv.records) {
      if (r.bound_ok && r.biconditional_ok && r.corollary.holds()) continue;
      t << "    " << psi_line(to_json(r.psi)) << "; classified " << yes_no(r.structure.classified)
        << "; corollary " << (r.corollary.holds() ? "holds" : "FAILS") << "\n";
    }
  }
  t << report.groups.size() << " groups, " << records << " (group, pi) records, " << equalities
    << " equality cases\n";
  o.checks["psi_pi_within_cyclic_bound"] = bound;
  o.checks["equality_iff_classified"] = bicond;
  o.checks["frobenius_counts"] = frob;
  o.checks["partition_certificates"] = cert;
  o.checks["corollary_instances"] = corollary;
  o.text = t.str();
  return o;
}

Outcome cmd_question(const Corpus& corpus) {
  Outcome o;
  std::ostringstream t;
  bool consistent = true, none = true;
  std::size_t count = 0;
  for (const auto& entry : corpus) {
    auto verdicts = search_question(entry.group);
    for (auto& v : verdicts) {
      v.label = entry.label;
      consistent = consistent && v.consistent();
      json j = to_json(v);
      t << entry.label << " p=" << v.prime << ": sylow cyclic " << yes_no(v.sylow_cyclic) << ", |{x^"
        << v.n_p_prime << "=1}| = " << v.solution_set_size << ", matches " << yes_no(v.size_matches)
        << ", subgroup " << yes_no(v.is_subgroup);
      if (v.counterexample) {
        none = false;
        j["group_cayley"] = to_cayley_text(entry.group);
        t << "  COUNTEREXAMPLE";
      }
      t << "\n";
      o.results.push_back(std::move(j));
      ++count;
    }
  }
  t << count << " verdicts\n";
  o.checks["verdicts_consistent"] = consistent;
  o.checks["no_counterexample"] = none;
  o.text = t.str();
  return o;
}

Outcome cmd_ratios(const Corpus& corpus, std::uint64_t p) {
  Outcome o;
  std::ostringstream t;
  for (const auto& r : ratio_scan(corpus, p)) {
    o.results.push_back(to_json(r));
    t << r.label << " " << r.ratio.str() << "\n";
  }
  o.text = t.str();
  return o;
}

Outcome cmd_example() {
  Outcome o;
  const ReferenceExample ex = run_reference_example();
  const json spectrum = to_json(ex.spectrum);
  const json cert = to_json(ex.certificate, ex.group);
  const json psi2 = to_json(ex.psi2), psi3 = to_json(ex.psi3);
  o.results.push_back({{"label", ex.group.label()},
                       {"order", ex.group.order()},
                       {"spectrum", spectrum},
                       {"partition", cert},
                       {"partition_validation", to_json(ex.certificate_check)},
                       {"psi", json::array({psi2, psi3})},
                       {"structure", json::array({to_json(ex.structure2), to_json(ex.structure3)})}});
  o.checks = ex.checks;

  std::ostringstream t;
  t << ex.group.label() << " = Q8 x| C9 (order " << ex.group.order() << ")\n";
  t << "order spectrum:\n";
  for (const auto& e : spectrum) t << "  " << e["order"] << ": " << e["count"] << "\n";
  t << "partition L_e with |L_e| = phi(e):\n" << partition_text(cert);
  t << "  validator: " << (ex.certificate_check.ok() ? "ok" : "FAILED") << "\n";
  for (const auto* r : {&ex.psi2, &ex.psi3}) {
    const std::uint64_t p = *r->pi.begin();
    t << "psi_" << p << " = " << r->psi_pi_group;
    if (r->equality) {
      t << " = psi_" << p << "(C_72): EQUAL\n";
    } else {
      t << " < psi_" << p << "(C_72) = " << r->psi_pi_cyclic << ": STRICT (deficit " << r->deficit << ")\n";
    }
  }
  for (const auto* s : {&ex.structure2, &ex.structure3}) {
    t << "structure pi=" << format_prime_set(s->pi) << ": element of order " << s->n_pi << " "
      << yes_no(s->has_element_of_order_n_pi()) << ", |{x^" << s->n_pi_prime << "=1}| = " << s->h_size()
      << ", subgroup " << yes_no(s->h_is_subgroup) << ", normal " << yes_no(s->h_is_normal)
      << ", classified " << yes_no(s->classified) << "\n";
  }
  o.text = t.str();
  return o;
}

json inputs_json(const std::string& command, const Options& o, const std::optional<PrimeSet>& pi) {
  json in = {{"cap", o.cap}};
  if (!o.group.empty()) in["group"] = o.group;
  if (!o.corpus.empty()) in["corpus"] = o.corpus;
  if (pi) in["pi"] = to_json(*pi);
  if (command == "verify") in["pi_policy"] = o.pi_policy;
  if (command == "ratios") in["prime"] = o.prime;
  return in;
}

void add_group_options(CLI::App* sub, Options& o) {
  sub->add_option("--group", o.group, "group spec, e.g. C:72, S:4, P:smallgroup_72_3, C:3xS:3");
  sub->add_option("--corpus", o.corpus, "named corpus (default)");
  sub->add_option("--cap", o.cap, "maximum group order")->check(CLI::PositiveNumber);
}

void add_output_options(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--out", o.out, "write the report to this file");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"elorder: element-order sums, divisor-lattice certificates and equality-case detection"};
  app.require_subcommand(1);
  Options o;

  auto* spectrum = app.add_subcommand("spectrum", "order spectrum of groups");
  auto* psi_cmd = app.add_subcommand("psi", "psi and psi_pi against the cyclic benchmark");
  auto* partition = app.add_subcommand("partition", "divisor-lattice partition certificate");
  auto* frobenius = app.add_subcommand("frobenius", "solution counts of x^d = 1 for every divisor d");
  auto* verify = app.add_subcommand("verify", "inequality, equality case, certificates and counts");
  auto* question = app.add_subcommand("question", "search for solution sets of size n_p' that are not subgroups");
  auto* ratios = app.add_subcommand("ratios", "psi_p(G)/psi_p(C_n) per group, ascending");
  auto* example = app.add_subcommand("example", "reproduce the Q8 x| C9 worked example");

  for (auto* sub : {spectrum, psi_cmd, partition, frobenius, verify, question, ratios}) add_group_options(sub, o);
  for (auto* sub : {spectrum, psi_cmd, partition, frobenius, verify, question, ratios, example}) {
    add_output_options(sub, o);
  }
  psi_cmd->add_option("--pi", o.pi, "comma-separated primes, e.g. 2,3");
  verify->add_option("--pi-policy", o.pi_policy, "primes or subsets")
      ->check(CLI::IsMember({"primes", "subsets"}));
  ratios->add_option("--prime", o.prime, "prime p");

  std::vector<std::string> argv_store{"elorder"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Outcome outcome;
  std::optional<PrimeSet> pi;
  try {
    if (!o.pi.empty()) pi = parse_prime_set(o.pi);
    if (command == "example") {
      outcome = cmd_example();
    } else {
      const Corpus corpus = load_groups(o);
      if (command == "spectrum") outcome = cmd_spectrum(corpus);
      if (command == "psi") outcome = cmd_psi(corpus, pi);
      if (command == "partition") outcome = cmd_partition(corpus);
      if (command == "frobenius") outcome = cmd_frobenius(corpus);
      if (command == "verify") {
        outcome = cmd_verify(corpus, o.pi_policy == "subsets" ? PiPolicy::kSubsets : PiPolicy::kPrimes);
      }
      if (command == "question") outcome = cmd_question(corpus);
      if (command == "ratios") {
        if (!is_prime(o.prime)) throw InputError("--prime " + std::to_string(o.prime) + " is not prime");
        outcome = cmd_ratios(corpus, o.prime);
      }
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const GroupError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  std::string rendered;
  if (o.format == "json") {
    rendered = canonical_dump(make_report(command, inputs_json(command, o, pi), outcome.results, outcome.checks));
  } else {
    rendered = outcome.text;
    if (!outcome.checks.empty()) {
      rendered += "checks:\n";
      for (const auto& [name, pass] : outcome.checks) rendered += "  " + name + ": " + (pass ? "pass" : "fail") + "\n";
    }
  }
  if (o.out.empty()) {
    out << rendered;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      err << "error: cannot write '" << o.out << "'\n";
      return kExitInputError;
    }
    f << rendered;
  }

  const bool pass = std::all_of(outcome.checks.begin(), outcome.checks.end(),
                                [](const auto& kv) { return kv.second; });
  return pass ? kExitOk : kExitCheckFailed;
}

}  // namespace elorder
