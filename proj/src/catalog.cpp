#include "elorder/catalog.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace elorder {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void check_cap(std::uint64_t order, std::size_t cap, const std::string& what) {
  if (order > cap) {
    throw GroupError(what + " has order " + std::to_string(order) + ", above the cap of " +
                     std::to_string(cap));
  }
}

FiniteGroup cyclic(std::uint64_t n, std::size_t cap) {
  if (n == 0) throw GroupError("cyclic group order must be positive, got 0");
  check_cap(n, cap, "C_" + std::to_string(n));
  std::vector<Element> t(n * n);
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Element>((a + b) % n);
  }
  return FiniteGroup(n, std::move(t), {}, TableSource::kConstructed);
}

// r^i s^a has index i + n*a.
FiniteGroup dihedral(std::uint64_t n, std::size_t cap) {
  if (n == 0) throw GroupError("dihedral parameter must be positive, got 0");
  const std::uint64_t order = 2 * n;
  check_cap(order, cap, "D_" + std::to_string(n));
  std::vector<Element> t(order * order);
  for (std::uint64_t x = 0; x < order; ++x) {
    const std::uint64_t i = x % n, a = x / n;
    for (std::uint64_t y = 0; y < order; ++y) {
      const std::uint64_t j = y % n, b = y / n;
      const std::uint64_t r = a == 0 ? (i + j) % n : (i + n - j) % n;
      t[x * order + y] = static_cast<Element>(r + n * ((a + b) % 2));
    }
  }
  return FiniteGroup(order, std::move(t), {}, TableSource::kConstructed);
}

// Index 2u + s: unit u in {1, i, j, k}, sign bit s.
FiniteGroup quaternion8() {
  // unit_mul[u][v] = {sign, unit}
  static constexpr int kUnit[4][4][2] = {
      {{0, 0}, {0, 1}, {0, 2}, {0, 3}},
      {{0, 1}, {1, 0}, {0, 3}, {1, 2}},
      {{0, 2}, {1, 3}, {1, 0}, {0, 1}},
      {{0, 3}, {0, 2}, {1, 1}, {1, 0}},
  };
  std::vector<Element> t(64);
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const auto& [s, u] = kUnit[x / 2][y / 2];
      t[x * 8 + y] = static_cast<Element>(2 * u + ((s + x % 2 + y % 2) % 2));
    }
  }
  return FiniteGroup(8, std::move(t), {}, TableSource::kConstructed);
}

FiniteGroup symmetric(std::uint32_t k, std::size_t cap) {
  if (k == 0 || k > kMaxPermutationDegree) {
    throw GroupError("symmetric group degree must be in 1.." + std::to_string(kMaxPermutationDegree));
  }
  std::vector<Permutation> gens;
  if (k >= 2) {
    gens.push_back(Permutation::from_cycles(k, {{0, 1}}));
    std::vector<std::uint32_t> cyc(k);
    for (std::uint32_t i = 0; i < k; ++i) cyc[i] = i;
    if (k >= 3) gens.push_back(Permutation::from_cycles(k, {cyc}));
  }
  return close_generators(gens, k, cap);
}

FiniteGroup alternating(std::uint32_t k, std::size_t cap) {
  if (k == 0 || k > kMaxPermutationDegree) {
    throw GroupError("alternating group degree must be in 1.." + std::to_string(kMaxPermutationDegree));
  }
  std::vector<Permutation> gens;
  for (std::uint32_t i = 2; i < k; ++i) gens.push_back(Permutation::from_cycles(k, {{0, 1, i}}));
  return close_generators(gens, k, cap);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, std::size_t cap) {
  const std::uint64_t na = a.order(), nb = b.order();
  const std::uint64_t n = na * nb;
  check_cap(n, cap, "direct product");
  std::vector<Element> t(n * n);
  for (std::uint64_t x = 0; x < n; ++x) {
    const auto xa = static_cast<Element>(x / nb), xb = static_cast<Element>(x % nb);
    for (std::uint64_t y = 0; y < n; ++y) {
      const auto ya = static_cast<Element>(y / nb), yb = static_cast<Element>(y % nb);
      t[x * n + y] = static_cast<Element>(a(xa, ya) * nb + b(xb, yb));
    }
  }
  return FiniteGroup(n, std::move(t), {}, TableSource::kConstructed);
}

FiniteGroup semidirect_cyclic(const FiniteGroup& h, const std::vector<Element>& alpha,
                              std::uint64_t k, std::size_t cap) {
  if (k == 0) throw GroupError("semidirect cyclic factor order must be positive");
  if (!verify_automorphism(h, alpha, k)) {
    throw GroupError("supplied map is not an automorphism of order dividing " + std::to_string(k));
  }
  const std::uint64_t nh = h.order();
  const std::uint64_t n = nh * k;
  check_cap(n, cap, "semidirect product");
  // powers[i][x] = alpha^i(x)
  std::vector<std::vector<Element>> powers(k, std::vector<Element>(nh));
  for (Element x = 0; x < nh; ++x) powers[0][x] = x;
  for (std::uint64_t i = 1; i < k; ++i) {
    for (Element x = 0; x < nh; ++x) powers[i][x] = alpha[powers[i - 1][x]];
  }
  std::vector<Element> t(n * n);
  for (std::uint64_t x = 0; x < n; ++x) {
    const auto h1 = static_cast<Element>(x / k);
    const std::uint64_t i1 = x % k;
    for (std::uint64_t y = 0; y < n; ++y) {
      const auto h2 = static_cast<Element>(y / k);
      const std::uint64_t i2 = y % k;
      t[x * n + y] = static_cast<Element>(h(h1, powers[i1][h2]) * k + (i1 + i2) % k);
    }
  }
  return FiniteGroup(n, std::move(t), {}, TableSource::kConstructed);
}

// i -> j -> k -> i on Q8 (indices 2u + sign).
const std::vector<Element> kQ8Rotation{0, 1, 4, 5, 6, 7, 2, 3};

std::vector<Element> cyclic_power_map(std::uint64_t n, std::uint64_t r) {
  std::vector<Element> alpha(n);
  for (std::uint64_t i = 0; i < n; ++i) alpha[i] = static_cast<Element>(i * r % n);
  return alpha;
}

constexpr const char* kC4Cayley =
    "# C_4 as a non-split extension of C_2 by C_2\n"
    "4\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n";

// SL(2,3) = Q8 x| C_3 acting on the 8 points of Q8: left translations
// together with the order-3 automorphism.
FiniteGroup sl_2_3(std::size_t cap) {
  const FiniteGroup q8 = quaternion8();
  auto left_translation = [&](Element g) {
    std::vector<std::uint32_t> img(8);
    for (Element x = 0; x < 8; ++x) img[x] = q8(g, x);
    return Permutation(std::move(img));
  };
  std::vector<std::uint32_t> rot(kQ8Rotation.begin(), kQ8Rotation.end());
  return close_generators({left_translation(2), left_translation(4), Permutation(std::move(rot))}, 8,
                          cap);
}

FiniteGroup preset(const std::string& name, std::size_t cap) {
  if (name == "smallgroup_72_3") {
    return semidirect_cyclic(quaternion8(), kQ8Rotation, 9, cap);
  }
  if (name == "sl_2_3") return sl_2_3(cap);
  if (name == "c4_cayley") {
    std::istringstream in(kC4Cayley);
    return parse_cayley(in, "preset c4_cayley");
  }
  throw GroupError("unknown preset '" + name + "'");
}

std::uint64_t parse_uint(const std::string& tok, const std::string& context) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(context + ": '" + tok + "' is not a non-negative integer");
  }
  return v;
}

bool is_comment_or_blank(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

}  // namespace

std::vector<std::string> preset_names() { return {"c4_cayley", "sl_2_3", "smallgroup_72_3"}; }

bool verify_automorphism(const FiniteGroup& h, const std::vector<Element>& alpha, std::uint64_t k) {
  const std::size_t n = h.order();
  if (k == 0 || alpha.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (const auto v : alpha) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  if (alpha[kIdentity] != kIdentity) return false;
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (alpha[h(a, b)] != h(alpha[a], alpha[b])) return false;
    }
  }
  // alpha^k = id iff every cycle length of alpha divides k.
  for (Element x = 0; x < n; ++x) {
    std::uint64_t len = 1;
    for (Element y = alpha[x]; y != x; y = alpha[y]) ++len;
    if (k % len != 0) return false;
  }
  return true;
}

std::string spec_label(const GroupSpec& spec) {
  return std::visit(
      overloaded{
          [](const spec::Cyclic& c) { return "C_" + std::to_string(c.n); },
          [](const spec::Dihedral& d) { return "D_" + std::to_string(d.n); },
          [](const spec::Quaternion8&) { return std::string("Q8"); },
          [](const spec::Symmetric& s) { return "S_" + std::to_string(s.degree); },
          [](const spec::Alternating& a) { return "A_" + std::to_string(a.degree); },
          [](const spec::DirectProduct& p) {
            return spec_label(*p.left) + "x" + spec_label(*p.right);
          },
          [](const spec::SemidirectCyclic& s) {
            return spec_label(*s.base) + ":C_" + std::to_string(s.k);
          },
          [](const spec::Preset& p) { return p.name; },
          [](const spec::CayleyFile& f) { return f.path; },
          [](const spec::GeneratorsFile& f) { return f.path; },
      },
      spec.kind);
}

FiniteGroup build(const GroupSpec& spec, const BuildOptions& options) {
  const std::size_t cap = options.cap;
  FiniteGroup g = std::visit(
      overloaded{
          [&](const spec::Cyclic& c) { return cyclic(c.n, cap); },
          [&](const spec::Dihedral& d) { return dihedral(d.n, cap); },
          [&](const spec::Quaternion8&) { return quaternion8(); },
          [&](const spec::Symmetric& s) { return symmetric(s.degree, cap); },
          [&](const spec::Alternating& a) { return alternating(a.degree, cap); },
          [&](const spec::DirectProduct& p) {
            return direct_product(build(*p.left, options), build(*p.right, options), cap);
          },
          [&](const spec::SemidirectCyclic& s) {
            return semidirect_cyclic(build(*s.base, options), s.automorphism, s.k, cap);
          },
          [&](const spec::Preset& p) { return preset(p.name, cap); },
          [&](const spec::CayleyFile& f) {
            FiniteGroup loaded = load_cayley_file(f.path);
            check_cap(loaded.order(), cap, f.path);
            return loaded;
          },
          [&](const spec::GeneratorsFile& f) { return load_generators_file(f.path, cap); },
      },
      spec.kind);
  check_cap(g.order(), cap, spec_label(spec));
  g.set_label(spec_label(spec));
  return g;
}

GroupSpecPtr parse_group_spec(const std::string& text) {
  static const std::vector<std::string> kStarts{"C:", "D:", "Q8", "S:", "A:", "P:", "F:", "G:"};
  auto starts_factor = [&](std::size_t pos) {
    for (const auto& s : kStarts) {
      if (text.compare(pos, s.size(), s) == 0) return true;
    }
    return false;
  };
  std::vector<std::string> factors;
  std::size_t begin = 0;
  for (std::size_t i = 1; i + 1 < text.size(); ++i) {
    if (text[i] == 'x' && starts_factor(i + 1)) {
      factors.push_back(text.substr(begin, i - begin));
      begin = i + 1;
    }
  }
  factors.push_back(text.substr(begin));

  auto parse_one = [](const std::string& tok) -> GroupSpecPtr {
    if (tok == "Q8") return make_spec(spec::Quaternion8{});
    if (tok.size() < 2 || tok[1] != ':') throw ParseError("malformed group spec '" + tok + "'");
    const std::string arg = tok.substr(2);
    const std::string ctx = "group spec '" + tok + "'";
    switch (tok[0]) {
      case 'C': {
        const auto n = parse_uint(arg, ctx);
        if (n == 0) throw ParseError(ctx + ": group order must be positive, got 0");
        return make_spec(spec::Cyclic{n});
      }
      case 'D': {
        const auto n = parse_uint(arg, ctx);
        if (n == 0) throw ParseError(ctx + ": dihedral parameter must be positive");
        return make_spec(spec::Dihedral{n});
      }
      case 'S':
      case 'A': {
        const auto k = parse_uint(arg, ctx);
        if (k == 0 || k > kMaxPermutationDegree) {
          throw ParseError(ctx + ": degree must be in 1.." + std::to_string(kMaxPermutationDegree));
        }
        if (tok[0] == 'S') return make_spec(spec::Symmetric{static_cast<std::uint32_t>(k)});
        return make_spec(spec::Alternating{static_cast<std::uint32_t>(k)});
      }
      case 'P': return make_spec(spec::Preset{arg});
      case 'F': return make_spec(spec::CayleyFile{arg});
      case 'G': return make_spec(spec::GeneratorsFile{arg});
      default: throw ParseError("malformed group spec '" + tok + "'");
    }
  };

  GroupSpecPtr result = parse_one(factors.front());
  for (std::size_t i = 1; i < factors.size(); ++i) {
    result = make_spec(spec::DirectProduct{result, parse_one(factors[i])});
  }
  return result;
}

FiniteGroup parse_cayley(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t lineno = 0;
  std::size_t n = 0;
  bool have_header = false;
  std::vector<Element> table;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_comment_or_blank(line)) continue;
    const std::string where = source + ":" + std::to_string(lineno);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (!have_header) {
      if (toks.size() != 1) throw ParseError(where + ": expected the group order on its own line");
      n = parse_uint(toks[0], where);
      if (n == 0) throw ParseError(where + ": group order must be positive");
      if (n > kAssociativityCheckLimit) {
        throw ParseError(where + ": Cayley files are limited to order " +
                         std::to_string(kAssociativityCheckLimit));
      }
      have_header = true;
      table.reserve(n * n);
      continue;
    }
    if (rows == n) throw ParseError(where + ": more than " + std::to_string(n) + " table rows");
    if (toks.size() != n) {
      throw ParseError(where + ": row " + std::to_string(rows) + " has " +
                       std::to_string(toks.size()) + " entries, expected " + std::to_string(n));
    }
    for (std::size_t c = 0; c < n; ++c) {
      const auto v = parse_uint(toks[c], where + " column " + std::to_string(c));
      if (v >= n) {
        throw ParseError(where + ": entry " + toks[c] + " at row " + std::to_string(rows) +
                         ", column " + std::to_string(c) + " is out of range");
      }
      table.push_back(static_cast<Element>(v));
    }
    ++rows;
  }
  if (!have_header) throw ParseError(source + ": empty Cayley file");
  if (rows != n) {
    throw ParseError(source + ": expected " + std::to_string(n) + " table rows, found " +
                     std::to_string(rows));
  }
  try {
    return FiniteGroup(n, std::move(table), source, TableSource::kIngested);
  } catch (const GroupError& e) {
    throw GroupError(source + ": " + e.what());
  }
}

FiniteGroup load_cayley_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open Cayley file '" + path + "'");
  return parse_cayley(in, path);
}

std::string to_cayley_text(const FiniteGroup& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (Element a = 0; a < g.order(); ++a) {
    const auto r = g.row(a);
    for (std::size_t b = 0; b < r.size(); ++b) {
      if (b > 0) out += ' ';
      out += std::to_string(r[b]);
    }
    out += '\n';
  }
  return out;
}

GeneratorList parse_generators(std::istream& in, const std::string& source) {
  GeneratorList out;
  bool have_header = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_comment_or_blank(line)) continue;
    const std::string where = source + ":" + std::to_string(lineno);
    if (!have_header) {
      std::istringstream ls(line);
      std::string tok, extra;
      ls >> tok;
      if (ls >> extra) throw ParseError(where + ": expected the degree on its own line");
      out.degree = parse_uint(tok, where);
      have_header = true;
      continue;
    }
    std::vector<std::vector<std::uint32_t>> cycles;
    std::size_t i = 0;
    while (i < line.size()) {
      const char c = line[i];
      if (c == ' ' || c == '\t' || c == '\r') {
        ++i;
        continue;
      }
      if (c != '(') throw ParseError(where + ": expected '(' at column " + std::to_string(i + 1));
      const auto close = line.find(')', i);
      if (close == std::string::npos) throw ParseError(where + ": unterminated cycle");
      std::istringstream cs(line.substr(i + 1, close - i - 1));
      std::vector<std::uint32_t> cyc;
      for (std::string t; cs >> t;) {
        const auto p = parse_uint(t, where);
        if (p == 0 || p > out.degree) {
          throw ParseError(where + ": point " + t + " outside 1.." + std::to_string(out.degree) +
                           " (inconsistent degree)");
        }
        cyc.push_back(static_cast<std::uint32_t>(p - 1));
      }
      cycles.push_back(std::move(cyc));
      i = close + 1;
    }
    try {
      out.generators.push_back(Permutation::from_cycles(out.degree, cycles));
    } catch (const GroupError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (!have_header) throw ParseError(source + ": empty generators file");
  return out;
}

FiniteGroup load_generators_file(const std::string& path, std::size_t cap) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open generators file '" + path + "'");
  const GeneratorList list = parse_generators(in, path);
  return close_generators(list.generators, list.degree, cap, path);
}

Corpus default_corpus() {
  std::vector<GroupSpecPtr> specs;
  for (std::uint64_t n = 1; n <= 16; ++n) specs.push_back(make_spec(spec::Cyclic{n}));
  for (std::uint64_t n : {24, 36, 72}) specs.push_back(make_spec(spec::Cyclic{n}));
  for (std::uint64_t n = 3; n <= 8; ++n) specs.push_back(make_spec(spec::Dihedral{n}));
  specs.push_back(make_spec(spec::Quaternion8{}));
  for (std::uint32_t k = 3; k <= 6; ++k) specs.push_back(make_spec(spec::Symmetric{k}));
  for (std::uint32_t k = 4; k <= 6; ++k) specs.push_back(make_spec(spec::Alternating{k}));
  const auto c2 = make_spec(spec::Cyclic{2});
  const auto c3 = make_spec(spec::Cyclic{3});
  specs.push_back(make_spec(spec::DirectProduct{c3, make_spec(spec::Symmetric{3})}));
  specs.push_back(make_spec(spec::DirectProduct{c2, c2}));
  specs.push_back(make_spec(spec::DirectProduct{make_spec(spec::DirectProduct{c2, c2}), c2}));
  specs.push_back(make_spec(spec::DirectProduct{make_spec(spec::Quaternion8{}), c2}));
  specs.push_back(make_spec(spec::DirectProduct{make_spec(spec::Dihedral{4}), c3}));
  // Dic_3 = C_3 x| C_4 (inversion), Frobenius groups of order 21 and 20,
  // and C_7 x| C_9 with C_9 acting through its order-3 quotient.
  specs.push_back(make_spec(spec::SemidirectCyclic{c3, cyclic_power_map(3, 2), 4}));
  specs.push_back(
      make_spec(spec::SemidirectCyclic{make_spec(spec::Cyclic{7}), cyclic_power_map(7, 2), 3}));
  specs.push_back(
      make_spec(spec::SemidirectCyclic{make_spec(spec::Cyclic{5}), cyclic_power_map(5, 2), 4}));
  specs.push_back(
      make_spec(spec::SemidirectCyclic{make_spec(spec::Cyclic{7}), cyclic_power_map(7, 2), 9}));
  for (const char* name : {"smallgroup_72_3", "sl_2_3", "c4_cayley"}) {
    specs.push_back(make_spec(spec::Preset{name}));
  }

  Corpus corpus;
  corpus.reserve(specs.size());
  for (const auto& s : specs) {
    FiniteGroup g = build(*s);
    corpus.push_back({g.label(), std::move(g)});
  }
  return corpus;
}

}  // namespace elorder
