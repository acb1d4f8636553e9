#include "elorder/group.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "elorder/arithmetic.hpp"

namespace elorder {

namespace {

std::string cell(std::size_t a, std::size_t b) {
  return "(row " + std::to_string(a) + ", column " + std::to_string(b) + ")";
}

}  // namespace

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Element> table, std::string label,
                         TableSource source)
    : order_(order), table_(std::move(table)), label_(std::move(label)) {
  validate(source);
  inverse_.resize(order_);
  for (Element a = 0; a < order_; ++a) {
    const auto r = row(a);
    inverse_[a] = static_cast<Element>(std::find(r.begin(), r.end(), kIdentity) - r.begin());
  }
  compute_orders();
}

void FiniteGroup::validate(TableSource source) const {
  const std::size_t n = order_;
  if (n == 0) throw GroupError("group order must be positive");
  if (table_.size() != n * n) {
    throw GroupError("table has " + std::to_string(table_.size()) + " entries, expected " +
                     std::to_string(n * n));
  }
  if (source == TableSource::kIngested && n > kAssociativityCheckLimit) {
    throw GroupError("ingested tables are limited to order " +
                     std::to_string(kAssociativityCheckLimit) +
                     " (associativity must be checked); build larger groups from generators");
  }
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] >= n) {
      throw GroupError("entry " + std::to_string(table_[i]) + " out of range at " +
                       cell(i / n, i % n));
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (table_[a] != a) throw GroupError("identity law violated: 0*" + std::to_string(a) + " at " + cell(0, a));
    if (table_[a * n] != a) throw GroupError("identity law violated: " + std::to_string(a) + "*0 at " + cell(a, 0));
  }
  std::vector<std::size_t> seen(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), n);
    for (std::size_t b = 0; b < n; ++b) {
      const Element v = table_[a * n + b];
      if (seen[v] != n) {
        throw GroupError("Latin square violated: value " + std::to_string(v) + " repeats in row " +
                         std::to_string(a) + " at columns " + std::to_string(seen[v]) + " and " +
                         std::to_string(b));
      }
      seen[v] = b;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), n);
    for (std::size_t a = 0; a < n; ++a) {
      const Element v = table_[a * n + b];
      if (seen[v] != n) {
        throw GroupError("Latin square violated: value " + std::to_string(v) +
                         " repeats in column " + std::to_string(b) + " at rows " +
                         std::to_string(seen[v]) + " and " + std::to_string(a));
      }
      seen[v] = a;
    }
  }
  if (source == TableSource::kIngested) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const std::size_t ab = table_[a * n + b];
        for (std::size_t c = 0; c < n; ++c) {
          if (table_[ab * n + c] != table_[a * n + table_[b * n + c]]) {
            throw GroupError("associativity violated: (" + std::to_string(a) + "*" +
                             std::to_string(b) + ")*" + std::to_string(c) + " != " +
                             std::to_string(a) + "*(" + std::to_string(b) + "*" +
                             std::to_string(c) + ")");
          }
        }
      }
    }
  }
}

void FiniteGroup::compute_orders() {
  orders_.assign(order_, 0);
  std::vector<Element> powers;
  for (Element a = 0; a < order_; ++a) {
    if (orders_[a] != 0) continue;
    powers.clear();
    Element x = a;
    powers.push_back(x);
    while (x != kIdentity) {
      x = (*this)(x, a);
      powers.push_back(x);
    }
    // powers[j-1] = a^j; a^d = 1 at j = d.
    const std::uint64_t d = powers.size();
    for (std::uint64_t j = 1; j <= d; ++j) {
      auto& slot = orders_[powers[j - 1]];
      if (slot == 0) slot = d / elorder::gcd(j, d);
    }
  }
}

Element FiniteGroup::mul(Element a, Element b) const {
  if (a >= order_ || b >= order_) {
    throw GroupError("element index out of range: " + std::to_string(std::max(a, b)) +
                     " in group of order " + std::to_string(order_));
  }
  return (*this)(a, b);
}

Element FiniteGroup::power(Element a, std::uint64_t k) const {
  if (a >= order_) throw GroupError("element index out of range: " + std::to_string(a));
  k %= orders_[a];
  Element result = kIdentity;
  Element base = a;
  while (k > 0) {
    if (k & 1U) result = (*this)(result, base);
    base = (*this)(base, base);
    k >>= 1U;
  }
  return result;
}

Permutation::Permutation(std::vector<std::uint32_t> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (const auto v : image_) {
    if (v >= image_.size() || hit[v]) throw GroupError("image array is not a permutation");
    hit[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0U);
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0U);
  std::vector<bool> moved(degree, false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const auto from = cyc[i];
      if (from >= degree) {
        throw GroupError("point " + std::to_string(from + 1) + " exceeds degree " +
                         std::to_string(degree));
      }
      if (cyc.size() > 1 && moved[from]) {
        throw GroupError("point " + std::to_string(from + 1) + " appears in two cycles");
      }
      moved[from] = cyc.size() > 1;
      img[from] = cyc[(i + 1) % cyc.size()];
    }
  }
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw GroupError("permutation degrees differ");
  std::vector<std::uint32_t> img(p.degree());
  for (std::size_t x = 0; x < img.size(); ++x) img[x] = q.image_[p.image_[x]];
  return Permutation(std::move(img));
}

namespace {

struct ImageHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (const auto x : v) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

FiniteGroup close_generators(const std::vector<Permutation>& generators, std::size_t degree,
                             std::size_t cap, std::string label) {
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw GroupError("generator of degree " + std::to_string(g.degree()) +
                       " does not match degree " + std::to_string(degree));
    }
  }
  std::vector<Permutation> elements{Permutation::identity(degree)};
  std::unordered_map<std::vector<std::uint32_t>, Element, ImageHash> index;
  index.emplace(elements[0].image(), kIdentity);
  // Each non-identity element b = parent[b] * generators[via[b]].
  std::vector<Element> parent{kIdentity};
  std::vector<std::size_t> via{0};
  // right[x * k + j] = x * generators[j]
  const std::size_t k = generators.size();
  std::vector<Element> right;

  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (std::size_t j = 0; j < k; ++j) {
      Permutation next = elements[head] * generators[j];
      auto [it, inserted] = index.try_emplace(next.image(), static_cast<Element>(elements.size()));
      if (inserted) {
        if (elements.size() >= cap) {
          throw GroupError("generated group exceeds the order cap of " + std::to_string(cap));
        }
        elements.push_back(std::move(next));
        parent.push_back(static_cast<Element>(head));
        via.push_back(j);
      }
      right.push_back(it->second);
    }
  }

  const std::size_t n = elements.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) table[a * n] = static_cast<Element>(a);
  for (std::size_t b = 1; b < n; ++b) {
    for (std::size_t a = 0; a < n; ++a) {
      table[a * n + b] = right[table[a * n + parent[b]] * k + via[b]];
    }
  }
  return FiniteGroup(n, std::move(table), std::move(label), TableSource::kConstructed);
}

ElementSet::ElementSet(const FiniteGroup& group, std::vector<Element> elements)
    : group_(&group), elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] >= group.order()) {
      throw GroupError("element " + std::to_string(elements_[i]) + " out of range");
    }
    if (i > 0 && elements_[i - 1] >= elements_[i]) {
      throw GroupError("element set must be strictly ascending");
    }
  }
}

bool ElementSet::contains(Element x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

bool is_subgroup(const ElementSet& s) {
  if (!s.contains(kIdentity)) return false;
  const auto& g = s.group();
  for (const auto a : s.elements()) {
    for (const auto b : s.elements()) {
      if (!s.contains(g(a, b))) return false;
    }
  }
  return true;
}

bool is_conjugation_closed(const ElementSet& s) {
  const auto& g = s.group();
  for (Element x = 0; x < g.order(); ++x) {
    const Element xi = g.inverse(x);
    for (const auto a : s.elements()) {
      if (!s.contains(g(g(x, a), xi))) return false;
    }
  }
  return true;
}

bool is_normal(const ElementSet& s) {
  if (!is_subgroup(s)) throw std::invalid_argument("is_normal called on a non-subgroup");
  return is_conjugation_closed(s);
}

ElementSet solution_set(const FiniteGroup& g, std::uint64_t d) {
  std::vector<Element> xs;
  for (Element x = 0; x < g.order(); ++x) {
    if (g.power(x, d) == kIdentity) xs.push_back(x);
  }
  return ElementSet(g, std::move(xs));
}

}  // namespace elorder
