#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace elorder {

using Element = std::uint32_t;

inline constexpr Element kIdentity = 0;
inline constexpr std::size_t kDefaultOrderCap = 10'000;
inline constexpr std::size_t kAssociativityCheckLimit = 512;

/// Invalid group data: broken group law, bad index, cap exceeded.
class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// How a Cayley table reached us. Ingested tables get the full O(n^3)
/// associativity check (and are refused above kAssociativityCheckLimit);
/// constructed tables inherit associativity from their construction.
enum class TableSource { kIngested, kConstructed };

/// Immutable finite group stored as a full multiplication table.
/// Element 0 is the identity.
class FiniteGroup {
 public:
  /// `table` is row-major n*n: table[a*n + b] = a*b.
  FiniteGroup(std::size_t order, std::vector<Element> table, std::string label,
              TableSource source = TableSource::kIngested);

  std::size_t order() const { return order_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  /// Checked product; throws GroupError on out-of-range indices.
  Element mul(Element a, Element b) const;
  Element operator()(Element a, Element b) const { return table_[a * order_ + b]; }

  Element inverse(Element a) const { return inverse_[a]; }
  Element power(Element a, std::uint64_t k) const;
  std::uint64_t element_order(Element a) const { return orders_.at(a); }
  std::span<const std::uint64_t> element_orders() const { return orders_; }
  std::span<const Element> row(Element a) const {
    return {table_.data() + static_cast<std::size_t>(a) * order_, order_};
  }
  const std::vector<Element>& table() const { return table_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  void validate(TableSource source) const;
  void compute_orders();

  std::size_t order_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::uint64_t> orders_;
  std::string label_;
};

/// Permutation of {0, ..., degree-1}. Products compose left to right:
/// (p * q)(x) = q(p(x)).
class Permutation {
 public:
  explicit Permutation(std::vector<std::uint32_t> image);
  static Permutation identity(std::size_t degree);
  /// Builds from 0-based cycles, e.g. {{0,1},{2,3,4}}.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t degree() const { return image_.size(); }
  std::uint32_t operator[](std::size_t x) const { return image_[x]; }
  const std::vector<std::uint32_t>& image() const { return image_; }
  bool is_identity() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> image_;
};

/// Breadth-first closure of the generated permutation group. Element 0 is
/// the identity; the rest appear in discovery order, expanding each element
/// by right multiplication with the generators in list order.
FiniteGroup close_generators(const std::vector<Permutation>& generators, std::size_t degree,
                             std::size_t cap = kDefaultOrderCap, std::string label = {});

/// Sorted, duplicate-free subset of a group's elements.
class ElementSet {
 public:
  ElementSet(const FiniteGroup& group, std::vector<Element> elements);

  const FiniteGroup& group() const { return *group_; }
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(Element x) const;

 private:
  const FiniteGroup* group_;
  std::vector<Element> elements_;
};

bool is_subgroup(const ElementSet& s);

/// Throws std::invalid_argument unless `s` is a subgroup.
bool is_normal(const ElementSet& s);

bool is_conjugation_closed(const ElementSet& s);

/// {x : x^d = 1}.
ElementSet solution_set(const FiniteGroup& g, std::uint64_t d);

}  // namespace elorder
