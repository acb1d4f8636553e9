#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "elorder/group.hpp"

namespace elorder {

/// Parse failure in a group file or spec string. Messages carry the
/// offending line or token.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroupSpec;
using GroupSpecPtr = std::shared_ptr<const GroupSpec>;

namespace spec {

struct Cyclic {
  std::uint64_t n;
};
/// Dihedral group of order 2n (symmetries of the n-gon).
struct Dihedral {
  std::uint64_t n;
};
struct Quaternion8 {};
struct Symmetric {
  std::uint32_t degree;
};
struct Alternating {
  std::uint32_t degree;
};
/// Elements (a, b) indexed a * |B| + b.
struct DirectProduct {
  GroupSpecPtr left;
  GroupSpecPtr right;
};
/// H x| C_k with (h1,i1)(h2,i2) = (h1 * alpha^i1(h2), i1 + i2 mod k);
/// element (h, i) has index h * k + i, so a trivial alpha reproduces
/// DirectProduct(H, C_k) exactly.
struct SemidirectCyclic {
  GroupSpecPtr base;
  std::vector<Element> automorphism;
  std::uint64_t k;
};
struct Preset {
  std::string name;
};
struct CayleyFile {
  std::string path;
};
struct GeneratorsFile {
  std::string path;
};

}  // namespace spec

struct GroupSpec {
  std::variant<spec::Cyclic, spec::Dihedral, spec::Quaternion8, spec::Symmetric,
               spec::Alternating, spec::DirectProduct, spec::SemidirectCyclic, spec::Preset,
               spec::CayleyFile, spec::GeneratorsFile>
      kind;
};

template <typename T>
GroupSpecPtr make_spec(T kind) {
  return std::make_shared<const GroupSpec>(GroupSpec{std::move(kind)});
}

inline constexpr std::uint32_t kMaxPermutationDegree = 6;

struct BuildOptions {
  std::size_t cap = kDefaultOrderCap;
};

/// Canonical label, e.g. "C_72", "C_3xS_3", "smallgroup_72_3".
std::string spec_label(const GroupSpec& spec);

/// Throws GroupError (invalid parameters, cap, bad automorphism) or
/// ParseError (files).
FiniteGroup build(const GroupSpec& spec, const BuildOptions& options = {});

/// Parses the CLI grammar: "C:72", "D:4", "Q8", "S:4", "A:5",
/// "P:smallgroup_72_3", "F:path.cayley", "G:path.gens", joined by "x".
GroupSpecPtr parse_group_spec(const std::string& text);

std::vector<std::string> preset_names();

/// alpha fixes the identity, is a bijective homomorphism of H, and
/// alpha^k is the identity map.
bool verify_automorphism(const FiniteGroup& h, const std::vector<Element>& alpha, std::uint64_t k);

/// Cayley text format: first line n, then n rows of n indices; '#' lines
/// are comments.
FiniteGroup parse_cayley(std::istream& in, const std::string& source = "<input>");
FiniteGroup load_cayley_file(const std::string& path);
std::string to_cayley_text(const FiniteGroup& g);

/// Generators text format: first line the degree, then one permutation
/// per line in 1-based cycle notation, e.g. "(1 2)(3 4)".
struct GeneratorList {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};
GeneratorList parse_generators(std::istream& in, const std::string& source = "<input>");
FiniteGroup load_generators_file(const std::string& path, std::size_t cap = kDefaultOrderCap);

struct CorpusEntry {
  std::string label;
  FiniteGroup group;
};
using Corpus = std::vector<CorpusEntry>;

/// Deterministic verification corpus (cyclic, dihedral, symmetric,
/// alternating, semidirect and non-split examples).
Corpus default_corpus();

}  // namespace elorder
