#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "elorder/arithmetic.hpp"
#include "elorder/group.hpp"

namespace elorder {

/// The two routes to psi_pi disagreed; only a corrupted table can cause it.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Number of elements of each order. Counts sum to `group_order`.
struct OrderSpectrum {
  std::uint64_t group_order = 0;
  std::map<std::uint64_t, std::uint64_t> counts;

  std::uint64_t count(std::uint64_t d) const {
    const auto it = counts.find(d);
    return it == counts.end() ? 0 : it->second;
  }
  friend bool operator==(const OrderSpectrum&, const OrderSpectrum&) = default;
};

OrderSpectrum order_spectrum(const FiniteGroup& g);
OrderSpectrum cyclic_spectrum(std::uint64_t n);

/// x = pi_part * pi_prime_part, both powers of x.
struct PiDecomposition {
  Element pi_part;
  Element pi_prime_part;
  std::uint64_t pi_order;
  std::uint64_t pi_prime_order;
};

PiDecomposition pi_decompose(const FiniteGroup& g, Element x, const PrimeSet& pi);

std::uint64_t psi(const FiniteGroup& g);

enum class PsiMode {
  kFast,    ///< power-map formula only
  kVerify,  ///< both formulas, compared
};

/// Sum over x of o(x_pi). In kVerify mode also sums o(x^{n_pi'}) and throws
/// ConsistencyError on mismatch.
std::uint64_t psi_pi(const FiniteGroup& g, const PrimeSet& pi, PsiMode mode = PsiMode::kVerify);

struct PsiReport {
  std::string label;
  std::uint64_t n = 0;
  PrimeSet pi;
  std::uint64_t psi_pi_group = 0;
  std::uint64_t psi_pi_cyclic = 0;
  /// psi_pi(C_n) - psi_pi(G); negative only for a corrupted table.
  std::int64_t deficit = 0;
  bool equality = false;
};

PsiReport psi_report(const FiniteGroup& g, const PrimeSet& pi, PsiMode mode = PsiMode::kVerify);

}  // namespace elorder
