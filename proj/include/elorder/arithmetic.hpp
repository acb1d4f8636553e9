#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace elorder {

/// Raised whenever checked 64-bit arithmetic would wrap.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

using PrimeSet = std::set<std::uint64_t>;

struct PrimePower {
  std::uint64_t prime;
  std::uint32_t exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization, primes strictly ascending, exponents >= 1.
using Factorization = std::vector<PrimePower>;

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exponent);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
bool is_prime(std::uint64_t n);

/// Trial division. Throws std::invalid_argument for n == 0.
Factorization factorize(std::uint64_t n);

/// All positive divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Primes dividing n, i.e. pi(n).
PrimeSet prime_divisors(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t d);

/// Largest divisor of n whose prime factors all lie in `pi`.
std::uint64_t pi_part(std::uint64_t n, const PrimeSet& pi);

/// n / pi_part(n, pi).
std::uint64_t pi_complement_part(std::uint64_t n, const PrimeSet& pi);

/// Sum of element orders of the cyclic group of order n.
std::uint64_t psi_cyclic(std::uint64_t n);

/// Sum over C_n of the orders of pi-parts: n_{pi'} * psi(C_{n_pi}).
std::uint64_t psi_pi_cyclic(std::uint64_t n, const PrimeSet& pi);

/// Solves s*a + t*b = gcd(a, b).
struct Bezout {
  std::int64_t s;
  std::int64_t t;
  std::uint64_t g;
};
Bezout bezout(std::uint64_t a, std::uint64_t b);

/// Parses "2,3" into a prime set; rejects non-primes and duplicates.
PrimeSet parse_prime_set(const std::string& text);
std::string format_prime_set(const PrimeSet& pi);

}  // namespace elorder
