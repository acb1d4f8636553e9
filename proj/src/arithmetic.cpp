#include "elorder/arithmetic.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace elorder {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("64-bit overflow in " + std::to_string(a) + " + " + std::to_string(b));
  }
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("64-bit overflow in " + std::to_string(a) + " * " + std::to_string(b));
  }
  return r;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exponent) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exponent; ++i) r = checked_mul(r, base);
  return r;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q <= n / q; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization out;
  for (std::uint64_t q = 2; q <= n / q; ++q) {
    if (n % q != 0) continue;
    std::uint32_t a = 0;
    while (n % q == 0) {
      n /= q;
      ++a;
    }
    out.push_back({q, a});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, a] : factorize(n)) {
    const std::size_t prev = out.size();
    std::uint64_t pk = 1;
    for (std::uint32_t k = 1; k <= a; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < prev; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PrimeSet prime_divisors(std::uint64_t n) {
  PrimeSet out;
  for (const auto& pp : factorize(n)) out.insert(pp.prime);
  return out;
}

std::uint64_t euler_phi(std::uint64_t d) {
  std::uint64_t r = 1;
  for (const auto& [p, a] : factorize(d)) r *= checked_pow(p, a - 1) * (p - 1);
  return r;
}

std::uint64_t pi_part(std::uint64_t n, const PrimeSet& pi) {
  std::uint64_t r = 1;
  for (const auto& [p, a] : factorize(n)) {
    if (pi.contains(p)) r *= checked_pow(p, a);
  }
  return r;
}

std::uint64_t pi_complement_part(std::uint64_t n, const PrimeSet& pi) { return n / pi_part(n, pi); }

namespace {

// psi(C_{p^a}) = 1 + sum_{i=1..a} (p-1) p^{2i-1}; accumulates without
// forming p^{2a+1}, so only a genuinely unrepresentable result overflows.
std::uint64_t psi_prime_power(std::uint64_t p, std::uint32_t a) {
  std::uint64_t sum = 1;
  std::uint64_t pi = 1;  // p^i
  for (std::uint32_t i = 1; i <= a; ++i) {
    pi = checked_mul(pi, p);
    const std::uint64_t phi = pi / p * (p - 1);
    sum = checked_add(sum, checked_mul(phi, pi));
  }
  return sum;
}

}  // namespace

std::uint64_t psi_cyclic(std::uint64_t n) {
  std::uint64_t r = 1;
  for (const auto& [p, a] : factorize(n)) r = checked_mul(r, psi_prime_power(p, a));
  return r;
}

std::uint64_t psi_pi_cyclic(std::uint64_t n, const PrimeSet& pi) {
  std::uint64_t r = 1;
  for (const auto& [p, a] : factorize(n)) {
    r = checked_mul(r, pi.contains(p) ? psi_prime_power(p, a) : checked_pow(p, a));
  }
  return r;
}

Bezout bezout(std::uint64_t a, std::uint64_t b) {
  std::int64_t old_r = static_cast<std::int64_t>(a), r = static_cast<std::int64_t>(b);
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  return {old_s, old_t, static_cast<std::uint64_t>(old_r)};
}

PrimeSet parse_prime_set(const std::string& text) {
  PrimeSet out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto first = tok.find_first_not_of(" \t");
    const auto last = tok.find_last_not_of(" \t");
    if (first == std::string::npos) {
      if (text.find_first_not_of(" \t") == std::string::npos) continue;
      throw std::invalid_argument("empty entry in prime list '" + text + "'");
    }
    tok = tok.substr(first, last - first + 1);
    std::uint64_t p = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), p);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw std::invalid_argument("'" + tok + "' is not an integer");
    }
    if (!is_prime(p)) throw std::invalid_argument("'" + tok + "' is not prime");
    if (!out.insert(p).second) throw std::invalid_argument("prime " + tok + " listed twice");
  }
  return out;
}

std::string format_prime_set(const PrimeSet& pi) {
  std::string s = "{";
  for (auto it = pi.begin(); it != pi.end(); ++it) {
    if (it != pi.begin()) s += ",";
    s += std::to_string(*it);
  }
  return s + "}";
}

}  // namespace elorder
