#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "elw/integer.hpp"

namespace elw::todd {

/// Prime factorization of the Todd denominator in dimension n:
/// exponent floor(n/(p-1)) for each prime p <= n+1.
struct ToddDenominator {
  std::uint64_t n = 0;
  std::map<std::uint64_t, std::uint64_t> valuations;

  Integer expand() const;
  /// "2^4 3^2 5^1"; empty string for n = 0.
  std::string str() const;
};

ToddDenominator factor(std::uint64_t n);

/// Product over primes p <= n+1 of p^floor(n/(p-1)).
Integer mu_td(std::uint64_t n);

/// floor(n/(p-1)) for p <= n+1, else 0. Throws Error(NotPrime).
std::uint64_t mu_td_valuation(std::uint64_t n, const Integer& p);

struct ChainResult {
  bool holds = true;
  std::optional<std::uint64_t> violating_prime;
};

/// n!·mu_td(m) | mu_td(n+m-1), decided prime by prime through valuations.
/// Requires n, m >= 1.
ChainResult check_divides_chain(std::uint64_t n, std::uint64_t m);

}  // namespace elw::todd
