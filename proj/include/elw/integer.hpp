#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace elw {

/// Arbitrary precision signed integer.
using Integer = mpz_class;

/// Parses a decimal integer with optional sign; throws Error(Parse).
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& n);

/// Deterministic trial division.
bool is_prime(const Integer& n);

/// Throws Error(NotPrime) unless `p` is prime.
void require_prime(const Integer& p);

/// Sieve of Eratosthenes; ascending primes <= limit.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Exponent of the prime `p` in nonzero `n`.
std::uint64_t valuation(const Integer& n, const Integer& p);

/// Legendre's formula: exponent of p in n!.
std::uint64_t factorial_valuation(std::uint64_t n, std::uint64_t p);

/// Prime factorization of |n| by trial division, ascending primes. n != 0.
std::vector<std::pair<Integer, std::uint64_t>> factorize(const Integer& n);

/// `a | b` in the ring of integers (0 divides only 0).
bool divides(const Integer& a, const Integer& b);

}  // namespace elw
