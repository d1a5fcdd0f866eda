#include "elw/integer.hpp"

#include "elw/error.hpp"

namespace elw {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvalidCatalog: return "InvalidCatalog";
    case ErrorKind::MissingFlag: return "MissingFlag";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidMorphism: return "InvalidMorphism";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::BadCongruence: return "BadCongruence";
    case ErrorKind::NonIntegral: return "NonIntegral";
    case ErrorKind::OddSelfIntersection: return "OddSelfIntersection";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  bool ok = !digits.empty();
  for (char c : digits) {
    if (c < '0' || c > '9') {
      ok = false;
      break;
    }
  }
  if (!ok) {
    throw Error(ErrorKind::Parse, "not an integer: '" + std::string(text) + "'");
  }
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  return Integer(s, 10);
}

std::string to_string(const Integer& n) { return n.get_str(10); }

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (mpz_even_p(n.get_mpz_t())) return false;
  for (Integer d = 3; d * d <= n; d += 2) {
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) return false;
  }
  return true;
}

void require_prime(const Integer& p) {
  if (!is_prime(p)) {
    throw Error(ErrorKind::NotPrime, to_string(p) + " is not prime");
  }
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

std::uint64_t valuation(const Integer& n, const Integer& p) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "valuation of zero");
  Integer rest;
  return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

std::uint64_t factorial_valuation(std::uint64_t n, std::uint64_t p) {
  std::uint64_t total = 0;
  for (std::uint64_t q = n / p; q > 0; q /= p) total += q;
  return total;
}

std::vector<std::pair<Integer, std::uint64_t>> factorize(const Integer& n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "factorization of zero");
  std::vector<std::pair<Integer, std::uint64_t>> factors;
  Integer rest = abs(n);
  auto strip = [&](const Integer& d) {
    if (!mpz_divisible_p(rest.get_mpz_t(), d.get_mpz_t())) return;
    std::uint64_t e = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), d.get_mpz_t());
    factors.emplace_back(d, e);
  };
  strip(Integer(2));
  for (Integer d = 3; d * d <= rest; d += 2) strip(d);
  if (rest > 1) factors.emplace_back(rest, 1);
  return factors;
}

bool divides(const Integer& a, const Integer& b) {
  if (a == 0) return b == 0;
  return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

}  // namespace elw
