#include "elw/todd.hpp"

#include "elw/error.hpp"

namespace elw::todd {

Integer ToddDenominator::expand() const {
  Integer result = 1;
  for (const auto& [p, e] : valuations) {
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), p, e);
    result *= power;
  }
  return result;
}

std::string ToddDenominator::str() const {
  std::string out;
  for (const auto& [p, e] : valuations) {
    if (!out.empty()) out += ' ';
    out += std::to_string(p) + '^' + std::to_string(e);
  }
  return out;
}

ToddDenominator factor(std::uint64_t n) {
  ToddDenominator td{n, {}};
  for (std::uint64_t p : primes_up_to(n + 1)) {
    td.valuations.emplace(p, n / (p - 1));
  }
  return td;
}

Integer mu_td(std::uint64_t n) {
  Integer result = 1;
  for (std::uint64_t p : primes_up_to(n + 1)) {
    for (std::uint64_t k = 0; k < n / (p - 1); ++k) result *= p;
  }
  return result;
}

std::uint64_t mu_td_valuation(std::uint64_t n, const Integer& p) {
  require_prime(p);
  if (p > n + 1) return 0;
  return n / (p.get_ui() - 1);
}

ChainResult check_divides_chain(std::uint64_t n, std::uint64_t m) {
  if (n < 1 || m < 1) {
    throw Error(ErrorKind::InvalidArgument, "check_divides_chain requires n, m >= 1");
  }
  const std::uint64_t top = n + m - 1;
  // Every prime dividing n!·mu_td(m) is at most max(n, m+1) <= top+1.
  for (std::uint64_t p : primes_up_to(top + 1)) {
    const std::uint64_t lhs = factorial_valuation(n, p) + m / (p - 1);
    const std::uint64_t rhs = top / (p - 1);
    if (lhs > rhs) return {false, p};
  }
  return {};
}

}  // namespace elw::todd
