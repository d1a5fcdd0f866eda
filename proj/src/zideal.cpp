#include "elw/zideal.hpp"

namespace elw {

std::string Valuation::str() const {
  return is_infinite() ? std::string("inf") : std::to_string(*value_);
}

ZIdeal ZIdeal::from_generators(std::span<const Integer> gens) {
  Integer g = 0;
  for (const auto& x : gens) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  return ZIdeal(g);
}

bool ZIdeal::contains(const Integer& n) const { return divides(generator_, n); }

bool ZIdeal::contains(const ZIdeal& other) const {
  return divides(generator_, other.generator_);
}

Integer ZIdeal::reduce(const Integer& n) const {
  if (is_zero()) return n;
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), generator_.get_mpz_t());
  return r;
}

ZIdeal operator+(const ZIdeal& a, const ZIdeal& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.generator().get_mpz_t(), b.generator().get_mpz_t());
  return ZIdeal(g);
}

Valuation ord_ell(const Integer& n, const Integer& ell) {
  require_prime(ell);
  if (n == 0) return Valuation::infinity();
  return Valuation(valuation(n, ell));
}

Valuation ord_ell(const ZIdeal& ideal, const Integer& ell) {
  return ord_ell(ideal.generator(), ell);
}

std::ostream& operator<<(std::ostream& os, const ZIdeal& ideal) { return os << ideal.str(); }

std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << v.str(); }

}  // namespace elw
