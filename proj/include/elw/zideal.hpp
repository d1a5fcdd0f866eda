#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>

#include "elw/integer.hpp"

namespace elw {

/// An l-adic valuation: a nonnegative integer, or infinity for the zero ideal.
class Valuation {
 public:
  constexpr Valuation() = default;
  constexpr explicit Valuation(std::uint64_t v) : value_(v) {}

  static constexpr Valuation infinity() { return Valuation(); }

  constexpr bool is_infinite() const { return !value_.has_value(); }
  /// Precondition: finite.
  constexpr std::uint64_t value() const { return *value_; }

  constexpr bool operator==(const Valuation&) const = default;
  constexpr std::strong_ordering operator<=>(const Valuation& other) const {
    if (is_infinite() || other.is_infinite()) {
      return static_cast<int>(is_infinite()) <=> static_cast<int>(other.is_infinite());
    }
    return *value_ <=> *other.value_;
  }

  std::string str() const;

 private:
  std::optional<std::uint64_t> value_;
};

/// An ideal of Z, held as its nonnegative generator. (0) is the zero ideal,
/// (1) the whole ring.
class ZIdeal {
 public:
  ZIdeal() = default;
  explicit ZIdeal(const Integer& generator) : generator_(abs(generator)) {}
  explicit ZIdeal(long generator) : ZIdeal(Integer(generator)) {}

  static ZIdeal zero() { return ZIdeal(); }
  static ZIdeal unit() { return ZIdeal(1); }

  /// The ideal generated by `gens`; the empty set generates (0).
  static ZIdeal from_generators(std::span<const Integer> gens);

  const Integer& generator() const { return generator_; }
  bool is_zero() const { return generator_ == 0; }
  bool is_unit() const { return generator_ == 1; }

  /// Whether `n` is an element of this ideal.
  bool contains(const Integer& n) const;
  /// Ideal containment: *this ⊇ other.
  bool contains(const ZIdeal& other) const;

  /// (k)·I.
  ZIdeal scaled(const Integer& k) const { return ZIdeal(k * generator_); }

  /// Canonical representative of n in Z/I: [0, g) for g > 0, n itself for (0).
  Integer reduce(const Integer& n) const;

  bool operator==(const ZIdeal&) const = default;

  std::string str() const { return "(" + to_string(generator_) + ")"; }

 private:
  Integer generator_ = 0;
};

/// Ideal sum I + J = (gcd).
ZIdeal operator+(const ZIdeal& a, const ZIdeal& b);

inline ZIdeal sum(const ZIdeal& a, const ZIdeal& b) { return a + b; }

inline bool contains(const ZIdeal& a, const ZIdeal& b) { return a.contains(b); }

/// l-adic valuation of the generator; throws Error(NotPrime).
Valuation ord_ell(const ZIdeal& ideal, const Integer& ell);

/// Valuation of an integer, infinity at 0; throws Error(NotPrime).
Valuation ord_ell(const Integer& n, const Integer& ell);

std::ostream& operator<<(std::ostream& os, const ZIdeal& ideal);
std::ostream& operator<<(std::ostream& os, const Valuation& v);

}  // namespace elw
