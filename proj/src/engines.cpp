#include "elw/engines.hpp"

#include <stdexcept>
#include <vector>

#include "elw/error.hpp"

namespace elw::engines {

namespace {

using Factors = std::vector<std::pair<Integer, Integer>>;

const FlagSet kSmoothCharZero{Flag::integral, Flag::regular, Flag::char_zero, Flag::smooth};

void require_positive(std::uint64_t n, const char* what) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, std::string(what) + " must be >= 1");
}

// Builders state their expected sequence independently of the generator
// data; a mismatch is a bug in the builder.
BuiltExample finish(CycleCatalog catalog, ElwSequence expected) {
  if (elw_sequence(catalog) != expected) {
    throw std::logic_error("builder '" + catalog.name + "' produced " +
                           elw_sequence(catalog).str() + ", expected " + expected.str());
  }
  return {std::move(catalog), std::move(expected)};
}

ElwSequence pattern(std::uint64_t n, std::uint64_t high_levels, long high, long low) {
  std::vector<ZIdeal> ideals;
  for (std::uint64_t i = 0; i <= n; ++i) ideals.emplace_back(i < high_levels ? high : low);
  return ElwSequence(std::move(ideals));
}

}  // namespace

Integer curve_chi(const Integer& genus, const Integer& degree) { return degree + 1 - genus; }

Integer product_curve_chi(std::span<const std::pair<Integer, Integer>> factors) {
  if (factors.empty()) throw Error(ErrorKind::EmptyInput, "product of zero curves");
  Integer chi = 1;
  for (const auto& [genus, degree] : factors) chi *= curve_chi(genus, degree);
  return chi;
}

BuiltExample conic_product_catalog(std::uint64_t n) {
  require_positive(n, "number of conics");
  CycleCatalog c;
  c.name = "conics-" + std::to_string(n);
  c.dimension = n;
  c.flags = kSmoothCharZero;

  // Every conic splits over a common quadratic extension.
  c.generators.push_back({"pt2", 0, 2});
  for (std::uint64_t i = 1; i < n; ++i) {
    // C_1 x ... x C_i times a degree-2 point of the remaining factors.
    const Factors conics(i, {0, 0});
    c.generators.push_back({"C1..C" + std::to_string(i) + "*pt2", i, 2 * product_curve_chi(conics)});

    // A divisor D of multidegree (2,...,2) on C_1 x ... x C_{i+1}:
    // chi(O_D) = chi(O) - chi(O(-D)). Line bundle degrees are even.
    const Factors trivial(i + 1, {0, 0});
    const Factors negative(i + 1, {0, -2});
    Integer chi = product_curve_chi(trivial) - product_curve_chi(negative);
    if (i + 1 < n) chi *= 2;
    c.generators.push_back({"D(2^" + std::to_string(i + 1) + ")", i, chi});
  }
  const Integer top = product_curve_chi(Factors(n, {0, 0}));
  c.generators.push_back({"Y", n, top});
  c.global_chi = top;
  return finish(std::move(c), pattern(n, n, 2, 1));
}

BuiltExample severi_brauer_catalog(const Integer& p) {
  require_prime(p);
  const std::uint64_t n = p.get_ui() - 1;
  CycleCatalog c;
  c.name = "severi-brauer-" + to_string(p);
  c.dimension = n;
  c.flags = kSmoothCharZero;
  // Sum of the p conjugates of a linear subspace; its normalization has chi = p.
  for (std::uint64_t i = 0; i < n; ++i) {
    c.generators.push_back({"L" + std::to_string(i) + "*" + to_string(p), i, p});
  }
  c.generators.push_back({"X", n, 1});
  c.global_chi = 1;
  return finish(std::move(c), pattern(n, n, p.get_si(), 1));
}

BuiltExample projective_space_catalog(std::uint64_t n) {
  CycleCatalog c;
  c.name = "P" + std::to_string(n);
  c.dimension = n;
  c.flags = kSmoothCharZero;
  for (std::uint64_t i = 0; i <= n; ++i) c.generators.push_back({"P" + std::to_string(i), i, 1});
  c.global_chi = 1;
  return finish(std::move(c), pattern(n, 0, 1, 1));
}

DoubleCoverChi double_cover_chi(const Integer& d, const Integer& r) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "branch half-degree d must be >= 1");
  const Integer twice = (d - 1) * (d - 2);
  if (!divides(2, twice)) {
    throw Error(ErrorKind::NonIntegral, "(d-1)(d-2) is odd for d = " + to_string(d));
  }
  // (H^2) = 2 cancels the 1/2.
  return {1 + twice / 2, r * (r + d - 3)};
}

BuiltExample real_double_cover_catalog(const Integer& d, std::uint64_t r_max) {
  Integer residue;
  mpz_fdiv_r_ui(residue.get_mpz_t(), d.get_mpz_t(), 4);
  if (d < 2 || residue != 2) {
    throw Error(ErrorKind::BadCongruence, "d = " + to_string(d) + " is not 2 mod 4");
  }
  require_positive(r_max, "r_max");
  CycleCatalog c;
  c.name = "double-cover-" + to_string(d);
  c.dimension = 2;
  c.flags = kSmoothCharZero;
  c.generators.push_back({"pt2", 0, 2});
  for (std::uint64_t r = 1; r <= r_max; ++r) {
    c.generators.push_back({"C" + std::to_string(r) + "H", 1, double_cover_chi(d, r).curve_chi});
  }
  const Integer surface = double_cover_chi(d, 0).surface_chi;
  c.generators.push_back({"S", 2, surface});
  c.global_chi = surface;
  return finish(std::move(c), ElwSequence::of({2, 2, 1}));
}

Integer quadric_bidegree_chi(const Integer& a, const Integer& b) {
  if (a < 1 || b < 1) throw Error(ErrorKind::InvalidArgument, "bidegree entries must be >= 1");
  return 1 - (a - 1) * (b - 1);
}

BuiltExample quadric3_catalog() {
  CycleCatalog c;
  c.name = "quadric3";
  c.dimension = 3;
  c.flags = kSmoothCharZero;
  c.generators = {
      {"pt2", 0, 2},
      {"C2", 1, quadric_bidegree_chi(1, 1)},
      {"C4", 1, quadric_bidegree_chi(1, 3)},
      // Hyperplane section Q^2 = Q^1 x Q^1, a product of two conics.
      {"Q2", 2, 1},
      {"Q3", 3, 1},
  };
  c.global_chi = 1;
  return finish(std::move(c), ElwSequence::of({2, 1, 1, 1}));
}

ElwSequence real_curve_product_sequence(std::uint64_t n) {
  require_positive(n, "number of curves");
  return pattern(n, 1, 2, 1);
}

ElwSequence hyperelliptic_product_sequence(std::uint64_t n) {
  require_positive(n, "number of curves");
  return pattern(n, n, 2, 1);
}

Integer k3_line_bundle_chi(const Integer& h_squared, const Integer& a) {
  if (h_squared < 2 || !divides(2, h_squared)) {
    throw Error(ErrorKind::OddSelfIntersection,
                "(H^2) must be even and >= 2, got " + to_string(h_squared));
  }
  return a * a * h_squared / 2 + 2;
}

}  // namespace elw::engines
