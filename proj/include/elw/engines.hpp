#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "elw/catalog.hpp"
#include "elw/integer.hpp"

namespace elw::engines {

/// A worked example: its catalog and the sequence it is known to have.
struct BuiltExample {
  CycleCatalog catalog;
  ElwSequence expected;
};

/// Riemann–Roch on a curve: chi(L) = deg L + 1 - g.
Integer curve_chi(const Integer& genus, const Integer& degree);

/// chi of an exterior tensor product of line bundles on a product of
/// curves; each factor is (genus, degree). Throws Error(EmptyInput).
Integer product_curve_chi(std::span<const std::pair<Integer, Integer>> factors);

/// Product of n pointless conics with independent Brauer classes.
BuiltExample conic_product_catalog(std::uint64_t n);

/// Nontrivial Severi–Brauer variety of dimension p-1. Throws Error(NotPrime).
BuiltExample severi_brauer_catalog(const Integer& p);

/// Split projective space of dimension n: every level is (1).
BuiltExample projective_space_catalog(std::uint64_t n);

struct DoubleCoverChi {
  Integer surface_chi;
  Integer curve_chi;
};

/// Double cover of the plane branched along a curve of degree 2d, and a
/// curve in |rH| on it. Throws Error(InvalidArgument) for d < 1.
DoubleCoverChi double_cover_chi(const Integer& d, const Integer& r);

/// Pointless real double cover with Picard group generated by H; curve
/// generators for r = 1..r_max. Throws Error(BadCongruence) unless d ≡ 2 mod 4.
BuiltExample real_double_cover_catalog(const Integer& d, std::uint64_t r_max);

/// chi(O_C) of a smooth curve of bidegree (a, b) on a quadric surface.
Integer quadric_bidegree_chi(const Integer& a, const Integer& b);

/// The empty real quadric threefold, with the bidegree (1,1) and (1,3)
/// curves C2 and C4 on its hyperplane section.
BuiltExample quadric3_catalog();

/// (2),(1),...,(1): products of pointless real curves of even genus.
ElwSequence real_curve_product_sequence(std::uint64_t n);

/// (2),...,(2),(1): products of very general hyperelliptic curves over C(t).
ElwSequence hyperelliptic_product_sequence(std::uint64_t n);

/// chi(aH) on a K3 surface with (H^2) = h_squared.
/// Throws Error(OddSelfIntersection) unless h_squared is even and >= 2.
Integer k3_line_bundle_chi(const Integer& h_squared, const Integer& a);

}  // namespace elw::engines
