#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "elw/catalog.hpp"

namespace elw {

/// `vacuous` means the lemma's hypotheses did not hold on the input, so
/// nothing was checked. It counts as passing.
enum class Outcome { pass, fail, vacuous };

std::string_view to_string(Outcome outcome);

/// The outcome of one lemma or consistency check. A failure is a diagnosis
/// of the presentation, not a program error.
struct Check {
  std::string name;
  Outcome outcome = Outcome::pass;
  std::string witness;

  bool passed() const { return outcome != Outcome::fail; }
  bool vacuous() const { return outcome == Outcome::vacuous; }
};

bool all_passed(std::span<const Check> checks);

/// Each level contains the previous one.
Check chain_check(const ElwSequence& seq);

/// For integral X: elw_n = elw_{n-1} + (chi(X, O_X)), and some
/// top-dimensional generator carries chi(X, O_X). Throws Error(MissingFlag).
Check check_top_relation(const CycleCatalog& catalog);

/// For integral X: if ord_l elw_n < ord_l elw_{n-1}, then
/// ord_l elw_n = ord_l chi(X, O_X). Throws Error(MissingFlag, NotPrime).
Check check_ord_relation(const CycleCatalog& catalog, const Integer& ell);

/// chi(X, F) - sum length_i·chi(Z_i) lies in elw_{dim F - 1}.
/// Throws Error(UnknownGenerator, DimensionMismatch).
Check sheaf_chi_check(const CycleCatalog& catalog, const SheafModel& sheaf);

/// Containment of every source level in the target level, plus the chi
/// congruence for the morphism kind. Throws Error(InvalidMorphism).
std::vector<Check> morphism_checks(const MorphismModel& morphism);

/// Regular birational catalogs must have equal sequences.
/// Throws Error(MissingFlag, DimensionMismatch).
Check check_birational_invariance(const CycleCatalog& a, const CycleCatalog& b);

/// degree·elw_i(Y) ⊂ elw_i(X) + elw_{i-1}(Y). Throws Error(IndexOutOfRange).
Check degree_formula_check(const ElwSequence& seq_x, const ElwSequence& seq_y,
                           const Integer& degree, std::uint64_t i);

/// If l ∤ degree and ord_l elw_{i-1}(Y) > ord_l elw_i(Y), then
/// ord_l elw_i(X) = ord_l elw_i(Y). Throws Error(NotPrime, IndexOutOfRange).
Check rost_corollary_check(const ElwSequence& seq_x, const ElwSequence& seq_y,
                           const Integer& degree, const Integer& ell, std::uint64_t i);

struct Residue {
  Integer value;   // canonical representative
  ZIdeal modulus;  // elw_{r-1}; (0) means value is exact
};

/// chi of a formal r-cycle reduced modulo elw_{r-1}.
/// Throws Error(UnknownGenerator, DimensionMismatch).
Residue cycle_residue(const CycleCatalog& catalog, const CycleClass& cycle);

/// mu_td(r)·elw_r ⊂ elw_0: every r for char_zero catalogs, r = n-1 for
/// regular ones. Throws Error(MissingFlag) when neither flag is set.
std::vector<Check> todd_divisibility_check(const CycleCatalog& catalog);

/// chi of the generic fiber lies in the ideal of special-fiber
/// multiplicities. Throws Error(EmptyInput).
Check henselian_fiber_check(const Integer& chi_generic, std::span<const Integer> multiplicities);

/// Over a finite field all levels coincide. Throws Error(MissingFlag).
Check finite_field_check(const CycleCatalog& catalog);

}  // namespace elw
