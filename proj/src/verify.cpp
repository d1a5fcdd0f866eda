#include "elw/verify.hpp"

#include <algorithm>

#include "elw/error.hpp"
#include "elw/todd.hpp"

namespace elw {

namespace {

Check make(std::string name, bool ok, std::string witness) {
  return {std::move(name), ok ? Outcome::pass : Outcome::fail, std::move(witness)};
}

Check vacuous(std::string name, std::string why) {
  return {std::move(name), Outcome::vacuous, std::move(why)};
}

void require_flag(const CycleCatalog& c, Flag flag, std::string_view op) {
  if (!c.flags.has(flag)) {
    throw Error(ErrorKind::MissingFlag, std::string(op) + " requires flag " +
                                            std::string(to_string(flag)) + " on catalog '" +
                                            c.name + "'");
  }
}

std::string membership(const Integer& n, const ZIdeal& ideal) {
  return to_string(n) + (ideal.contains(n) ? " ∈ " : " ∉ ") + ideal.str();
}

std::string level_name(std::int64_t i) { return "elw_" + std::to_string(i); }

}  // namespace

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::vacuous: return "vacuous";
  }
  return "?";
}

bool all_passed(std::span<const Check> checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });
}

Check chain_check(const ElwSequence& seq) {
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (!seq[i + 1].contains(seq[i])) {
      return make("chain", false,
                  level_name(i) + " = " + seq[i].str() + " ⊄ " + level_name(i + 1) + " = " +
                      seq[i + 1].str());
    }
  }
  return make("chain", true, seq.str());
}

Check check_top_relation(const CycleCatalog& catalog) {
  require_flag(catalog, Flag::integral, "check_top_relation");
  const ElwSequence seq = elw_sequence(catalog);
  const auto n = static_cast<std::int64_t>(catalog.dimension);
  const Integer& chi = *catalog.global_chi;

  const bool top_present =
      std::any_of(catalog.generators.begin(), catalog.generators.end(), [&](const auto& g) {
        return g.dim == catalog.dimension && g.chi == chi;
      });
  const ZIdeal expected = seq.level(n - 1) + ZIdeal(chi);
  const bool relation = seq[n] == expected;

  std::string witness = level_name(n) + " = " + seq[n].str() + (relation ? " = " : " ≠ ") +
                        seq.level(n - 1).str() + " + (" + to_string(chi) + ")";
  if (!top_present) {
    witness += "; no dim-" + std::to_string(n) + " generator has chi = global_chi " +
               to_string(chi);
  }
  return make("top relation", relation && top_present, witness);
}

Check check_ord_relation(const CycleCatalog& catalog, const Integer& ell) {
  require_flag(catalog, Flag::integral, "check_ord_relation");
  require_prime(ell);
  const ElwSequence seq = elw_sequence(catalog);
  const auto n = static_cast<std::int64_t>(catalog.dimension);
  const std::string name = "ord relation l=" + to_string(ell);

  const Valuation top = ord_ell(seq[n], ell);
  const Valuation below = ord_ell(seq.level(n - 1), ell);
  if (!(top < below)) {
    return vacuous(name, "ord " + level_name(n) + " = " + top.str() + " ≥ ord " +
                             level_name(n - 1) + " = " + below.str());
  }
  const Valuation chi = ord_ell(*catalog.global_chi, ell);
  return make(name, top == chi,
              "ord " + level_name(n) + " = " + top.str() + (top == chi ? " = " : " ≠ ") +
                  "ord chi(O_X) = " + chi.str());
}

Check sheaf_chi_check(const CycleCatalog& catalog, const SheafModel& sheaf) {
  if (sheaf.dim > catalog.dimension) {
    throw Error(ErrorKind::DimensionMismatch,
                "sheaf of dim " + std::to_string(sheaf.dim) + " on catalog of dimension " +
                    std::to_string(catalog.dimension));
  }
  Integer weighted = 0;
  for (const auto& [generator, length] : sheaf.components) {
    const CycleGenerator& g = catalog.at(generator);
    if (g.dim != sheaf.dim) {
      throw Error(ErrorKind::DimensionMismatch,
                  "component '" + generator + "' has dim " + std::to_string(g.dim) +
                      ", sheaf has dim " + std::to_string(sheaf.dim));
    }
    if (length < 1) {
      throw Error(ErrorKind::InvalidArgument, "component '" + generator + "' has length " +
                                                  to_string(length) + " < 1");
    }
    weighted += length * g.chi;
  }
  const ZIdeal ideal = elw_sequence(catalog).level(static_cast<std::int64_t>(sheaf.dim) - 1);
  const Integer residual = sheaf.total_chi - weighted;
  return make("sheaf chi", ideal.contains(residual), membership(residual, ideal));
}

std::vector<Check> morphism_checks(const MorphismModel& morphism) {
  morphism.validate();
  const CycleCatalog& x = morphism.source;
  const CycleCatalog& y = morphism.target;
  const ElwSequence sx = elw_sequence(x);
  const ElwSequence sy = elw_sequence(y);

  std::vector<Check> checks;
  const auto top = static_cast<std::int64_t>(std::max(x.dimension, y.dimension));
  for (std::int64_t i = 0; i <= top; ++i) {
    const ZIdeal a = sx.level(i);
    const ZIdeal b = sy.level(i);
    const bool ok = b.contains(a);
    checks.push_back(make("containment i=" + std::to_string(i), ok,
                          level_name(i) + "(X) = " + a.str() + (ok ? " ⊂ " : " ⊄ ") +
                              level_name(i) + "(Y) = " + b.str()));
  }

  const auto dim_y = static_cast<std::int64_t>(y.dimension);
  auto congruence = [&](const std::string& name, const Integer& degree, std::int64_t level) {
    const Integer diff = *x.global_chi - degree * *y.global_chi;
    const ZIdeal ideal = sy.level(level);
    return make(name, ideal.contains(diff),
                membership(diff, ideal) + " = " + level_name(level) + "(Y)");
  };

  switch (morphism.kind) {
    case MorphismKind::general:
      break;
    case MorphismKind::generically_finite:
      if (x.flags.has(Flag::integral) && y.flags.has(Flag::integral)) {
        checks.push_back(congruence("degree chi congruence", morphism.degree, dim_y - 1));
      } else {
        checks.push_back(vacuous("degree chi congruence", "needs integral source and target"));
      }
      break;
    case MorphismKind::birational:
    case MorphismKind::birational_normal:
      if (!x.global_chi || !y.global_chi) {
        checks.push_back(vacuous("birational chi congruence", "needs global_chi on both sides"));
        if (morphism.kind == MorphismKind::birational_normal) {
          checks.push_back(vacuous("normal birational chi congruence",
                                   "needs global_chi on both sides"));
        }
        break;
      }
      checks.push_back(congruence("birational chi congruence", 1, dim_y - 1));
      if (morphism.kind == MorphismKind::birational_normal) {
        checks.push_back(congruence("normal birational chi congruence", 1, dim_y - 2));
      }
      break;
  }
  return checks;
}

Check check_birational_invariance(const CycleCatalog& a, const CycleCatalog& b) {
  require_flag(a, Flag::regular, "check_birational_invariance");
  require_flag(b, Flag::regular, "check_birational_invariance");
  if (a.dimension != b.dimension) {
    throw Error(ErrorKind::DimensionMismatch,
                "birational catalogs must have equal dimensions, got " +
                    std::to_string(a.dimension) + " and " + std::to_string(b.dimension));
  }
  const ElwSequence sa = elw_sequence(a);
  const ElwSequence sb = elw_sequence(b);
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (sa[i] != sb[i]) {
      return make("birational invariance", false,
                  level_name(i) + ": " + sa[i].str() + " ≠ " + sb[i].str());
    }
  }
  return make("birational invariance", true, sa.str());
}

namespace {

void require_level(const ElwSequence& x, const ElwSequence& y, std::uint64_t i) {
  if (x.empty() || y.empty() || i > std::min(x.dimension(), y.dimension())) {
    throw Error(ErrorKind::IndexOutOfRange,
                "level " + std::to_string(i) + " outside both sequences");
  }
}

void require_degree(const Integer& degree) {
  if (degree < 1) {
    throw Error(ErrorKind::InvalidArgument, "degree must be positive, got " + to_string(degree));
  }
}

}  // namespace

Check degree_formula_check(const ElwSequence& seq_x, const ElwSequence& seq_y,
                           const Integer& degree, std::uint64_t i) {
  require_level(seq_x, seq_y, i);
  require_degree(degree);
  const auto level = static_cast<std::int64_t>(i);
  const Integer scaled = degree * seq_y[i].generator();
  const ZIdeal bound = seq_x[i] + seq_y.level(level - 1);
  return make("degree formula i=" + std::to_string(i), bound.contains(scaled),
              to_string(degree) + "·" + seq_y[i].str() + (bound.contains(scaled) ? " ⊂ " : " ⊄ ") +
                  seq_x[i].str() + " + " + seq_y.level(level - 1).str());
}

Check rost_corollary_check(const ElwSequence& seq_x, const ElwSequence& seq_y,
                           const Integer& degree, const Integer& ell, std::uint64_t i) {
  require_prime(ell);
  require_level(seq_x, seq_y, i);
  require_degree(degree);
  const auto level = static_cast<std::int64_t>(i);
  const std::string name = "valuation transfer i=" + std::to_string(i) + " l=" + to_string(ell);

  if (divides(ell, degree)) {
    return vacuous(name, "branch: l | degree (" + to_string(ell) + " | " + to_string(degree) + ")");
  }
  const Valuation below = ord_ell(seq_y.level(level - 1), ell);
  const Valuation here = ord_ell(seq_y[i], ell);
  if (!(below > here)) {
    return vacuous(name, "branch: ord " + level_name(level - 1) + "(Y) = " + below.str() +
                             " ≤ ord " + level_name(level) + "(Y) = " + here.str());
  }
  const Valuation source = ord_ell(seq_x[i], ell);
  return make(name, source == here,
              "branch: hypotheses hold; ord " + level_name(level) + "(X) = " + source.str() +
                  (source == here ? " = " : " ≠ ") + "ord " + level_name(level) +
                  "(Y) = " + here.str());
}

Residue cycle_residue(const CycleCatalog& catalog, const CycleClass& cycle) {
  if (cycle.dim > catalog.dimension) {
    throw Error(ErrorKind::DimensionMismatch,
                "cycle of dim " + std::to_string(cycle.dim) + " on catalog of dimension " +
                    std::to_string(catalog.dimension));
  }
  Integer chi = 0;
  for (const auto& [generator, coefficient] : cycle.terms) {
    const CycleGenerator& g = catalog.at(generator);
    if (g.dim != cycle.dim) {
      throw Error(ErrorKind::DimensionMismatch,
                  "term '" + generator + "' has dim " + std::to_string(g.dim) +
                      ", cycle has dim " + std::to_string(cycle.dim));
    }
    chi += coefficient * g.chi;
  }
  ZIdeal modulus = elw_sequence(catalog).level(static_cast<std::int64_t>(cycle.dim) - 1);
  return {modulus.reduce(chi), modulus};
}

std::vector<Check> todd_divisibility_check(const CycleCatalog& catalog) {
  std::vector<std::uint64_t> levels;
  if (catalog.flags.has(Flag::char_zero)) {
    for (std::uint64_t r = 0; r <= catalog.dimension; ++r) levels.push_back(r);
  } else if (catalog.flags.has(Flag::regular)) {
    if (catalog.dimension == 0) {
      return {vacuous("todd r=n-1", "dimension 0 has no level n-1")};
    }
    levels.push_back(catalog.dimension - 1);
  } else {
    throw Error(ErrorKind::MissingFlag, "todd_divisibility_check requires flag char_zero or "
                                        "regular on catalog '" + catalog.name + "'");
  }

  const ElwSequence seq = elw_sequence(catalog);
  std::vector<Check> checks;
  for (std::uint64_t r : levels) {
    const Integer mu = todd::mu_td(r);
    const ZIdeal scaled = seq[r].scaled(mu);
    const bool ok = seq[0].contains(scaled);
    checks.push_back(make("todd r=" + std::to_string(r), ok,
                          to_string(mu) + "·" + seq[r].str() + " = " + scaled.str() +
                              (ok ? " ⊂ " : " ⊄ ") + seq[0].str()));
  }
  return checks;
}

Check henselian_fiber_check(const Integer& chi_generic, std::span<const Integer> multiplicities) {
  if (multiplicities.empty()) {
    throw Error(ErrorKind::EmptyInput, "henselian_fiber_check needs at least one multiplicity");
  }
  for (const auto& m : multiplicities) {
    if (m < 1) {
      throw Error(ErrorKind::InvalidArgument, "multiplicity " + to_string(m) + " < 1");
    }
  }
  const ZIdeal ideal = ZIdeal::from_generators(multiplicities);
  return make("henselian fiber", ideal.contains(chi_generic), membership(chi_generic, ideal));
}

Check finite_field_check(const CycleCatalog& catalog) {
  require_flag(catalog, Flag::finite_field, "finite_field_check");
  const ElwSequence seq = elw_sequence(catalog);
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (seq[i] != seq[0]) {
      return make("finite field", false,
                  level_name(i) + " = " + seq[i].str() + " ≠ " + level_name(0) + " = " +
                      seq[0].str() + "; not realizable over a finite field");
    }
  }
  return make("finite field", true, seq.str());
}

}  // namespace elw
