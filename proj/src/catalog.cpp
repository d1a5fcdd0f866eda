#include "elw/catalog.hpp"

#include <exception>
#include <unordered_set>

#include "elw/error.hpp"

namespace elw {

namespace {

constexpr Flag kAllFlags[] = {Flag::integral, Flag::regular, Flag::char_zero,
                              Flag::finite_field, Flag::smooth};

}  // namespace

std::string_view to_string(Flag flag) {
  switch (flag) {
    case Flag::integral: return "integral";
    case Flag::regular: return "regular";
    case Flag::char_zero: return "char_zero";
    case Flag::finite_field: return "finite_field";
    case Flag::smooth: return "smooth";
  }
  return "?";
}

Flag flag_from_string(std::string_view name) {
  for (Flag f : kAllFlags) {
    if (to_string(f) == name) return f;
  }
  throw Error(ErrorKind::Parse, "unknown flag '" + std::string(name) + "'");
}

std::vector<Flag> FlagSet::list() const {
  std::vector<Flag> out;
  for (Flag f : kAllFlags) {
    if (has(f)) out.push_back(f);
  }
  return out;
}

void CycleCatalog::validate() const {
  std::unordered_set<std::string_view> names;
  for (const auto& g : generators) {
    if (g.dim > dimension) {
      throw Error(ErrorKind::InvalidCatalog,
                  "catalog '" + name + "': generator '" + g.name + "' has dim " +
                      std::to_string(g.dim) + " > dimension " + std::to_string(dimension));
    }
    if (!names.insert(g.name).second) {
      throw Error(ErrorKind::InvalidCatalog,
                  "catalog '" + name + "': duplicate generator name '" + g.name + "'");
    }
  }
  if (flags.has(Flag::integral) && !global_chi) {
    throw Error(ErrorKind::InvalidCatalog,
                "catalog '" + name + "': flag integral requires global_chi");
  }
}

const CycleGenerator* CycleCatalog::find(std::string_view generator) const {
  for (const auto& g : generators) {
    if (g.name == generator) return &g;
  }
  return nullptr;
}

const CycleGenerator& CycleCatalog::at(std::string_view generator) const {
  if (const auto* g = find(generator)) return *g;
  throw Error(ErrorKind::UnknownGenerator,
              "catalog '" + name + "' has no generator '" + std::string(generator) + "'");
}

ElwSequence ElwSequence::of(std::initializer_list<long> generators) {
  std::vector<ZIdeal> ideals;
  for (long g : generators) ideals.emplace_back(g);
  return ElwSequence(std::move(ideals));
}

ElwSequence ElwSequence::of(std::span<const Integer> generators) {
  std::vector<ZIdeal> ideals;
  for (const auto& g : generators) ideals.emplace_back(g);
  return ElwSequence(std::move(ideals));
}

ZIdeal ElwSequence::level(std::int64_t i) const {
  if (i < 0 || ideals_.empty()) return ZIdeal::zero();
  const auto idx = static_cast<std::size_t>(i);
  return idx < ideals_.size() ? ideals_[idx] : ideals_.back();
}

bool ElwSequence::is_chain() const {
  for (std::size_t i = 0; i + 1 < ideals_.size(); ++i) {
    if (!ideals_[i + 1].contains(ideals_[i])) return false;
  }
  return true;
}

std::string ElwSequence::str() const {
  std::string out;
  for (const auto& ideal : ideals_) {
    if (!out.empty()) out += ',';
    out += ideal.str();
  }
  return out;
}

std::string_view to_string(MorphismKind kind) {
  switch (kind) {
    case MorphismKind::general: return "general";
    case MorphismKind::generically_finite: return "generically_finite";
    case MorphismKind::birational: return "birational";
    case MorphismKind::birational_normal: return "birational_normal";
  }
  return "?";
}

MorphismKind morphism_kind_from_string(std::string_view name) {
  for (auto k : {MorphismKind::general, MorphismKind::generically_finite,
                 MorphismKind::birational, MorphismKind::birational_normal}) {
    if (to_string(k) == name) return k;
  }
  throw Error(ErrorKind::Parse, "unknown morphism kind '" + std::string(name) + "'");
}

void MorphismModel::validate() const {
  try {
    source.validate();
    target.validate();
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidMorphism, e.what());
  }
  if (degree < 1) {
    throw Error(ErrorKind::InvalidMorphism, "degree must be positive");
  }
  if (kind != MorphismKind::general && source.dimension != target.dimension) {
    throw Error(ErrorKind::InvalidMorphism,
                std::string(to_string(kind)) + " morphism needs equal dimensions, got " +
                    std::to_string(source.dimension) + " and " +
                    std::to_string(target.dimension));
  }
  if ((kind == MorphismKind::birational || kind == MorphismKind::birational_normal) &&
      degree != 1) {
    throw Error(ErrorKind::InvalidMorphism, "birational morphism must have degree 1");
  }
}

ElwSequence elw_sequence(const CycleCatalog& catalog) {
  catalog.validate();
  // gcd per dimension, then prefix gcds.
  std::vector<Integer> by_dim(catalog.dimension + 1, Integer(0));
  for (const auto& g : catalog.generators) {
    Integer& slot = by_dim[g.dim];
    mpz_gcd(slot.get_mpz_t(), slot.get_mpz_t(), g.chi.get_mpz_t());
  }
  std::vector<ZIdeal> ideals;
  ideals.reserve(by_dim.size());
  ZIdeal running;
  for (const auto& g : by_dim) {
    running = running + ZIdeal(g);
    ideals.push_back(running);
  }
  return ElwSequence(std::move(ideals));
}

std::vector<ElwSequence> elw_sequences(std::span<const CycleCatalog> catalogs) {
  std::vector<ElwSequence> out(catalogs.size());
  // The lowest failing index wins, matching the serial path.
  std::exception_ptr failure;
  const auto count = static_cast<std::int64_t>(catalogs.size());
  std::int64_t failure_index = count;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t k = 0; k < count; ++k) {
    try {
      out[k] = elw_sequence(catalogs[k]);
    } catch (...) {
#pragma omp critical(elw_batch_failure)
      if (k < failure_index) {
        failure_index = k;
        failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<ElwSequence> elw_sequences_serial(std::span<const CycleCatalog> catalogs) {
  std::vector<ElwSequence> out;
  out.reserve(catalogs.size());
  for (const auto& c : catalogs) out.push_back(elw_sequence(c));
  return out;
}

}  // namespace elw
