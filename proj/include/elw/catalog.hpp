#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "elw/integer.hpp"
#include "elw/zideal.hpp"

namespace elw {

enum class Flag : unsigned {
  integral = 1u << 0,
  regular = 1u << 1,
  char_zero = 1u << 2,
  finite_field = 1u << 3,
  smooth = 1u << 4,
};

std::string_view to_string(Flag flag);
/// Throws Error(Parse) on an unknown name.
Flag flag_from_string(std::string_view name);

class FlagSet {
 public:
  FlagSet() = default;
  FlagSet(std::initializer_list<Flag> flags) {
    for (Flag f : flags) set(f);
  }

  bool has(Flag f) const { return (bits_ & static_cast<unsigned>(f)) != 0; }
  void set(Flag f) { bits_ |= static_cast<unsigned>(f); }
  /// Set flags in canonical order.
  std::vector<Flag> list() const;

  bool operator==(const FlagSet&) const = default;

 private:
  unsigned bits_ = 0;
};

/// An integral subvariety Z listed by its dimension and chi(Z, O_Z).
struct CycleGenerator {
  std::string name;
  std::uint64_t dim = 0;
  Integer chi;

  bool operator==(const CycleGenerator&) const = default;
};

/// Finite presentation of a proper scheme X by a generating set of integral
/// subvarieties. Treated as immutable once built.
struct CycleCatalog {
  std::string name;
  std::uint64_t dimension = 0;
  std::vector<CycleGenerator> generators;
  std::optional<Integer> global_chi;  // chi(X, O_X), required when integral
  FlagSet flags;

  /// Throws Error(InvalidCatalog) when a generator exceeds the dimension, two
  /// generators share a name, or an integral catalog lacks global_chi.
  void validate() const;

  const CycleGenerator* find(std::string_view generator) const;
  /// Throws Error(UnknownGenerator).
  const CycleGenerator& at(std::string_view generator) const;

  bool operator==(const CycleCatalog&) const = default;
};

/// elw_0 ⊂ elw_1 ⊂ ... ⊂ elw_n.
class ElwSequence {
 public:
  ElwSequence() = default;
  explicit ElwSequence(std::vector<ZIdeal> ideals) : ideals_(std::move(ideals)) {}
  /// Convenience for literals and CLI input.
  static ElwSequence of(std::initializer_list<long> generators);
  static ElwSequence of(std::span<const Integer> generators);

  std::uint64_t dimension() const { return ideals_.empty() ? 0 : ideals_.size() - 1; }
  std::size_t size() const { return ideals_.size(); }
  bool empty() const { return ideals_.empty(); }

  const ZIdeal& operator[](std::size_t i) const { return ideals_[i]; }
  /// elw_i with the conventions elw_{-1} = (0) and elw_i = elw_n for i > n.
  ZIdeal level(std::int64_t i) const;

  const std::vector<ZIdeal>& ideals() const { return ideals_; }

  /// Whether each level contains the previous one.
  bool is_chain() const;

  /// "(2),(2),(1)".
  std::string str() const;

  bool operator==(const ElwSequence&) const = default;

 private:
  std::vector<ZIdeal> ideals_;
};

/// A coherent sheaf F known through its top-dimensional components
/// (generator, length at the generic point) and chi(X, F).
struct SheafModel {
  std::uint64_t dim = 0;
  std::vector<std::pair<std::string, Integer>> components;
  Integer total_chi;
};

enum class MorphismKind { general, generically_finite, birational, birational_normal };

std::string_view to_string(MorphismKind kind);
MorphismKind morphism_kind_from_string(std::string_view name);

struct MorphismModel {
  CycleCatalog source;
  CycleCatalog target;
  MorphismKind kind = MorphismKind::general;
  Integer degree = 1;

  /// Throws Error(InvalidMorphism).
  void validate() const;
};

/// Formal r-cycle sum of coefficient·[generator].
struct CycleClass {
  std::uint64_t dim = 0;
  std::vector<std::pair<std::string, Integer>> terms;
};

/// elw_i is generated by chi of all generators with dim <= i.
/// Throws Error(InvalidCatalog) via CycleCatalog::validate.
ElwSequence elw_sequence(const CycleCatalog& catalog);

/// OpenMP batch kernel; element k equals elw_sequence(catalogs[k]).
std::vector<ElwSequence> elw_sequences(std::span<const CycleCatalog> catalogs);

/// Serial reference for elw_sequences.
std::vector<ElwSequence> elw_sequences_serial(std::span<const CycleCatalog> catalogs);

}  // namespace elw
