#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace elw {

enum class ErrorKind {
  NotPrime,
  InvalidArgument,
  InvalidCatalog,
  MissingFlag,
  UnknownGenerator,
  DimensionMismatch,
  InvalidMorphism,
  IndexOutOfRange,
  EmptyInput,
  BadCongruence,
  NonIntegral,
  OddSelfIntersection,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Raised for malformed input. Lemma violations on well-formed input are
/// reported through Check values instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace elw
