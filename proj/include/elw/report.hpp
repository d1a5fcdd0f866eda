#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "elw/json_io.hpp"
#include "elw/verify.hpp"

namespace elw::cli {

enum class Status { ok, violation, vacuous };

std::string_view to_string(Status status);

/// Result of one CLI command. Status is derived from the details, so
/// "violation iff some detail failed" holds by construction.
struct Report {
  std::string command;
  std::vector<Check> details;
  std::optional<io::json> payload;

  Status status() const;
  int exit_code() const { return status() == Status::violation ? 1 : 0; }

  io::json to_json() const;
  /// Aligned text rendering of the same fields as to_json.
  std::string to_table(bool color) const;
};

}  // namespace elw::cli
