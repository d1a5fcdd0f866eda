#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "elw/integer.hpp"

namespace elw::admissibility {

/// A candidate index sequence (e_0, ..., e_n) of positive integers.
struct CandidateSequence {
  std::vector<Integer> e;

  bool operator==(const CandidateSequence&) const = default;
  friend bool operator<(const CandidateSequence& a, const CandidateSequence& b) {
    return std::lexicographical_compare(a.e.begin(), a.e.end(), b.e.begin(), b.e.end());
  }

  std::string str() const;
};

struct Violation {
  int condition = 0;   // clause number of the failed constraint
  std::uint64_t r = 0; // index at which it failed (HE only)
  std::string message;
};

struct Verdict {
  bool admissible = true;
  std::optional<Violation> witness;
};

/// (1) e_{r+1} | e_r and (2) e_0 | mu_td(r)·e_r for every r, scanning r
/// upward; the first failure is the witness. Throws Error(EmptyInput).
Verdict he_admissible(const CandidateSequence& s);

/// (1) e2 | e1 | e0, (2) e2 = gcd(2, e1), (3) e0 | 12·e2 and e0 | 2·e1.
Verdict k3_admissible(const Integer& e0, const Integer& e1, const Integer& e2);

/// All HE-admissible sequences of length n+1 with e_0 <= bound, in
/// lexicographic order. Parallel over e_0; the output is identical to
/// enumerate_he_serial.
std::vector<CandidateSequence> enumerate_he(std::uint64_t n, std::uint64_t bound);

/// Serial reference for enumerate_he.
std::vector<CandidateSequence> enumerate_he_serial(std::uint64_t n, std::uint64_t bound);

}  // namespace elw::admissibility
