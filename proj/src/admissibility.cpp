#include "elw/admissibility.hpp"

#include "elw/error.hpp"
#include "elw/todd.hpp"

namespace elw::admissibility {

std::string CandidateSequence::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i > 0) out += ',';
    out += to_string(e[i]);
  }
  return out + ")";
}

Verdict he_admissible(const CandidateSequence& s) {
  if (s.e.empty()) throw Error(ErrorKind::EmptyInput, "empty candidate sequence");
  for (const auto& x : s.e) {
    if (x < 1) {
      throw Error(ErrorKind::InvalidArgument, "sequence entries must be >= 1, got " + to_string(x));
    }
  }
  const std::uint64_t n = s.e.size() - 1;
  const Integer& e0 = s.e[0];
  for (std::uint64_t r = 0; r <= n; ++r) {
    if (r < n && !divides(s.e[r + 1], s.e[r])) {
      return {false, Violation{1, r,
                               "condition (1) fails at r=" + std::to_string(r) + ": " +
                                   to_string(s.e[r + 1]) + " ∤ " + to_string(s.e[r])}};
    }
    const Integer scaled = todd::mu_td(r) * s.e[r];
    if (!divides(e0, scaled)) {
      return {false, Violation{2, r,
                               "condition (2) fails at r=" + std::to_string(r) + ": " +
                                   to_string(e0) + " ∤ " + to_string(scaled)}};
    }
  }
  return {};
}

Verdict k3_admissible(const Integer& e0, const Integer& e1, const Integer& e2) {
  if (!divides(e2, e1) || !divides(e1, e0)) {
    return {false, Violation{1, 0,
                             "clause (1) fails: e2 | e1 | e0 violated for (" + to_string(e0) +
                                 "," + to_string(e1) + "," + to_string(e2) + ")"}};
  }
  Integer g;
  mpz_gcd_ui(g.get_mpz_t(), e1.get_mpz_t(), 2);
  if (e2 != g) {
    return {false, Violation{2, 0,
                             "clause (2) fails: e2 = " + to_string(e2) + " ≠ gcd(2, e1) = " +
                                 to_string(g)}};
  }
  for (const Integer& bound : {Integer(12 * e2), Integer(2 * e1)}) {
    if (!divides(e0, bound)) {
      return {false, Violation{3, 0,
                               "clause (3) fails: " + to_string(e0) + " ∤ " + to_string(bound)}};
    }
  }
  return {};
}

namespace {

using Chain = std::vector<std::uint64_t>;

__extension__ using Wide = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<Wide>(a) * b % m);
}

/// mu_td(r) mod q for every r <= n, via the prime factorization.
class ToddResidues {
 public:
  explicit ToddResidues(std::uint64_t n) : primes_(primes_up_to(n + 1)) {}

  bool divides_mu(std::uint64_t q, std::uint64_t r) const {
    if (q == 1) return true;
    std::uint64_t acc = 1 % q;
    for (std::uint64_t p : primes_) {
      if (p > r + 1) break;
      for (std::uint64_t k = r / (p - 1); k > 0 && acc != 0; --k) acc = mul_mod(acc, p % q, q);
      if (acc == 0) return true;
    }
    return acc == 0;
  }

 private:
  std::vector<std::uint64_t> primes_;
};

std::vector<std::uint64_t> divisors(std::uint64_t x) {
  std::vector<std::uint64_t> low, high;
  for (std::uint64_t d = 1; d * d <= x; ++d) {
    if (x % d != 0) continue;
    low.push_back(d);
    if (d != x / d) high.push_back(x / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

// Depth-first over divisor chains below e_0, ascending at each level, so
// emission is lexicographic. A failed condition (2) prunes the subtree.
void extend(Chain& chain, std::uint64_t n, const ToddResidues& todd, std::vector<Chain>& out) {
  const std::uint64_t r = chain.size();
  if (r == n + 1) {
    out.push_back(chain);
    return;
  }
  const std::uint64_t e0 = chain.front();
  for (std::uint64_t d : divisors(chain.back())) {
    if (!todd.divides_mu(e0 / d, r)) continue;
    chain.push_back(d);
    extend(chain, n, todd, out);
    chain.pop_back();
  }
}

std::vector<Chain> chains_from(std::uint64_t e0, std::uint64_t n, const ToddResidues& todd) {
  std::vector<Chain> out;
  Chain chain{e0};
  extend(chain, n, todd, out);
  return out;
}

std::vector<CandidateSequence> to_candidates(const std::vector<std::vector<Chain>>& buckets) {
  std::vector<CandidateSequence> out;
  for (const auto& bucket : buckets) {
    for (const auto& chain : bucket) {
      CandidateSequence s;
      s.e.reserve(chain.size());
      for (std::uint64_t x : chain) s.e.emplace_back(static_cast<unsigned long>(x));
      out.push_back(std::move(s));
    }
  }
  return out;
}

void require_bound(std::uint64_t bound) {
  if (bound < 1) throw Error(ErrorKind::InvalidArgument, "bound must be >= 1");
}

}  // namespace

std::vector<CandidateSequence> enumerate_he(std::uint64_t n, std::uint64_t bound) {
  require_bound(bound);
  const ToddResidues todd(n);
  std::vector<std::vector<Chain>> buckets(bound);
  const auto count = static_cast<std::int64_t>(bound);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t k = 0; k < count; ++k) {
    buckets[k] = chains_from(static_cast<std::uint64_t>(k) + 1, n, todd);
  }
  return to_candidates(buckets);
}

std::vector<CandidateSequence> enumerate_he_serial(std::uint64_t n, std::uint64_t bound) {
  require_bound(bound);
  const ToddResidues todd(n);
  std::vector<std::vector<Chain>> buckets;
  buckets.reserve(bound);
  for (std::uint64_t e0 = 1; e0 <= bound; ++e0) buckets.push_back(chains_from(e0, n, todd));
  return to_candidates(buckets);
}

}  // namespace elw::admissibility
