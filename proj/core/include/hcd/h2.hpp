#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcd/core.hpp"

namespace hcd {

/// Two triplets sharing exactly two vertices.
class H2Pair {
 public:
  /// Throws NotAnH2 unless the triplets share exactly two vertices.
  H2Pair(Triplet e1, Triplet e2);

  const Triplet& first() const noexcept { return e1_; }
  const Triplet& second() const noexcept { return e2_; }

  /// Unchecked construction, used by verify_h2_pairing tests to feed bad pairs.
  static H2Pair unchecked(Triplet e1, Triplet e2) { return H2Pair(e1, e2, 0); }

 private:
  H2Pair(Triplet e1, Triplet e2, int) : e1_(e1), e2_(e2) {}
  Triplet e1_;
  Triplet e2_;
};

/// Pairs up all C(n,3) triples of {0..n-1} into H2 copies via a perfect
/// matching on the "share two vertices" graph. seed 0 keeps the natural
/// triple order; other seeds shuffle it. Throws InfeasibleOrder when
/// n = 3 (mod 4) or n < 4, MatchingFailed if `attempts` matchings fail.
std::vector<H2Pair> h2_decompose(int n, std::uint64_t seed = 0, int attempts = 8);

enum class H2Defect { DuplicateTriple, NotAnH2, MissingTriple, VertexOutOfRange };

std::string_view to_string(H2Defect d) noexcept;

/// nullopt iff every triple of {0..n-1} occurs exactly once and every pair
/// shares exactly two vertices.
std::optional<H2Defect> verify_h2_pairing(int n, const std::vector<H2Pair>& pairs);

}  // namespace hcd
