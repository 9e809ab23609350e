#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hcd/core.hpp"

namespace hcd {

/// Resolvable Steiner triple system: (v-1)/2 parallel classes of v/3
/// disjoint blocks, every pair of points in exactly one block.
struct KirkmanSystem {
  int v = 0;
  std::vector<std::vector<Triplet>> classes;
};

inline constexpr std::uint64_t kDefaultKtsBudget = 2'000'000;

/// v = 9 and v = 3^n come from the affine geometry AG(n,3), v = 15 and
/// v = 21 from bundled data, anything else from search_kts. Throws
/// InfeasibleOrder unless v = 3 (mod 6), SearchBudgetExceeded when the
/// search gives up.
KirkmanSystem kts(int v, std::uint64_t seed = 0, std::uint64_t budget = kDefaultKtsBudget);

/// Backtracking over classes, filling each class from its most constrained
/// point. `budget` bounds the number of search nodes.
KirkmanSystem search_kts(int v, std::uint64_t seed = 0, std::uint64_t budget = kDefaultKtsBudget);

/// Parallel classes of AG(n,3) on points 0..3^n-1 (digits base 3).
KirkmanSystem affine_kts(int n);

enum class KtsDefect { WrongClassCount, VertexOutOfRange, ClassNotPartition, PairCoveredTwice, PairUncovered };

std::string_view to_string(KtsDefect d) noexcept;

std::optional<KtsDefect> verify_kts(const KirkmanSystem& s);

}  // namespace hcd
