#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace hcd::spectrum {

enum class InfeasibleReason {
  OrderTooSmall,
  NotMultipleOf3,
  DivisibilityViolated,
  WrongResidue,
  CoverBoundViolated,
};

std::string_view to_string(InfeasibleReason r) noexcept;

struct Feasibility {
  bool feasible = false;
  std::optional<InfeasibleReason> reason;
  /// Human-readable detail, e.g. "v not a multiple of 3".
  std::string detail;

  explicit operator bool() const noexcept { return feasible; }
};

/// Whether K_v^(3) - I decomposes into tight k-cycles (k in {4, 6, 9}),
/// optionally as a 2-split system. Throws UnsupportedK otherwise.
Feasibility feasible(int k, int v, bool split2 = false);

struct C4Bounds {
  std::int64_t schonheim = 0;
  /// Only for v = 0 (mod 6).
  std::optional<std::int64_t> johnson;
  /// 4 x the smallest defined bound.
  std::int64_t max_coverable_edges = 0;
  /// Edges of K_v^(3) - I when 3 | v.
  std::optional<std::int64_t> target_edges;
  /// True when 3 | v and max_coverable_edges < target_edges.
  bool impossible = false;
};

/// Packing bounds for tight 4-cycles in K_v^(3), exact integer arithmetic.
/// Throws InfeasibleOrder for v < 4.
C4Bounds c4_bounds(int v);

}  // namespace hcd::spectrum
