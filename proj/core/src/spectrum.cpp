#include "hcd/spectrum.hpp"

#include <algorithm>

#include "hcd/error.hpp"

namespace hcd::spectrum {
namespace {

Feasibility no(InfeasibleReason r, std::string detail) { return {false, r, std::move(detail)}; }

}  // namespace

std::string_view to_string(InfeasibleReason r) noexcept {
  switch (r) {
    case InfeasibleReason::OrderTooSmall: return "OrderTooSmall";
    case InfeasibleReason::NotMultipleOf3: return "NotMultipleOf3";
    case InfeasibleReason::DivisibilityViolated: return "DivisibilityViolated";
    case InfeasibleReason::WrongResidue: return "WrongResidue";
    case InfeasibleReason::CoverBoundViolated: return "CoverBoundViolated";
  }
  return "Unknown";
}

Feasibility feasible(int k, int v, bool split2) {
  if (k != 4 && k != 6 && k != 9) {
    throw Error(ErrorCode::UnsupportedK, "k=" + std::to_string(k) + " (supported: 4, 6, 9)");
  }
  if (k == 4) {
    if (v % 3 != 0) return no(InfeasibleReason::NotMultipleOf3, "v not a multiple of 3");
    return no(InfeasibleReason::CoverBoundViolated, "tight 4-cycle packings cannot cover v^2(v-3)/6 edges");
  }

  const int min_v = split2 ? (k == 6 ? 12 : 18) : k;
  if (v < min_v) return no(InfeasibleReason::OrderTooSmall, "v must be at least " + std::to_string(min_v));
  if (v % 3 != 0) return no(InfeasibleReason::NotMultipleOf3, "v not a multiple of 3");

  const auto w = static_cast<std::int64_t>(v);
  if ((w * w * (w - 3)) % (6 * k) != 0) {
    return no(InfeasibleReason::DivisibilityViolated, "6k does not divide v^2(v-3)");
  }

  if (k == 6 && !split2 && v % 12 == 9) return no(InfeasibleReason::WrongResidue, "v must be 0, 3 or 6 mod 12");
  if (k == 6 && split2 && v % 24 != 0 && v % 24 != 6 && v % 24 != 12) {
    return no(InfeasibleReason::WrongResidue, "v must be 0, 6 or 12 mod 24");
  }
  if (k == 9 && split2 && v % 6 != 0) return no(InfeasibleReason::WrongResidue, "v must be 0 mod 6");
  return {true, std::nullopt, "feasible"};
}

C4Bounds c4_bounds(int v) {
  if (v < 4) throw Error(ErrorCode::InfeasibleOrder, "bounds need v >= 4");
  const auto w = static_cast<std::int64_t>(v);
  C4Bounds b;
  // innermost floor first
  b.schonheim = w * (((w - 1) * ((w - 2) / 2)) / 3) / 4;
  std::int64_t best = b.schonheim;
  if (v % 6 == 0) {
    b.johnson = w * (w * w - 3 * w - 6) / 24;
    best = std::min(best, *b.johnson);
  }
  b.max_coverable_edges = 4 * best;
  if (v % 3 == 0) {
    b.target_edges = w * w * (w - 3) / 6;
    b.impossible = b.max_coverable_edges < *b.target_edges;
  }
  return b;
}

}  // namespace hcd::spectrum
