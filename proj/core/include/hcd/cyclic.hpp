#pragma once

// Decompositions on Z_v invariant under i -> i+1. A triplet's type is its
// orbit under the shift, represented by (1, b', c') with entries in 1..v.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hcd/core.hpp"

namespace hcd::cyclic {

using TypeRep = std::array<int, 3>;

struct TripletType {
  /// (1, b', c'), 1 < b' < c' <= v.
  TypeRep rep{};
  /// b' - 1.
  int d = 0;
  /// The triplet's own vertices, ordered by their image in rep.
  std::array<Vertex, 3> ordered{};

  friend bool operator==(const TripletType&, const TripletType&) = default;
};

/// Vertices are read modulo v. Throws DegenerateOrbit for (i, i+v/3, i+2v/3).
TripletType triplet_type(const Triplet& t, int v);
TripletType triplet_type(Vertex x, Vertex y, Vertex z, int v);

bool is_factor_triplet(const Triplet& t, int v);

std::string to_string(const TypeRep& rep);

/// Type of every window of a cycle, in window order.
std::vector<TripletType> window_types(const TightCycle& c, int v);

/// Smallest s > 0 with c + s equal to c up to rotation and reflection.
int orbit_period(const TightCycle& c, int v);

struct BaseCycle {
  TightCycle cycle;
  int period = 0;
};

struct CyclicSystem {
  int v = 0;
  int k = 0;
  std::vector<BaseCycle> base_cycles;

  /// Detects periods; never validates.
  static CyclicSystem from_cycles(int v, int k, std::vector<TightCycle> cycles);
  std::vector<TightCycle> cycles() const;
};

/// v(v-3)/6. Throws InfeasibleOrder unless 3 | v and v >= 3.
std::uint64_t type_count(int v);

/// Types of all non-factor triplets of Z_v, sorted.
std::vector<TypeRep> all_types(int v);

/// The p shifts of every base cycle with period p, factor
/// {(i, i+v/3, i+2v/3)}. Throws InvalidCycle if a base cycle is malformed.
Decomposition expand_cyclic(const CyclicSystem& s);

struct TypeCoverage {
  TypeRep rep{};
  /// Sum of orbit periods over base-cycle windows of this type; exactly v
  /// in a valid system.
  std::uint64_t weight = 0;
};

struct CyclicReport {
  bool valid = false;
  int v = 0;
  int k = 0;
  std::vector<int> periods;
  /// Per base cycle, per window; empty for a base cycle with a bad window.
  std::vector<std::vector<TripletType>> type_rows;
  /// Base-cycle index and reason for cycles that could not be typed.
  std::vector<std::pair<std::size_t, std::string>> base_issues;
  std::vector<TypeRep> uncovered_types;
  std::vector<TypeCoverage> miscovered_types;
  std::size_t expanded_cycle_count = 0;
  VerificationReport decomposition;

  std::string summary() const;
};

/// Type calculus plus full expansion through verify_decomposition. Never
/// throws on bad content.
CyclicReport verify_cyclic(const CyclicSystem& s);

/// Corrected systems keyed by (k, v).
const std::map<std::pair<int, int>, CyclicSystem>& bundled_systems();
/// Throws UnknownSystem.
const CyclicSystem& bundled_system(int k, int v);

/// The printed listings, verbatim, keyed by (k, v). Two of them contain
/// rows that are not tight cycles; bundled_systems() carries the repairs.
const std::map<std::pair<int, int>, std::vector<TightCycle>>& printed_systems();
/// Concatenated HCB text of the printed listings in (k, v) order.
std::string printed_listing_text();

inline constexpr std::uint64_t kDefaultSearchBudget = 5'000'000;

/// Backtracking over base cycles, always extending the smallest uncovered
/// type. Orders that need a short-orbit base cycle get one first. Throws
/// NotFound when the node budget runs out or the space is exhausted.
CyclicSystem search_cyclic(int v, int k, std::uint64_t seed = 0, std::uint64_t budget = kDefaultSearchBudget);

}  // namespace hcd::cyclic
