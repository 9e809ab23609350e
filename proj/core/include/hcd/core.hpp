#pragma once

// Data model for K_v^(3) - I: triplets, tight cycles, one-factors and
// decompositions, plus the exact-cover verifier used to certify every
// construction in the library.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hcd/error.hpp"

namespace hcd {

using Vertex = int;

/// A 3-element vertex set, stored sorted.
class Triplet {
 public:
  /// Sorts the three vertices. Throws DuplicateVertex or NegativeVertex.
  Triplet(Vertex x, Vertex y, Vertex z);

  Vertex a() const noexcept { return v_[0]; }
  Vertex b() const noexcept { return v_[1]; }
  Vertex c() const noexcept { return v_[2]; }
  const std::array<Vertex, 3>& vertices() const noexcept { return v_; }

  bool contains(Vertex x) const noexcept { return v_[0] == x || v_[1] == x || v_[2] == x; }
  /// Number of shared vertices.
  int intersection_size(const Triplet& other) const noexcept;
  bool disjoint(const Triplet& other) const noexcept { return intersection_size(other) == 0; }

  friend auto operator<=>(const Triplet&, const Triplet&) = default;
  friend bool operator==(const Triplet&, const Triplet&) = default;

 private:
  std::array<Vertex, 3> v_;
};

Triplet canonical_triplet(Vertex x, Vertex y, Vertex z);

std::string to_string(const Triplet& t);

/// Cyclic vertex sequence; its edges are the windows of three consecutive
/// vertices. Equality is up to rotation and reflection. The sequence is not
/// validated on construction so that malformed input can still be reported
/// by verify_cycle; use checked() when a well-formed cycle is required.
class TightCycle {
 public:
  TightCycle() = default;
  explicit TightCycle(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {}
  TightCycle(std::initializer_list<Vertex> vertices) : vertices_(vertices) {}

  /// Throws InvalidCycle unless length >= 4, vertices non-negative and distinct.
  static TightCycle checked(std::vector<Vertex> vertices);

  std::size_t length() const noexcept { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }

  /// Lexicographically least sequence over all rotations and reflections.
  std::vector<Vertex> canonical_form() const;

  /// Vertex-wise image under a mapping.
  TightCycle mapped(const std::function<Vertex(Vertex)>& f) const;
  /// Adds `shift` to every vertex modulo `v`.
  TightCycle shifted(Vertex shift, int v) const;

  friend bool operator==(const TightCycle& x, const TightCycle& y);
  friend std::strong_ordering operator<=>(const TightCycle& x, const TightCycle& y);

 private:
  std::vector<Vertex> vertices_;
};

std::string to_string(const TightCycle& c);

/// The k windows (v_i, v_{i+1}, v_{i+2}) of a cycle. Throws if a window
/// repeats a vertex.
std::vector<Triplet> cycle_edges(const TightCycle& c);

/// Set of v/3 pairwise disjoint triplets covering the vertex set.
struct OneFactor {
  std::vector<Triplet> blocks;

  /// Throws InvalidFactor if the blocks do not partition {0..v-1}.
  void validate(int v) const;
  /// {(i, i+v/3, i+2v/3)}: the factor left out by cyclic systems.
  static OneFactor cyclic(int v);
  /// {(3i, 3i+1, 3i+2)}.
  static OneFactor consecutive(int v);
};

struct Decomposition {
  int v = 0;
  int k = 0;
  OneFactor factor;
  std::vector<TightCycle> cycles;
  /// Set by the 2-split constructors; halves are [0, v/2) and [v/2, v).
  bool split2 = false;
};

/// Ordered disjoint vertex sets with declared sizes. Throws
/// OverlappingParts or WrongPartSize on construction.
class PartLabeling {
 public:
  PartLabeling(std::vector<std::vector<Vertex>> parts, std::vector<std::size_t> sizes);

  const std::vector<Vertex>& operator[](std::size_t i) const { return parts_[i]; }
  std::size_t size() const noexcept { return parts_.size(); }

 private:
  std::vector<std::vector<Vertex>> parts_;
};

/// Throws OverlappingParts if any vertex is repeated across (or within) the
/// parts, WrongPartSize if a part does not have its declared size. A
/// declared size of 0 means "any size".
void check_parts(std::initializer_list<std::span<const Vertex>> parts,
                 std::initializer_list<std::size_t> sizes);

/// v^2 (v-3) / 6. Throws InfeasibleOrder unless 3 | v and v >= 3.
std::uint64_t edge_count(int v);

/// All C(v,3) triplets minus the factor blocks, sorted.
std::vector<Triplet> target_edges(int v, const OneFactor& factor);

/// Brute-force edge sets of the partite hypergraphs used by the constructions.
std::vector<Triplet> ktri_edges(std::span<const Vertex> a, std::span<const Vertex> b,
                                std::span<const Vertex> c);
std::vector<Triplet> kpq_edges(std::span<const Vertex> a, std::span<const Vertex> b);
std::vector<Triplet> crt_edges(std::span<const Vertex> a, std::span<const Vertex> b);
/// All triplets inside a vertex set.
std::vector<Triplet> complete_edges(std::span<const Vertex> a);

enum class CycleDefect { WrongLength, RepeatedVertex, VertexOutOfRange };

std::string_view to_string(CycleDefect d) noexcept;

/// nullopt when the sequence has exactly k distinct vertices, all in [0, v).
std::optional<CycleDefect> verify_cycle(std::span<const Vertex> cycle, int v, int k);
inline std::optional<CycleDefect> verify_cycle(const TightCycle& c, int v, int k) {
  return verify_cycle(std::span<const Vertex>(c.vertices()), v, k);
}

struct CycleIssue {
  std::size_t index;
  CycleDefect defect;
};

/// Full certificate report. Edge lists are sorted; duplicated edges appear
/// once each with their coverage count.
struct VerificationReport {
  bool valid = false;
  int v = 0;
  int k = 0;
  std::size_t cycle_count = 0;
  std::size_t target_edge_count = 0;
  std::size_t covered_target_edges = 0;
  std::optional<std::string> factor_error;
  std::vector<CycleIssue> cycle_issues;
  std::vector<Triplet> missing;
  std::vector<std::pair<Triplet, std::uint32_t>> duplicated;
  std::vector<Triplet> foreign;

  std::string summary() const;
};

/// Exact multiset accounting of cycle edges against an arbitrary target
/// edge set; vertices must lie in [0, v).
VerificationReport verify_cover(int v, int k, std::span<const TightCycle> cycles,
                                std::span<const Triplet> target);

/// Certifies that the cycles decompose K_v^(3) - factor. Never throws on
/// bad content; every defect is recorded in the report.
VerificationReport verify_decomposition(const Decomposition& d);

/// Applies a vertex permutation (perm[x] is the image of x) to the factor
/// and every cycle.
Decomposition relabel(const Decomposition& d, std::span<const Vertex> perm);

/// For a decomposition flagged split2: true iff every cycle lies inside one
/// half or has only crossing edges.
bool split2_structure_holds(const Decomposition& d);

}  // namespace hcd

template <>
struct std::hash<hcd::Triplet> {
  std::size_t operator()(const hcd::Triplet& t) const noexcept {
    std::uint64_t h = static_cast<std::uint32_t>(t.a());
    h = h * 0x9E3779B97F4A7C15ULL + static_cast<std::uint32_t>(t.b());
    h = h * 0x9E3779B97F4A7C15ULL + static_cast<std::uint32_t>(t.c());
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

template <>
struct std::hash<hcd::TightCycle> {
  std::size_t operator()(const hcd::TightCycle& c) const noexcept {
    std::size_t h = 0;
    for (hcd::Vertex x : c.canonical_form()) h = h * 1000003u + static_cast<std::size_t>(x);
    return h;
  }
};
