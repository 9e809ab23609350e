#pragma once

// Small explicit cycle systems used as building blocks. Every block takes
// caller-supplied ordered vertex lists, so one template can be placed on any
// labelled parts; positions in a list play the role of subscripts
// (a_1 is A[0], and so on).

#include <span>
#include <vector>

#include "hcd/core.hpp"

namespace hcd::blocks {

/// K_6^(3) minus {t1, t2} as three 6-cycles.
std::vector<TightCycle> bi6(std::span<const Vertex> t1, std::span<const Vertex> t2);

/// ktri{3,3,2} as three 6-cycles.
std::vector<TightCycle> tri332(std::span<const Vertex> a, std::span<const Vertex> b,
                               std::span<const Vertex> c);

/// crt{6}{6} as thirty 6-cycles, from the Z_12 base cycles with even
/// residues mapped into A and odd residues into B.
std::vector<TightCycle> crt66_c6(std::span<const Vertex> a, std::span<const Vertex> b);

struct BlockWithHoles {
  std::vector<TightCycle> cycles;
  std::vector<Triplet> uncovered;
};

/// K_9^(3) minus three disjoint triplets as nine 9-cycles.
/// Uncovered: {A1,A4,A7}, {A2,A5,A8}, {A3,A6,A9} (1-based positions).
BlockWithHoles k9_c9(std::span<const Vertex> a);

/// Six 6-cycles of the ordinary graph K_9 on {0..8} partitioning its 36 edges.
const std::vector<std::vector<Vertex>>& k9_graph_c6();

/// kpq{9}{3} as twelve 9-cycles.
std::vector<TightCycle> kpq93_c9(std::span<const Vertex> a, std::span<const Vertex> b);

/// kpq{6}{3} as five 9-cycles.
std::vector<TightCycle> kpq63_c9(std::span<const Vertex> a, std::span<const Vertex> b);

/// ktri{3,3,3} as three 9-cycles.
std::vector<TightCycle> tri333_c9(std::span<const Vertex> a, std::span<const Vertex> b,
                                  std::span<const Vertex> c);

/// K_12^(3) minus four disjoint triplets as 24 9-cycles (two base cycles
/// rotated mod 12). Uncovered: {A1,A5,A9}, {A2,A6,A10}, {A3,A7,A11}, {A4,A8,A12}.
BlockWithHoles k12_c9(std::span<const Vertex> a);

/// K_15^(3) minus five disjoint triplets as 50 9-cycles. C becomes one of
/// the uncovered triplets; the other four lie two in A and two in B.
BlockWithHoles k15_c9(std::span<const Vertex> a, std::span<const Vertex> b,
                      std::span<const Vertex> c);

}  // namespace hcd::blocks
