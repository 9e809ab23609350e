#pragma once

// Recursive constructions of tight 6- and 9-cycle decompositions of
// K_v^(3) - I from the explicit blocks. Every constructor returns the
// one-factor it leaves out, which depends on the construction.

#include <cstdint>
#include <span>
#include <vector>

#include "hcd/core.hpp"
#include "hcd/kts.hpp"

namespace hcd::assembler {

struct AssemblyParams {
  /// v = 12u + 3s with s in {0,1,2}.
  int u = 0;
  int s = 0;
  /// Part multipliers: parts of sizes 3p, 3q, 3r.
  int p = 0;
  int q = 0;
  int r = 0;
  /// p = 2a + 3b with b in {0,1}.
  int a = 0;
  int b = 0;
};

/// u and s for a given order.
AssemblyParams order_params(int v);
/// a and b for a part multiplier p >= 2, keeping b in {0,1}.
AssemblyParams chain_split(int p);

/// ktri{3p,3q,3r}: split C, then B, then A into 3-sets and place
/// tri333_c9 on every class triple. 3pqr cycles.
std::vector<TightCycle> ktri3_c9(std::span<const Vertex> a, std::span<const Vertex> b,
                                 std::span<const Vertex> c);

/// kpq{3p}{3q}, p >= 2: per 3-set of B, A is cut into a 6-sets and b
/// 9-sets, covered by kpq63/kpq93 blocks plus ktri pieces between them.
std::vector<TightCycle> kpq3_c9(std::span<const Vertex> a, std::span<const Vertex> b);

/// crt{3p}{3q} = kpq3_c9(A,B) + kpq3_c9(B,A); p, q >= 2.
std::vector<TightCycle> crt3_c9(std::span<const Vertex> a, std::span<const Vertex> b);

/// Throws InfeasibleOrder unless v >= 6 and v = 0, 3, 6 (mod 12).
/// `seed` is passed to h2_decompose.
Decomposition construct_c6(int v, std::uint64_t seed = 0);

/// Throws InfeasibleOrder unless v >= 9 and 3 | v.
Decomposition construct_c9(int v);

/// Two construct_c9(v/2) halves plus crt3_c9 across. v = 0 (mod 6), v >= 18.
Decomposition construct_c9_split2(int v);

/// v = 0, 6, 12 (mod 24), v >= 12. The 24p+6 case needs KTS(12p+3) and
/// propagates SearchBudgetExceeded from kts().
Decomposition construct_c6_split2(int v, std::uint64_t seed = 0,
                                  std::uint64_t kts_budget = kDefaultKtsBudget);

/// Dispatches on k and split2; throws UnsupportedK for k other than 6, 9.
Decomposition construct(int k, int v, bool split2 = false, std::uint64_t seed = 0);

}  // namespace hcd::assembler
