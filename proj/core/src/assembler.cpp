#include "hcd/assembler.hpp"

#include <numeric>

#include "hcd/blocks.hpp"
#include "hcd/h2.hpp"

namespace hcd::assembler {
namespace {

using Part = std::vector<Vertex>;

void append(std::vector<TightCycle>& out, const std::vector<TightCycle>& more) {
  out.insert(out.end(), more.begin(), more.end());
}

std::span<const Vertex> slice(std::span<const Vertex> xs, std::size_t offset, std::size_t count) {
  return xs.subspan(offset, count);
}

Part range_part(Vertex first, int count) {
  Part out(static_cast<std::size_t>(count));
  std::iota(out.begin(), out.end(), first);
  return out;
}

void require_multiple_of_3(std::span<const Vertex> xs, std::size_t min_size) {
  if (xs.size() % 3 != 0 || xs.size() < min_size) {
    throw Error(ErrorCode::WrongPartSize, "part of size " + std::to_string(xs.size()) +
                                              " must be a multiple of 3 and at least " + std::to_string(min_size));
  }
}

[[noreturn]] void infeasible(int k, int v, const std::string& why) {
  throw Error(ErrorCode::InfeasibleOrder,
              "no tight " + std::to_string(k) + "-cycle construction for v=" + std::to_string(v) + ": " + why);
}

Decomposition shifted(const Decomposition& d, Vertex offset, int new_v) {
  Decomposition out;
  out.v = new_v;
  out.k = d.k;
  for (const Triplet& t : d.factor.blocks) out.factor.blocks.emplace_back(t.a() + offset, t.b() + offset, t.c() + offset);
  for (const TightCycle& c : d.cycles) out.cycles.push_back(c.mapped([offset](Vertex x) { return x + offset; }));
  return out;
}

void absorb(Decomposition& into, const Decomposition& part) {
  into.factor.blocks.insert(into.factor.blocks.end(), part.factor.blocks.begin(), part.factor.blocks.end());
  append(into.cycles, part.cycles);
}

// ktri{6,6,6} -> 2 x ktri{3,6,6} -> 4 x ktri{3,3,6} -> 12 x tri332
std::vector<TightCycle> ktri666_c6(std::span<const Vertex> x, std::span<const Vertex> y, std::span<const Vertex> z) {
  check_parts({x, y, z}, {6, 6, 6});
  std::vector<TightCycle> out;
  for (std::size_t i = 0; i < 6; i += 3) {
    for (std::size_t j = 0; j < 6; j += 3) {
      for (std::size_t l = 0; l < 6; l += 2) {
        append(out, blocks::tri332(slice(x, i, 3), slice(y, j, 3), slice(z, l, 2)));
      }
    }
  }
  return out;
}

}  // namespace

AssemblyParams order_params(int v) {
  AssemblyParams out;
  out.u = v / 12;
  out.s = (v % 12) / 3;
  return out;
}

AssemblyParams chain_split(int p) {
  if (p < 2) throw Error(ErrorCode::WrongPartSize, "kpq chain needs p >= 2, got p=" + std::to_string(p));
  AssemblyParams out;
  out.p = p;
  out.b = p % 2;
  out.a = (p - 3 * out.b) / 2;
  return out;
}

std::vector<TightCycle> ktri3_c9(std::span<const Vertex> a, std::span<const Vertex> b,
                                 std::span<const Vertex> c) {
  require_multiple_of_3(a, 3);
  require_multiple_of_3(b, 3);
  require_multiple_of_3(c, 3);
  check_parts({a, b, c}, {0, 0, 0});
  std::vector<TightCycle> out;
  for (std::size_t k = 0; k < c.size(); k += 3) {
    for (std::size_t j = 0; j < b.size(); j += 3) {
      for (std::size_t i = 0; i < a.size(); i += 3) {
        append(out, blocks::tri333_c9(slice(a, i, 3), slice(b, j, 3), slice(c, k, 3)));
      }
    }
  }
  return out;
}

std::vector<TightCycle> kpq3_c9(std::span<const Vertex> a, std::span<const Vertex> b) {
  require_multiple_of_3(a, 6);
  require_multiple_of_3(b, 3);
  check_parts({a, b}, {0, 0});
  const AssemblyParams split = chain_split(static_cast<int>(a.size() / 3));

  std::vector<std::span<const Vertex>> sixes;
  for (int i = 0; i < split.a; ++i) sixes.push_back(slice(a, static_cast<std::size_t>(6 * i), 6));
  std::optional<std::span<const Vertex>> nine;
  if (split.b == 1) nine = slice(a, static_cast<std::size_t>(6 * split.a), 9);

  std::vector<TightCycle> out;
  for (std::size_t j = 0; j < b.size(); j += 3) {
    const auto bj = slice(b, j, 3);
    for (const auto& s6 : sixes) append(out, blocks::kpq63_c9(s6, bj));
    if (nine) append(out, blocks::kpq93_c9(*nine, bj));
    for (std::size_t x = 0; x < sixes.size(); ++x) {
      if (nine) append(out, ktri3_c9(bj, sixes[x], *nine));
      for (std::size_t y = x + 1; y < sixes.size(); ++y) append(out, ktri3_c9(bj, sixes[x], sixes[y]));
    }
  }
  return out;
}

std::vector<TightCycle> crt3_c9(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::vector<TightCycle> out = kpq3_c9(a, b);
  append(out, kpq3_c9(b, a));
  return out;
}

Decomposition construct_c6(int v, std::uint64_t seed) {
  if (v < 6 || v % 3 != 0 || v % 12 == 9) infeasible(6, v, "need v >= 6 and v = 0, 3, 6 (mod 12)");
  Decomposition d;
  d.v = v;
  d.k = 6;
  d.factor = OneFactor::consecutive(v);
  const int n = v / 3;
  std::vector<Part> parts;
  for (int i = 0; i < n; ++i) parts.push_back(range_part(3 * i, 3));

  if (v == 6) {
    d.cycles = blocks::bi6(parts[0], parts[1]);
    return d;
  }

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) append(d.cycles, blocks::bi6(parts[static_cast<std::size_t>(i)], parts[static_cast<std::size_t>(j)]));
  }

  for (const H2Pair& pair : h2_decompose(n, seed)) {
    std::vector<Vertex> common;
    Vertex k1 = -1;
    Vertex k2 = -1;
    for (Vertex x : pair.first().vertices()) {
      if (pair.second().contains(x)) {
        common.push_back(x);
      } else {
        k1 = x;
      }
    }
    for (Vertex x : pair.second().vertices()) {
      if (!pair.first().contains(x)) k2 = x;
    }
    const Part& ai = parts[static_cast<std::size_t>(common[0])];
    const Part& aj = parts[static_cast<std::size_t>(common[1])];
    const Part& ak1 = parts[static_cast<std::size_t>(k1)];
    const Part& ak2 = parts[static_cast<std::size_t>(k2)];
    for (std::size_t t = 0; t < 3; ++t) {
      const std::array<Vertex, 2> half{ak1[t], ak2[t]};
      append(d.cycles, blocks::tri332(ai, aj, half));
    }
  }
  return d;
}

Decomposition construct_c9(int v) {
  if (v < 9 || v % 3 != 0) infeasible(9, v, "need v >= 9 and 3 | v");
  Decomposition d;
  d.v = v;
  d.k = 9;

  const int extra = v % 9;  // size of A_0: 0, 3 or 6
  const int u = v / 9;
  const Part a0 = range_part(0, extra);
  std::vector<Part> parts;
  for (int i = 0; i < u; ++i) parts.push_back(range_part(extra + 9 * i, 9));

  auto take_block = [&](const blocks::BlockWithHoles& block) {
    append(d.cycles, block.cycles);
    for (const Triplet& t : block.uncovered) d.factor.blocks.push_back(t);
  };

  // pieces shared by all three residues, among A_first..A_u
  auto among_nines = [&](std::size_t first) {
    for (std::size_t i = first; i < parts.size(); ++i) {
      for (std::size_t j = i + 1; j < parts.size(); ++j) {
        append(d.cycles, crt3_c9(parts[i], parts[j]));
        for (std::size_t l = j + 1; l < parts.size(); ++l) append(d.cycles, ktri3_c9(parts[i], parts[j], parts[l]));
      }
    }
  };

  if (extra == 0) {
    for (const Part& p : parts) take_block(blocks::k9_c9(p));
    among_nines(0);
  } else if (extra == 3) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const Part& ai = parts[i];
      // A_0 sits on the uncovered slot {a4, a8, a12}
      const Part labels{ai[0], ai[1], ai[2], a0[0], ai[3], ai[4], ai[5], a0[1], ai[6], ai[7], ai[8], a0[2]};
      blocks::BlockWithHoles block = blocks::k12_c9(labels);
      append(d.cycles, block.cycles);
      for (const Triplet& t : block.uncovered) {
        if (i > 0 && t == Triplet(a0[0], a0[1], a0[2])) continue;
        d.factor.blocks.push_back(t);
      }
    }
    among_nines(0);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::size_t j = i + 1; j < parts.size(); ++j) append(d.cycles, ktri3_c9(parts[i], parts[j], a0));
    }
  } else {
    const Part& a1 = parts[0];
    take_block(blocks::k15_c9(a0, slice(a1, 0, 6), slice(a1, 6, 3)));
    for (std::size_t i = 1; i < parts.size(); ++i) {
      take_block(blocks::k9_c9(parts[i]));
      append(d.cycles, crt3_c9(a0, parts[i]));
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::size_t j = i + 1; j < parts.size(); ++j) append(d.cycles, ktri3_c9(a0, parts[i], parts[j]));
    }
    among_nines(0);
  }
  return d;
}

Decomposition construct_c9_split2(int v) {
  if (v < 18 || v % 6 != 0) infeasible(9, v, "2-split systems need v >= 18 and v = 0 (mod 6)");
  const int h = v / 2;
  const Decomposition half = construct_c9(h);
  Decomposition d = shifted(half, 0, v);
  absorb(d, shifted(half, h, v));
  append(d.cycles, crt3_c9(range_part(0, h), range_part(h, h)));
  d.split2 = true;
  return d;
}

Decomposition construct_c6_split2(int v, std::uint64_t seed, std::uint64_t kts_budget) {
  if (v < 12 || v % 6 != 0 || v % 24 == 18) infeasible(6, v, "2-split systems need v >= 12 and v = 0, 6, 12 (mod 24)");
  const int h = v / 2;
  const Decomposition half = construct_c6(h, seed);
  Decomposition d = shifted(half, 0, v);
  absorb(d, shifted(half, h, v));
  d.split2 = true;

  if (v % 12 == 0) {
    const int p = h / 6;
    std::vector<Part> left;
    std::vector<Part> right;
    for (int i = 0; i < p; ++i) {
      left.push_back(range_part(6 * i, 6));
      right.push_back(range_part(h + 6 * i, 6));
    }
    for (const Part& ai : left) {
      for (const Part& bj : right) append(d.cycles, blocks::crt66_c6(ai, bj));
    }
    for (const auto& [same, other] : {std::pair(&left, &right), std::pair(&right, &left)}) {
      for (std::size_t i = 0; i < same->size(); ++i) {
        for (std::size_t j = i + 1; j < same->size(); ++j) {
          for (const Part& z : *other) append(d.cycles, ktri666_c6((*same)[i], (*same)[j], z));
        }
      }
    }
    return d;
  }

  const KirkmanSystem system = kts(h, seed, kts_budget);
  for (const auto& cls : system.classes) {
    for (const Triplet& t1 : cls) {
      for (const Triplet& t2 : cls) {
        const std::array<Vertex, 3> shifted2{t2.a() + h, t2.b() + h, t2.c() + h};
        append(d.cycles, blocks::bi6(t1.vertices(), shifted2));
      }
    }
  }
  return d;
}

Decomposition construct(int k, int v, bool split2, std::uint64_t seed) {
  if (k == 6) return split2 ? construct_c6_split2(v, seed) : construct_c6(v, seed);
  if (k == 9) return split2 ? construct_c9_split2(v) : construct_c9(v);
  throw Error(ErrorCode::UnsupportedK, "k=" + std::to_string(k) + " (supported: 6, 9)");
}

}  // namespace hcd::assembler
