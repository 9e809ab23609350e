#pragma once

// Brute-force reference implementations used only by tests. They share no
// code with the library beyond its plain data types.

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hcd/core.hpp"

namespace oracle {

using Edge = std::array<int, 3>;

inline Edge edge(int x, int y, int z) {
  Edge e{x, y, z};
  std::sort(e.begin(), e.end());
  return e;
}

inline std::map<Edge, int> edge_multiset(const std::vector<std::vector<int>>& cycles) {
  std::map<Edge, int> out;
  for (const auto& c : cycles) {
    const std::size_t k = c.size();
    for (std::size_t i = 0; i < k; ++i) ++out[edge(c[i], c[(i + 1) % k], c[(i + 2) % k])];
  }
  return out;
}

inline std::vector<std::vector<int>> raw(const std::vector<hcd::TightCycle>& cycles) {
  std::vector<std::vector<int>> out;
  for (const auto& c : cycles) out.push_back(c.vertices());
  return out;
}

/// Every cycle is a tight k-cycle on distinct vertices and the windows hit
/// each target edge exactly once and nothing else.
inline bool exact_cover(const std::vector<std::vector<int>>& cycles, std::size_t k, const std::set<Edge>& target) {
  for (const auto& c : cycles) {
    if (c.size() != k) return false;
    if (std::set<int>(c.begin(), c.end()).size() != k) return false;
  }
  const auto counts = edge_multiset(cycles);
  if (counts.size() != target.size()) return false;
  for (const auto& [e, n] : counts) {
    if (n != 1 || !target.count(e)) return false;
  }
  return true;
}

inline std::set<Edge> complete_minus(int v, const std::vector<Edge>& removed) {
  std::set<Edge> out;
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b)
      for (int c = b + 1; c < v; ++c) out.insert({a, b, c});
  for (const Edge& e : removed) out.erase(e);
  return out;
}

/// Triplets with at least one vertex in each listed part, and none outside.
inline std::set<Edge> tripartite(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& c) {
  std::set<Edge> out;
  for (int x : a)
    for (int y : b)
      for (int z : c) out.insert(edge(x, y, z));
  return out;
}

/// Two vertices in A, one in B.
inline std::set<Edge> two_one(const std::vector<int>& a, const std::vector<int>& b) {
  std::set<Edge> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      for (int y : b) out.insert(edge(a[i], a[j], y));
  return out;
}

inline std::set<Edge> crossing(const std::vector<int>& a, const std::vector<int>& b) {
  std::set<Edge> out = two_one(a, b);
  const std::set<Edge> other = two_one(b, a);
  out.insert(other.begin(), other.end());
  return out;
}

/// Type by scanning all v shifts: the shifted triple, with residues written
/// in 1..v, must contain 1; keep the least sorted image.
inline Edge type_of(int x, int y, int z, int v) {
  Edge best{v + 1, v + 1, v + 1};
  for (int s = 0; s < v; ++s) {
    Edge img{};
    const int in[3] = {x, y, z};
    for (int i = 0; i < 3; ++i) img[static_cast<std::size_t>(i)] = ((in[i] + s) % v + v) % v + 1;
    std::sort(img.begin(), img.end());
    if (img[0] != 1) continue;
    best = std::min(best, img);
  }
  return best;
}

/// Smallest s > 0 whose shift maps the cycle's edge set onto itself.
inline int edge_set_period(const std::vector<int>& c, int v) {
  const auto base = edge_multiset({c});
  for (int s = 1; s <= v; ++s) {
    std::vector<int> shifted;
    for (int x : c) shifted.push_back((x + s) % v);
    if (edge_multiset({shifted}) == base) return s;
  }
  return v;
}

inline bool is_rotation_or_reflection(const std::vector<int>& x, const std::vector<int>& y) {
  if (x.size() != y.size()) return false;
  const std::size_t n = x.size();
  for (std::size_t r = 0; r < n; ++r) {
    bool fwd = true;
    bool bwd = true;
    for (std::size_t i = 0; i < n; ++i) {
      fwd = fwd && x[i] == y[(r + i) % n];
      bwd = bwd && x[i] == y[(r + n - i) % n];
    }
    if (fwd || bwd) return true;
  }
  return false;
}

/// SplitMix64; enough for property-test generators.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  int uniform(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
  std::vector<int> permutation(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(uniform(0, i))]);
    return p;
  }
};

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace oracle

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(HCD_TEST_DATA_DIR) + "/" + name; }

struct TypeRow {
  int k = 0;
  int v = 0;
  std::vector<int> cycle;
  int window = 0;  // 1-based start position
  int d = 0;
  std::array<int, 3> triplet{};
  std::array<int, 3> type{};
};

inline std::vector<TypeRow> type_rows() {
  std::ifstream in(path("window_types.txt"));
  std::vector<TypeRow> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    TypeRow r;
    std::string cyc;
    ss >> r.k >> r.v >> cyc >> r.window >> r.d;
    for (int& x : r.triplet) ss >> x;
    for (int& x : r.type) ss >> x;
    std::replace(cyc.begin(), cyc.end(), ',', ' ');
    std::istringstream cs(cyc);
    for (int x; cs >> x;) r.cycle.push_back(x);
    out.push_back(std::move(r));
  }
  return out;
}

struct BlockListing {
  std::string name;
  std::vector<std::vector<int>> parts;
  std::vector<std::vector<int>> cycles;
};

inline std::map<std::string, BlockListing> block_listings() {
  std::ifstream in(path("block_listings.txt"));
  std::map<std::string, BlockListing> out;
  std::string line;
  BlockListing* cur = nullptr;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "BLOCK") {
      std::string name;
      ss >> name;
      cur = &out[name];
      cur->name = name;
      continue;
    }
    std::vector<int> xs;
    for (int x; ss >> x;) xs.push_back(x);
    if (tag == "PART") cur->parts.push_back(xs);
    if (tag == "C") cur->cycles.push_back(xs);
  }
  return out;
}

}  // namespace fixtures
