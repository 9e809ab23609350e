#include "hcd/h2.hpp"

#include <algorithm>
#include <map>
#include <random>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

namespace hcd {

H2Pair::H2Pair(Triplet e1, Triplet e2) : e1_(e1), e2_(e2) {
  if (e1.intersection_size(e2) != 2) {
    throw Error(ErrorCode::NotAnH2, to_string(e1) + " and " + to_string(e2));
  }
}

namespace {

using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
using GraphVertex = boost::graph_traits<Graph>::vertex_descriptor;

// Fisher-Yates driven by mt19937_64 directly, so the order only depends on
// the seed and not on the standard library's distribution implementations.
template <typename T>
void seeded_shuffle(std::vector<T>& items, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(items[i - 1], items[j]);
  }
}

std::vector<Triplet> all_triples(int n) {
  std::vector<Triplet> out;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c) out.emplace_back(a, b, c);
  return out;
}

}  // namespace

std::vector<H2Pair> h2_decompose(int n, std::uint64_t seed, int attempts) {
  if (n < 4 || n % 4 == 3) {
    throw Error(ErrorCode::InfeasibleOrder,
                "n=" + std::to_string(n) + " admits no H2-decomposition (need n = 0,1,2 mod 4, n >= 4)");
  }
  const std::vector<Triplet> base = all_triples(n);

  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::vector<Triplet> nodes = base;
    const std::uint64_t effective = seed + static_cast<std::uint64_t>(attempt);
    if (effective != 0) seeded_shuffle(nodes, effective);

    std::map<Triplet, std::size_t> index;
    for (std::size_t i = 0; i < nodes.size(); ++i) index.emplace(nodes[i], i);

    Graph g(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      // neighbours: replace one vertex by another not in the triple
      const auto& t = nodes[i].vertices();
      for (int drop = 0; drop < 3; ++drop) {
        for (Vertex x = 0; x < n; ++x) {
          if (nodes[i].contains(x)) continue;
          std::array<Vertex, 3> w = t;
          w[static_cast<std::size_t>(drop)] = x;
          std::size_t j = index.at(Triplet(w[0], w[1], w[2]));
          if (i < j) boost::add_edge(i, j, g);
        }
      }
    }

    std::vector<GraphVertex> mate(nodes.size());
    boost::edmonds_maximum_cardinality_matching(g, mate.data());

    std::vector<H2Pair> pairs;
    bool perfect = true;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      GraphVertex m = mate[i];
      if (m == boost::graph_traits<Graph>::null_vertex()) {
        perfect = false;
        break;
      }
      if (i < m) pairs.emplace_back(nodes[i], nodes[m]);
    }
    if (!perfect) continue;

    // deterministic output order independent of the node shuffle
    for (auto& p : pairs) {
      if (p.second() < p.first()) p = H2Pair(p.second(), p.first());
    }
    std::sort(pairs.begin(), pairs.end(), [](const H2Pair& x, const H2Pair& y) {
      return std::pair(x.first(), x.second()) < std::pair(y.first(), y.second());
    });
    return pairs;
  }
  throw Error(ErrorCode::MatchingFailed,
              "no perfect matching found for n=" + std::to_string(n) + " after " +
                  std::to_string(attempts) + " attempts");
}

std::string_view to_string(H2Defect d) noexcept {
  switch (d) {
    case H2Defect::DuplicateTriple: return "DuplicateTriple";
    case H2Defect::NotAnH2: return "NotAnH2";
    case H2Defect::MissingTriple: return "MissingTriple";
    case H2Defect::VertexOutOfRange: return "VertexOutOfRange";
  }
  return "Unknown";
}

std::optional<H2Defect> verify_h2_pairing(int n, const std::vector<H2Pair>& pairs) {
  std::map<Triplet, int> seen;
  for (const H2Pair& p : pairs) {
    if (p.first().c() >= n || p.second().c() >= n) return H2Defect::VertexOutOfRange;
    if (p.first().intersection_size(p.second()) != 2) return H2Defect::NotAnH2;
    if (++seen[p.first()] > 1 || ++seen[p.second()] > 1) return H2Defect::DuplicateTriple;
  }
  const std::size_t expected = n >= 3 ? static_cast<std::size_t>(n) * (n - 1) * (n - 2) / 6 : 0;
  if (seen.size() != expected) return H2Defect::MissingTriple;
  return std::nullopt;
}

}  // namespace hcd
