#include <doctest.h>

#include "hcd/assembler.hpp"
#include "hcd/blocks.hpp"
#include "oracles.hpp"

using namespace hcd;

namespace {

std::vector<Vertex> range(int first, int count) {
  std::vector<Vertex> out;
  for (int i = 0; i < count; ++i) out.push_back(first + i);
  return out;
}

std::vector<oracle::Edge> as_edges(const std::vector<Triplet>& ts) {
  std::vector<oracle::Edge> out;
  for (const Triplet& t : ts) out.push_back({t.a(), t.b(), t.c()});
  return out;
}

}  // namespace

TEST_CASE("bi6 covers K6 minus its two triplets") {
  const auto a = range(0, 3);
  const auto b = range(3, 3);
  const auto cycles = blocks::bi6(a, b);
  CHECK(cycles.size() == 3);
  CHECK(oracle::exact_cover(oracle::raw(cycles), 6, oracle::complete_minus(6, {{0, 1, 2}, {3, 4, 5}})));
}

TEST_CASE("tri332 covers the 3-partite hypergraph") {
  const auto a = range(0, 3);
  const auto b = range(10, 3);
  const auto c = range(20, 2);
  CHECK(oracle::exact_cover(oracle::raw(blocks::tri332(a, b, c)), 6, oracle::tripartite(a, b, c)));
}

TEST_CASE("crt66 covers all crossing triplets") {
  const auto a = range(0, 6);
  const auto b = range(6, 6);
  const auto cycles = blocks::crt66_c6(a, b);
  CHECK(cycles.size() == 30);
  CHECK(oracle::exact_cover(oracle::raw(cycles), 6, oracle::crossing(a, b)));
}

TEST_CASE("k9 leaves three disjoint triplets") {
  const auto a = range(0, 9);
  const auto block = blocks::k9_c9(a);
  CHECK(block.cycles.size() == 9);
  CHECK(block.uncovered == std::vector<Triplet>{Triplet(0, 3, 6), Triplet(1, 4, 7), Triplet(2, 5, 8)});
  CHECK(oracle::exact_cover(oracle::raw(block.cycles), 9, oracle::complete_minus(9, as_edges(block.uncovered))));
}

TEST_CASE("k12 leaves four disjoint triplets") {
  const auto a = range(0, 12);
  const auto block = blocks::k12_c9(a);
  CHECK(block.cycles.size() == 24);
  CHECK(block.uncovered.size() == 4);
  CHECK(oracle::exact_cover(oracle::raw(block.cycles), 9, oracle::complete_minus(12, as_edges(block.uncovered))));
}

TEST_CASE("k15 gives 50 cycles and a 1-factor of holes") {
  const auto a = range(0, 6);
  const auto b = range(6, 6);
  const auto c = range(12, 3);
  const auto block = blocks::k15_c9(a, b, c);
  CHECK(block.cycles.size() == 50);
  REQUIRE(block.uncovered.size() == 5);
  OneFactor f{block.uncovered};
  CHECK_NOTHROW(f.validate(15));
  CHECK(std::find(block.uncovered.begin(), block.uncovered.end(), Triplet(12, 13, 14)) != block.uncovered.end());
  CHECK(oracle::exact_cover(oracle::raw(block.cycles), 9, oracle::complete_minus(15, as_edges(block.uncovered))));
}

TEST_CASE("graph 6-cycles of K9 partition its edges") {
  std::set<std::pair<int, int>> seen;
  for (const auto& c : blocks::k9_graph_c6()) {
    REQUIRE(c.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) {
      const int x = std::min(c[i], c[(i + 1) % 6]);
      const int y = std::max(c[i], c[(i + 1) % 6]);
      CHECK(seen.insert({x, y}).second);
    }
  }
  CHECK(seen.size() == 36);
}

TEST_CASE("kpq93, kpq63 and tri333 cover their hypergraphs") {
  const auto a9 = range(0, 9);
  const auto a6 = range(0, 6);
  const auto b = range(20, 3);
  const auto c = range(30, 3);
  const auto cyc93 = blocks::kpq93_c9(a9, b);
  CHECK(cyc93.size() == 12);
  CHECK(oracle::exact_cover(oracle::raw(cyc93), 9, oracle::two_one(a9, b)));
  const auto cyc63 = blocks::kpq63_c9(a6, b);
  CHECK(cyc63.size() == 5);
  CHECK(oracle::exact_cover(oracle::raw(cyc63), 9, oracle::two_one(a6, b)));
  const auto a3 = range(0, 3);
  CHECK(oracle::exact_cover(oracle::raw(blocks::tri333_c9(a3, b, c)), 9, oracle::tripartite(a3, b, c)));
}

TEST_CASE("blocks reject bad parts") {
  const auto a = range(0, 3);
  const auto b = range(2, 3);
  CHECK_THROWS_AS(blocks::bi6(a, b), Error);
  CHECK_THROWS_AS(blocks::tri332(a, range(5, 3), range(8, 3)), Error);
  CHECK_THROWS_AS(blocks::k9_c9(range(0, 8)), Error);
}

TEST_CASE("blocks reproduce the printed listings under identity labeling") {
  const auto listings = fixtures::block_listings();
  REQUIRE(listings.size() == 7);
  auto same = [](const std::vector<TightCycle>& got, const std::vector<std::vector<int>>& want) {
    if (got.size() != want.size()) return false;
    for (std::size_t i = 0; i < got.size(); ++i) {
      if (!(got[i] == TightCycle(want[i]))) return false;
    }
    return true;
  };
  for (const auto& [name, l] : listings) {
    CAPTURE(name);
    std::vector<TightCycle> got;
    if (name == "bi6") got = blocks::bi6(l.parts[0], l.parts[1]);
    if (name == "tri332") got = blocks::tri332(l.parts[0], l.parts[1], l.parts[2]);
    if (name == "crt66_c6") got = blocks::crt66_c6(l.parts[0], l.parts[1]);
    if (name == "k9_c9") got = blocks::k9_c9(l.parts[0]).cycles;
    if (name == "k12_c9") got = blocks::k12_c9(l.parts[0]).cycles;
    if (name == "kpq63_c9") got = blocks::kpq63_c9(l.parts[0], l.parts[1]);
    if (name == "tri333_c9") got = blocks::tri333_c9(l.parts[0], l.parts[1], l.parts[2]);
    CHECK(same(got, l.cycles));
  }
}
