#include <doctest.h>

#include "hcd/cyclic.hpp"
#include "oracles.hpp"

using namespace hcd;
using namespace hcd::cyclic;

TEST_CASE("triplet types") {
  TripletType t = triplet_type(Triplet(2, 4, 5), 12);
  CHECK(t.rep == TypeRep{1, 2, 11});
  CHECK(t.d == 1);
  CHECK(t.ordered == std::array<Vertex, 3>{4, 5, 2});
  t = triplet_type(Triplet(1, 5, 8), 12);
  CHECK(t.rep == TypeRep{1, 4, 9});
  CHECK(t.d == 3);
  t = triplet_type(Triplet(0, 10, 21), 30);
  CHECK(t.rep == TypeRep{1, 10, 20});
  CHECK(t.d == 9);
  CHECK(t.ordered == std::array<Vertex, 3>{21, 0, 10});
  CHECK(triplet_type(0, 3, 13, 21).rep == TypeRep{1, 4, 14});
  try {
    triplet_type(Triplet(0, 4, 8), 12);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateOrbit);
  }
}

TEST_CASE("types agree with the shift-scanning oracle") {
  for (int v = 6; v <= 30; v += 3) {
    for (int b = 1; b < v; ++b) {
      for (int c = b + 1; c < v; ++c) {
        if (is_factor_triplet(Triplet(0, b, c), v)) continue;
        const TripletType t = triplet_type(0, b, c, v);
        const oracle::Edge o = oracle::type_of(0, b, c, v);
        CHECK(t.rep == TypeRep{o[0], o[1], o[2]});
        // distance inequalities of a type representative
        const int a1 = t.rep[0];
        const int b1 = t.rep[1];
        const int c1 = t.rep[2];
        CHECK(a1 == 1);
        CHECK(b1 - a1 <= c1 - b1);
        CHECK(b1 - a1 <= std::min(c1 - a1, v - c1 + a1));
      }
    }
  }
}

TEST_CASE("type counts") {
  CHECK(type_count(12) == 18);
  CHECK(type_count(18) == 45);
  CHECK(type_count(9) == 9);
  CHECK_THROWS_AS(type_count(10), Error);
  for (int v = 6; v <= 45; v += 3) CHECK(all_types(v).size() == type_count(v));
}

TEST_CASE("orbit periods") {
  CHECK(orbit_period(TightCycle{0, 1, 2, 9, 10, 11}, 18) == 9);
  CHECK(orbit_period(TightCycle{0, 1, 2, 5, 6, 7, 10, 11, 12}, 15) == 5);
  CHECK(orbit_period(TightCycle{0, 1, 2, 4, 5, 8}, 12) == 12);
  CHECK(orbit_period(TightCycle{0, 1, 2, 3, 4, 5}, 6) == 1);
  CHECK(orbit_period(TightCycle{0, 1, 4, 5, 2, 3}, 6) == 2);
  for (const auto& [kv, s] : bundled_systems()) {
    for (const BaseCycle& b : s.base_cycles) {
      CHECK(b.period == oracle::edge_set_period(b.cycle.vertices(), kv.second));
    }
  }
}

TEST_CASE("bundled systems verify and expand to the right counts") {
  const std::map<std::pair<int, int>, std::size_t> expected{
      {{6, 6}, 3},    {{6, 12}, 36},  {{6, 15}, 75},  {{6, 18}, 135}, {{6, 24}, 336},
      {{6, 27}, 486}, {{6, 30}, 675}, {{9, 9}, 9},    {{9, 12}, 24},  {{9, 15}, 50},
      {{9, 18}, 90},  {{9, 21}, 147}, {{9, 24}, 224}, {{9, 27}, 324}, {{9, 30}, 450},
  };
  CHECK(bundled_systems().size() == 15);
  for (const auto& [kv, count] : expected) {
    CAPTURE(kv.first);
    CAPTURE(kv.second);
    const CyclicSystem& s = bundled_system(kv.first, kv.second);
    const CyclicReport r = verify_cyclic(s);
    CHECK(r.valid);
    CHECK(r.expanded_cycle_count == count);
    CHECK(expand_cyclic(s).cycles.size() == count);
  }
  CHECK(bundled_system(6, 24).base_cycles.size() == 14);
  CHECK(bundled_system(9, 27).base_cycles.size() == 12);
  try {
    bundled_system(6, 21);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownSystem);
  }
}

TEST_CASE("bundled data differs from the printed listings only in the repaired rows") {
  const auto& printed = printed_systems();
  CHECK(printed.size() == 15);
  for (const auto& [kv, cycles] : printed) {
    const auto bundled = bundled_system(kv.first, kv.second).cycles();
    std::size_t differing = 0;
    for (const TightCycle& c : cycles) differing += std::find(bundled.begin(), bundled.end(), c) == bundled.end();
    if (kv == std::pair(9, 27)) {
      CHECK(differing == 1);
    } else if (kv == std::pair(9, 30)) {
      CHECK(differing == 2);
    } else {
      CHECK(differing == 0);
    }
  }
  // the printed order-6 listing misses the shift-invariant cycle
  CHECK(printed.at({6, 6}).size() == 1);
  CHECK(bundled_system(6, 6).base_cycles.size() == 2);
  CHECK_FALSE(verify_cyclic(CyclicSystem::from_cycles(27, 9, printed.at({9, 27}))).valid);
}

TEST_CASE("printed listing checksum") {
  CHECK(oracle::fnv1a(printed_listing_text()) == 6411803517339734035ULL);
}

TEST_CASE("removing a base cycle leaves six types uncovered") {
  CyclicSystem s = bundled_system(6, 12);
  s.base_cycles.erase(std::remove_if(s.base_cycles.begin(), s.base_cycles.end(),
                                     [](const BaseCycle& b) { return b.cycle == TightCycle{0, 1, 9, 3, 5, 7}; }),
                      s.base_cycles.end());
  REQUIRE(s.base_cycles.size() == 2);
  const CyclicReport r = verify_cyclic(s);
  CHECK_FALSE(r.valid);
  CHECK(r.uncovered_types.size() == 6);
  CHECK(r.summary().find("uncovered types") != std::string::npos);
}

TEST_CASE("verify_cyclic reports malformed base cycles") {
  const CyclicSystem s = CyclicSystem::from_cycles(12, 6, {TightCycle{0, 1, 2, 4, 5, 8}, TightCycle{0, 4, 8, 1, 2, 3}});
  const CyclicReport r = verify_cyclic(s);
  CHECK_FALSE(r.valid);
  REQUIRE(r.base_issues.size() == 1);
  CHECK(r.base_issues[0].first == 1);
  CHECK_THROWS_AS(expand_cyclic(CyclicSystem::from_cycles(12, 6, {TightCycle{0, 1, 1, 4, 5, 8}})), Error);
}

TEST_CASE("type rows reproduce every printed window") {
  const auto rows = fixtures::type_rows();
  CHECK(rows.size() == 930);
  for (const auto& row : rows) {
    const TightCycle c(row.cycle);
    const auto types = window_types(c, row.v);
    const TripletType& t = types[static_cast<std::size_t>(row.window - 1)];
    CHECK(t.rep == TypeRep{row.type[0], row.type[1], row.type[2]});
    CHECK(t.d == row.d);
    CHECK(t.ordered == std::array<Vertex, 3>{row.triplet[0], row.triplet[1], row.triplet[2]});
  }
}

TEST_CASE("search finds small cyclic systems") {
  const CyclicSystem s12 = search_cyclic(12, 6);
  CHECK(s12.base_cycles.size() == 3);
  CHECK(verify_cyclic(s12).valid);
  const CyclicSystem s9 = search_cyclic(9, 9);
  CHECK(s9.base_cycles.size() == 1);
  CHECK(verify_cyclic(s9).valid);
  for (auto [v, k] : {std::pair(15, 6), std::pair(18, 6), std::pair(15, 9), std::pair(12, 9)}) {
    CAPTURE(v);
    CAPTURE(k);
    CHECK(verify_cyclic(search_cyclic(v, k)).valid);
  }
  CHECK(search_cyclic(12, 6, 5).base_cycles.size() == 3);
  try {
    search_cyclic(48, 6, 0, 1000);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotFound);
  }
}
