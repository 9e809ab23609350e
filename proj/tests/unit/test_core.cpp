#include <doctest.h>

#include "hcd/core.hpp"
#include "oracles.hpp"

using namespace hcd;

TEST_CASE("triplet sorts and rejects bad vertices") {
  const Triplet t(5, 1, 3);
  CHECK(t.a() == 1);
  CHECK(t.b() == 3);
  CHECK(t.c() == 5);
  CHECK(t == Triplet(3, 5, 1));
  CHECK(t.intersection_size(Triplet(1, 3, 7)) == 2);
  CHECK(t.disjoint(Triplet(0, 2, 4)));
  CHECK_THROWS_AS(Triplet(1, 1, 2), Error);
  try {
    Triplet(-1, 0, 2);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NegativeVertex);
  }
  try {
    Triplet(2, 0, 2);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateVertex);
  }
}

TEST_CASE("cycle equality ignores rotation and reflection") {
  const TightCycle c{0, 1, 2, 3, 4, 5};
  CHECK(c == TightCycle{3, 4, 5, 0, 1, 2});
  CHECK(c == TightCycle{5, 4, 3, 2, 1, 0});
  CHECK(c == TightCycle{2, 1, 0, 5, 4, 3});
  CHECK_FALSE(c == TightCycle{0, 1, 2, 3, 5, 4});
  CHECK(c.canonical_form() == std::vector<Vertex>{0, 1, 2, 3, 4, 5});
  CHECK(TightCycle{4, 2, 0, 1, 3, 5}.canonical_form() == std::vector<Vertex>{0, 1, 3, 5, 4, 2});
  CHECK(std::hash<TightCycle>{}(c) == std::hash<TightCycle>{}(TightCycle{5, 4, 3, 2, 1, 0}));
}

TEST_CASE("checked cycles") {
  CHECK_NOTHROW(TightCycle::checked({0, 1, 2, 3}));
  CHECK_THROWS_AS(TightCycle::checked({0, 1, 2}), Error);
  CHECK_THROWS_AS(TightCycle::checked({0, 1, 2, 1}), Error);
  CHECK_THROWS_AS(TightCycle::checked({0, 1, 2, -3}), Error);
}

TEST_CASE("cycle edges are the windows") {
  const auto edges = cycle_edges(TightCycle{0, 1, 2, 3, 4, 5});
  REQUIRE(edges.size() == 6);
  CHECK(edges[0] == Triplet(0, 1, 2));
  CHECK(edges[4] == Triplet(4, 5, 0));
  CHECK(edges[5] == Triplet(5, 0, 1));
}

TEST_CASE("shift and map") {
  const TightCycle c{0, 1, 5, 8, 3, 6};
  CHECK(c.shifted(7, 12).vertices() == std::vector<Vertex>{7, 8, 0, 3, 10, 1});
  CHECK(c.mapped([](Vertex x) { return 2 * x; }).vertices() == std::vector<Vertex>{0, 2, 10, 16, 6, 12});
}

TEST_CASE("one-factors") {
  CHECK_NOTHROW(OneFactor::cyclic(12).validate(12));
  CHECK_NOTHROW(OneFactor::consecutive(9).validate(9));
  CHECK(OneFactor::cyclic(12).blocks[1] == Triplet(1, 5, 9));
  OneFactor overlap{{Triplet(0, 1, 2), Triplet(2, 3, 4)}};
  CHECK_THROWS_AS(overlap.validate(6), Error);
  OneFactor short_factor{{Triplet(0, 1, 2)}};
  CHECK_THROWS_AS(short_factor.validate(6), Error);
}

TEST_CASE("edge counts") {
  CHECK(edge_count(6) == 18);
  CHECK(edge_count(9) == 81);
  CHECK(edge_count(15) == 450);
  CHECK(edge_count(30) == 4050);
  CHECK_THROWS_AS(edge_count(10), Error);
  for (int v = 3; v <= 30; v += 3) {
    CHECK(target_edges(v, OneFactor::consecutive(v)).size() == edge_count(v));
  }
}

TEST_CASE("partite edge sets agree with brute force") {
  const std::vector<Vertex> a{0, 1, 2, 3, 4, 5};
  const std::vector<Vertex> b{6, 7, 8};
  const std::vector<Vertex> c{9, 10};
  CHECK(ktri_edges(a, b, c).size() == 36);
  CHECK(kpq_edges(a, b).size() == 45);
  CHECK(crt_edges(a, b).size() == 45 + 18);
  CHECK(complete_edges(a).size() == 20);
  std::set<oracle::Edge> crt;
  for (const Triplet& t : crt_edges(a, b)) crt.insert({t.a(), t.b(), t.c()});
  CHECK(crt == oracle::crossing(a, b));
}

TEST_CASE("part checks") {
  const std::vector<Vertex> x{0, 1, 2};
  const std::vector<Vertex> y{2, 3, 4};
  const std::vector<Vertex> z{5, 6};
  try {
    check_parts({x, y}, {3, 3});
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OverlappingParts);
  }
  try {
    check_parts({x, z}, {3, 3});
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::WrongPartSize);
  }
  CHECK_NOTHROW(check_parts({x, z}, {3, 0}));
  CHECK_THROWS_AS(PartLabeling({{0, 1}, {1, 2}}, {2, 2}), Error);
}

TEST_CASE("verify_cycle defects") {
  const std::vector<Vertex> ok{0, 1, 2, 3, 4, 5};
  const std::vector<Vertex> repeated{0, 1, 2, 3, 4, 0};
  const std::vector<Vertex> out_of_range{0, 1, 2, 3, 4, 6};
  CHECK_FALSE(verify_cycle(std::span<const Vertex>(ok), 6, 6).has_value());
  CHECK(verify_cycle(std::span<const Vertex>(ok), 6, 9) == CycleDefect::WrongLength);
  CHECK(verify_cycle(std::span<const Vertex>(repeated), 6, 6) == CycleDefect::RepeatedVertex);
  CHECK(verify_cycle(std::span<const Vertex>(out_of_range), 6, 6) == CycleDefect::VertexOutOfRange);
}

namespace {

Decomposition k6() {
  Decomposition d;
  d.v = 6;
  d.k = 6;
  d.factor = OneFactor::consecutive(6);
  d.cycles = {TightCycle{0, 3, 1, 4, 2, 5}, TightCycle{3, 1, 5, 0, 4, 2}, TightCycle{1, 5, 2, 3, 0, 4}};
  return d;
}

}  // namespace

TEST_CASE("verify_decomposition accepts the order-6 system") {
  const auto r = verify_decomposition(k6());
  CHECK(r.valid);
  CHECK(r.summary() == "VALID: 3 cycles, 18/18 edges");
}

TEST_CASE("verify_decomposition reports duplicates and missing edges") {
  Decomposition d = k6();
  d.cycles[2] = d.cycles[1];
  const auto r = verify_decomposition(d);
  CHECK_FALSE(r.valid);
  CHECK(r.duplicated.size() == 6);
  CHECK(r.missing.size() == 6);
  for (const auto& [t, n] : r.duplicated) CHECK(n == 2);
}

TEST_CASE("verify_decomposition reports factor edges as foreign and bad factors") {
  Decomposition d = k6();
  d.cycles.push_back(TightCycle{0, 1, 2, 3});
  auto r = verify_decomposition(d);
  CHECK_FALSE(r.valid);
  CHECK(std::find(r.foreign.begin(), r.foreign.end(), Triplet(0, 1, 2)) != r.foreign.end());

  d = k6();
  d.factor.blocks[1] = Triplet(2, 3, 4);
  r = verify_decomposition(d);
  CHECK_FALSE(r.valid);
  CHECK(r.factor_error.has_value());
  CHECK(r.summary().find("InvalidFactor") != std::string::npos);
}

TEST_CASE("verify_decomposition reports malformed cycles without throwing") {
  Decomposition d = k6();
  d.cycles.push_back(TightCycle{0, 1, 1, 2, 3, 4});
  d.cycles.push_back(TightCycle{0, 1, 2, 3, 4, 9});
  const auto r = verify_decomposition(d);
  CHECK_FALSE(r.valid);
  REQUIRE(r.cycle_issues.size() == 2);
  CHECK(r.cycle_issues[0].defect == CycleDefect::RepeatedVertex);
  CHECK(r.cycle_issues[1].defect == CycleDefect::VertexOutOfRange);
}

TEST_CASE("relabel keeps validity") {
  const std::vector<Vertex> perm{5, 3, 1, 0, 2, 4};
  const Decomposition r = relabel(k6(), perm);
  CHECK(verify_decomposition(r).valid);
  CHECK(r.factor.blocks[0] == Triplet(1, 3, 5));
}
