#include "hcd/blocks.hpp"

#include <array>

#include "hcd/assembler.hpp"
#include "hcd/formats.hpp"
#include "bundled_data.hpp"

namespace hcd::blocks {
namespace {

using Template = std::initializer_list<int>;

// Builds a cycle from 1-based labels through `label`.
template <typename F>
TightCycle from_template(Template labels, F&& label) {
  std::vector<Vertex> out;
  out.reserve(labels.size());
  for (int x : labels) out.push_back(label(x));
  return TightCycle(std::move(out));
}

std::vector<Vertex> concat(std::span<const Vertex> x, std::span<const Vertex> y) {
  std::vector<Vertex> out(x.begin(), x.end());
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

}  // namespace

std::vector<TightCycle> bi6(std::span<const Vertex> t1, std::span<const Vertex> t2) {
  check_parts({t1, t2}, {3, 3});
  const std::vector<Vertex> a = concat(t1, t2);
  auto label = [&](int i) { return a[static_cast<std::size_t>(i - 1)]; };
  return {
      from_template({1, 4, 2, 5, 3, 6}, label),
      from_template({4, 2, 6, 1, 5, 3}, label),
      from_template({2, 6, 3, 4, 1, 5}, label),
  };
}

std::vector<TightCycle> tri332(std::span<const Vertex> a, std::span<const Vertex> b,
                               std::span<const Vertex> c) {
  check_parts({a, b, c}, {3, 3, 2});
  std::vector<TightCycle> out;
  for (std::size_t i = 0; i < 3; ++i) {
    out.emplace_back(std::vector<Vertex>{a[i], b[i], c[0], a[(i + 1) % 3], b[(i + 2) % 3], c[1]});
  }
  return out;
}

std::vector<TightCycle> crt66_c6(std::span<const Vertex> a, std::span<const Vertex> b) {
  check_parts({a, b}, {6, 6});
  // residue r: even r = 2i-2 is a_i, odd r = 2i-1 is b_i
  auto label = [&](Vertex r) {
    return r % 2 == 0 ? a[static_cast<std::size_t>(r / 2)] : b[static_cast<std::size_t>(r / 2)];
  };
  const std::array<std::pair<std::array<Vertex, 6>, int>, 3> bases{{
      {{0, 5, 10, 8, 11, 2}, 12},
      {{0, 1, 9, 4, 3, 7}, 12},
      {{0, 1, 2, 6, 7, 8}, 6},
  }};
  std::vector<TightCycle> out;
  for (const auto& [base, shifts] : bases) {
    for (int s = 0; s < shifts; ++s) {
      std::vector<Vertex> cyc;
      for (Vertex r : base) cyc.push_back(label((r + s) % 12));
      out.emplace_back(std::move(cyc));
    }
  }
  return out;
}

BlockWithHoles k9_c9(std::span<const Vertex> a) {
  check_parts({a}, {9});
  auto at = [&](int i) { return a[static_cast<std::size_t>((i - 1) % 9)]; };
  BlockWithHoles out;
  for (int i = 0; i < 9; ++i) {
    out.cycles.push_back(from_template({1, 2, 3, 8, 7, 5, 9, 6, 4}, [&](int x) { return at(x + i); }));
  }
  out.uncovered = {Triplet(at(1), at(4), at(7)), Triplet(at(2), at(5), at(8)),
                   Triplet(at(3), at(6), at(9))};
  return out;
}

const std::vector<std::vector<Vertex>>& k9_graph_c6() {
  static const std::vector<std::vector<Vertex>> cycles =
      io::parse_graph_cycles(data::k9_graph_c6_text()).cycles;
  return cycles;
}

std::vector<TightCycle> kpq93_c9(std::span<const Vertex> a, std::span<const Vertex> b) {
  check_parts({a, b}, {9, 3});
  std::vector<TightCycle> out;
  for (const auto& g : k9_graph_c6()) {
    auto x = [&](int i) { return a[static_cast<std::size_t>(g[static_cast<std::size_t>(i - 1)])]; };
    auto y = [&](int j) { return b[static_cast<std::size_t>(j - 1)]; };
    out.emplace_back(std::vector<Vertex>{x(1), y(1), x(2), x(3), y(2), x(4), x(5), y(3), x(6)});
    out.emplace_back(std::vector<Vertex>{y(2), x(1), x(2), y(3), x(3), x(4), y(1), x(5), x(6)});
  }
  return out;
}

std::vector<TightCycle> kpq63_c9(std::span<const Vertex> a, std::span<const Vertex> b) {
  check_parts({a, b}, {6, 3});
  // labels 1..6 are a_1..a_6, 7..9 are b_1..b_3
  auto label = [&](int i) {
    return i <= 6 ? a[static_cast<std::size_t>(i - 1)] : b[static_cast<std::size_t>(i - 7)];
  };
  return {
      from_template({1, 2, 7, 3, 4, 8, 5, 6, 9}, label),
      from_template({1, 5, 7, 6, 4, 8, 2, 3, 9}, label),
      from_template({2, 4, 7, 1, 6, 8, 3, 5, 9}, label),
      from_template({3, 6, 7, 2, 5, 8, 1, 4, 9}, label),
      from_template({4, 5, 7, 3, 1, 8, 2, 6, 9}, label),
  };
}

std::vector<TightCycle> tri333_c9(std::span<const Vertex> a, std::span<const Vertex> b,
                                  std::span<const Vertex> c) {
  check_parts({a, b, c}, {3, 3, 3});
  // a_j with j = 1..9: classes {1,4,7} -> A, {2,5,8} -> B, {3,6,9} -> C
  const std::array<std::span<const Vertex>, 3> classes{a, b, c};
  auto label = [&](int j) {
    const int z = (j - 1) % 9;
    return classes[static_cast<std::size_t>(z % 3)][static_cast<std::size_t>(z / 3)];
  };
  std::vector<TightCycle> out;
  for (int step : {1, 2, 4}) {
    std::vector<Vertex> cyc;
    for (int t = 0; t < 9; ++t) cyc.push_back(label(1 + t * step));
    out.emplace_back(std::move(cyc));
  }
  return out;
}

BlockWithHoles k12_c9(std::span<const Vertex> a) {
  check_parts({a}, {12});
  auto at = [&](int i) { return a[static_cast<std::size_t>((i - 1) % 12)]; };
  BlockWithHoles out;
  for (Template base : {Template{1, 2, 3, 5, 6, 9, 11, 4, 7}, Template{1, 2, 8, 12, 3, 10, 11, 7, 9}}) {
    for (int i = 0; i < 12; ++i) {
      out.cycles.push_back(from_template(base, [&](int x) { return at(x + i); }));
    }
  }
  out.uncovered = {Triplet(at(1), at(5), at(9)), Triplet(at(2), at(6), at(10)),
                   Triplet(at(3), at(7), at(11)), Triplet(at(4), at(8), at(12))};
  return out;
}

BlockWithHoles k15_c9(std::span<const Vertex> a, std::span<const Vertex> b,
                      std::span<const Vertex> c) {
  check_parts({a, b, c}, {6, 6, 3});
  BlockWithHoles out;
  // C takes the slot {a1,a4,a7}; the side part fills a2,a3,a5,a6,a8,a9.
  for (std::span<const Vertex> side : {a, b}) {
    const std::vector<Vertex> labels{c[0], side[0], side[1], c[1], side[2], side[3], c[2], side[4], side[5]};
    BlockWithHoles copy = k9_c9(labels);
    out.cycles.insert(out.cycles.end(), copy.cycles.begin(), copy.cycles.end());
    // copy.uncovered[0] is C itself; keep it once
    out.uncovered.insert(out.uncovered.end(), copy.uncovered.begin() + 1, copy.uncovered.end());
  }
  out.uncovered.emplace_back(c[0], c[1], c[2]);

  auto crossing = assembler::crt3_c9(a, b);
  out.cycles.insert(out.cycles.end(), crossing.begin(), crossing.end());
  auto tripartite = assembler::ktri3_c9(a, b, c);
  out.cycles.insert(out.cycles.end(), tripartite.begin(), tripartite.end());
  return out;
}

}  // namespace hcd::blocks
