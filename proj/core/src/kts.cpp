#include "hcd/kts.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "hcd/formats.hpp"
#include "bundled_data.hpp"

namespace hcd {
namespace {

class KtsSearch {
 public:
  KtsSearch(int v, std::uint64_t seed, std::uint64_t budget)
      : v_(v), budget_(budget), pair_used_(static_cast<std::size_t>(v * v), false), order_(static_cast<std::size_t>(v)) {
    std::iota(order_.begin(), order_.end(), 0);
    if (seed != 0) {
      std::mt19937_64 rng(seed);
      // point 0 stays first so the symmetry break below still applies
      for (std::size_t i = order_.size(); i > 2; --i) {
        std::size_t j = 1 + static_cast<std::size_t>(rng() % (i - 1));
        std::swap(order_[i - 1], order_[j]);
      }
    }
  }

  std::optional<KirkmanSystem> run() {
    const int class_count = (v_ - 1) / 2;
    classes_.assign(static_cast<std::size_t>(class_count), {});
    // The first class is fixed to consecutive triples of the point order.
    for (int i = 0; i < v_; i += 3) {
      place(0, order_[static_cast<std::size_t>(i)], order_[static_cast<std::size_t>(i + 1)],
            order_[static_cast<std::size_t>(i + 2)]);
    }
    in_class_.assign(static_cast<std::size_t>(v_), false);
    if (!fill(1)) return std::nullopt;
    KirkmanSystem out{v_, classes_};
    return out;
  }

  bool exhausted() const { return nodes_ > budget_; }

 private:
  bool used(int x, int y) const { return pair_used_[static_cast<std::size_t>(x * v_ + y)]; }
  void mark(int x, int y, bool on) {
    pair_used_[static_cast<std::size_t>(x * v_ + y)] = on;
    pair_used_[static_cast<std::size_t>(y * v_ + x)] = on;
  }
  void place(std::size_t cls, int x, int y, int z) {
    mark(x, y, true);
    mark(x, z, true);
    mark(y, z, true);
    classes_[cls].emplace_back(x, y, z);
  }
  void unplace(std::size_t cls) {
    const Triplet t = classes_[cls].back();
    classes_[cls].pop_back();
    mark(t.a(), t.b(), false);
    mark(t.a(), t.c(), false);
    mark(t.b(), t.c(), false);
  }

  bool fill(int cls) {
    if (cls == static_cast<int>(classes_.size())) return true;
    const auto c = static_cast<std::size_t>(cls);
    if (static_cast<int>(classes_[c].size()) * 3 == v_) {
      std::vector<bool> saved(static_cast<std::size_t>(v_), false);
      std::swap(saved, in_class_);
      if (fill(cls + 1)) return true;
      std::swap(saved, in_class_);
      return false;
    }
    if (++nodes_ > budget_) return false;

    const int x = pick_point();
    if (x < 0) return false;
    in_class_[static_cast<std::size_t>(x)] = true;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      const int y = order_[i];
      if (in_class_[static_cast<std::size_t>(y)] || used(x, y)) continue;
      in_class_[static_cast<std::size_t>(y)] = true;
      for (std::size_t j = i + 1; j < order_.size(); ++j) {
        const int z = order_[j];
        if (in_class_[static_cast<std::size_t>(z)] || used(x, z) || used(y, z)) continue;
        in_class_[static_cast<std::size_t>(z)] = true;
        place(c, x, y, z);
        if (fill(cls)) return true;
        unplace(c);
        in_class_[static_cast<std::size_t>(z)] = false;
        if (exhausted()) break;
      }
      in_class_[static_cast<std::size_t>(y)] = false;
      if (exhausted()) break;
      // Point order_[0] meets each other point once, in a different class;
      // taking its partners in order removes the class permutations.
      if (x == order_[0]) break;
    }
    in_class_[static_cast<std::size_t>(x)] = false;
    return false;
  }

  // order_[0] first, then the free point with the fewest completions;
  // -1 when some free point has none.
  int pick_point() const {
    if (!in_class_[static_cast<std::size_t>(order_[0])]) return order_[0];
    int best = -1;
    int best_count = 0;
    for (int x : order_) {
      if (in_class_[static_cast<std::size_t>(x)]) continue;
      int count = 0;
      for (std::size_t i = 0; i < order_.size(); ++i) {
        const int y = order_[i];
        if (y == x || in_class_[static_cast<std::size_t>(y)] || used(x, y)) continue;
        for (std::size_t j = i + 1; j < order_.size(); ++j) {
          const int z = order_[j];
          if (z == x || in_class_[static_cast<std::size_t>(z)] || used(x, z) || used(y, z)) continue;
          ++count;
        }
      }
      if (count == 0) return -1;
      if (best < 0 || count < best_count) {
        best = x;
        best_count = count;
      }
    }
    return best;
  }

  int v_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<bool> pair_used_;
  std::vector<bool> in_class_;
  std::vector<int> order_;
  std::vector<std::vector<Triplet>> classes_;
};

}  // namespace

KirkmanSystem search_kts(int v, std::uint64_t seed, std::uint64_t budget) {
  if (v < 3 || v % 6 != 3) {
    throw Error(ErrorCode::InfeasibleOrder, "Kirkman triple systems need v = 3 (mod 6), got v=" + std::to_string(v));
  }
  KtsSearch search(v, seed, budget);
  auto result = search.run();
  if (!result) {
    throw Error(ErrorCode::SearchBudgetExceeded,
                "no KTS(" + std::to_string(v) + ") found within " + std::to_string(budget) + " nodes");
  }
  return *result;
}

KirkmanSystem affine_kts(int n) {
  if (n < 1) throw Error(ErrorCode::InfeasibleOrder, "AG(n,3) needs n >= 1");
  int v = 1;
  for (int i = 0; i < n; ++i) v *= 3;

  auto add = [&](int x, int y) {
    int out = 0;
    for (int place = 1; place < v; place *= 3) out += ((x / place % 3 + y / place % 3) % 3) * place;
    return out;
  };

  KirkmanSystem out{v, {}};
  // directions: nonzero vectors whose leading (most significant) digit is 1
  for (int dir = 1; dir < v; ++dir) {
    int lead = dir;
    while (lead >= 3) lead /= 3;
    if (lead != 1) continue;
    std::vector<Triplet> cls;
    std::vector<bool> seen(static_cast<std::size_t>(v), false);
    for (int p = 0; p < v; ++p) {
      if (seen[static_cast<std::size_t>(p)]) continue;
      const int q = add(p, dir);
      const int r = add(q, dir);
      seen[static_cast<std::size_t>(p)] = seen[static_cast<std::size_t>(q)] = seen[static_cast<std::size_t>(r)] = true;
      cls.emplace_back(p, q, r);
    }
    out.classes.push_back(std::move(cls));
  }
  return out;
}

KirkmanSystem kts(int v, std::uint64_t seed, std::uint64_t budget) {
  if (v < 3 || v % 6 != 3) {
    throw Error(ErrorCode::InfeasibleOrder, "Kirkman triple systems need v = 3 (mod 6), got v=" + std::to_string(v));
  }
  int n = 0;
  for (int p = v; p % 3 == 0; p /= 3) {
    ++n;
    if (p == 3) return affine_kts(n);
  }
  if (v == 15) return io::parse_kts(data::kts15_text());
  if (v == 21) return io::parse_kts(data::kts21_text());
  return search_kts(v, seed, budget);
}

std::string_view to_string(KtsDefect d) noexcept {
  switch (d) {
    case KtsDefect::WrongClassCount: return "WrongClassCount";
    case KtsDefect::VertexOutOfRange: return "VertexOutOfRange";
    case KtsDefect::ClassNotPartition: return "ClassNotPartition";
    case KtsDefect::PairCoveredTwice: return "PairCoveredTwice";
    case KtsDefect::PairUncovered: return "PairUncovered";
  }
  return "Unknown";
}

std::optional<KtsDefect> verify_kts(const KirkmanSystem& s) {
  const int v = s.v;
  if (v < 3 || v % 6 != 3 || static_cast<int>(s.classes.size()) != (v - 1) / 2) return KtsDefect::WrongClassCount;
  std::vector<int> pairs(static_cast<std::size_t>(v * v), 0);
  for (const auto& cls : s.classes) {
    std::vector<int> hits(static_cast<std::size_t>(v), 0);
    for (const Triplet& t : cls) {
      if (t.c() >= v) return KtsDefect::VertexOutOfRange;
      for (Vertex x : t.vertices()) ++hits[static_cast<std::size_t>(x)];
    }
    if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; })) return KtsDefect::ClassNotPartition;
  }
  for (const auto& cls : s.classes) {
    for (const Triplet& t : cls) {
      for (auto [x, y] : {std::pair(t.a(), t.b()), std::pair(t.a(), t.c()), std::pair(t.b(), t.c())}) {
        if (++pairs[static_cast<std::size_t>(x * v + y)] > 1) return KtsDefect::PairCoveredTwice;
      }
    }
  }
  for (int x = 0; x < v; ++x) {
    for (int y = x + 1; y < v; ++y) {
      if (pairs[static_cast<std::size_t>(x * v + y)] == 0) return KtsDefect::PairUncovered;
    }
  }
  return std::nullopt;
}

}  // namespace hcd
