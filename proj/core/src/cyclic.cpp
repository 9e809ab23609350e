#include "hcd/cyclic.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include "hcd/formats.hpp"
#include "bundled_data.hpp"

namespace hcd::cyclic {
namespace {

int mod(int x, int v) { return ((x % v) + v) % v; }

std::size_t type_index(const TypeRep& rep, int v) {
  return static_cast<std::size_t>(rep[1]) * static_cast<std::size_t>(v + 1) + static_cast<std::size_t>(rep[2]);
}

CyclicSystem system_from_text(std::string_view text) {
  io::BaseCycleFile file = io::parse_hcb(text);
  return CyclicSystem::from_cycles(file.v, file.k, std::move(file.cycles));
}

}  // namespace

bool is_factor_triplet(const Triplet& t, int v) {
  if (v % 3 != 0) return false;
  std::array<int, 3> r{mod(t.a(), v), mod(t.b(), v), mod(t.c(), v)};
  std::sort(r.begin(), r.end());
  return r[1] - r[0] == v / 3 && r[2] - r[1] == v / 3;
}

TripletType triplet_type(Vertex x, Vertex y, Vertex z, int v) {
  if (v < 3) throw Error(ErrorCode::InfeasibleOrder, "v=" + std::to_string(v));
  const std::array<int, 3> r{mod(x, v), mod(y, v), mod(z, v)};
  if (r[0] == r[1] || r[0] == r[2] || r[1] == r[2]) {
    throw Error(ErrorCode::DuplicateVertex, "triplet repeats a residue mod " + std::to_string(v));
  }
  if (is_factor_triplet(Triplet(r[0], r[1], r[2]), v)) {
    throw Error(ErrorCode::DegenerateOrbit,
                "factor triplet {" + std::to_string(r[0]) + "," + std::to_string(r[1]) + "," +
                    std::to_string(r[2]) + "} has no type in K_" + std::to_string(v) + "^(3) - I");
  }
  std::optional<TripletType> best;
  for (int anchor : r) {
    // image of w under the shift sending anchor to 1, taken in 1..v
    std::array<std::pair<int, Vertex>, 3> img{};
    for (std::size_t i = 0; i < 3; ++i) img[i] = {mod(r[i] - anchor, v) + 1, r[i]};
    std::sort(img.begin(), img.end());
    TripletType cand;
    for (std::size_t i = 0; i < 3; ++i) {
      cand.rep[i] = img[i].first;
      cand.ordered[i] = img[i].second;
    }
    cand.d = cand.rep[1] - 1;
    if (!best || cand.rep < best->rep) best = cand;
  }
  return *best;
}

TripletType triplet_type(const Triplet& t, int v) { return triplet_type(t.a(), t.b(), t.c(), v); }

std::string to_string(const TypeRep& rep) {
  return std::to_string(rep[0]) + " " + std::to_string(rep[1]) + " " + std::to_string(rep[2]);
}

std::vector<TripletType> window_types(const TightCycle& c, int v) {
  const std::size_t k = c.length();
  std::vector<TripletType> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(triplet_type(c[i], c[(i + 1) % k], c[(i + 2) % k], v));
  return out;
}

int orbit_period(const TightCycle& c, int v) {
  const std::vector<Vertex> canon = c.canonical_form();
  for (int s = 1; s < v; ++s) {
    if (v % s != 0) continue;
    if (c.shifted(s, v).canonical_form() == canon) return s;
  }
  return v;
}

CyclicSystem CyclicSystem::from_cycles(int v, int k, std::vector<TightCycle> cycles) {
  CyclicSystem s;
  s.v = v;
  s.k = k;
  for (TightCycle& c : cycles) {
    const int p = v > 0 ? orbit_period(c, v) : 0;
    s.base_cycles.push_back({std::move(c), p});
  }
  return s;
}

std::vector<TightCycle> CyclicSystem::cycles() const {
  std::vector<TightCycle> out;
  for (const BaseCycle& b : base_cycles) out.push_back(b.cycle);
  return out;
}

std::uint64_t type_count(int v) {
  if (v < 3 || v % 3 != 0) throw Error(ErrorCode::InfeasibleOrder, "type_count needs 3 | v, got v=" + std::to_string(v));
  const auto w = static_cast<std::uint64_t>(v);
  return w * (w - 3) / 6;
}

std::vector<TypeRep> all_types(int v) {
  type_count(v);
  std::vector<TypeRep> out;
  std::vector<bool> seen(static_cast<std::size_t>((v + 1) * (v + 1)), false);
  // every orbit has a member containing 0
  for (Vertex b = 1; b < v; ++b) {
    for (Vertex c = b + 1; c < v; ++c) {
      if (is_factor_triplet(Triplet(0, b, c), v)) continue;
      const TypeRep rep = triplet_type(0, b, c, v).rep;
      const std::size_t idx = type_index(rep, v);
      if (!seen[idx]) {
        seen[idx] = true;
        out.push_back(rep);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Decomposition expand_cyclic(const CyclicSystem& s) {
  if (s.v < 3 || s.v % 3 != 0) throw Error(ErrorCode::InfeasibleOrder, "cyclic systems need 3 | v");
  Decomposition d;
  d.v = s.v;
  d.k = s.k;
  d.factor = OneFactor::cyclic(s.v);
  for (const BaseCycle& b : s.base_cycles) {
    if (auto defect = verify_cycle(b.cycle, s.v, s.k)) {
      throw Error(ErrorCode::InvalidCycle, to_string(b.cycle) + ": " + std::string(to_string(*defect)));
    }
    const int p = orbit_period(b.cycle, s.v);
    for (int i = 0; i < p; ++i) d.cycles.push_back(b.cycle.shifted(i, s.v));
  }
  return d;
}

std::string CyclicReport::summary() const {
  std::ostringstream out;
  const std::uint64_t types = (v >= 3 && v % 3 == 0) ? type_count(v) : 0;
  const std::uint64_t good = types - uncovered_types.size() - miscovered_types.size();
  out << (valid ? "VALID" : "INVALID") << ": " << periods.size() << " base cycles, " << expanded_cycle_count
      << " expanded cycles, " << good << "/" << types << " types";
  if (!valid) {
    for (const auto& [index, why] : base_issues) out << "\n  base cycle " << index << ": " << why;
    if (!uncovered_types.empty()) {
      out << "\n  uncovered types:";
      for (const TypeRep& r : uncovered_types) out << " (" << to_string(r) << ")";
    }
    for (const TypeCoverage& t : miscovered_types) {
      out << "\n  type (" << to_string(t.rep) << ") covered with weight " << t.weight << ", expected " << v;
    }
    if (base_issues.empty()) out << "\n  " << decomposition.summary();
  }
  return out.str();
}

CyclicReport verify_cyclic(const CyclicSystem& s) {
  CyclicReport r;
  r.v = s.v;
  r.k = s.k;
  if (s.v < 6 || s.v % 3 != 0) {
    r.base_issues.push_back({0, "order must be a multiple of 3 and at least 6"});
    return r;
  }
  std::vector<std::uint64_t> weight(static_cast<std::size_t>((s.v + 1) * (s.v + 1)), 0);
  for (std::size_t i = 0; i < s.base_cycles.size(); ++i) {
    const TightCycle& c = s.base_cycles[i].cycle;
    const int p = orbit_period(c, s.v);
    r.periods.push_back(p);
    if (auto defect = verify_cycle(c, s.v, s.k)) {
      r.base_issues.push_back({i, std::string(to_string(*defect))});
      r.type_rows.emplace_back();
      continue;
    }
    try {
      r.type_rows.push_back(window_types(c, s.v));
    } catch (const Error& e) {
      r.base_issues.push_back({i, e.what()});
      r.type_rows.emplace_back();
      continue;
    }
    for (const TripletType& t : r.type_rows.back()) weight[type_index(t.rep, s.v)] += static_cast<std::uint64_t>(p);
    r.expanded_cycle_count += static_cast<std::size_t>(p);
  }
  for (const TypeRep& rep : all_types(s.v)) {
    const std::uint64_t w = weight[type_index(rep, s.v)];
    if (w == 0) {
      r.uncovered_types.push_back(rep);
    } else if (w != static_cast<std::uint64_t>(s.v)) {
      r.miscovered_types.push_back({rep, w});
    }
  }
  if (r.base_issues.empty()) {
    r.decomposition = verify_decomposition(expand_cyclic(s));
  }
  r.valid = r.base_issues.empty() && r.uncovered_types.empty() && r.miscovered_types.empty() && r.decomposition.valid;
  return r;
}

const std::map<std::pair<int, int>, CyclicSystem>& bundled_systems() {
  static const auto systems = [] {
    std::map<std::pair<int, int>, CyclicSystem> out;
    for (const data::NamedText& entry : data::bundled_cyclic_texts()) {
      out.emplace(std::pair(entry.k, entry.v), system_from_text(entry.text));
    }
    return out;
  }();
  return systems;
}

const CyclicSystem& bundled_system(int k, int v) {
  const auto& all = bundled_systems();
  auto it = all.find({k, v});
  if (it == all.end()) {
    throw Error(ErrorCode::UnknownSystem, "no bundled cyclic system for k=" + std::to_string(k) + ", v=" + std::to_string(v));
  }
  return it->second;
}

const std::map<std::pair<int, int>, std::vector<TightCycle>>& printed_systems() {
  static const auto systems = [] {
    std::map<std::pair<int, int>, std::vector<TightCycle>> out;
    for (const data::NamedText& entry : data::printed_cyclic_texts()) {
      out.emplace(std::pair(entry.k, entry.v), io::parse_hcb(entry.text).cycles);
    }
    return out;
  }();
  return systems;
}

std::string printed_listing_text() {
  std::vector<data::NamedText> entries = data::printed_cyclic_texts();
  std::sort(entries.begin(), entries.end(),
            [](const data::NamedText& x, const data::NamedText& y) { return std::pair(x.k, x.v) < std::pair(y.k, y.v); });
  std::string out;
  for (const data::NamedText& e : entries) out += e.text;
  return out;
}

namespace {

class CyclicSearch {
 public:
  CyclicSearch(int v, int k, std::uint64_t seed, std::uint64_t budget)
      : v_(v), k_(k), budget_(budget), weight_(static_cast<std::size_t>((v + 1) * (v + 1)), 0) {
    types_ = all_types(v);
    order_.resize(static_cast<std::size_t>(v - 1));
    std::iota(order_.begin(), order_.end(), 1);
    if (seed != 0) {
      std::mt19937_64 rng(seed);
      for (std::size_t i = order_.size(); i > 1; --i) std::swap(order_[i - 1], order_[rng() % i]);
    }
  }

  std::optional<CyclicSystem> run() {
    const bool short_orbit = (k_ == 6 && v_ % 12 == 6) || (k_ == 9 && v_ % 9 == 6);
    if (short_orbit ? place_short_orbit() : fill()) return CyclicSystem::from_cycles(v_, k_, chosen_);
    return std::nullopt;
  }

  bool exhausted() const { return nodes_ > budget_; }

 private:
  std::uint64_t& weight(const TypeRep& rep) { return weight_[type_index(rep, v_)]; }

  // window type of three residues, nullopt for repeats or factor triplets
  std::optional<TypeRep> type_of(int x, int y, int z) const {
    if (x == y || x == z || y == z) return std::nullopt;
    if (is_factor_triplet(Triplet(x, y, z), v_)) return std::nullopt;
    return triplet_type(x, y, z, v_).rep;
  }

  // Commits a closed cycle if every window type still has room for its
  // orbit weight; returns the applied types for rollback.
  std::optional<std::vector<TypeRep>> commit(const std::vector<Vertex>& seq) {
    TightCycle c(seq);
    std::vector<TypeRep> reps;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      auto t = type_of(seq[i], seq[(i + 1) % seq.size()], seq[(i + 2) % seq.size()]);
      if (!t) return std::nullopt;
      reps.push_back(*t);
    }
    const auto p = static_cast<std::uint64_t>(orbit_period(c, v_));
    std::map<TypeRep, std::uint64_t> add;
    for (const TypeRep& r : reps) add[r] += p;
    for (const auto& [r, w] : add) {
      if (weight(r) + w > static_cast<std::uint64_t>(v_)) return std::nullopt;
    }
    for (const auto& [r, w] : add) weight(r) += w;
    chosen_.push_back(c);
    return reps;
  }

  void rollback(const std::vector<TypeRep>& reps) {
    const auto p = static_cast<std::uint64_t>(orbit_period(chosen_.back(), v_));
    for (const TypeRep& r : reps) weight(r) -= p;
    chosen_.pop_back();
  }

  bool place_short_orbit() {
    const int step = k_ == 6 ? v_ / 2 : v_ / 3;
    const int reps = k_ / 3;
    for (int x1 : order_) {
      for (int x2 : order_) {
        if (++nodes_ > budget_) return false;
        std::vector<Vertex> seq;
        for (int j = 0; j < reps; ++j) {
          for (int x : {0, x1, x2}) seq.push_back(mod(x + j * step, v_));
        }
        if (verify_cycle(std::span<const Vertex>(seq), v_, k_)) continue;
        if (orbit_period(TightCycle(seq), v_) != step) continue;
        auto applied = commit(seq);
        if (!applied) continue;
        if (fill()) return true;
        rollback(*applied);
        if (exhausted()) return false;
      }
    }
    return false;
  }

  bool fill() {
    const TypeRep* target = nullptr;
    for (const TypeRep& r : types_) {
      if (weight(r) == 0) {
        target = &r;
        break;
      }
    }
    if (target == nullptr) return true;
    const std::array<int, 3> base{0, (*target)[1] - 1, (*target)[2] - 1};
    // one ordering from each reflection pair
    static constexpr std::array<std::array<int, 3>, 3> perms{{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}}};
    for (const auto& perm : perms) {
      seq_ = {base[static_cast<std::size_t>(perm[0])], base[static_cast<std::size_t>(perm[1])],
              base[static_cast<std::size_t>(perm[2])]};
      in_cycle_.assign(1, *target);
      if (extend()) return true;
      if (exhausted()) return false;
    }
    return false;
  }

  bool extend() {
    if (++nodes_ > budget_) return false;
    if (static_cast<int>(seq_.size()) == k_) {
      const std::vector<Vertex> closed = seq_;
      auto applied = commit(closed);
      if (!applied) return false;
      const auto saved_seq = seq_;
      const auto saved_in = in_cycle_;
      if (fill()) return true;
      seq_ = saved_seq;
      in_cycle_ = saved_in;
      rollback(*applied);
      return false;
    }
    const std::size_t n = seq_.size();
    for (int x : order_) {
      if (std::find(seq_.begin(), seq_.end(), x) != seq_.end()) continue;
      auto t = type_of(seq_[n - 2], seq_[n - 1], x);
      if (!t || weight(*t) != 0) continue;
      if (std::find(in_cycle_.begin(), in_cycle_.end(), *t) != in_cycle_.end()) continue;
      seq_.push_back(x);
      in_cycle_.push_back(*t);
      if (extend()) return true;
      seq_.pop_back();
      in_cycle_.pop_back();
      if (exhausted()) return false;
    }
    return false;
  }

  int v_;
  int k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint64_t> weight_;
  std::vector<TypeRep> types_;
  std::vector<int> order_;
  std::vector<TightCycle> chosen_;
  std::vector<Vertex> seq_;
  std::vector<TypeRep> in_cycle_;
};

}  // namespace

CyclicSystem search_cyclic(int v, int k, std::uint64_t seed, std::uint64_t budget) {
  if (k != 6 && k != 9) throw Error(ErrorCode::UnsupportedK, "k=" + std::to_string(k));
  if (v < k || v % 3 != 0) throw Error(ErrorCode::InfeasibleOrder, "v=" + std::to_string(v));
  CyclicSearch search(v, k, seed, budget);
  auto result = search.run();
  if (!result) {
    throw Error(ErrorCode::NotFound, std::string(search.exhausted() ? "budget exhausted" : "search space exhausted") +
                                         " for k=" + std::to_string(k) + ", v=" + std::to_string(v));
  }
  return *result;
}

}  // namespace hcd::cyclic
