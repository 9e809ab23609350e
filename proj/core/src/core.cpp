#include "hcd/core.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace hcd {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::NegativeVertex: return "NegativeVertex";
    case ErrorCode::InfeasibleOrder: return "InfeasibleOrder";
    case ErrorCode::InvalidFactor: return "InvalidFactor";
    case ErrorCode::OverlappingParts: return "OverlappingParts";
    case ErrorCode::WrongPartSize: return "WrongPartSize";
    case ErrorCode::MatchingFailed: return "MatchingFailed";
    case ErrorCode::NotAnH2: return "NotAnH2";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::DegenerateOrbit: return "DegenerateOrbit";
    case ErrorCode::UnknownSystem: return "UnknownSystem";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::UnsupportedK: return "UnsupportedK";
    case ErrorCode::InvalidCycle: return "InvalidCycle";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Triplet

Triplet::Triplet(Vertex x, Vertex y, Vertex z) : v_{x, y, z} {
  if (x < 0 || y < 0 || z < 0) {
    throw Error(ErrorCode::NegativeVertex,
                "triplet (" + std::to_string(x) + "," + std::to_string(y) + "," +
                    std::to_string(z) + ")");
  }
  if (x == y || y == z || x == z) {
    throw Error(ErrorCode::DuplicateVertex,
                "triplet (" + std::to_string(x) + "," + std::to_string(y) + "," +
                    std::to_string(z) + ")");
  }
  std::sort(v_.begin(), v_.end());
}

int Triplet::intersection_size(const Triplet& other) const noexcept {
  int n = 0;
  for (Vertex x : v_) n += other.contains(x) ? 1 : 0;
  return n;
}

Triplet canonical_triplet(Vertex x, Vertex y, Vertex z) { return Triplet(x, y, z); }

std::string to_string(const Triplet& t) {
  return "{" + std::to_string(t.a()) + "," + std::to_string(t.b()) + "," + std::to_string(t.c()) +
         "}";
}

// ---------------------------------------------------------------------------
// TightCycle

TightCycle TightCycle::checked(std::vector<Vertex> vertices) {
  if (vertices.size() < 4) throw Error(ErrorCode::InvalidCycle, "cycle shorter than 4");
  std::vector<Vertex> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 0) throw Error(ErrorCode::InvalidCycle, "negative vertex in cycle");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::InvalidCycle, "repeated vertex in cycle");
  }
  return TightCycle(std::move(vertices));
}

std::vector<Vertex> TightCycle::canonical_form() const {
  const std::size_t k = vertices_.size();
  if (k == 0) return {};
  std::vector<Vertex> best;
  std::vector<Vertex> candidate(k);
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t start = 0; start < k; ++start) {
      for (std::size_t i = 0; i < k; ++i) {
        std::size_t idx = dir == 0 ? (start + i) % k : (start + k - i) % k;
        candidate[i] = vertices_[idx];
      }
      if (best.empty() || candidate < best) best = candidate;
    }
  }
  return best;
}

TightCycle TightCycle::mapped(const std::function<Vertex(Vertex)>& f) const {
  std::vector<Vertex> out;
  out.reserve(vertices_.size());
  for (Vertex x : vertices_) out.push_back(f(x));
  return TightCycle(std::move(out));
}

TightCycle TightCycle::shifted(Vertex shift, int v) const {
  return mapped([&](Vertex x) { return ((x + shift) % v + v) % v; });
}

bool operator==(const TightCycle& x, const TightCycle& y) {
  if (x.length() != y.length()) return false;
  return x.canonical_form() == y.canonical_form();
}

std::strong_ordering operator<=>(const TightCycle& x, const TightCycle& y) {
  return x.canonical_form() <=> y.canonical_form();
}

std::string to_string(const TightCycle& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.length(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + ")";
}

std::vector<Triplet> cycle_edges(const TightCycle& c) {
  const std::size_t k = c.length();
  std::vector<Triplet> edges;
  edges.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    edges.emplace_back(c[i], c[(i + 1) % k], c[(i + 2) % k]);
  }
  return edges;
}

// ---------------------------------------------------------------------------
// OneFactor / parts

void OneFactor::validate(int v) const {
  if (v < 3 || v % 3 != 0) {
    throw Error(ErrorCode::InvalidFactor, "order " + std::to_string(v) + " is not a multiple of 3");
  }
  if (blocks.size() != static_cast<std::size_t>(v / 3)) {
    throw Error(ErrorCode::InvalidFactor, "expected " + std::to_string(v / 3) + " blocks, got " +
                                              std::to_string(blocks.size()));
  }
  std::vector<char> seen(static_cast<std::size_t>(v), 0);
  for (const Triplet& t : blocks) {
    for (Vertex x : t.vertices()) {
      if (x >= v) {
        throw Error(ErrorCode::InvalidFactor, "block " + to_string(t) + " leaves the vertex range");
      }
      if (seen[static_cast<std::size_t>(x)]) {
        throw Error(ErrorCode::InvalidFactor, "blocks overlap at vertex " + std::to_string(x));
      }
      seen[static_cast<std::size_t>(x)] = 1;
    }
  }
}

OneFactor OneFactor::cyclic(int v) {
  OneFactor f;
  for (int i = 0; i < v / 3; ++i) f.blocks.emplace_back(i, i + v / 3, i + 2 * v / 3);
  return f;
}

OneFactor OneFactor::consecutive(int v) {
  OneFactor f;
  for (int i = 0; i < v / 3; ++i) f.blocks.emplace_back(3 * i, 3 * i + 1, 3 * i + 2);
  return f;
}

PartLabeling::PartLabeling(std::vector<std::vector<Vertex>> parts, std::vector<std::size_t> sizes)
    : parts_(std::move(parts)) {
  if (sizes.size() != parts_.size()) {
    throw Error(ErrorCode::WrongPartSize, "size declaration does not match the number of parts");
  }
  std::set<Vertex> seen;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (sizes[i] != 0 && parts_[i].size() != sizes[i]) {
      throw Error(ErrorCode::WrongPartSize, "part " + std::to_string(i) + " has " +
                                                std::to_string(parts_[i].size()) +
                                                " vertices, expected " + std::to_string(sizes[i]));
    }
    for (Vertex x : parts_[i]) {
      if (x < 0) throw Error(ErrorCode::NegativeVertex, "vertex " + std::to_string(x));
      if (!seen.insert(x).second) {
        throw Error(ErrorCode::OverlappingParts, "vertex " + std::to_string(x) + " repeated");
      }
    }
  }
}

void check_parts(std::initializer_list<std::span<const Vertex>> parts,
                 std::initializer_list<std::size_t> sizes) {
  std::vector<std::vector<Vertex>> copy;
  for (auto p : parts) copy.emplace_back(p.begin(), p.end());
  PartLabeling(std::move(copy), std::vector<std::size_t>(sizes));
}

// ---------------------------------------------------------------------------
// Edge sets

std::uint64_t edge_count(int v) {
  if (v < 3 || v % 3 != 0) {
    throw Error(ErrorCode::InfeasibleOrder, "v=" + std::to_string(v) + " is not a multiple of 3");
  }
  const std::uint64_t n = static_cast<std::uint64_t>(v);
  return n * n * (n - 3) / 6;
}

std::vector<Triplet> target_edges(int v, const OneFactor& factor) {
  factor.validate(v);
  std::set<Triplet> omit(factor.blocks.begin(), factor.blocks.end());
  std::vector<Triplet> out;
  out.reserve(edge_count(v));
  for (Vertex a = 0; a < v; ++a)
    for (Vertex b = a + 1; b < v; ++b)
      for (Vertex c = b + 1; c < v; ++c) {
        Triplet t(a, b, c);
        if (!omit.count(t)) out.push_back(t);
      }
  return out;
}

namespace {

std::vector<Triplet> sorted_unique(std::vector<Triplet> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace

std::vector<Triplet> ktri_edges(std::span<const Vertex> a, std::span<const Vertex> b,
                                std::span<const Vertex> c) {
  std::vector<Triplet> out;
  for (Vertex x : a)
    for (Vertex y : b)
      for (Vertex z : c) out.emplace_back(x, y, z);
  return sorted_unique(std::move(out));
}

std::vector<Triplet> kpq_edges(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::vector<Triplet> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      for (Vertex y : b) out.emplace_back(a[i], a[j], y);
  return sorted_unique(std::move(out));
}

std::vector<Triplet> crt_edges(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::vector<Triplet> out = kpq_edges(a, b);
  std::vector<Triplet> other = kpq_edges(b, a);
  out.insert(out.end(), other.begin(), other.end());
  return sorted_unique(std::move(out));
}

std::vector<Triplet> complete_edges(std::span<const Vertex> a) {
  std::vector<Triplet> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      for (std::size_t l = j + 1; l < a.size(); ++l) out.emplace_back(a[i], a[j], a[l]);
  return sorted_unique(std::move(out));
}

// ---------------------------------------------------------------------------
// Verification

std::string_view to_string(CycleDefect d) noexcept {
  switch (d) {
    case CycleDefect::WrongLength: return "WrongLength";
    case CycleDefect::RepeatedVertex: return "RepeatedVertex";
    case CycleDefect::VertexOutOfRange: return "VertexOutOfRange";
  }
  return "Unknown";
}

std::optional<CycleDefect> verify_cycle(std::span<const Vertex> cycle, int v, int k) {
  if (cycle.size() != static_cast<std::size_t>(k)) return CycleDefect::WrongLength;
  for (Vertex x : cycle) {
    if (x < 0 || x >= v) return CycleDefect::VertexOutOfRange;
  }
  std::vector<Vertex> sorted(cycle.begin(), cycle.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return CycleDefect::RepeatedVertex;
  }
  return std::nullopt;
}

namespace {

// Colex rank of a < b < c: C(c,3) + C(b,2) + a.
inline std::size_t triplet_rank(const Triplet& t) {
  const auto a = static_cast<std::size_t>(t.a());
  const auto b = static_cast<std::size_t>(t.b());
  const auto c = static_cast<std::size_t>(t.c());
  return c * (c - 1) * (c - 2) / 6 + b * (b - 1) / 2 + a;
}

}  // namespace

VerificationReport verify_cover(int v, int k, std::span<const TightCycle> cycles,
                                std::span<const Triplet> target) {
  VerificationReport report;
  report.v = v;
  report.k = k;
  report.cycle_count = cycles.size();

  const std::size_t n = v >= 3 ? static_cast<std::size_t>(v) : 0;
  const std::size_t universe = n >= 3 ? n * (n - 1) * (n - 2) / 6 : 0;
  std::vector<std::uint32_t> count(universe, 0);
  std::vector<char> wanted(universe, 0);
  std::set<Triplet> foreign;

  for (const Triplet& t : target) {
    if (t.c() >= v) {
      foreign.insert(t);
      continue;
    }
    wanted[triplet_rank(t)] = 1;
  }
  report.target_edge_count = target.size();

  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const auto& seq = cycles[i].vertices();
    if (auto defect = verify_cycle(std::span<const Vertex>(seq), v, k)) {
      report.cycle_issues.push_back({i, *defect});
    }
    const std::size_t len = seq.size();
    if (len < 3) continue;
    for (std::size_t j = 0; j < len; ++j) {
      Vertex x = seq[j], y = seq[(j + 1) % len], z = seq[(j + 2) % len];
      if (x == y || y == z || x == z || x < 0 || y < 0 || z < 0) continue;
      Triplet t(x, y, z);
      if (t.c() >= v) {
        foreign.insert(t);
        continue;
      }
      ++count[triplet_rank(t)];
    }
  }

  for (Vertex c = 2; c < v; ++c)
    for (Vertex b = 1; b < c; ++b)
      for (Vertex a = 0; a < b; ++a) {
        Triplet t(a, b, c);
        std::size_t r = triplet_rank(t);
        if (wanted[r]) {
          if (count[r] == 0) report.missing.push_back(t);
          else ++report.covered_target_edges;
        } else if (count[r] > 0) {
          foreign.insert(t);
        }
        if (count[r] > 1) report.duplicated.emplace_back(t, count[r]);
      }

  std::sort(report.missing.begin(), report.missing.end());
  std::sort(report.duplicated.begin(), report.duplicated.end());
  report.foreign.assign(foreign.begin(), foreign.end());
  report.valid = report.cycle_issues.empty() && report.missing.empty() &&
                 report.duplicated.empty() && report.foreign.empty();
  return report;
}

VerificationReport verify_decomposition(const Decomposition& d) {
  std::optional<std::string> factor_error;
  try {
    d.factor.validate(d.v);
  } catch (const Error& e) {
    factor_error = e.what();
  }
  std::vector<Triplet> target;
  if (d.v >= 3) {
    std::set<Triplet> omit(d.factor.blocks.begin(), d.factor.blocks.end());
    for (Vertex a = 0; a < d.v; ++a)
      for (Vertex b = a + 1; b < d.v; ++b)
        for (Vertex c = b + 1; c < d.v; ++c) {
          Triplet t(a, b, c);
          if (!omit.count(t)) target.push_back(t);
        }
  }
  VerificationReport report = verify_cover(d.v, d.k, d.cycles, target);
  report.factor_error = std::move(factor_error);
  if (report.factor_error) report.valid = false;
  return report;
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  if (valid) {
    os << "VALID: " << cycle_count << " cycles, " << covered_target_edges << "/"
       << target_edge_count << " edges";
    return os.str();
  }
  os << "INVALID: " << cycle_count << " cycles, " << covered_target_edges << "/"
     << target_edge_count << " edges";
  if (factor_error) os << "; InvalidFactor (" << *factor_error << ")";
  if (!cycle_issues.empty()) os << "; " << cycle_issues.size() << " defective cycles";
  if (!missing.empty()) os << "; " << missing.size() << " missing edges";
  if (!duplicated.empty()) os << "; " << duplicated.size() << " duplicated edges";
  if (!foreign.empty()) os << "; " << foreign.size() << " foreign edges";
  return os.str();
}

Decomposition relabel(const Decomposition& d, std::span<const Vertex> perm) {
  Decomposition out;
  out.v = d.v;
  out.k = d.k;
  out.split2 = false;
  auto image = [&](Vertex x) { return perm[static_cast<std::size_t>(x)]; };
  for (const Triplet& t : d.factor.blocks) out.factor.blocks.emplace_back(image(t.a()), image(t.b()), image(t.c()));
  out.cycles.reserve(d.cycles.size());
  for (const TightCycle& c : d.cycles) out.cycles.push_back(c.mapped(image));
  return out;
}

bool split2_structure_holds(const Decomposition& d) {
  if (!d.split2 || d.v % 2 != 0) return false;
  const Vertex half = d.v / 2;
  auto side = [&](Vertex x) { return x < half ? 0 : 1; };
  for (const TightCycle& c : d.cycles) {
    bool any_inside = false;
    bool any_crossing = false;
    for (const Triplet& t : cycle_edges(c)) {
      int s = side(t.a()) + side(t.b()) + side(t.c());
      if (s == 0 || s == 3) any_inside = true;
      else any_crossing = true;
    }
    if (any_inside && any_crossing) return false;
    if (any_inside) {
      int s0 = side(c[0]);
      for (Vertex x : c.vertices())
        if (side(x) != s0) return false;
    }
  }
  return true;
}

}  // namespace hcd
