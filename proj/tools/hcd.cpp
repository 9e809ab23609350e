// hcd: construct, verify and inspect tight-cycle decompositions of K_v^(3) - I.
//
// Exit codes: 0 success / valid, 1 domain failure (infeasible, invalid,
// malformed input), 2 usage error, 3 search or matching budget exhausted.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hcd/assembler.hpp"
#include "hcd/core.hpp"
#include "hcd/cyclic.hpp"
#include "hcd/formats.hpp"
#include "hcd/kts.hpp"
#include "hcd/spectrum.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

int exit_code_for(hcd::ErrorCode code) {
  switch (code) {
    case hcd::ErrorCode::SearchBudgetExceeded:
    case hcd::ErrorCode::MatchingFailed:
    case hcd::ErrorCode::NotFound:
      return kBudget;
    default:
      return kDomainFailure;
  }
}

void print_report_details(const hcd::VerificationReport& r, std::size_t limit) {
  auto head = [limit](std::size_t n) { return std::min(n, limit); };
  for (std::size_t i = 0; i < head(r.cycle_issues.size()); ++i) {
    std::cout << "  cycle " << r.cycle_issues[i].index << ": " << hcd::to_string(r.cycle_issues[i].defect) << '\n';
  }
  for (std::size_t i = 0; i < head(r.duplicated.size()); ++i) {
    std::cout << "  duplicated " << hcd::to_string(r.duplicated[i].first) << " x" << r.duplicated[i].second << '\n';
  }
  for (std::size_t i = 0; i < head(r.missing.size()); ++i) std::cout << "  missing " << hcd::to_string(r.missing[i]) << '\n';
  for (std::size_t i = 0; i < head(r.foreign.size()); ++i) std::cout << "  foreign " << hcd::to_string(r.foreign[i]) << '\n';
}

struct Options {
  int k = 0;
  int v = 0;
  bool split2 = false;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  std::string out;
  std::string in;
  std::vector<int> triple;
  bool printed = false;
  bool types = false;
  bool search = false;
  std::size_t limit = 20;
};

int cmd_spectrum(const Options& o) {
  const hcd::spectrum::Feasibility f = hcd::spectrum::feasible(o.k, o.v, o.split2);
  if (f) {
    std::cout << "feasible\n";
    return kOk;
  }
  std::cout << "infeasible: " << f.detail << '\n';
  return kDomainFailure;
}

int cmd_construct(const Options& o) {
  const hcd::Decomposition d = hcd::assembler::construct(o.k, o.v, o.split2, o.seed);
  hcd::io::write_file_atomic(o.out, hcd::io::format_hcd(d));
  const hcd::VerificationReport r = hcd::verify_decomposition(d);
  std::cout << "wrote " << d.cycles.size() << " cycles to " << o.out << '\n' << r.summary() << '\n';
  return r.valid ? kOk : kDomainFailure;
}

int cmd_verify(const Options& o) {
  const hcd::Decomposition d = hcd::io::parse_hcd(hcd::io::read_file(o.in));
  const hcd::VerificationReport r = hcd::verify_decomposition(d);
  std::cout << r.summary() << '\n';
  if (!r.valid) print_report_details(r, o.limit);
  return r.valid ? kOk : kDomainFailure;
}

hcd::cyclic::CyclicSystem load_cyclic(const std::string& path) {
  hcd::io::BaseCycleFile file = hcd::io::parse_hcb(hcd::io::read_file(path));
  return hcd::cyclic::CyclicSystem::from_cycles(file.v, file.k, std::move(file.cycles));
}

void write_cyclic(const std::string& path, const hcd::cyclic::CyclicSystem& s) {
  hcd::io::write_file_atomic(path, hcd::io::format_hcb({s.v, s.k, s.cycles()}));
}

int cmd_cyclic_builtin(const Options& o) {
  hcd::cyclic::CyclicSystem s;
  if (o.printed) {
    const auto& printed = hcd::cyclic::printed_systems();
    auto it = printed.find({o.k, o.v});
    if (it == printed.end()) {
      throw hcd::Error(hcd::ErrorCode::UnknownSystem,
                       "no printed system for k=" + std::to_string(o.k) + ", v=" + std::to_string(o.v));
    }
    s = hcd::cyclic::CyclicSystem::from_cycles(o.v, o.k, it->second);
  } else {
    s = hcd::cyclic::bundled_system(o.k, o.v);
  }
  write_cyclic(o.out, s);
  std::cout << "wrote " << s.base_cycles.size() << " base cycles to " << o.out << '\n';
  return kOk;
}

int cmd_cyclic_verify(const Options& o) {
  const hcd::cyclic::CyclicSystem s = load_cyclic(o.in);
  const hcd::cyclic::CyclicReport r = hcd::cyclic::verify_cyclic(s);
  std::cout << r.summary() << '\n';
  if (o.types) {
    for (std::size_t i = 0; i < r.type_rows.size(); ++i) {
      std::cout << "base " << i << " " << hcd::to_string(s.base_cycles[i].cycle) << " period " << r.periods[i] << '\n';
      for (const hcd::cyclic::TripletType& t : r.type_rows[i]) {
        std::cout << "  " << t.ordered[0] << ' ' << t.ordered[1] << ' ' << t.ordered[2] << " -> "
                  << hcd::cyclic::to_string(t.rep) << " d=" << t.d << '\n';
      }
    }
  }
  return r.valid ? kOk : kDomainFailure;
}

int cmd_cyclic_expand(const Options& o) {
  const hcd::Decomposition d = hcd::cyclic::expand_cyclic(load_cyclic(o.in));
  hcd::io::write_file_atomic(o.out, hcd::io::format_hcd(d));
  std::cout << "wrote " << d.cycles.size() << " cycles to " << o.out << '\n';
  return kOk;
}

int cmd_cyclic_search(const Options& o) {
  const auto budget = o.budget == 0 ? hcd::cyclic::kDefaultSearchBudget : o.budget;
  const hcd::cyclic::CyclicSystem s = hcd::cyclic::search_cyclic(o.v, o.k, o.seed, budget);
  write_cyclic(o.out, s);
  std::cout << "found " << s.base_cycles.size() << " base cycles; " << hcd::cyclic::verify_cyclic(s).summary() << '\n';
  return kOk;
}

int cmd_type(const Options& o) {
  const hcd::cyclic::TripletType t = hcd::cyclic::triplet_type(o.triple[0], o.triple[1], o.triple[2], o.v);
  std::cout << hcd::cyclic::to_string(t.rep) << " (d=" << t.d << ")\n";
  return kOk;
}

int cmd_bounds(const Options& o) {
  const hcd::spectrum::C4Bounds b = hcd::spectrum::c4_bounds(o.v);
  std::cout << "schonheim " << b.schonheim << '\n';
  if (b.johnson) std::cout << "johnson " << *b.johnson << '\n';
  std::cout << "max coverable edges " << b.max_coverable_edges << '\n';
  if (b.target_edges) {
    std::cout << "edges of K_v^(3) - I " << *b.target_edges << '\n';
    std::cout << (b.impossible ? "no tight 4-cycle decomposition" : "bound does not exclude a tight 4-cycle decomposition")
              << '\n';
  } else {
    std::cout << "3 does not divide v; no 1-factor exists\n";
  }
  return kOk;
}

int cmd_kts(const Options& o) {
  const auto budget = o.budget == 0 ? hcd::kDefaultKtsBudget : o.budget;
  const hcd::KirkmanSystem s = o.search ? hcd::search_kts(o.v, o.seed, budget) : hcd::kts(o.v, o.seed, budget);
  const auto defect = hcd::verify_kts(s);
  hcd::io::write_file_atomic(o.out, hcd::io::format_kts(s));
  std::cout << "KTS(" << s.v << "): " << s.classes.size() << " classes of " << s.v / 3 << " blocks, "
            << (defect ? std::string(hcd::to_string(*defect)) : std::string("ok")) << '\n';
  return defect ? kDomainFailure : kOk;
}

int cmd_kts_verify(const Options& o) {
  const hcd::KirkmanSystem s = hcd::io::parse_kts(hcd::io::read_file(o.in));
  const auto defect = hcd::verify_kts(s);
  if (defect) {
    std::cout << "invalid: " << hcd::to_string(*defect) << '\n';
    return kDomainFailure;
  }
  std::cout << "ok: " << s.classes.size() << " classes of " << s.v / 3 << " blocks\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tight-cycle decompositions of K_v^(3) minus a 1-factor"};
  app.require_subcommand(1);
  Options o;
  int (*action)(const Options&) = nullptr;
  auto bind = [&action](CLI::App* cmd, int (*fn)(const Options&)) {
    cmd->callback([&action, fn] { action = fn; });
  };
  const auto cycle_lengths = CLI::IsMember({6, 9});

  auto* spectrum = app.add_subcommand("spectrum", "Feasibility of a decomposition into tight k-cycles");
  spectrum->add_option("--k", o.k, "Cycle length (4, 6 or 9)")->required()->check(CLI::IsMember({4, 6, 9}));
  spectrum->add_option("--v", o.v, "Order")->required();
  spectrum->add_flag("--split2", o.split2, "Ask for a 2-split system");
  bind(spectrum, cmd_spectrum);

  auto* construct = app.add_subcommand("construct", "Build a decomposition certificate");
  construct->add_option("--k", o.k, "Cycle length (6 or 9)")->required()->check(cycle_lengths);
  construct->add_option("--v", o.v, "Order")->required();
  construct->add_flag("--split2", o.split2, "Build a 2-split system");
  construct->add_option("--seed", o.seed, "Seed for randomized steps")->capture_default_str();
  construct->add_option("--out", o.out, "Output certificate (HCD)")->required();
  bind(construct, cmd_construct);

  auto* verify = app.add_subcommand("verify", "Verify a decomposition certificate");
  verify->add_option("file", o.in, "Certificate (HCD)")->required()->check(CLI::ExistingFile);
  verify->add_option("--limit", o.limit, "Defects listed per kind")->capture_default_str();
  bind(verify, cmd_verify);

  auto* cyclic = app.add_subcommand("cyclic", "Cyclic base-cycle systems");
  cyclic->require_subcommand(1);
  auto* builtin = cyclic->add_subcommand("builtin", "Export a bundled system");
  builtin->add_option("--k", o.k, "Cycle length")->required()->check(cycle_lengths);
  builtin->add_option("--v", o.v, "Order")->required();
  builtin->add_option("--out", o.out, "Output base-cycle file (HCB)")->required();
  builtin->add_flag("--printed", o.printed, "Export the listing as printed, without repairs");
  bind(builtin, cmd_cyclic_builtin);
  auto* cverify = cyclic->add_subcommand("verify", "Verify a base-cycle file");
  cverify->add_option("file", o.in, "Base-cycle file (HCB)")->required()->check(CLI::ExistingFile);
  cverify->add_flag("--types", o.types, "Print the type of every base-cycle window");
  bind(cverify, cmd_cyclic_verify);
  auto* expand = cyclic->add_subcommand("expand", "Expand base cycles into a certificate");
  expand->add_option("file", o.in, "Base-cycle file (HCB)")->required()->check(CLI::ExistingFile);
  expand->add_option("--out", o.out, "Output certificate (HCD)")->required();
  bind(expand, cmd_cyclic_expand);
  auto* search = cyclic->add_subcommand("search", "Search for a cyclic system");
  search->add_option("--k", o.k, "Cycle length")->required()->check(cycle_lengths);
  search->add_option("--v", o.v, "Order")->required();
  search->add_option("--seed", o.seed, "Seed")->capture_default_str();
  search->add_option("--budget", o.budget, "Search nodes (0 = default)");
  search->add_option("--out", o.out, "Output base-cycle file (HCB)")->required();
  bind(search, cmd_cyclic_search);

  auto* type = app.add_subcommand("type", "Type and smallest distance of a triplet over Z_v");
  type->add_option("--v", o.v, "Order")->required();
  type->add_option("triplet", o.triple, "Three vertices")->required()->expected(3);
  bind(type, cmd_type);

  auto* bounds = app.add_subcommand("bounds", "Tight 4-cycle packing bounds");
  bounds->add_option("--v", o.v, "Order")->required()->check(CLI::Range(4, 1 << 20));
  bind(bounds, cmd_bounds);

  auto* kts = app.add_subcommand("kts", "Kirkman triple systems");
  kts->add_option("--v", o.v, "Order");
  kts->add_option("--out", o.out, "Output file (KTS)");
  kts->add_option("--seed", o.seed, "Seed")->capture_default_str();
  kts->add_option("--budget", o.budget, "Search nodes (0 = default)");
  kts->add_flag("--search", o.search, "Always run the backtracking search");
  auto* kverify = kts->add_subcommand("verify", "Verify a KTS file");
  kverify->add_option("file", o.in, "KTS file")->required()->check(CLI::ExistingFile);
  bind(kverify, cmd_kts_verify);
  kts->callback([&] {
    if (action != nullptr) return;
    if (o.v == 0 || o.out.empty()) throw CLI::RequiredError("kts needs --v and --out (or the verify subcommand)");
    action = cmd_kts;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action(o);
  } catch (const hcd::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainFailure;
  }
}
