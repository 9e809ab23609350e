#pragma once

// Line-oriented text formats. Every file starts with a `TAG 1` header;
// `#` starts a comment; tokens are separated by single spaces on output and
// by any run of blanks on input. Writers emit a canonical form, so
// write -> read -> write is byte-identical.
//
//   HCD  decomposition certificate: v, k, `F a b c` factor blocks, `C ...` cycles
//   HCB  cyclic base cycles:        v, k, `B ...` base cycles over Z_v
//   KTS  Kirkman triple system:     v, one `P a b c a b c ...` line per class
//   HGC  graph cycles on K_v:       v, `G ...` cycles of the ordinary graph

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "hcd/core.hpp"
#include "hcd/kts.hpp"

namespace hcd::io {

/// Contents of an HCB file. Periods are never stored.
struct BaseCycleFile {
  int v = 0;
  int k = 0;
  std::vector<TightCycle> cycles;
};

struct GraphCycles {
  int v = 0;
  std::vector<std::vector<Vertex>> cycles;
};

// Parsers throw Error(ParseError) with a "line N:" prefix.
Decomposition parse_hcd(std::string_view text);
BaseCycleFile parse_hcb(std::string_view text);
KirkmanSystem parse_kts(std::string_view text);
GraphCycles parse_graph_cycles(std::string_view text);

std::string format_hcd(const Decomposition& d);
std::string format_hcb(const BaseCycleFile& b);
std::string format_kts(const KirkmanSystem& s);
std::string format_graph_cycles(const GraphCycles& g);

/// Throws IoError.
std::string read_file(const std::filesystem::path& path);
/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

/// Header tag of a file's first non-comment line ("HCD", "HCB", ...).
std::string sniff_tag(std::string_view text);

}  // namespace hcd::io
