#pragma once

// Repository data files compiled into the library (see core/data/).

#include <string_view>
#include <vector>

namespace hcd::data {

struct NamedText {
  int k;
  int v;
  std::string_view text;
};

std::string_view k9_graph_c6_text();
std::string_view kts15_text();
std::string_view kts21_text();
const std::vector<NamedText>& bundled_cyclic_texts();
const std::vector<NamedText>& printed_cyclic_texts();

}  // namespace hcd::data
