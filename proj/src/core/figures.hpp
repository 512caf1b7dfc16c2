#pragma once

#include <string>
#include <vector>

#include "pair.hpp"

namespace anng {

// The three reference configurations of the classification, as shipped in
// data/figures. Ids follow the catalog: "7.1" (delta 4, special, n1=1,n2=2),
// "8.1" (delta 5, n1=n2=2), "8.2" (delta 4, n1=n2=2, closed interior).
const std::vector<std::string>& figure_ids();

IncidencePair figure_pair(const std::string& id);

// Independent re-derivation of figure 8.2: all completions of the
// two-vertex shape with nested loops and two interleaved doubled families,
// no boundary edges. Returns canonical codes of the valid, filter-clean
// completions (expected: exactly one).
std::vector<std::string> derive_closed_delta4_codes();

}  // namespace anng
