#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pair.hpp"

namespace anng {

// Jump offsets allowing either orientation of the step: returns the offset
// matrix and step = +1 (k = c + q*m) or -1 (k = c - q*m).
struct SignedOffsets {
    std::vector<int> c;
    int step = 1;
};
std::optional<SignedOffsets> jump_offsets_signed(const IncidencePair& pair);

// Gauge normalization that tolerates either step orientation.
IncidencePair normalize_gauge_signed(const IncidencePair& pair);

// Full normal form: gauge, arc order, cyclic rotation of the boundary
// lists, regenerated region spec. Two data representations of the same
// embedded pair normalize identically.
IncidencePair normal_form(const IncidencePair& pair);

// Deterministic byte encoding of a normal form.
std::string encode_pair(const IncidencePair& pair);

// The symmetry group: cyclic vertex relabelings on both sides, boundary
// circle swaps of either annulus, reflections of either annulus (combined
// with the index reversal of the opposite side that keeps labels reading
// forward), the side swap when n1 = n2, and their compositions.
std::vector<IncidencePair> symmetry_orbit(const IncidencePair& pair);

// Least encoding over the orbit states whose jump rule reads forward.
// Requires validate(pair) empty.
std::string canonicalize(const IncidencePair& pair);

// Individual generators (exposed for tests).
IncidencePair sym_rotate1(const IncidencePair& pair);
IncidencePair sym_rotate2(const IncidencePair& pair);
IncidencePair sym_swap_rings1(const IncidencePair& pair);
IncidencePair sym_swap_rings2(const IncidencePair& pair);
IncidencePair sym_mirror1(const IncidencePair& pair);
IncidencePair sym_mirror2(const IncidencePair& pair);
IncidencePair sym_reverse1(const IncidencePair& pair);
IncidencePair sym_reverse2(const IncidencePair& pair);
IncidencePair sym_swap_sides(const IncidencePair& pair);

}  // namespace anng
