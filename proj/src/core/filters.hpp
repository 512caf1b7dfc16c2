#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pair.hpp"

namespace anng {

struct FilterVerdict {
    std::string name;
    std::string citation;
    bool pass = true;
    std::string witness;
    std::vector<int> witness_arcs;
};

// Scharlemann cycle: positive edges bounding a disk face, every edge with
// the same ordered label pair (lo, lo+1). For n_other = 2 the two corner
// annuli are distinct, so (1,2) and (2,1) differ by lo.
struct ScharlemannCycle {
    std::vector<int> arcs;
    int lo = 0;  // 1-based label; pair is (lo, lo % n_other + 1)
    int region = -1;
};

// An i-band: consecutive members of one boundary family at a vertex, read
// along the preferred orientation; the first edge (label i) is initial.
struct Band {
    int vertex = -1;
    int initial_arc = -1, terminal_arc = -1;
    int label = 0;  // 1-based i
};

// Everything the filters need, derived once.
struct FilterContext {
    IncidencePair pair;
    PairGeometry g;
    bool usable = false;
    int band_cycle_cap = 8;

    struct Side {
        const AnnulusGraphView* v = nullptr;
        const ViewGeometry* geo = nullptr;
        const ReducedGraph* red = nullptr;
        bool special = false;
        std::vector<ScharlemannCycle> scycles;
        std::vector<Band> bands;
    };
    Side side[2];

    const Side& of(int s) const { return side[s - 1]; }
    const Side& other(int s) const { return side[2 - s]; }
};

FilterContext make_filter_context(const IncidencePair& pair, int band_cycle_cap = 8);

std::vector<ScharlemannCycle> find_scharlemann_cycles(const AnnulusGraphView& v,
                                                      const ViewGeometry& g);
std::vector<Band> find_bands(const AnnulusGraphView& v, const ViewGeometry& g,
                             const ReducedGraph& rg);

FilterVerdict parity_filter(const FilterContext& c);
FilterVerdict double_parallel_filter(const FilterContext& c);
FilterVerdict negative_family_filter(const FilterContext& c);
FilterVerdict scharlemann_filter(const FilterContext& c);
FilterVerdict family_size_filter(const FilterContext& c);
FilterVerdict negative_valency_filter(const FilterContext& c);
FilterVerdict equidistance_filter(const FilterContext& c);
FilterVerdict jumping_adjacency_filter(const FilterContext& c);
FilterVerdict low_valency_filter(const FilterContext& c);
FilterVerdict band_type_filter(const FilterContext& c);
FilterVerdict band_annulus_filter(const FilterContext& c);

// Stable filter names in evaluation order.
const std::vector<std::string>& all_filter_names();

// Runs the named filters (empty = all) in the fixed order.
std::vector<FilterVerdict> run_filters(const FilterContext& c,
                                       const std::vector<std::string>& names = {});

// Rechecks a failed verdict against the pair alone.
bool replay_witness(const IncidencePair& pair, const FilterVerdict& verdict);

}  // namespace anng
