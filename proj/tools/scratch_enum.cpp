#include <cstdio>

#include "core/enumerate.hpp"

using namespace anng;

int main(int argc, char** argv) {
    SearchParams sp;
    sp.delta = argc > 1 ? atoi(argv[1]) : 2;
    sp.n1_min = sp.n1_max = argc > 2 ? atoi(argv[2]) : 1;
    sp.n2_min = sp.n2_max = argc > 3 ? atoi(argv[3]) : 1;
    sp.workers = argc > 4 ? atoi(argv[4]) : 1;
    if (argc > 5) sp.mode = std::string(argv[5]) == "special" ? SearchMode::kSpecial
                            : std::string(argv[5]) == "nonspecial" ? SearchMode::kNonspecial
                                                                   : SearchMode::kAll;
    EnumerationReport rep = enumerate_pairs(sp);
    printf("delta=%d n1=%d n2=%d survivors=%zu candidates=%ld nodes=%ld prunes=%ld "
           "dedup=%ld structural=%ld xviol=%ld complete=%d time=%ldms\n",
           sp.delta, sp.n1_min, sp.n2_min, rep.survivors.size(), rep.candidates, rep.nodes,
           rep.partial_prunes, rep.dedup_hits, rep.structural_rejects,
           rep.cross_check_violations, rep.complete ? 1 : 0, rep.wall_ms);
    for (const auto& s : rep.survivors)
        printf("  survivor fig=%s arcs=%zu\n", s.figure.empty() ? "-" : s.figure.c_str(),
               s.pair.arcs.size());
    for (const auto& [k, v] : rep.kill_counts) printf("  kill %s: %ld\n", k.c_str(), v);
    return 0;
}
