#include <chrono>
#include <cstdio>

#include "core/classify.hpp"

using namespace anng;

int main(int argc, char** argv) {
    int maxv = argc > 1 ? atoi(argv[1]) : 3;
    int maxe = argc > 2 ? atoi(argv[2]) : 3 * maxv;
    auto t0 = std::chrono::steady_clock::now();
    long count = 0, zero = 0;
    int max_e_seen = 0;
    exhaustive_reduced_corpus(maxv, maxe, [&](const ReducedAnnularGraph& rg) {
        count++;
        if (rg.map.arc_count() > max_e_seen) max_e_seen = rg.map.arc_count();
        if (!classify(rg).any()) zero++;
    });
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    printf("maxv=%d maxe=%d count=%ld zero=%ld max_e_seen=%d time=%ldms\n", maxv, maxe,
           count, zero, max_e_seen, ms);
    return 0;
}
