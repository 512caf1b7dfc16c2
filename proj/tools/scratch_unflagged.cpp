#include <chrono>
#include <cstdio>

#include "core/classify.hpp"

using namespace anng;

int main(int argc, char** argv) {
    int maxv = argc > 1 ? atoi(argv[1]) : 4;
    int maxe = argc > 2 ? atoi(argv[2]) : 3 * maxv;
    auto t0 = std::chrono::steady_clock::now();
    long count = 0, bad = 0;
    exhaustive_unflagged_corpus(maxv, maxe, [&](const ReducedAnnularGraph& rg) {
        count++;
        Classification c = classify(rg);
        if (!c.triangular && !c.special) bad++;
    });
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    printf("maxv=%d maxe=%d count=%ld not_tri_or_special=%ld time=%ldms\n", maxv, maxe,
           count, bad, ms);
    return 0;
}
