#pragma once

#include <map>
#include <string>
#include <vector>

#include "filters.hpp"
#include "pair.hpp"

namespace anng {

enum class SearchMode { kAll, kSpecial, kNonspecial };

struct SearchParams {
    int delta = 4;
    int n1_min = 1, n1_max = 1;
    int n2_min = 1, n2_max = 1;
    std::vector<int> qs;  // empty: every jumping number allowed for delta
    SearchMode mode = SearchMode::kAll;
    std::vector<std::string> filters;  // empty: the whole bank
    int band_cycle_cap = 8;
    int workers = 1;
    long node_budget = -1;  // negative: unlimited
    bool partial_filtering = true;
    bool cross_checks = true;

    bool valid() const;
};

struct Survivor {
    std::string code;
    IncidencePair pair;
    std::string figure;  // matched catalog id or empty
};

struct EnumerationReport {
    SearchParams params;
    std::vector<Survivor> survivors;
    std::map<std::string, long> kill_counts;  // filter name (or "mode") -> kills
    long structural_rejects = 0;
    long candidates = 0;
    long nodes = 0;
    long partial_prunes = 0;
    long dedup_hits = 0;
    long cross_check_violations = 0;
    bool complete = true;
    long wall_ms = 0;
    int workers_used = 1;

    long kill_total() const;
};

EnumerationReport enumerate_pairs(const SearchParams& sp);

// Naive reference: generate every completion without partial pruning, then
// filter. Refuses parameter sets beyond toy sizes.
EnumerationReport brute_force_oracle(const SearchParams& sp);
bool oracle_in_range(const SearchParams& sp);

// Canonical-code equality against a shipped reference configuration.
bool match_figure(const IncidencePair& pair, const std::string& figure_id);

}  // namespace anng
