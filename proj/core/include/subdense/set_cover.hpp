#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "subdense/rational.hpp"

namespace subdense {

struct SetCoverInstance {
    int ground_size = 0;
    std::vector<std::vector<int>> sets;  // sorted, deduplicated element lists
    std::vector<int> occurrence;         // per element: number of containing sets
    bool feasible = false;               // union of sets == ground set

    static SetCoverInstance make(int ground_size, std::vector<std::vector<int>> sets);

    int set_count() const { return static_cast<int>(sets.size()); }
};

struct SetCoverSolution {
    std::vector<int> chosen;  // sorted subset indices
    int size = 0;
};

// Validates that the chosen sets cover the ground set.
SetCoverSolution make_sc_solution(const SetCoverInstance& inst, std::vector<int> chosen);

// Tightest psi for which the instance is psi-dense: m / min occurrence.
Rational density_psi_sc(const SetCoverInstance& inst);

// Per-iteration diagnostics, filled when a trace is supplied.
struct GreedyTrace {
    std::vector<int> newly_covered;   // elements gained by each pick
    std::vector<int> uncovered_before;
};

// Largest-new-coverage greedy; ties broken by smallest set index.
SetCoverSolution greedy_sc(const SetCoverInstance& inst, GreedyTrace* trace = nullptr);

struct ExactScResult {
    SetCoverSolution solution;
    bool proven_optimal = false;       // false => node budget was exhausted
    std::uint64_t families_checked = 0;
};

// Exhaustive search over families in increasing size order, depth-bounded by
// the greedy solution size. Returns the greedy solution (proven_optimal =
// false) when the family count exceeds the node budget; never mislabels it.
ExactScResult exact_bounded_sc(const SetCoverInstance& inst,
                               std::uint64_t node_budget = 50'000'000);

// Text format: first line `<n> <m>`, then m lines `<k> <e1> ... <ek>`,
// 0-based element ids.
SetCoverInstance read_setcover(std::istream& in);
SetCoverInstance read_setcover_file(const std::string& path);
void write_setcover(std::ostream& out, const SetCoverInstance& inst);
void write_setcover_file(const std::string& path, const SetCoverInstance& inst);

}  // namespace subdense
