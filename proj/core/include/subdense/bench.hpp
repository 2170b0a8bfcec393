#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subdense/rational.hpp"

namespace subdense {

// One solver run on one generated instance.
struct TrialReport {
    std::string problem;
    std::string instance_id;
    std::string solver;
    std::uint64_t seed = 0;
    int solution_size = 0;
    std::optional<int> oracle_optimum;
    std::optional<double> empirical_ratio;
    std::optional<double> certified_bound;
    std::uint64_t nodes_or_states = 0;
    std::int64_t wall_ms = 0;
    bool valid = false;
    bool bound_violation = false;  // ratio above certified bound (logged, never dropped)

    std::string to_json_line() const;
};

struct BenchCell {
    std::string problem;  // vc | cvc | sc | st
    int n = 0;
    Rational psi = Rational(2);
    Rational rho = Rational(1, 2);      // vc/cvc planted fraction
    Rational epsilon = Rational(1, 10); // vc/cvc sampling slack
    Rational a = Rational(1);           // vc/cvc success exponent
    Rational delta = Rational(1, 2);    // st slack
    int m = 0;                          // sc set count
    int terminals = 0;                  // st |S|
    int instances = 1;
    int seeds = 1;
    bool oracle = true;
};

struct BenchMatrix {
    std::vector<BenchCell> cells;
};

// Parses a JSON array of cell objects; errors carry the cell index.
BenchMatrix parse_bench_matrix(const std::string& json_text);
BenchMatrix read_bench_matrix_file(const std::string& path);

struct CellSummary {
    int cell_index = 0;
    std::string problem;
    int trials = 0;
    int with_oracle = 0;
    double mean_ratio = 0;
    double max_ratio = 0;
    int bound_violations = 0;
    int invalid = 0;
    double mean_wall_ms = 0;
    double mean_nodes = 0;

    std::string to_json() const;
};

struct BenchOutcome {
    std::vector<TrialReport> reports;  // canonical (cell, instance, seed) order
    std::vector<CellSummary> summaries;
    bool any_invalid = false;
};

// Executes every (instance, seed) trial of the matrix. Trials are
// independent; `jobs` sizes the worker pool. Deterministic per master seed
// up to wall-clock fields.
BenchOutcome run_bench(const BenchMatrix& matrix, std::uint64_t master_seed, int jobs = 1);

}  // namespace subdense
