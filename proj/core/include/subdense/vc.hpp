#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "subdense/graph.hpp"
#include "subdense/rational.hpp"

namespace subdense {

struct VertexCoverSolution {
    std::vector<int> cover;  // sorted
    int size = 0;
    std::optional<Rational> certified_ratio_bound;
    std::optional<std::uint64_t> seed;
};

// Validates that `cover` touches every edge of g.
VertexCoverSolution make_vc_solution(const Graph& g, std::vector<int> cover,
                                     std::optional<Rational> bound = std::nullopt,
                                     std::optional<std::uint64_t> seed = std::nullopt);

// Both endpoints of a greedy maximal matching; certified ratio 2.
VertexCoverSolution mm_two_approx(const Graph& g);

// Degree threshold r(G) = n (1 - sqrt(1 - avg_degree/n)) as a double.
// Membership d(v) >= r(G) must be decided with the exact integer predicate
// (n - d)^2 <= n^2 - 2m, exposed below; the float is for reporting only.
double threshold_r(const Graph& g);

bool meets_degree_threshold(int n, long long edge_count, int degree);

// All vertices passing the exact threshold predicate, ascending.
std::vector<int> high_degree_set(const Graph& g);

// Normalized lower bound on the optimum cover size as a function of
// (n, avg degree, max degree). Exact on the sparse branch; on the dense
// branch a non-square discriminant rounds toward the safe (smaller) side.
Rational gamma_bound(const DensityProfile& profile);

// Smaller of {w + 2-approx of g - w} and the plain 2-approximation.
VertexCoverSolution build_cover_from_subset(const Graph& g, const std::vector<int>& w);

struct IIParams {
    int sample_size = 1;                      // s
    int depth = 1;                            // t
    Rational success_exponent = Rational(1);  // a
    Rational target_slack = Rational(1, 10);  // epsilon
};

// Sample size from the iterated-log formula, depth as the smaller of the
// budget a*e^sqrt(s) and the degree-driven depth (4n/Delta) ln(1/eps).
// nullopt signals that n < 16 is too small for these parameters and the
// caller should solve exactly instead.
std::optional<IIParams> ii_params(int n, int max_degree, Rational a, Rational epsilon);

struct IIResult {
    VertexCoverSolution cover;
    std::vector<int> removed_union;  // union of removed sets on the winning path
    std::uint64_t nodes_explored = 0;
};

// Recursive sampling solver. Deterministic for a fixed seed; branch RNG
// streams derive from (seed, path), so concurrent evaluation of branches
// could not change the result.
IIResult ii_run(const Graph& g, const IIParams& params, std::uint64_t seed);

VertexCoverSolution ii_modified(const Graph& g, const IIParams& params, std::uint64_t seed);

// The removed-set union W of the winning path, the seed set for the
// connected-cover pipeline. Empty when the plain 2-approximation won.
std::vector<int> ii_extract_w(const Graph& g, const IIParams& params, std::uint64_t seed);

}  // namespace subdense
