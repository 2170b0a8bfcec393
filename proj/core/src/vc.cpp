#include "subdense/vc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "subdense/errors.hpp"
#include "subdense/prng.hpp"

namespace subdense {

VertexCoverSolution make_vc_solution(const Graph& g, std::vector<int> cover,
                                     std::optional<Rational> bound,
                                     std::optional<std::uint64_t> seed) {
    std::sort(cover.begin(), cover.end());
    cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : cover) {
        if (v < 0 || v >= g.vertex_count())
            throw InputError("cover vertex " + std::to_string(v) + " out of range");
        in[v] = 1;
    }
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (in[u]) continue;
        for (int v : g.neighbors(u))
            if (!in[v])
                throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                 ") is uncovered");
    }
    VertexCoverSolution sol;
    sol.size = static_cast<int>(cover.size());
    sol.cover = std::move(cover);
    sol.certified_ratio_bound = bound;
    sol.seed = seed;
    return sol;
}

VertexCoverSolution mm_two_approx(const Graph& g) {
    std::vector<char> matched(g.vertex_count(), 0);
    std::vector<int> cover;
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (matched[u]) continue;
        for (int v : g.neighbors(u)) {
            if (matched[v]) continue;
            matched[u] = matched[v] = 1;
            cover.push_back(u);
            cover.push_back(v);
            break;
        }
    }
    return make_vc_solution(g, std::move(cover), Rational(2));
}

double threshold_r(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) throw InputError("threshold_r: empty graph");
    double avg = 2.0 * g.edge_count() / n;
    return n * (1.0 - std::sqrt(1.0 - avg / n));
}

bool meets_degree_threshold(int n, long long edge_count, int degree) {
    // d >= n(1 - sqrt(1 - avg/n))  <=>  (n - d)^2 <= n^2 - 2m   (for d <= n)
    long long gap = n - degree;
    return gap * gap <= static_cast<long long>(n) * n - 2 * edge_count;
}

std::vector<int> high_degree_set(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (meets_degree_threshold(g.vertex_count(), g.edge_count(), g.degree(v)))
            out.push_back(v);
    return out;
}

namespace {

long long integer_sqrt(long long x) {
    if (x < 0) throw std::logic_error("integer_sqrt of negative");
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

}  // namespace

Rational gamma_bound(const DensityProfile& profile) {
    long long n = profile.n;
    long long max_deg = profile.max_degree;
    if (n <= 0 || profile.avg_degree == Rational(0))
        throw InputError("gamma_bound: graph needs at least one edge");
    // avg_degree = 2m/n, stored exact
    long long two_m = (profile.avg_degree * Rational(n)).num;  // integer by construction
    long long m = two_m / 2;
    if (m <= max_deg * (n - max_deg)) return profile.avg_degree / Rational(2 * max_deg);
    // (n + max_deg - sqrt((n + max_deg)^2 - 8m)) / 2n; non-square discriminants
    // round the sqrt up, keeping the returned fraction a valid lower bound
    long long disc = (n + max_deg) * (n + max_deg) - 8 * m;
    long long root = integer_sqrt(disc);
    if (root * root != disc) ++root;
    return Rational(n + max_deg - root, 2 * n);
}

VertexCoverSolution build_cover_from_subset(const Graph& g, const std::vector<int>& w) {
    for (int v : w)
        if (v < 0 || v >= g.vertex_count())
            throw InputError("build_cover_from_subset: vertex out of range");
    InducedSubgraph rest = remove_vertices(g, w);
    VertexCoverSolution inner = mm_two_approx(rest.graph);
    std::vector<int> candidate = w;
    for (int v : inner.cover) candidate.push_back(rest.kept[v]);
    std::sort(candidate.begin(), candidate.end());
    candidate.erase(std::unique(candidate.begin(), candidate.end()), candidate.end());

    VertexCoverSolution plain = mm_two_approx(g);
    if (candidate.size() < plain.cover.size() ||
        (candidate.size() == plain.cover.size() &&
         std::lexicographical_compare(candidate.begin(), candidate.end(), plain.cover.begin(),
                                      plain.cover.end())))
        return make_vc_solution(g, std::move(candidate), Rational(2));
    return plain;
}

std::optional<IIParams> ii_params(int n, int max_degree, Rational a, Rational epsilon) {
    if (max_degree < 1 || max_degree > n - 1)
        throw InputError("ii_params: max degree out of [1, n-1]");
    if (!(a > Rational(0))) throw InputError("ii_params: a must be positive");
    if (!(epsilon > Rational(0)) || !(epsilon < Rational(1)))
        throw InputError("ii_params: epsilon must lie in (0,1)");
    if (n < 16) return std::nullopt;  // iterated logs degenerate; solve exactly instead

    double lln = std::log(std::log(static_cast<double>(n)));
    double llll = std::log(std::log(std::log(std::log(static_cast<double>(n)))));
    double x = lln - llll;
    long long s = std::max<long long>(1, std::llround(x * x));

    double budget = a.to_double() * std::exp(std::sqrt(static_cast<double>(s)));
    double needed =
        (4.0 * n / max_degree) * std::log(1.0 / epsilon.to_double());
    long long t = std::min<long long>(static_cast<long long>(std::ceil(budget)),
                                      static_cast<long long>(std::ceil(needed)));
    t = std::max<long long>(1, t);

    IIParams p;
    p.sample_size = static_cast<int>(s);
    p.depth = static_cast<int>(t);
    p.success_exponent = a;
    p.target_slack = epsilon;
    return p;
}

namespace {

using Block = std::uint64_t;

// Bitmask view over a fixed host graph; the recursion never materializes
// subgraphs, it only shrinks the active set.
struct HostGraph {
    int n = 0;
    int blocks = 0;
    std::vector<Block> adj;  // n rows of `blocks` words

    explicit HostGraph(const Graph& g) : n(g.vertex_count()), blocks((n + 63) / 64) {
        adj.assign(static_cast<std::size_t>(n) * blocks, 0);
        for (int v = 0; v < n; ++v)
            for (int u : g.neighbors(v)) adj[static_cast<std::size_t>(v) * blocks + u / 64] |= Block{1} << (u % 64);
    }

    const Block* row(int v) const { return &adj[static_cast<std::size_t>(v) * blocks]; }
};

int popcount_and(const Block* a, const Block* b, int blocks) {
    int c = 0;
    for (int i = 0; i < blocks; ++i) c += __builtin_popcountll(a[i] & b[i]);
    return c;
}

template <typename Fn>
void for_each_bit(const std::vector<Block>& mask, Fn&& fn) {
    for (std::size_t i = 0; i < mask.size(); ++i) {
        Block w = mask[i];
        while (w) {
            fn(static_cast<int>(i * 64 + __builtin_ctzll(w)));
            w &= w - 1;
        }
    }
}

struct PathResult {
    std::vector<int> cover;    // sorted
    std::vector<int> removed;  // sorted union of removed sets on this path
};

bool better_cover(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

class Sampler {
public:
    Sampler(const HostGraph& host, const IIParams& params)
        : host_(host), params_(params) {}

    std::uint64_t nodes() const { return nodes_; }

    PathResult recurse(std::vector<Block> active, int depth, std::uint64_t node_seed) {
        ++nodes_;
        // degrees and edge count of the active subgraph
        std::vector<int> vertices;
        for_each_bit(active, [&](int v) { vertices.push_back(v); });
        long long degree_sum = 0;
        std::vector<int> degree(vertices.size());
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            degree[i] = popcount_and(host_.row(vertices[i]), active.data(), host_.blocks);
            degree_sum += degree[i];
        }
        long long m = degree_sum / 2;
        if (m == 0) return {};

        if (depth >= params_.depth) return {matching_cover(active), {}};

        int nv = static_cast<int>(vertices.size());
        std::vector<int> high;
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (meets_degree_threshold(nv, m, degree[i])) high.push_back(vertices[i]);
        if (high.empty()) return {matching_cover(active), {}};

        Rng rng(node_seed);
        std::vector<std::vector<int>> candidates;
        candidates.push_back(high);
        for (int draw = 0; draw < params_.sample_size; ++draw) {
            int v = high[rng.below(high.size())];
            std::vector<int> nbrs;
            std::vector<Block> nbr_mask(host_.blocks);
            for (int b = 0; b < host_.blocks; ++b) nbr_mask[b] = host_.row(v)[b] & active[b];
            for_each_bit(nbr_mask, [&](int u) { nbrs.push_back(u); });
            candidates.push_back(std::move(nbrs));
        }
        // duplicate removal sets would explore identical subtrees
        std::sort(candidates.begin() + 1, candidates.end());
        candidates.erase(std::unique(candidates.begin() + 1, candidates.end()),
                         candidates.end());
        if (candidates.size() > 1 && candidates[1] == candidates[0])
            candidates.erase(candidates.begin() + 1);

        PathResult best;
        bool have = false;
        for (std::size_t j = 0; j < candidates.size(); ++j) {
            const auto& removal = candidates[j];
            std::vector<Block> child = active;
            for (int v : removal) child[v / 64] &= ~(Block{1} << (v % 64));
            PathResult sub = recurse(std::move(child), depth + 1,
                                     derive_seed(node_seed, j + 1));
            std::vector<int> cover = merged(removal, sub.cover);
            if (!have || better_cover(cover, best.cover)) {
                have = true;
                best.cover = std::move(cover);
                best.removed = merged(removal, sub.removed);
            }
        }
        return best;
    }

    std::vector<int> matching_cover(const std::vector<Block>& active) const {
        std::vector<Block> unmatched = active;
        std::vector<int> cover;
        for_each_bit(active, [&](int u) {
            if (!(unmatched[u / 64] & (Block{1} << (u % 64)))) return;
            for (int b = 0; b < host_.blocks; ++b) {
                Block cand = host_.row(u)[b] & unmatched[b];
                if (u / 64 == b) cand &= ~(Block{1} << (u % 64));
                if (cand) {
                    int v = b * 64 + __builtin_ctzll(cand);
                    unmatched[u / 64] &= ~(Block{1} << (u % 64));
                    unmatched[v / 64] &= ~(Block{1} << (v % 64));
                    cover.push_back(u);
                    cover.push_back(v);
                    return;
                }
            }
        });
        std::sort(cover.begin(), cover.end());
        return cover;
    }

private:
    static std::vector<int> merged(const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> out;
        out.reserve(a.size() + b.size());
        std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    const HostGraph& host_;
    const IIParams& params_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

IIResult ii_run(const Graph& g, const IIParams& params, std::uint64_t seed) {
    if (params.sample_size < 1 || params.depth < 1)
        throw InputError("ii_run: params must have s >= 1 and t >= 1");

    HostGraph host(g);
    std::vector<Block> all(host.blocks, 0);
    for (int v = 0; v < host.n; ++v) all[v / 64] |= Block{1} << (v % 64);

    Sampler sampler(host, params);
    PathResult path = sampler.recurse(std::move(all), 1, splitmix64(seed));

    // the plain 2-approximation is always a candidate at the top level
    VertexCoverSolution plain = mm_two_approx(g);
    if (better_cover(plain.cover, path.cover)) {
        path.cover = plain.cover;
        path.removed.clear();
    }

    long double bound = std::pow(static_cast<long double>(params.sample_size + 1),
                                 static_cast<long double>(params.depth));
    if (static_cast<long double>(sampler.nodes()) > bound)
        throw std::logic_error("ii_run: explored node count exceeds (s+1)^t");

    DensityProfile prof = density_profile(g);
    std::optional<Rational> certified = Rational(2);
    if (g.edge_count() > 0 && 2 * prof.max_degree <= prof.n) {
        Rational gamma = gamma_bound(prof);
        certified = Rational(2) / (Rational(1) + gamma);
    }

    IIResult result;
    result.cover = make_vc_solution(g, path.cover, certified, seed);
    result.removed_union = std::move(path.removed);
    result.nodes_explored = sampler.nodes();
    return result;
}

VertexCoverSolution ii_modified(const Graph& g, const IIParams& params, std::uint64_t seed) {
    return ii_run(g, params, seed).cover;
}

std::vector<int> ii_extract_w(const Graph& g, const IIParams& params, std::uint64_t seed) {
    return ii_run(g, params, seed).removed_union;
}

}  // namespace subdense
