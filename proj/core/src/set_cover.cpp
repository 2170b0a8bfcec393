#include "subdense/set_cover.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "subdense/errors.hpp"

namespace subdense {

SetCoverInstance SetCoverInstance::make(int ground_size, std::vector<std::vector<int>> sets) {
    if (ground_size < 0) throw InputError("negative ground set size");
    SetCoverInstance inst;
    inst.ground_size = ground_size;
    inst.sets = std::move(sets);
    inst.occurrence.assign(ground_size, 0);
    for (auto& s : inst.sets) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        for (int e : s) {
            if (e < 0 || e >= ground_size)
                throw InputError("set cover element " + std::to_string(e) + " out of range");
            ++inst.occurrence[e];
        }
    }
    inst.feasible = std::all_of(inst.occurrence.begin(), inst.occurrence.end(),
                                [](int c) { return c > 0; });
    return inst;
}

SetCoverSolution make_sc_solution(const SetCoverInstance& inst, std::vector<int> chosen) {
    std::sort(chosen.begin(), chosen.end());
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
    std::vector<char> covered(inst.ground_size, 0);
    for (int i : chosen) {
        if (i < 0 || i >= inst.set_count())
            throw InputError("chosen set index " + std::to_string(i) + " out of range");
        for (int e : inst.sets[i]) covered[e] = 1;
    }
    for (int e = 0; e < inst.ground_size; ++e)
        if (!covered[e])
            throw InputError("chosen family leaves element " + std::to_string(e) + " uncovered");
    SetCoverSolution sol;
    sol.size = static_cast<int>(chosen.size());
    sol.chosen = std::move(chosen);
    return sol;
}

Rational density_psi_sc(const SetCoverInstance& inst) {
    if (!inst.feasible) throw InputError("infeasible set cover instance");
    if (inst.ground_size == 0) return Rational(1);
    int min_occ = *std::min_element(inst.occurrence.begin(), inst.occurrence.end());
    return Rational(inst.set_count(), min_occ);
}

SetCoverSolution greedy_sc(const SetCoverInstance& inst, GreedyTrace* trace) {
    if (!inst.feasible) throw InputError("infeasible set cover instance");
    std::vector<char> covered(inst.ground_size, 0);
    int uncovered = inst.ground_size;
    std::vector<int> chosen;
    while (uncovered > 0) {
        int best = -1;
        int best_gain = 0;
        for (int i = 0; i < inst.set_count(); ++i) {
            int gain = 0;
            for (int e : inst.sets[i])
                if (!covered[e]) ++gain;
            if (gain > best_gain) {
                best_gain = gain;
                best = i;
            }
        }
        if (best < 0) throw InputError("infeasible set cover instance");
        if (trace) {
            trace->newly_covered.push_back(best_gain);
            trace->uncovered_before.push_back(uncovered);
        }
        chosen.push_back(best);
        for (int e : inst.sets[best])
            if (!covered[e]) {
                covered[e] = 1;
                --uncovered;
            }
    }
    return make_sc_solution(inst, std::move(chosen));
}

namespace {

// Lexicographic enumeration of k-subsets of [0, m); the first covering family
// found at the smallest feasible k is the lexicographically smallest optimum.
class FamilyScan {
public:
    FamilyScan(const SetCoverInstance& inst, std::uint64_t budget)
        : inst_(inst), budget_(budget), blocks_((inst.ground_size + 63) / 64) {
        masks_.resize(inst.set_count(), std::vector<std::uint64_t>(blocks_, 0));
        full_.assign(blocks_, 0);
        for (int e = 0; e < inst.ground_size; ++e) full_[e / 64] |= 1ULL << (e % 64);
        for (int i = 0; i < inst.set_count(); ++i)
            for (int e : inst.sets[i]) masks_[i][e / 64] |= 1ULL << (e % 64);
    }

    bool over_budget() const { return checked_ > budget_; }
    std::uint64_t checked() const { return checked_; }

    bool find(int k, std::vector<int>& out) {
        std::vector<std::uint64_t> acc(blocks_, 0);
        out.clear();
        return descend(k, 0, acc, out);
    }

private:
    bool covers_all(const std::vector<std::uint64_t>& acc) const {
        for (int b = 0; b < blocks_; ++b)
            if (acc[b] != full_[b]) return false;
        return true;
    }

    bool descend(int remaining, int from, std::vector<std::uint64_t>& acc,
                 std::vector<int>& picked) {
        if (remaining == 0) {
            ++checked_;
            return covers_all(acc);
        }
        if (checked_ > budget_) return false;
        for (int i = from; i + remaining <= inst_.set_count(); ++i) {
            auto saved = acc;
            for (int b = 0; b < blocks_; ++b) acc[b] |= masks_[i][b];
            picked.push_back(i);
            if (descend(remaining - 1, i + 1, acc, picked)) return true;
            picked.pop_back();
            acc = saved;
            if (checked_ > budget_) return false;
        }
        return false;
    }

    const SetCoverInstance& inst_;
    std::uint64_t budget_;
    std::uint64_t checked_ = 0;
    int blocks_;
    std::vector<std::vector<std::uint64_t>> masks_;
    std::vector<std::uint64_t> full_;
};

}  // namespace

namespace {

// Saturating sum_{k<=depth} C(m,k).
std::uint64_t family_count_bound(int m, int depth) {
    const std::uint64_t cap = UINT64_MAX / 2;
    std::uint64_t total = 0;
    std::uint64_t binom = 1;  // C(m, 0)
    for (int k = 0; k <= depth; ++k) {
        total += binom;
        if (total >= cap) return cap;
        if (binom > cap / (m > k ? static_cast<std::uint64_t>(m - k) : 1)) return cap;
        binom = binom * static_cast<std::uint64_t>(m - k) / static_cast<std::uint64_t>(k + 1);
    }
    return total;
}

}  // namespace

ExactScResult exact_bounded_sc(const SetCoverInstance& inst, std::uint64_t node_budget) {
    SetCoverSolution greedy = greedy_sc(inst);
    ExactScResult result;
    result.solution = greedy;

    // The greedy size bounds the optimum, so it also bounds the search depth.
    if (family_count_bound(inst.set_count(), greedy.size) > node_budget) {
        result.proven_optimal = false;
        return result;
    }
    FamilyScan scan(inst, node_budget);
    for (int k = 0; k <= greedy.size; ++k) {
        std::vector<int> picked;
        if (scan.find(k, picked)) {
            result.solution = make_sc_solution(inst, picked);
            result.proven_optimal = true;
            result.families_checked = scan.checked();
            return result;
        }
        if (scan.over_budget()) {
            result.proven_optimal = false;
            result.families_checked = scan.checked();
            return result;
        }
    }
    // The greedy family itself is hit at k = greedy.size at the latest, so
    // reaching this point means every smaller size was refuted.
    result.proven_optimal = true;
    result.families_checked = scan.checked();
    return result;
}

SetCoverInstance read_setcover(std::istream& in) {
    int n, m;
    if (!(in >> n >> m)) throw InputError("set cover file: missing `<n> <m>` header");
    if (n < 0 || m < 0) throw InputError("set cover file: negative size");
    std::vector<std::vector<int>> sets(m);
    for (int i = 0; i < m; ++i) {
        int k;
        if (!(in >> k) || k < 0)
            throw InputError("set cover file: bad cardinality for set " + std::to_string(i));
        sets[i].resize(k);
        for (int j = 0; j < k; ++j)
            if (!(in >> sets[i][j]))
                throw InputError("set cover file: truncated set " + std::to_string(i));
    }
    return SetCoverInstance::make(n, std::move(sets));
}

SetCoverInstance read_setcover_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return read_setcover(in);
}

void write_setcover(std::ostream& out, const SetCoverInstance& inst) {
    out << inst.ground_size << " " << inst.set_count() << "\n";
    for (const auto& s : inst.sets) {
        out << s.size();
        for (int e : s) out << " " << e;
        out << "\n";
    }
}

void write_setcover_file(const std::string& path, const SetCoverInstance& inst) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open " + path + " for writing");
    write_setcover(out, inst);
}

}  // namespace subdense
