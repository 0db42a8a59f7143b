#pragma once

#include "turan/canonical.hpp"
#include "turan/constructions.hpp"
#include "turan/errors.hpp"
#include "turan/generate.hpp"
#include "turan/graph.hpp"
#include "turan/numbers.hpp"
#include "turan/subgraph.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace turan {

/// Exhaustive search refuses orders above this unless explicitly
/// overridden: isomorphism classes grow too fast for a desk check.
constexpr int kDefaultSearchOrderCap = 10;

struct SearchOptions {
    int threads = 1;
    bool override_capacity = false;  ///< lift the order-10 refusal
    std::string checkpoint_path;
};

struct SearchResult {
    CopyCount optimum = 0;
    std::vector<std::string> witnesses;  ///< canonical forms of every optimal class, ascending
    GenerationStats stats;               ///< F-free classes per order during generation
    long long ffree_count = 0;           ///< F-free classes on exactly n vertices
    bool degenerate = false;             ///< the pattern itself contains the forbidden graph
};

/// Exact ex(n, h, f): the maximum number of copies of h over all f-free
/// graphs on n vertices, by isomorph-free exhaustive enumeration. Every
/// optimal class is retained as a witness. When h contains f (flagged
/// `degenerate`) every f-free graph scores zero and the result is the
/// full list of f-free classes.
inline SearchResult brute_force_ex(int n, const Graph& h, const Graph& f, const SearchOptions& opts = {}) {
    if (n < 0) throw std::invalid_argument("brute_force_ex: negative order");
    if (n > kDefaultSearchOrderCap && !opts.override_capacity)
        throw capacity_error("brute_force_ex: order " + std::to_string(n) + " exceeds the default bound " +
                             std::to_string(kDefaultSearchOrderCap) + "; pass the override to proceed");

    SearchResult result;
    result.degenerate = contains(h, f);
    const CopyCount aut_h = automorphism_count(h);

    bool any = false;
    EnumOptions eopts{opts.threads, opts.checkpoint_path};
    result.stats = enumerate_ffree(n, &f, eopts, [&](const Graph& g, const std::string& form) {
        const CopyCount embeddings = count_embeddings(h, g);
        if (embeddings % aut_h != 0)
            throw internal_invariant_error("brute_force_ex: embeddings " + embeddings.str() +
                                           " not divisible by |Aut| " + aut_h.str());
        const CopyCount copies = embeddings / aut_h;
        if (!any || copies > result.optimum) {
            any = true;
            result.optimum = copies;
            result.witnesses.assign(1, form);
        } else if (copies == result.optimum) {
            result.witnesses.push_back(form);
        }
    });
    result.ffree_count = result.stats.level_counts.empty() ? 0 : result.stats.level_counts.back();
    std::sort(result.witnesses.begin(), result.witnesses.end());
    return result;
}

struct HillClimbOptions {
    long long max_steps = 10000;  ///< moves attempted per restart
    int restarts = 1;
    std::uint64_t seed = 1;
};

struct HillClimbResult {
    Graph best{0};
    CopyCount best_count = 0;
    long long steps_taken = 0;  ///< across all restarts
    long long accepted = 0;
    bool feasible = true;  ///< false when no f-free graph of this order exists
};

/// Randomized local search for a good f-free graph on n vertices:
/// add / delete / rewire an edge, accept when the copy count of h does
/// not drop, never leave the f-free region. Fully determined by the
/// seed. A lower bound only - no optimality claim.
inline HillClimbResult hill_climb(int n, const Graph& h, const Graph& f, const HillClimbOptions& opts = {}) {
    if (n < 0) throw std::invalid_argument("hill_climb: negative order");
    if (opts.max_steps < 0) throw std::invalid_argument("hill_climb: negative step budget");
    if (opts.restarts < 1) throw std::invalid_argument("hill_climb: need at least one restart");

    const CopyCount aut_h = automorphism_count(h);
    auto copies = [&](const Graph& g) { return count_embeddings(h, g) / aut_h; };

    HillClimbResult result;
    Graph start = empty_graph(n);
    if (contains(start, f)) {  // an edgeless forbidden graph fits everywhere
        result.best = start;
        result.feasible = false;
        return result;
    }

    for (int restart = 0; restart < opts.restarts; ++restart) {
        std::mt19937_64 rng(opts.seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(restart));
        Graph current = start;
        CopyCount current_count = copies(current);
        if (restart == 0 || current_count > result.best_count) {
            result.best = current;
            result.best_count = current_count;
        }

        for (long long step = 0; step < opts.max_steps; ++step) {
            ++result.steps_taken;
            auto edges = current.edges();
            std::vector<std::pair<int, int>> non_edges;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (!current.adjacent(u, v)) non_edges.emplace_back(u, v);

            const int move = static_cast<int>(rng() % 3);
            Graph candidate = current;
            int touched = -1;  // vertex all new f-copies must pass through
            if (move == 0) {  // add
                if (non_edges.empty()) continue;
                const auto [u, v] = non_edges[rng() % non_edges.size()];
                candidate.add_edge(u, v);
                touched = u;
            } else if (move == 1) {  // delete
                if (edges.empty()) continue;
                const auto [u, v] = edges[rng() % edges.size()];
                candidate.remove_edge(u, v);
            } else {  // rewire: delete one edge, add another
                if (edges.empty() || non_edges.empty()) continue;
                const auto [a, b] = edges[rng() % edges.size()];
                const auto [u, v] = non_edges[rng() % non_edges.size()];
                candidate.remove_edge(a, b);
                candidate.add_edge(u, v);
                touched = u;
            }
            if (touched >= 0 && contains_through(candidate, f, touched)) continue;  // would leave the f-free region

            const CopyCount candidate_count = copies(candidate);
            if (candidate_count < current_count) continue;
            if (contains(candidate, f))
                throw internal_invariant_error("hill_climb: accepted graph contains the forbidden graph");
            current = std::move(candidate);
            current_count = candidate_count;
            ++result.accepted;
            if (current_count > result.best_count) {
                result.best = current;
                result.best_count = current_count;
            }
        }
    }
    return result;
}

struct RebalanceResult {
    ConstructionDescriptor descriptor;
    Graph graph{0};        ///< realization of `descriptor`
    int moved = 0;         ///< vertices moved from part `from` to part `to`
    bool balanced = false;  ///< no-op: the parts already differ by at most one
};

/// One rebalancing step on a descriptor: move floor((m_from - m_to)/2)
/// vertices from the larger part `from` to the smaller part `to`,
/// leaving the apex clique alone. Parts differing by at most one are
/// already balanced and the step is a flagged no-op.
inline RebalanceResult rebalance_step(const ConstructionDescriptor& d, std::size_t from, std::size_t to) {
    if (from >= d.part_sizes.size() || to >= d.part_sizes.size())
        throw std::invalid_argument("rebalance_step: part index out of range");
    if (from == to) throw std::invalid_argument("rebalance_step: parts must differ");
    const int m_from = d.part_sizes[from], m_to = d.part_sizes[to];
    if (m_from < m_to) throw std::invalid_argument("rebalance_step: source part must not be smaller");
    RebalanceResult result{d, Graph{0}, 0, false};
    if (m_from - m_to <= 1) {
        result.balanced = true;
    } else {
        result.moved = (m_from - m_to) / 2;
        result.descriptor.part_sizes[from] -= result.moved;
        result.descriptor.part_sizes[to] += result.moved;
    }
    result.graph = realize(result.descriptor);
    return result;
}

/// Graph-level overload: recognize the apex + complete multipartite
/// structure first; graphs outside that family are rejected.
inline RebalanceResult rebalance_step(const Graph& g, std::size_t from, std::size_t to) {
    const auto d = recognize_construction(g);
    if (!d) throw std::invalid_argument("rebalance_step: graph is not an apex clique joined to a complete multipartite graph");
    return rebalance_step(*d, from, to);
}

}  // namespace turan
