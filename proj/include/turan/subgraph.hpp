#pragma once

#include "turan/canonical.hpp"
#include "turan/constructions.hpp"
#include "turan/errors.hpp"
#include "turan/graph.hpp"
#include "turan/numbers.hpp"
#include "turan/parallel.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace turan {

namespace detail {

/// Static data for embedding a pattern h into hosts: a vertex order
/// (descending degree, ties preferring vertices with more neighbours
/// among those already ordered) and, per position, the earlier
/// positions it must attach to.
struct PatternPlan {
    std::vector<int> order;                 ///< order[position] = pattern vertex
    std::vector<std::vector<int>> anchors;  ///< earlier positions adjacent in h
    std::vector<int> degree;                ///< pattern degree per position

    explicit PatternPlan(const Graph& h) {
        const int k = h.order();
        std::vector<char> placed(static_cast<std::size_t>(k), 0);
        for (int step = 0; step < k; ++step) {
            int best = -1, best_deg = -1, best_links = -1;
            for (int v = 0; v < k; ++v) {
                if (placed[static_cast<std::size_t>(v)]) continue;
                int links = 0;
                for (int u : order)
                    if (h.adjacent(u, v)) ++links;
                if (h.degree(v) > best_deg || (h.degree(v) == best_deg && links > best_links)) {
                    best = v;
                    best_deg = h.degree(v);
                    best_links = links;
                }
            }
            placed[static_cast<std::size_t>(best)] = 1;
            order.push_back(best);
        }
        anchors.resize(static_cast<std::size_t>(k));
        degree.resize(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            degree[static_cast<std::size_t>(i)] = h.degree(order[static_cast<std::size_t>(i)]);
            for (int j = 0; j < i; ++j)
                if (h.adjacent(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]))
                    anchors[static_cast<std::size_t>(i)].push_back(j);
        }
    }
};

/// Backtracking embedder. Candidates for each position are the common
/// neighbourhood (as a bitset intersection) of the images of its anchor
/// positions, minus vertices already used.
class Embedder {
public:
    Embedder(const PatternPlan& plan, const Graph& g)
        : plan_(plan),
          g_(g),
          used_(static_cast<std::size_t>(g.order())),
          image_(plan.order.size(), -1) {}

    /// Count completions from `pos` onward; host vertex images for
    /// positions < pos must already be recorded via place(). With
    /// stop_at_first, returns at most 1.
    long long run(std::size_t pos, bool stop_at_first) {
        const std::size_t k = plan_.order.size();
        if (pos == k) return 1;
        long long total = 0;
        Bitset candidates = candidates_for(pos);
        for (std::size_t v = candidates.find_first(); v != Bitset::npos; v = candidates.find_next(v)) {
            if (g_.degree(static_cast<int>(v)) < plan_.degree[pos]) continue;
            place(pos, static_cast<int>(v));
            total += run(pos + 1, stop_at_first);
            unplace(pos);
            if (stop_at_first && total > 0) return total;
        }
        return total;
    }

    Bitset candidates_for(std::size_t pos) const {
        const auto& anchors = plan_.anchors[pos];
        Bitset candidates;
        if (anchors.empty()) {
            candidates = used_;
            candidates.flip();
        } else {
            candidates = g_.neighbours(image_[static_cast<std::size_t>(anchors[0])]);
            for (std::size_t i = 1; i < anchors.size(); ++i)
                candidates &= g_.neighbours(image_[static_cast<std::size_t>(anchors[i])]);
            candidates -= used_;
        }
        return candidates;
    }

    void place(std::size_t pos, int host_vertex) {
        image_[pos] = host_vertex;
        used_.set(static_cast<std::size_t>(host_vertex));
    }

    void unplace(std::size_t pos) {
        used_.reset(static_cast<std::size_t>(image_[pos]));
        image_[pos] = -1;
    }

private:
    const PatternPlan& plan_;
    const Graph& g_;
    Bitset used_;
    std::vector<int> image_;
};

}  // namespace detail

/// Does g contain a (not necessarily induced) copy of f?
inline bool contains(const Graph& g, const Graph& f) {
    if (f.order() == 0) return true;
    if (f.order() > g.order() || f.edge_count() > g.edge_count()) return false;
    detail::PatternPlan plan(f);
    detail::Embedder embedder(plan, g);
    return embedder.run(0, /*stop_at_first=*/true) > 0;
}

namespace detail {

/// Like Embedder::run with stop_at_first, but position `pin_pos` is
/// forced to the host vertex `pin`.
inline bool pinned_search_rec(const PatternPlan& plan, const Graph& g, Embedder& embedder, std::size_t pos,
                              std::size_t pin_pos, int pin) {
    const std::size_t k = plan.order.size();
    if (pos == k) return true;
    Bitset candidates = embedder.candidates_for(pos);
    if (pos == pin_pos) {
        if (!candidates.test(static_cast<std::size_t>(pin))) return false;
        candidates.reset();
        candidates.set(static_cast<std::size_t>(pin));
    }
    for (std::size_t v = candidates.find_first(); v != Bitset::npos; v = candidates.find_next(v)) {
        if (g.degree(static_cast<int>(v)) < plan.degree[pos]) continue;
        embedder.place(pos, static_cast<int>(v));
        if (pinned_search_rec(plan, g, embedder, pos + 1, pin_pos, pin)) return true;
        embedder.unplace(pos);
    }
    return false;
}

inline bool pinned_search(const PatternPlan& plan, const Graph& g, std::size_t pin_pos, int pin) {
    Embedder embedder(plan, g);
    return pinned_search_rec(plan, g, embedder, 0, pin_pos, pin);
}

}  // namespace detail

/// Does g contain a copy of f whose image includes `through`? In an
/// incremental setting where g minus that vertex is known f-free, this
/// decides whether g is f-free at the cost of anchored searches only.
/// Tries `through` at every pattern position whose degree it can carry.
inline bool contains_through(const Graph& g, const Graph& f, int through) {
    if (through < 0 || through >= g.order()) throw std::out_of_range("contains_through: vertex out of range");
    if (f.order() == 0) return false;  // the empty pattern passes through nothing
    if (f.order() > g.order()) return false;
    detail::PatternPlan plan(f);
    for (std::size_t pos = 0; pos < plan.order.size(); ++pos) {
        if (g.degree(through) < plan.degree[pos]) continue;
        if (detail::pinned_search(plan, g, pos, through)) return true;
    }
    return false;
}

/// Number of labelled embeddings of h into g: injective maps V(h) -> V(g)
/// preserving every edge of h. The top-level branch is split across
/// threads; the sum is independent of the schedule.
inline CopyCount count_embeddings(const Graph& h, const Graph& g, int threads = 1) {
    if (h.order() == 0) return 1;
    if (h.order() > g.order()) return 0;
    detail::PatternPlan plan(h);
    detail::Embedder probe(plan, g);
    Bitset first = probe.candidates_for(0);
    std::vector<int> roots;
    for (std::size_t v = first.find_first(); v != Bitset::npos; v = first.find_next(v))
        if (g.degree(static_cast<int>(v)) >= plan.degree[0]) roots.push_back(static_cast<int>(v));
    std::vector<long long> partial(roots.size(), 0);
    parallel_for(roots.size(), threads, [&](std::size_t i) {
        detail::Embedder embedder(plan, g);
        embedder.place(0, roots[i]);
        partial[i] = embedder.run(1, /*stop_at_first=*/false);
    });
    CopyCount total = 0;
    for (long long p : partial) total += p;
    return total;
}

/// Number of copies of h in g: embeddings divided by |Aut(h)|.
inline CopyCount count_copies(const Graph& h, const Graph& g, int threads = 1) {
    const CopyCount embeddings = count_embeddings(h, g, threads);
    const CopyCount aut = automorphism_count(h);
    if (embeddings % aut != 0)
        throw internal_invariant_error("count_copies: embedding count " + embeddings.str() +
                                       " is not divisible by the automorphism count " + aut.str());
    return embeddings / aut;
}

/// Is g free of K_{s,t}? Validates s, t >= 1.
inline bool is_kst_free(const Graph& g, int s, int t) {
    if (s < 1 || t < 1) throw std::invalid_argument("is_kst_free: both sides must be positive");
    return !contains(g, complete_multipartite({s, t}));
}

/// Closed-form copy count of a complete multipartite pattern
/// K_{b_1,...,b_k} in a realized descriptor K_c + K_{m_1,...,m_r}.
///
/// A copy assigns host vertices to pattern classes so that vertices in
/// different classes are adjacent. Apex vertices are adjacent to
/// everything, so they are unconstrained; two vertices of one host part
/// are non-adjacent, so each part's chosen vertices must sit inside a
/// single class. Ordered assignments are summed over apex usage per
/// class and a part-by-part distribution of the residual class sizes,
/// then divided by the permutations of equal-sized classes.
inline CopyCount count_multipartite_in_construction(const std::vector<int>& pattern_parts,
                                                    const ConstructionDescriptor& host) {
    for (int b : pattern_parts)
        if (b < 1) throw std::invalid_argument("count_multipartite_in_construction: pattern part sizes must be positive");
    if (host.apex_clique < 0) throw std::invalid_argument("count_multipartite_in_construction: negative apex clique");
    std::vector<int> parts;
    for (int m : host.part_sizes) {
        if (m < 0) throw std::invalid_argument("count_multipartite_in_construction: negative part size");
        if (m > 0) parts.push_back(m);
    }
    const std::size_t k = pattern_parts.size();
    if (k == 0) return 1;

    // ways(j, residual): distribute residual[i] vertices per class over
    // parts j.. with every part dedicated to at most one class.
    std::vector<std::map<std::vector<int>, CopyCount>> memo(parts.size() + 1);
    auto distribute = [&](auto&& self, std::size_t j, std::vector<int>& residual) -> CopyCount {
        if (j == parts.size()) {
            for (int c : residual)
                if (c != 0) return 0;
            return 1;
        }
        auto hit = memo[j].find(residual);
        if (hit != memo[j].end()) return hit->second;
        CopyCount total = self(self, j + 1, residual);  // part j unused
        for (std::size_t i = 0; i < k; ++i) {
            const int have = residual[static_cast<std::size_t>(i)];
            for (int take = 1; take <= std::min(parts[j], have); ++take) {
                residual[i] -= take;
                total += binomial(parts[j], take) * self(self, j + 1, residual);
                residual[i] += take;
            }
        }
        memo[j].emplace(residual, total);
        return total;
    };

    CopyCount ordered = 0;
    std::vector<int> residual(pattern_parts.begin(), pattern_parts.end());
    auto apex_rec = [&](auto&& self, std::size_t i, int apexes_left, const CopyCount& apex_ways) -> void {
        if (i == k) {
            ordered += apex_ways * distribute(distribute, 0, residual);
            return;
        }
        const int b = pattern_parts[i];
        for (int a = 0; a <= std::min(b, apexes_left); ++a) {
            residual[i] = b - a;
            self(self, i + 1, apexes_left - a, apex_ways * binomial(apexes_left, a));
        }
        residual[i] = b;
    };
    apex_rec(apex_rec, 0, host.apex_clique, 1);

    // equal-sized classes are interchangeable
    std::map<int, int> size_multiplicity;
    for (int b : pattern_parts) ++size_multiplicity[b];
    CopyCount divisor = 1;
    for (const auto& [size, mult] : size_multiplicity) divisor *= factorial(mult);
    if (ordered % divisor != 0)
        throw internal_invariant_error("count_multipartite_in_construction: ordered count " + ordered.str() +
                                       " not divisible by " + divisor.str());
    return ordered / divisor;
}

}  // namespace turan
