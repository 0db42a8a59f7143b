#pragma once

#include "turan/canonical.hpp"
#include "turan/constructions.hpp"
#include "turan/errors.hpp"
#include "turan/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace turan {

/// Chromatic computations are meant for forbidden graphs and patterns,
/// which stay small; refuse anything larger than this.
constexpr int kMaxColoringOrder = 30;

/// A proper coloring stored as its colour classes. Classes are listed
/// in order of their smallest member and each class is ascending, so a
/// partition has exactly one representation.
struct ProperColoring {
    std::vector<std::vector<int>> classes;

    bool operator==(const ProperColoring& other) const { return classes == other.classes; }
};

/// True when `classes` partitions V(g) into independent sets.
inline bool is_proper_partition(const Graph& g, const std::vector<std::vector<int>>& classes) {
    const int n = g.order();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int covered = 0;
    for (const auto& cls : classes) {
        for (std::size_t i = 0; i < cls.size(); ++i) {
            int v = cls[i];
            if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
            seen[static_cast<std::size_t>(v)] = 1;
            ++covered;
            for (std::size_t j = i + 1; j < cls.size(); ++j)
                if (g.adjacent(v, cls[j])) return false;
        }
    }
    return covered == n;
}

namespace detail {

/// Greedy clique: a cheap lower bound for the chromatic number.
inline int greedy_clique_bound(const Graph& g) {
    const int n = g.order();
    std::vector<int> by_degree(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) by_degree[static_cast<std::size_t>(v)] = v;
    std::sort(by_degree.begin(), by_degree.end(),
              [&](int a, int b) { return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b; });
    int best = 0;
    for (int seed : by_degree) {
        std::vector<int> clique{seed};
        Bitset common = g.neighbours(seed);
        for (int v : by_degree) {
            if (v == seed || !common.test(static_cast<std::size_t>(v))) continue;
            clique.push_back(v);
            common &= g.neighbours(v);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

/// Can g be properly coloured with at most k colours? Backtracking over
/// vertices in descending-degree order, with the usual symmetry break of
/// allowing at most one previously unused colour per step.
inline bool colourable(const Graph& g, int k) {
    const int n = g.order();
    if (n == 0) return true;
    if (k <= 0) return false;
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b; });
    std::vector<Bitset> colour_mask(static_cast<std::size_t>(k), Bitset(static_cast<std::size_t>(n)));

    auto rec = [&](auto&& self, int pos, int used) -> bool {
        if (pos == n) return true;
        int v = order[static_cast<std::size_t>(pos)];
        int limit = std::min(k, used + 1);
        for (int c = 0; c < limit; ++c) {
            if ((colour_mask[static_cast<std::size_t>(c)] & g.neighbours(v)).any()) continue;
            colour_mask[static_cast<std::size_t>(c)].set(static_cast<std::size_t>(v));
            if (self(self, pos + 1, std::max(used, c + 1))) return true;
            colour_mask[static_cast<std::size_t>(c)].reset(static_cast<std::size_t>(v));
        }
        return false;
    };
    return rec(rec, 0, 0);
}

}  // namespace detail

/// Exact chromatic number. 0 for the empty graph, 1 for edgeless graphs.
inline int chromatic_number(const Graph& g) {
    const int n = g.order();
    if (n > kMaxColoringOrder)
        throw capacity_error("chromatic_number: order " + std::to_string(n) + " exceeds the supported bound " +
                             std::to_string(kMaxColoringOrder));
    if (n == 0) return 0;
    if (g.edge_count() == 0) return 1;
    int k = std::max(2, detail::greedy_clique_bound(g));
    while (!detail::colourable(g, k)) ++k;
    return k;
}

/// Visit every optimal proper coloring (exactly chi(g) classes) exactly
/// once. Symmetry among colour names is broken by opening classes in
/// vertex order: vertex 0 lands in class 0, and a vertex may start class
/// c only when classes 0..c-1 are already in use. The visitor may return
/// bool (false stops the enumeration) or void.
template <typename Visitor>
void for_each_optimal_coloring(const Graph& g, Visitor&& visit) {
    const int n = g.order();
    const int chi = chromatic_number(g);

    auto call = [&](const ProperColoring& pc) -> bool {
        if constexpr (std::is_void_v<decltype(visit(pc))>) {
            visit(pc);
            return true;
        } else {
            return static_cast<bool>(visit(pc));
        }
    };

    if (n == 0) {
        call(ProperColoring{});
        return;
    }

    std::vector<std::vector<int>> classes;
    std::vector<Bitset> masks;
    bool stop = false;

    auto rec = [&](auto&& self, int v) -> void {
        if (stop) return;
        if (v == n) {
            if (static_cast<int>(classes.size()) == chi)
                if (!call(ProperColoring{classes})) stop = true;
            return;
        }
        // Even giving every remaining vertex a fresh class cannot reach chi.
        if (static_cast<int>(classes.size()) + (n - v) < chi) return;
        for (std::size_t c = 0; c < classes.size() && !stop; ++c) {
            if ((masks[c] & g.neighbours(v)).any()) continue;
            classes[c].push_back(v);
            masks[c].set(static_cast<std::size_t>(v));
            self(self, v + 1);
            masks[c].reset(static_cast<std::size_t>(v));
            classes[c].pop_back();
        }
        if (stop || static_cast<int>(classes.size()) >= chi) return;
        classes.push_back({v});
        masks.emplace_back(static_cast<std::size_t>(n));
        masks.back().set(static_cast<std::size_t>(v));
        self(self, v + 1);
        masks.pop_back();
        classes.pop_back();
    };
    rec(rec, 0);
}

inline std::vector<ProperColoring> optimal_colorings(const Graph& g) {
    std::vector<ProperColoring> out;
    for_each_optimal_coloring(g, [&](const ProperColoring& pc) { out.push_back(pc); });
    return out;
}

/// sigma(g): the smallest colour-class size over all optimal colorings.
inline int sigma(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("sigma: graph must have at least one vertex");
    int best = g.order();
    for_each_optimal_coloring(g, [&](const ProperColoring& pc) {
        for (const auto& cls : pc.classes) best = std::min(best, static_cast<int>(cls.size()));
        return best > 1;  // 1 cannot be beaten
    });
    return best;
}

/// The family of graphs induced by the union of two colour classes
/// of an optimal coloring, collected over all optimal colorings, up to
/// isomorphism. Returned sorted by canonical form. Requires chi(g) >= 2.
inline std::vector<Graph> pair_family(const Graph& g) {
    if (chromatic_number(g) < 2)
        throw std::invalid_argument("pair_family: graph must have chromatic number at least 2");
    std::set<std::string> forms;
    for_each_optimal_coloring(g, [&](const ProperColoring& pc) {
        for (std::size_t a = 0; a < pc.classes.size(); ++a)
            for (std::size_t b = a + 1; b < pc.classes.size(); ++b) {
                std::vector<int> verts = pc.classes[a];
                verts.insert(verts.end(), pc.classes[b].begin(), pc.classes[b].end());
                std::sort(verts.begin(), verts.end());
                forms.insert(canonical_form(g.induced(verts)));
            }
    });
    std::vector<Graph> out;
    out.reserve(forms.size());
    for (const auto& f : forms) out.push_back(graph6_decode(f));
    return out;
}

/// Chromatic data of a forbidden graph needed to pick a construction.
struct ChromaticProfile {
    int chi = 0;
    int sigma = 0;
    std::vector<std::string> pair_family;  ///< canonical forms, sorted

    bool operator==(const ChromaticProfile& other) const = default;
};

/// One enumeration pass collecting chi, sigma and the pair family.
/// For chi <= 1 there are no class pairs, so the family is empty.
inline ChromaticProfile chromatic_profile(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("chromatic_profile: graph must have at least one vertex");
    ChromaticProfile profile;
    profile.chi = chromatic_number(g);
    profile.sigma = g.order();
    std::set<std::string> forms;
    for_each_optimal_coloring(g, [&](const ProperColoring& pc) {
        for (std::size_t a = 0; a < pc.classes.size(); ++a) {
            profile.sigma = std::min(profile.sigma, static_cast<int>(pc.classes[a].size()));
            for (std::size_t b = a + 1; b < pc.classes.size(); ++b) {
                std::vector<int> verts = pc.classes[a];
                verts.insert(verts.end(), pc.classes[b].begin(), pc.classes[b].end());
                std::sort(verts.begin(), verts.end());
                forms.insert(canonical_form(g.induced(verts)));
            }
        }
    });
    profile.pair_family.assign(forms.begin(), forms.end());
    return profile;
}

/// Distinct multisets of class sizes over all optimal colorings, with
/// the number of colorings realizing each. Sizes are ascending.
inline std::map<std::vector<int>, long long> coloring_size_profiles(const Graph& g) {
    std::map<std::vector<int>, long long> out;
    for_each_optimal_coloring(g, [&](const ProperColoring& pc) {
        std::vector<int> sizes;
        sizes.reserve(pc.classes.size());
        for (const auto& cls : pc.classes) sizes.push_back(static_cast<int>(cls.size()));
        std::sort(sizes.begin(), sizes.end());
        ++out[sizes];
    });
    return out;
}

/// Lower-bound construction for forbidding a graph with the given
/// profile: sigma-1 apex vertices joined to the Turan graph
/// T(n - sigma + 1, chi - 1). Requires chi >= 2.
inline ConstructionDescriptor extremal_descriptor(const ChromaticProfile& profile, int n) {
    return extremal_descriptor(profile.chi, profile.sigma, n);
}

inline Graph extremal_construction(const ChromaticProfile& profile, int n) {
    return realize(extremal_descriptor(profile, n));
}

}  // namespace turan
