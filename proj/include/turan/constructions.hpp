#pragma once

#include "turan/graph.hpp"

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace turan {

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph clique(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v - 1, v);
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

/// Complete multipartite graph with the given part orders; vertices are
/// labelled part by part in the given order. All sizes must be >= 1; an
/// empty list yields the empty graph on 0 vertices.
inline Graph complete_multipartite(const std::vector<int>& sizes) {
    int n = 0;
    for (int s : sizes) {
        if (s <= 0) throw std::invalid_argument("complete_multipartite: part sizes must be positive");
        n += s;
    }
    Graph g(n);
    int part_begin = 0;
    for (int s : sizes) {
        for (int u = part_begin; u < part_begin + s; ++u)
            for (int v = part_begin + s; v < n; ++v) g.add_edge(u, v);
        part_begin += s;
    }
    return g;
}

/// Part orders of the Turán graph T(n,r): as equal as possible, the
/// first n mod r parts getting the larger size.
inline std::vector<int> turan_part_sizes(int n, int r) {
    if (r < 1) throw std::invalid_argument("turan: need at least one part");
    if (n < 0) throw std::invalid_argument("turan: negative order");
    std::vector<int> sizes(static_cast<std::size_t>(r), n / r);
    for (int i = 0; i < n % r; ++i) ++sizes[static_cast<std::size_t>(i)];
    return sizes;
}

/// The Turán graph T(n,r).
inline Graph turan_graph(int n, int r) {
    Graph g(n);
    const auto sizes = turan_part_sizes(n, r);
    int part_begin = 0;
    for (int s : sizes) {
        for (int u = part_begin; u < part_begin + s; ++u)
            for (int v = part_begin + s; v < n; ++v) g.add_edge(u, v);
        part_begin += s;
    }
    return g;
}

/// Join G + G': disjoint union plus all cross edges. G keeps its labels,
/// G' is shifted by |V(G)|.
inline Graph join(const Graph& a, const Graph& b) {
    const int na = a.order(), nb = b.order();
    Graph g(na + nb);
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(na + u, na + v);
    for (int u = 0; u < na; ++u)
        for (int v = 0; v < nb; ++v) g.add_edge(u, na + v);
    return g;
}

/// K̄_{s,t}: the complete bipartite K_{s,t} with the s-side turned into a
/// clique, i.e. K_s joined to t isolated vertices. Clique vertices come
/// first.
inline Graph kbar(int s, int t) {
    if (s < 1) throw std::invalid_argument("kbar: clique side must have at least one vertex");
    if (t < 0) throw std::invalid_argument("kbar: negative independent side");
    return join(clique(s), empty_graph(t));
}

/// Disjoint union of floor(n/t) copies of K_t plus one K_{n mod t}; the
/// extremal host for counting cliques under a forbidden star K_{1,t}.
/// Maximum degree is min(t-1, n-1), so the graph is K_{1,t}-free.
inline Graph star_free_construction(int n, int t) {
    if (t < 2) throw std::invalid_argument("star_free_construction: star size must be at least 2");
    if (n < 0) throw std::invalid_argument("star_free_construction: negative order");
    Graph g(n);
    for (int base = 0; base + t <= n; base += t)
        for (int u = base; u < base + t; ++u)
            for (int v = u + 1; v < base + t; ++v) g.add_edge(u, v);
    const int rem_begin = (n / t) * t;
    for (int u = rem_begin; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

/// Symbolic form of the hosts this library studies: a clique of
/// `apex_clique` universal vertices joined to a complete multipartite
/// graph with the given part orders. Realized with the apex vertices
/// labelled first, then the parts in order.
struct ConstructionDescriptor {
    int apex_clique = 0;
    std::vector<int> part_sizes;

    int order() const {
        return apex_clique + std::accumulate(part_sizes.begin(), part_sizes.end(), 0);
    }

    bool operator==(const ConstructionDescriptor& other) const {
        return apex_clique == other.apex_clique && part_sizes == other.part_sizes;
    }
};

inline Graph realize(const ConstructionDescriptor& d) {
    if (d.apex_clique < 0) throw std::invalid_argument("realize: negative apex clique");
    std::vector<int> nonempty;
    for (int s : d.part_sizes) {
        if (s < 0) throw std::invalid_argument("realize: negative part size");
        if (s > 0) nonempty.push_back(s);
    }
    return join(clique(d.apex_clique), complete_multipartite(nonempty));
}

/// The host K_{s-1} + T(n-s+1, r) for a forbidden graph with chromatic
/// number r+1 = chi and smallest achievable colour class sigma = s.
inline ConstructionDescriptor extremal_descriptor(int chi, int sigma, int n) {
    if (chi < 2) throw std::invalid_argument("extremal_construction: forbidden graph must have chromatic number >= 2");
    if (sigma < 1) throw std::invalid_argument("extremal_construction: sigma must be positive");
    if (n < sigma - 1) throw std::invalid_argument("extremal_construction: order too small for the apex clique");
    return ConstructionDescriptor{sigma - 1, turan_part_sizes(n - sigma + 1, chi - 1)};
}

inline Graph extremal_construction(int chi, int sigma, int n) {
    return realize(extremal_descriptor(chi, sigma, n));
}

/// If g is complete multipartite, returns its part orders (parts sorted
/// by their lowest vertex). Parts are the components of the complement.
inline std::optional<std::vector<int>> multipartite_parts(const Graph& g) {
    const int n = g.order();
    std::vector<int> part_of(static_cast<std::size_t>(n), -1);
    std::vector<int> sizes;
    for (int v = 0; v < n; ++v) {
        if (part_of[static_cast<std::size_t>(v)] >= 0) continue;
        // walk v's non-neighbourhood as one part
        const int part = static_cast<int>(sizes.size());
        sizes.push_back(0);
        std::vector<int> stack{v};
        part_of[static_cast<std::size_t>(v)] = part;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            ++sizes[static_cast<std::size_t>(part)];
            for (int w = 0; w < n; ++w) {
                if (w == u || g.adjacent(u, w) || part_of[static_cast<std::size_t>(w)] == part) continue;
                if (part_of[static_cast<std::size_t>(w)] >= 0) return std::nullopt;  // non-adjacency is not transitive here
                part_of[static_cast<std::size_t>(w)] = part;
                stack.push_back(w);
            }
        }
    }
    // non-adjacency must be exactly "same part"
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) == (part_of[static_cast<std::size_t>(u)] == part_of[static_cast<std::size_t>(v)]))
                return std::nullopt;
    return sizes;
}

/// Recognizes a realized ConstructionDescriptor: universal vertices form
/// the apex clique, the rest must be complete multipartite. Parts are
/// reported sorted by their lowest remaining vertex.
inline std::optional<ConstructionDescriptor> recognize_construction(const Graph& g) {
    const int n = g.order();
    std::vector<int> apexes, rest;
    for (int v = 0; v < n; ++v)
        (g.degree(v) == n - 1 ? apexes : rest).push_back(v);
    const auto parts = multipartite_parts(g.induced(rest));
    if (!parts) return std::nullopt;
    return ConstructionDescriptor{static_cast<int>(apexes.size()), *parts};
}

/// If g is a star K_{1,t} with t >= 1, returns t.
inline std::optional<int> star_leaves(const Graph& g) {
    const int n = g.order();
    if (n < 2 || g.edge_count() != n - 1) return std::nullopt;
    int centers = 0, leaves = 0;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == n - 1) ++centers;
        else if (g.degree(v) == 1) ++leaves;
    }
    if (n == 2) return 1;  // K_2 = K_{1,1}
    return (centers == 1 && leaves == n - 1) ? std::optional<int>(n - 1) : std::nullopt;
}

}  // namespace turan
