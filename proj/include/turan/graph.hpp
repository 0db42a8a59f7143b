#pragma once

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace turan {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// Finite simple undirected graph on vertices 0..n-1, stored as one
/// packed bit row per vertex. Rows stay symmetric and irreflexive;
/// neighbourhood intersection is a word-parallel AND, which is what the
/// counting and enumeration code lives on.
///
/// By convention a Graph is not mutated once handed to an algorithm:
/// every operation in this library takes graphs by const reference and
/// returns fresh values, so sharing across threads is safe.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n))) {
        if (n < 0) throw std::invalid_argument("Graph: negative order");
    }

    int order() const { return n_; }

    bool adjacent(int u, int v) const {
        assert(u >= 0 && u < n_ && v >= 0 && v < n_);
        return adj_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v));
    }

    void add_edge(int u, int v) {
        check_pair(u, v);
        adj_[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
        adj_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
    }

    void remove_edge(int u, int v) {
        check_pair(u, v);
        adj_[static_cast<std::size_t>(u)].reset(static_cast<std::size_t>(v));
        adj_[static_cast<std::size_t>(v)].reset(static_cast<std::size_t>(u));
    }

    const Bitset& neighbours(int v) const {
        assert(v >= 0 && v < n_);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbours(v).count()); }

    long long edge_count() const {
        long long twice = 0;
        for (const auto& row : adj_) twice += static_cast<long long>(row.count());
        return twice / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> result;
        for (int u = 0; u < n_; ++u)
            for (auto v = adj_[static_cast<std::size_t>(u)].find_next(static_cast<std::size_t>(u));
                 v != Bitset::npos; v = adj_[static_cast<std::size_t>(u)].find_next(v))
                result.emplace_back(u, static_cast<int>(v));
        return result;
    }

    std::vector<int> degree_sequence() const {
        std::vector<int> degs(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) degs[static_cast<std::size_t>(v)] = degree(v);
        std::sort(degs.begin(), degs.end());
        return degs;
    }

    int max_degree() const {
        int best = 0;
        for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
        return best;
    }

    /// Subgraph induced on `verts`, relabelled to 0..k-1 in the given order.
    Graph induced(const std::vector<int>& verts) const {
        Graph sub(static_cast<int>(verts.size()));
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j)
                if (adjacent(verts[i], verts[j])) sub.add_edge(static_cast<int>(i), static_cast<int>(j));
        return sub;
    }

    /// Copy with vertex labels permuted; `perm[old] = new`.
    Graph relabelled(const std::vector<int>& perm) const {
        if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("relabelled: permutation size mismatch");
        Graph out(n_);
        for (auto [u, v] : edges()) out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        return out;
    }

    /// Copy with the vertex `v` removed; the remaining vertices keep their
    /// relative order and are relabelled to 0..n-2.
    Graph without_vertex(int v) const {
        std::vector<int> keep;
        keep.reserve(static_cast<std::size_t>(n_) - 1);
        for (int u = 0; u < n_; ++u)
            if (u != v) keep.push_back(u);
        return induced(keep);
    }

    /// Copy extended by one vertex (label n) adjacent exactly to the set
    /// bits of `nbrs` (an n-bit mask over the existing vertices).
    Graph with_vertex(const Bitset& nbrs) const {
        Graph out(n_ + 1);
        for (auto [u, v] : edges()) out.add_edge(u, v);
        for (auto u = nbrs.find_first(); u != Bitset::npos; u = nbrs.find_next(u))
            out.add_edge(static_cast<int>(u), n_);
        return out;
    }

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    void check_pair(int u, int v) const {
        if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
        if (u == v) throw std::invalid_argument("Graph: self-loops are not representable");
    }

    int n_ = 0;
    std::vector<Bitset> adj_;
};

inline Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edge_list) {
    Graph g(n);
    for (auto [u, v] : edge_list) g.add_edge(u, v);
    return g;
}

}  // namespace turan
