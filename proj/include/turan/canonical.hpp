#pragma once

#include "turan/errors.hpp"
#include "turan/graph.hpp"
#include "turan/graph6.hpp"
#include "turan/numbers.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace turan {

/// Hard ceiling for canonical-form and automorphism computations. The
/// refinement/branch-and-bound search below is built for the small
/// forbidden graphs, patterns and search witnesses this tool works
/// with, not for general large graphs.
constexpr int kMaxCanonicalOrder = 32;

struct CanonicalInfo {
    std::string form;            ///< graph6 of the canonically relabelled graph
    std::vector<int> labelling;  ///< labelling[position] = original vertex
    CopyCount automorphisms;     ///< |Aut(G)|
};

namespace detail {

/// Graph6 string of g with vertices taken in the order `order`
/// (order[position] = vertex). Equal to graph6_encode of the relabelled
/// graph, without materializing it.
inline std::string encode_ordered(const Graph& g, const std::vector<int>& order) {
    const int n = g.order();
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int group = 0, filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            group = (group << 1) | (g.adjacent(order[static_cast<std::size_t>(u)], order[static_cast<std::size_t>(v)]) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + group));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
    return out;
}

/// Individualization-refinement search for the canonical labelling.
///
/// The ordered partition is refined to equitability, sub-cells ordered
/// by their invariant keys, so every step is isomorphism-invariant. A
/// node whose partition is "homogeneous" (each cell internally complete
/// or empty, each cell pair fully joined or fully separated) is a leaf:
/// all orderings within its cells produce the same adjacency string, so
/// it stands for the product of the cell factorials many labellings at
/// once. That keeps cliques, stars and complete multipartite graphs,
/// which this library meets constantly, cheap.
///
/// The canonical form is the lexicographically smallest leaf string;
/// labellings with equal strings differ exactly by an automorphism, so
/// the number of labellings achieving the minimum is |Aut(G)|.
class CanonSearcher {
public:
    explicit CanonSearcher(const Graph& g) : g_(g), n_(g.order()) {}

    CanonicalInfo run() {
        if (n_ > kMaxCanonicalOrder)
            throw capacity_error("canonical_form: order " + std::to_string(n_) + " exceeds the supported bound " +
                                 std::to_string(kMaxCanonicalOrder));
        best_.form.clear();
        best_.automorphisms = 0;
        if (n_ == 0) {
            best_.form = graph6_encode(g_);
            best_.automorphisms = 1;
            return best_;
        }
        std::vector<std::vector<int>> cells(1);
        cells[0].resize(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) cells[0][static_cast<std::size_t>(v)] = v;
        search(cells);
        return best_;
    }

private:
    void refine(std::vector<std::vector<int>>& cells) const {
        for (;;) {
            std::vector<Bitset> masks;
            masks.reserve(cells.size());
            for (const auto& cell : cells) {
                Bitset m(static_cast<std::size_t>(n_));
                for (int v : cell) m.set(static_cast<std::size_t>(v));
                masks.push_back(std::move(m));
            }
            std::vector<std::vector<int>> next;
            next.reserve(cells.size());
            std::vector<int> key;
            for (const auto& cell : cells) {
                if (cell.size() <= 1) {
                    next.push_back(cell);
                    continue;
                }
                std::vector<std::pair<std::vector<int>, int>> keyed;
                keyed.reserve(cell.size());
                for (int v : cell) {
                    key.clear();
                    for (const auto& m : masks) key.push_back(static_cast<int>((g_.neighbours(v) & m).count()));
                    keyed.emplace_back(key, v);
                }
                std::stable_sort(keyed.begin(), keyed.end(),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
                std::size_t start = 0;
                for (std::size_t i = 1; i <= keyed.size(); ++i) {
                    if (i == keyed.size() || keyed[i].first != keyed[start].first) {
                        std::vector<int> sub;
                        sub.reserve(i - start);
                        for (std::size_t j = start; j < i; ++j) sub.push_back(keyed[j].second);
                        std::sort(sub.begin(), sub.end());
                        next.push_back(std::move(sub));
                        start = i;
                    }
                }
            }
            if (next.size() == cells.size()) break;  // splitting strictly grows the cell count
            cells = std::move(next);
        }
    }

    bool homogeneous(const std::vector<std::vector<int>>& cells) const {
        std::vector<Bitset> masks;
        masks.reserve(cells.size());
        for (const auto& cell : cells) {
            Bitset m(static_cast<std::size_t>(n_));
            for (int v : cell) m.set(static_cast<std::size_t>(v));
            masks.push_back(std::move(m));
        }
        for (std::size_t a = 0; a < cells.size(); ++a) {
            const auto sa = cells[a].size();
            if (sa > 1) {
                std::size_t inside = 0;
                for (int v : cells[a]) inside += (g_.neighbours(v) & masks[a]).count();
                if (inside != 0 && inside != sa * (sa - 1)) return false;
            }
            for (std::size_t b = a + 1; b < cells.size(); ++b) {
                std::size_t cross = 0;
                for (int v : cells[a]) cross += (g_.neighbours(v) & masks[b]).count();
                if (cross != 0 && cross != sa * cells[b].size()) return false;
            }
        }
        return true;
    }

    void leaf(const std::vector<std::vector<int>>& cells) {
        std::vector<int> order;
        order.reserve(static_cast<std::size_t>(n_));
        CopyCount labellings = 1;
        for (const auto& cell : cells) {
            labellings *= factorial(static_cast<int>(cell.size()));
            order.insert(order.end(), cell.begin(), cell.end());
        }
        std::string form = encode_ordered(g_, order);
        if (best_.form.empty() || form < best_.form) {
            best_.form = std::move(form);
            best_.labelling = std::move(order);
            best_.automorphisms = labellings;
        } else if (form == best_.form) {
            best_.automorphisms += labellings;
        }
    }

    void search(std::vector<std::vector<int>> cells) {
        refine(cells);
        if (homogeneous(cells)) {
            leaf(cells);
            return;
        }
        std::size_t target = 0;
        while (cells[target].size() < 2) ++target;
        for (std::size_t pick = 0; pick < cells[target].size(); ++pick) {
            std::vector<std::vector<int>> child;
            child.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < target; ++i) child.push_back(cells[i]);
            child.push_back({cells[target][pick]});
            std::vector<int> rest;
            rest.reserve(cells[target].size() - 1);
            for (std::size_t i = 0; i < cells[target].size(); ++i)
                if (i != pick) rest.push_back(cells[target][i]);
            child.push_back(std::move(rest));
            for (std::size_t i = target + 1; i < cells.size(); ++i) child.push_back(cells[i]);
            search(std::move(child));
        }
    }

    const Graph& g_;
    int n_;
    CanonicalInfo best_;
};

}  // namespace detail

/// Canonical form, canonical labelling and automorphism count in one
/// pass. The form is an isomorphism-invariant graph6 string:
/// G ≅ G' exactly when the forms are equal.
inline CanonicalInfo canonical_info(const Graph& g) { return detail::CanonSearcher(g).run(); }

inline std::string canonical_form(const Graph& g) { return canonical_info(g).form; }

inline Graph canonical_representative(const Graph& g) { return graph6_decode(canonical_form(g)); }

inline CopyCount automorphism_count(const Graph& g) { return canonical_info(g).automorphisms; }

}  // namespace turan
