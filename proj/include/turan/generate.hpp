#pragma once

#include "turan/canonical.hpp"
#include "turan/errors.hpp"
#include "turan/graph.hpp"
#include "turan/graph6.hpp"
#include "turan/parallel.hpp"
#include "turan/subgraph.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace turan {

/// Enumeration is bounded well below the canonical-form ceiling; the
/// number of isomorphism classes explodes long before this.
constexpr int kMaxEnumerationOrder = 24;

struct EnumOptions {
    int threads = 1;
    std::string checkpoint_path;  ///< empty disables checkpointing
};

struct GenerationStats {
    /// Isomorphism classes materialized per order 0..n (F-free ones).
    std::vector<long long> level_counts;

    long long total() const {
        long long sum = 0;
        for (long long c : level_counts) sum += c;
        return sum;
    }
};

namespace detail {

struct Frontier {
    int depth = 0;
    std::vector<std::pair<Graph, std::string>> graphs;  ///< graph + canonical form
    std::vector<long long> level_counts;                ///< orders 0..depth
};

inline void save_checkpoint(const std::string& path, const Frontier& frontier, int target,
                            const std::string& forbidden_form) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw checkpoint_error("checkpoint: cannot write " + tmp);
        out << "#turan-checkpoint v1 depth=" << frontier.depth << " target=" << target << " forbidden="
            << (forbidden_form.empty() ? "-" : forbidden_form) << " counts=";
        for (std::size_t i = 0; i < frontier.level_counts.size(); ++i)
            out << (i ? "," : "") << frontier.level_counts[i];
        out << "\n";
        for (const auto& [g, form] : frontier.graphs) out << form << "\n";
        if (!out) throw checkpoint_error("checkpoint: short write to " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw checkpoint_error("checkpoint: cannot rename " + tmp + " to " + path);
}

inline std::optional<Frontier> load_checkpoint(const std::string& path, int target, const std::string& forbidden_form) {
    std::ifstream in(path);
    if (!in) return std::nullopt;  // no checkpoint yet
    std::string header;
    if (!std::getline(in, header)) throw checkpoint_error("checkpoint: empty file " + path);
    std::istringstream hs(header);
    std::string magic, version;
    hs >> magic >> version;
    if (magic != "#turan-checkpoint" || version != "v1")
        throw checkpoint_error("checkpoint: unrecognized header in " + path);
    Frontier frontier;
    int file_target = -1;
    std::string file_forbidden = "-";
    std::string token;
    while (hs >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) throw checkpoint_error("checkpoint: malformed header token '" + token + "'");
        const std::string key = token.substr(0, eq), value = token.substr(eq + 1);
        if (key == "depth") frontier.depth = std::stoi(value);
        else if (key == "target") file_target = std::stoi(value);
        else if (key == "forbidden") file_forbidden = value;
        else if (key == "counts") {
            std::istringstream cs(value);
            std::string item;
            while (std::getline(cs, item, ',')) frontier.level_counts.push_back(std::stoll(item));
        }
    }
    if (file_target != target)
        throw checkpoint_error("checkpoint: was taken for target order " + std::to_string(file_target) +
                                 ", not " + std::to_string(target));
    if (file_forbidden != (forbidden_form.empty() ? "-" : forbidden_form))
        throw checkpoint_error("checkpoint: was taken for a different forbidden graph");
    if (frontier.depth < 0 || frontier.depth >= target || frontier.level_counts.size() != static_cast<std::size_t>(frontier.depth) + 1)
        throw checkpoint_error("checkpoint: inconsistent depth in " + path);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        Graph g = graph6_decode(line);
        if (g.order() != frontier.depth)
            throw checkpoint_error("checkpoint: graph of order " + std::to_string(g.order()) +
                                     " in a depth-" + std::to_string(frontier.depth) + " frontier");
        frontier.graphs.emplace_back(std::move(g), line);
    }
    if (frontier.graphs.empty()) throw checkpoint_error("checkpoint: empty frontier in " + path);
    return frontier;
}

/// All accepted children of one parent: parent + one vertex joined to
/// each subset of the parent, pruned to F-free, deduplicated up to
/// isomorphism, and kept only when the parent test picks this parent as
/// the canonical one (delete the vertex in the last canonical position
/// and compare forms). Each isomorphism class of each order is produced
/// from exactly one (parent, subset) this way. Accepted children are
/// returned in canonical labelling so that frontiers (and therefore
/// expansion and visit order) are identical whether a level was just
/// computed or reloaded from a checkpoint.
inline std::vector<std::pair<Graph, std::string>> expand_parent(const Graph& parent, const std::string& parent_form,
                                                                const Graph* forbidden) {
    const int k = parent.order();
    std::vector<std::pair<Graph, std::string>> accepted;
    std::set<std::string> seen;
    const std::uint64_t subsets = std::uint64_t{1} << k;
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        Bitset nbrs(static_cast<std::size_t>(k));
        for (int b = 0; b < k; ++b)
            if (mask >> b & 1) nbrs.set(static_cast<std::size_t>(b));
        Graph child = parent.with_vertex(nbrs);
        if (forbidden && contains_through(child, *forbidden, k)) continue;
        CanonicalInfo info = canonical_info(child);
        if (!seen.insert(info.form).second) continue;
        const int last = info.labelling.back();
        if (canonical_form(child.without_vertex(last)) != parent_form) continue;
        std::vector<int> to_position(static_cast<std::size_t>(k) + 1);
        for (int pos = 0; pos <= k; ++pos) to_position[static_cast<std::size_t>(info.labelling[pos])] = pos;
        accepted.emplace_back(child.relabelled(to_position), std::move(info.form));
    }
    return accepted;
}

}  // namespace detail

/// Visit one representative of every isomorphism class of F-free graphs
/// on exactly n vertices, as visit(const Graph&, const std::string&
/// canonical_form). Pass forbidden = nullptr to enumerate all classes.
///
/// Levels are built order by order with canonical augmentation; each
/// level is split across opts.threads parents and merged back in parent
/// order, so results (and visit order) do not depend on the thread
/// count. With a checkpoint path, every completed level below n is
/// written out atomically and a matching checkpoint is resumed from.
template <typename Visit>
GenerationStats enumerate_ffree(int n, const Graph* forbidden, const EnumOptions& opts, Visit&& visit) {
    if (n < 0) throw std::invalid_argument("enumerate_ffree: negative order");
    if (n > kMaxEnumerationOrder)
        throw capacity_error("enumerate_ffree: order " + std::to_string(n) + " exceeds the supported bound " +
                             std::to_string(kMaxEnumerationOrder));

    GenerationStats stats;
    const std::string forbidden_form = forbidden ? canonical_form(*forbidden) : std::string{};

    // An empty forbidden graph is contained in everything.
    if (forbidden && forbidden->order() == 0) {
        stats.level_counts.assign(static_cast<std::size_t>(n) + 1, 0);
        return stats;
    }

    detail::Frontier frontier;
    if (!opts.checkpoint_path.empty() && n > 0) {
        if (auto loaded = detail::load_checkpoint(opts.checkpoint_path, n, forbidden_form))
            frontier = std::move(*loaded);
    }
    if (frontier.level_counts.empty()) {
        frontier.depth = 0;
        frontier.graphs.emplace_back(Graph(0), graph6_encode(Graph(0)));
        frontier.level_counts.assign(1, 1);
    }
    stats.level_counts = frontier.level_counts;

    constexpr std::size_t kParentBlock = 512;  // bounds peak memory on the final level
    for (int depth = frontier.depth; depth < n; ++depth) {
        const bool final_level = depth + 1 == n;
        std::vector<std::pair<Graph, std::string>> next;
        long long produced = 0;
        for (std::size_t begin = 0; begin < frontier.graphs.size(); begin += kParentBlock) {
            const std::size_t block = std::min(kParentBlock, frontier.graphs.size() - begin);
            std::vector<std::vector<std::pair<Graph, std::string>>> slots(block);
            parallel_for(block, opts.threads, [&](std::size_t i) {
                const auto& [parent, form] = frontier.graphs[begin + i];
                slots[i] = detail::expand_parent(parent, form, forbidden);
            });
            for (auto& slot : slots) {
                produced += static_cast<long long>(slot.size());
                for (auto& child : slot) {
                    if (final_level) visit(child.first, child.second);
                    else next.push_back(std::move(child));
                }
            }
        }
        stats.level_counts.push_back(produced);
        if (final_level) break;
        frontier.depth = depth + 1;
        frontier.graphs = std::move(next);
        frontier.level_counts = stats.level_counts;
        if (!opts.checkpoint_path.empty())
            detail::save_checkpoint(opts.checkpoint_path, frontier, n, forbidden_form);
        if (frontier.graphs.empty()) {  // no F-free graphs at this or any later order
            while (static_cast<int>(stats.level_counts.size()) <= n) stats.level_counts.push_back(0);
            break;
        }
    }

    if (n == 0) {
        // the empty graph itself is the single class on 0 vertices
        visit(frontier.graphs.front().first, frontier.graphs.front().second);
    }
    return stats;
}

/// Count F-free isomorphism classes per order without visiting them.
inline GenerationStats count_ffree_classes(int n, const Graph* forbidden, const EnumOptions& opts = {}) {
    return enumerate_ffree(n, forbidden, opts, [](const Graph&, const std::string&) {});
}

}  // namespace turan
