#pragma once

#include "turan/coloring.hpp"
#include "turan/errors.hpp"
#include "turan/graph.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace turan {

/// A host graph together with a claimed vertex partition A_1, ..., A_r.
/// Nothing about the partition is trusted; greedy_embed checks what it
/// needs and reports violations by clause.
struct HostPartition {
    Graph host;
    std::vector<std::vector<int>> parts;
};

/// Check every precondition of greedy_embed and return a description of
/// each violated clause (empty means the embedding is guaranteed to
/// succeed). Clause names, stable for programmatic use, prefix each
/// message:
///   coloring-proper   the classes are a proper partition of V(f)
///   coloring-optimal  exactly chi(f) classes
///   class-indices     s/t designate two distinct classes
///   partition-cover   parts partition V(host)
///   part-count        one part per colour class except one
///   part-size         every |A_i| >= |V(f)|^2
///   cross-degree      every vertex misses at most |A_j| / |V(f)|
///                     vertices of every other part A_j
///   witness-shape     S, T are disjoint vertex sets of the designated
///                     class sizes inside one part, fully joined
inline std::vector<std::string> embedding_precondition_violations(const Graph& f, const ProperColoring& coloring,
                                                                  std::size_t s_class, std::size_t t_class,
                                                                  const HostPartition& host, const std::vector<int>& S,
                                                                  const std::vector<int>& T) {
    std::vector<std::string> violations;
    const int n = f.order();
    const int hn = host.host.order();

    if (!is_proper_partition(f, coloring.classes))
        violations.push_back("coloring-proper: classes are not a proper partition of the pattern");
    else if (static_cast<int>(coloring.classes.size()) != chromatic_number(f))
        violations.push_back("coloring-optimal: expected exactly " + std::to_string(chromatic_number(f)) +
                             " classes, got " + std::to_string(coloring.classes.size()));

    if (s_class >= coloring.classes.size() || t_class >= coloring.classes.size() || s_class == t_class) {
        violations.push_back("class-indices: s/t must designate two distinct classes");
        return violations;  // nothing below is well-defined
    }

    std::vector<int> part_of(static_cast<std::size_t>(hn), -1);
    bool cover_ok = true;
    for (std::size_t i = 0; i < host.parts.size() && cover_ok; ++i)
        for (int v : host.parts[i]) {
            if (v < 0 || v >= hn || part_of[static_cast<std::size_t>(v)] != -1) {
                cover_ok = false;
                break;
            }
            part_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
    for (int v = 0; v < hn && cover_ok; ++v)
        if (part_of[static_cast<std::size_t>(v)] == -1) cover_ok = false;
    if (!cover_ok) {
        violations.push_back("partition-cover: parts do not partition the host vertices");
        return violations;
    }

    if (host.parts.size() + 1 != coloring.classes.size()) {
        violations.push_back("part-count: expected " + std::to_string(coloring.classes.size() ? coloring.classes.size() - 1 : 0) +
                             " parts, got " + std::to_string(host.parts.size()));
        return violations;
    }

    const long long nn = static_cast<long long>(n) * n;
    for (std::size_t i = 0; i < host.parts.size(); ++i)
        if (static_cast<long long>(host.parts[i].size()) < nn)
            violations.push_back("part-size: part " + std::to_string(i) + " has " + std::to_string(host.parts[i].size()) +
                                 " < " + std::to_string(nn) + " vertices");

    // |A_j \ N(v)| <= |A_j| / n, compared as non_neighbours * n <= |A_j|
    for (std::size_t i = 0; i < host.parts.size(); ++i)
        for (int v : host.parts[i])
            for (std::size_t j = 0; j < host.parts.size(); ++j) {
                if (i == j) continue;
                long long missed = 0;
                for (int w : host.parts[j])
                    if (!host.host.adjacent(v, w)) ++missed;
                if (missed * n > static_cast<long long>(host.parts[j].size())) {
                    violations.push_back("cross-degree: vertex " + std::to_string(v) + " misses " + std::to_string(missed) +
                                         " of part " + std::to_string(j));
                    goto cross_done;
                }
            }
cross_done:

    {
        bool shape_ok = S.size() == coloring.classes[s_class].size() && T.size() == coloring.classes[t_class].size();
        std::vector<char> taken(static_cast<std::size_t>(hn), 0);
        int home_part = -1;
        for (const auto* side : {&S, &T}) {
            for (int v : *side) {
                if (v < 0 || v >= hn || taken[static_cast<std::size_t>(v)]) {
                    shape_ok = false;
                    break;
                }
                taken[static_cast<std::size_t>(v)] = 1;
                if (home_part == -1) home_part = part_of[static_cast<std::size_t>(v)];
                if (part_of[static_cast<std::size_t>(v)] != home_part) shape_ok = false;
            }
        }
        if (shape_ok)
            for (int s : S)
                for (int t : T)
                    if (!host.host.adjacent(s, t)) shape_ok = false;
        if (!shape_ok)
            violations.push_back(
                "witness-shape: S and T must be disjoint sets of the designated class sizes in one part, fully joined");
    }

    return violations;
}

/// Embed f into the host following the greedy strategy: the designated
/// classes land on S and T (both sorted ascending, matched in order),
/// the remaining classes are processed in decreasing size and assigned
/// to the remaining parts in index order, and each vertex is the
/// lowest-index unused member of its part adjacent to everything placed
/// in the other parts (same-class vertices share a part and need no
/// host edge). Returns mapping[pattern vertex] = host vertex.
///
/// Throws precondition_error naming the first violated clause, or
/// internal_invariant_error if the greedy choice ever runs dry even
/// though the preconditions held (which would contradict the counting
/// argument the preconditions encode).
inline std::vector<int> greedy_embed(const Graph& f, const ProperColoring& coloring, std::size_t s_class,
                                     std::size_t t_class, const HostPartition& host, const std::vector<int>& S,
                                     const std::vector<int>& T) {
    const int n = f.order();
    if (n == 0) return {};
    if (n == 1) {
        const int target = S.empty() ? 0 : S.front();
        if (target < 0 || target >= host.host.order())
            throw precondition_error("witness-shape", "greedy_embed: no host vertex for the single pattern vertex");
        return {target};
    }

    const auto violations = embedding_precondition_violations(f, coloring, s_class, t_class, host, S, T);
    if (!violations.empty()) {
        const std::string& first = violations.front();
        const auto colon = first.find(':');
        throw precondition_error(first.substr(0, colon), "greedy_embed: " + first);
    }

    const int hn = host.host.order();
    std::vector<int> part_of(static_cast<std::size_t>(hn), -1);
    for (std::size_t i = 0; i < host.parts.size(); ++i)
        for (int v : host.parts[i]) part_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
    int home_part = -1;
    if (!S.empty()) home_part = part_of[static_cast<std::size_t>(S.front())];
    else if (!T.empty()) home_part = part_of[static_cast<std::size_t>(T.front())];

    std::vector<int> mapping(static_cast<std::size_t>(n), -1);
    std::vector<int> placed;
    auto assign_sorted = [&](const std::vector<int>& cls, std::vector<int> targets) {
        std::sort(targets.begin(), targets.end());
        for (std::size_t i = 0; i < cls.size(); ++i) {
            mapping[static_cast<std::size_t>(cls[i])] = targets[i];
            placed.push_back(targets[i]);
        }
    };
    assign_sorted(coloring.classes[s_class], S);
    assign_sorted(coloring.classes[t_class], T);

    // remaining classes by decreasing size (ties: class index), parts in index order
    std::vector<std::size_t> rest;
    for (std::size_t c = 0; c < coloring.classes.size(); ++c)
        if (c != s_class && c != t_class) rest.push_back(c);
    std::sort(rest.begin(), rest.end(), [&](std::size_t a, std::size_t b) {
        return coloring.classes[a].size() != coloring.classes[b].size() ? coloring.classes[a].size() > coloring.classes[b].size()
                                                                        : a < b;
    });
    std::vector<std::size_t> free_parts;
    for (std::size_t j = 0; j < host.parts.size(); ++j)
        if (static_cast<int>(j) != home_part) free_parts.push_back(j);

    std::vector<char> used(static_cast<std::size_t>(hn), 0);
    for (int v : placed) used[static_cast<std::size_t>(v)] = 1;
    for (std::size_t r = 0; r < rest.size(); ++r) {
        const auto& cls = coloring.classes[rest[r]];
        const auto& part = host.parts[free_parts[r]];
        for (int pattern_vertex : cls) {
            int chosen = -1;
            for (int candidate : part) {  // parts keep ascending vertex order
                if (used[static_cast<std::size_t>(candidate)]) continue;
                bool common = true;
                for (int p : placed)
                    if (part_of[static_cast<std::size_t>(p)] != static_cast<int>(free_parts[r]) &&
                        !host.host.adjacent(candidate, p)) {
                        common = false;
                        break;
                    }
                if (common) {
                    chosen = candidate;
                    break;
                }
            }
            if (chosen == -1)
                throw internal_invariant_error("greedy_embed: no candidate in part " + std::to_string(free_parts[r]) +
                                               " for pattern vertex " + std::to_string(pattern_vertex) +
                                               " despite valid preconditions");
            mapping[static_cast<std::size_t>(pattern_vertex)] = chosen;
            used[static_cast<std::size_t>(chosen)] = 1;
            placed.push_back(chosen);
        }
    }

    for (const auto& [u, v] : f.edges())
        if (!host.host.adjacent(mapping[static_cast<std::size_t>(u)], mapping[static_cast<std::size_t>(v)]))
            throw internal_invariant_error("greedy_embed: produced mapping misses the edge " + std::to_string(u) + "-" +
                                           std::to_string(v));
    return mapping;
}

/// Convenience partition view of a realized descriptor: the apex clique
/// vertices are NOT a part; parts are the multipartite classes.
inline HostPartition construction_partition(const ConstructionDescriptor& d) {
    HostPartition hp{realize(d), {}};
    int next = d.apex_clique;
    for (int size : d.part_sizes) {
        std::vector<int> part;
        part.reserve(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) part.push_back(next++);
        if (size > 0) hp.parts.push_back(std::move(part));
    }
    return hp;
}

}  // namespace turan
