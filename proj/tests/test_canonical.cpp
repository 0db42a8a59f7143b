#include <turan/canonical.hpp>
#include <turan/constructions.hpp>
#include <turan/graph6.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace turan;

namespace {

Graph petersen() {
    return graph_from_edges(10, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4}, {3, 8}, {4, 9},
                                 {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}});
}

Graph random_relabel(const Graph& g, std::mt19937& rng) {
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return g.relabelled(perm);
}

}  // namespace

TEST_CASE("canonical form is invariant under relabelling") {
    std::mt19937 rng(7);
    for (const Graph& g : {cycle_graph(5), path_graph(4), complete_multipartite({3, 3}), petersen(),
                           graph_from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}}), kbar(2, 5)}) {
        const std::string form = canonical_form(g);
        for (int trial = 0; trial < 20; ++trial) REQUIRE(canonical_form(random_relabel(g, rng)) == form);
    }
}

TEST_CASE("canonical form separates the 11 classes on 4 vertices and 34 on 5") {
    for (const auto& [n, classes] : {std::pair{4, 11}, std::pair{5, 34}}) {
        std::set<std::string> forms;
        const int pairs = n * (n - 1) / 2;
        for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
            Graph g(n);
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++bit)
                    if (mask >> bit & 1) g.add_edge(u, v);
            forms.insert(canonical_form(g));
        }
        REQUIRE(static_cast<int>(forms.size()) == classes);
    }
}

TEST_CASE("canonical form decodes to an isomorphic graph") {
    for (const Graph& g : {cycle_graph(6), petersen(), turan_graph(7, 3)}) {
        const Graph rep = canonical_representative(g);
        REQUIRE(rep.order() == g.order());
        REQUIRE(rep.edge_count() == g.edge_count());
        REQUIRE(canonical_form(rep) == canonical_form(g));
        REQUIRE(graph6_encode(rep) == canonical_form(g));
    }
}

TEST_CASE("canonical labelling realizes the canonical form") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) g.add_edge(u, v);
        const CanonicalInfo info = canonical_info(g);
        REQUIRE(static_cast<int>(info.labelling.size()) == n);
        std::vector<int> position(static_cast<std::size_t>(n));
        for (int p = 0; p < n; ++p) position[static_cast<std::size_t>(info.labelling[static_cast<std::size_t>(p)])] = p;
        REQUIRE(graph6_encode(g.relabelled(position)) == info.form);
    }
}

TEST_CASE("automorphism counts of reference graphs") {
    REQUIRE(automorphism_count(Graph(0)) == 1);
    REQUIRE(automorphism_count(clique(1)) == 1);
    REQUIRE(automorphism_count(clique(4)) == 24);
    REQUIRE(automorphism_count(empty_graph(5)) == 120);
    REQUIRE(automorphism_count(cycle_graph(5)) == 10);
    REQUIRE(automorphism_count(path_graph(4)) == 2);
    REQUIRE(automorphism_count(complete_multipartite({3, 3})) == 72);
    REQUIRE(automorphism_count(complete_multipartite({2, 2, 2})) == 48);
    REQUIRE(automorphism_count(complete_multipartite({1, 3})) == 6);
    REQUIRE(automorphism_count(petersen()) == 120);
}

TEST_CASE("automorphism count is a relabelling invariant") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) g.add_edge(u, v);
        REQUIRE(automorphism_count(random_relabel(g, rng)) == automorphism_count(g));
    }
}

TEST_CASE("order-of-magnitude inputs work: highly symmetric graphs stay fast") {
    // these would blow up a naive leaf-per-permutation search
    REQUIRE(automorphism_count(clique(20)) == factorial(20));
    REQUIRE(automorphism_count(complete_multipartite({1, 19})) == factorial(19));
    CopyCount expected = factorial(10) * factorial(10) * 2;
    REQUIRE(automorphism_count(complete_multipartite({10, 10})) == expected);
}

TEST_CASE("canonical capacity bound") {
    REQUIRE_NOTHROW(canonical_form(Graph(32)));
    REQUIRE_THROWS_AS(canonical_form(Graph(33)), capacity_error);
}
