// Desk-scale acceptance checks for the workbench: each numbered check
// prints exactly one PASS/FAIL line; the process exits nonzero when any
// check fails. Reference values here are either closed formulas
// evaluated independently or naive reimplementations local to this
// file, never the library's own algorithms.

#include <turan/turan.hpp>

#include <algorithm>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace turan;

namespace {

int failures = 0;

void conclude(int index, const std::string& name, bool ok, const std::string& detail) {
    if (ok) {
        std::cout << "PASS  " << index << ". " << name << "\n";
    } else {
        ++failures;
        std::cout << "FAIL  " << index << ". " << name << (detail.empty() ? "" : "  [" + detail + "]") << "\n";
    }
}

bool contains_form(const std::vector<std::string>& witnesses, const Graph& g) {
    const std::string form = canonical_form(g);
    return std::find(witnesses.begin(), witnesses.end(), form) != witnesses.end();
}

// --- 1: edge maximization under forbidden cliques ---------------------------

void check_edges_under_cliques() {
    std::string detail;
    bool ok = true;
    for (int n = 3; n <= 8 && ok; ++n) {
        const SearchResult r = brute_force_ex(n, clique(2), clique(3));
        const CopyCount expected = static_cast<long long>(n) * n / 4;
        if (r.optimum != expected || !contains_form(r.witnesses, turan_graph(n, 2))) {
            ok = false;
            detail = "triangle-free edges at n=" + std::to_string(n) + ": got " + r.optimum.str() +
                     ", expected " + expected.str();
        }
    }
    for (int n = 4; n <= 8 && ok; ++n) {
        const SearchResult r = brute_force_ex(n, clique(2), clique(4));
        const CopyCount expected = turan_graph(n, 3).edge_count();
        if (r.optimum != expected || !contains_form(r.witnesses, turan_graph(n, 3))) {
            ok = false;
            detail = "K4-free edges at n=" + std::to_string(n) + ": got " + r.optimum.str() + ", expected " +
                     expected.str();
        }
    }
    conclude(1, "edge maximization under forbidden cliques matches the balanced partitions", ok, detail);
}

// --- 2: triangle maximization under a forbidden claw ------------------------

void check_triangles_under_claw() {
    const Graph claw = complete_multipartite({1, 3});
    std::string detail;
    bool ok = true;
    for (int n = 4; n <= 8 && ok; ++n) {
        const SearchResult r = brute_force_ex(n, clique(3), claw);
        const CopyCount expected = n / 3;
        const CopyCount attained = count_copies(clique(3), star_free_construction(n, 3));
        if (r.optimum != expected) {
            ok = false;
            detail = "optimum at n=" + std::to_string(n) + ": got " + r.optimum.str() + ", expected " + expected.str();
        } else if (attained != expected) {
            ok = false;
            detail = "clique blocks at n=" + std::to_string(n) + " attain " + attained.str() + ", expected " +
                     expected.str();
        }
    }
    conclude(2, "triangle maximization under a forbidden claw matches the clique blocks", ok, detail);
}

// --- 3: star maximization under a forbidden square, through verify ----------

void check_stars_under_square() {
    std::string detail;
    bool ok = true;
    for (int n = 5; n <= 8 && ok; ++n) {
        VerifyOptions opts;
        opts.n = n;
        opts.pattern = complete_multipartite({1, 3});
        opts.forbidden = cycle_graph(4);
        const VerificationReport r = verify_instance(opts);
        const CopyCount expected = binomial(n - 1, 3);
        if (r.verdict != kVerdictMatches || r.construction_count != expected || *r.oracle_count != expected) {
            ok = false;
            detail = "n=" + std::to_string(n) + ": verdict " + r.verdict + ", construction " +
                     r.construction_count.str() + ", oracle " + r.oracle_count->str() + ", expected " + expected.str();
        }
    }
    conclude(3, "star maximization under a forbidden square matches the apex construction", ok, detail);
}

// --- 4: closed-form counts against plain backtracking -----------------------

void check_closed_form_against_backtracking() {
    std::mt19937 rng(20260815);
    std::string detail;
    bool ok = true;
    for (int trial = 0; trial < 100 && ok; ++trial) {
        std::vector<int> pattern(1 + rng() % 3);
        for (int& b : pattern) b = 1 + static_cast<int>(rng() % 3);
        ConstructionDescriptor host{static_cast<int>(rng() % 4), std::vector<int>(1 + rng() % 3)};
        for (int& m : host.part_sizes) m = 1 + static_cast<int>(rng() % 4);
        if (host.order() > 12) {
            --trial;  // resample oversized hosts so every trial counts
            continue;
        }
        const CopyCount closed = count_multipartite_in_construction(pattern, host);
        const CopyCount brute = count_copies(complete_multipartite(pattern), realize(host));
        if (closed != brute) {
            ok = false;
            std::ostringstream what;
            what << "trial " << trial << ": closed " << closed.str() << " vs backtracking " << brute.str();
            detail = what.str();
        }
    }
    conclude(4, "closed-form copy counts agree with backtracking on 100 random instances", ok, detail);
}

// --- 5: the stacked construction avoids what it must ------------------------

void check_construction_freeness() {
    const std::vector<Graph> forbidden{clique(3), clique(4), cycle_graph(5), complete_multipartite({2, 2, 2}),
                                       complete_multipartite({1, 1, 2})};
    std::string detail;
    bool ok = true;
    for (const Graph& f : forbidden) {
        const ChromaticProfile profile = chromatic_profile(f);
        const Graph critical = clique(profile.sigma + profile.chi - 1);
        for (int n = 5; n <= 40 && ok; ++n) {
            const Graph g = extremal_construction(profile, n);
            if (contains(g, f)) {
                ok = false;
                detail = "forbidden graph of order " + std::to_string(f.order()) + " found at n=" + std::to_string(n);
            } else if (contains(g, critical)) {
                ok = false;
                detail = "clique K" + std::to_string(critical.order()) + " found at n=" + std::to_string(n);
            }
        }
    }
    conclude(5, "stacked constructions avoid the forbidden graph and the critical clique up to order 40", ok, detail);
}

// --- 6: chromatic profiles against naive color enumeration ------------------

struct NaiveProfile {
    int chi = 0;
    int sigma = 0;
    std::vector<std::string> pairs;
};

/// Reference implementation by brute force over all k^n color
/// assignments, sharing nothing with the library's coloring search.
NaiveProfile naive_profile(const Graph& g) {
    const int n = g.order();
    const auto edges = g.edges();

    auto for_each_proper = [&](int k, auto&& take) {
        std::vector<int> colors(static_cast<std::size_t>(n), 0);
        while (true) {
            bool proper = true;
            for (const auto& [u, v] : edges)
                if (colors[static_cast<std::size_t>(u)] == colors[static_cast<std::size_t>(v)]) {
                    proper = false;
                    break;
                }
            if (proper && !take(colors)) return true;
            int at = 0;
            while (at < n && ++colors[static_cast<std::size_t>(at)] == k) colors[static_cast<std::size_t>(at++)] = 0;
            if (at == n) return false;
        }
    };

    NaiveProfile result;
    for (int k = 1; k <= n; ++k) {
        bool found = false;
        for_each_proper(k, [&](const std::vector<int>&) {
            found = true;
            return false;  // stop at the first witness
        });
        if (found) {
            result.chi = k;
            break;
        }
    }

    std::set<std::string> pair_forms;
    int best_small = n;
    for_each_proper(result.chi, [&](const std::vector<int>& colors) {
        std::vector<std::vector<int>> classes(static_cast<std::size_t>(result.chi));
        for (int v = 0; v < n; ++v) classes[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])].push_back(v);
        for (const auto& cls : classes)
            if (cls.empty()) return true;  // not an optimal coloring, keep scanning
        for (const auto& cls : classes) best_small = std::min(best_small, static_cast<int>(cls.size()));
        for (std::size_t i = 0; i < classes.size(); ++i)
            for (std::size_t j = i + 1; j < classes.size(); ++j) {
                std::vector<int> both = classes[i];
                both.insert(both.end(), classes[j].begin(), classes[j].end());
                std::sort(both.begin(), both.end());
                pair_forms.insert(canonical_form(g.induced(both)));
            }
        return true;
    });
    result.sigma = best_small;
    result.pairs.assign(pair_forms.begin(), pair_forms.end());
    return result;
}

void check_chromatic_profiles() {
    std::string detail;
    bool ok = true;
    long long graphs = 0;
    for (int n = 1; n <= 6 && ok; ++n) {
        enumerate_ffree(n, nullptr, {}, [&](const Graph& g, const std::string& form) {
            if (!ok) return;
            ++graphs;
            const NaiveProfile expected = naive_profile(g);
            const int chi = chromatic_number(g);
            const int sig = sigma(g);
            if (chi != expected.chi || sig != expected.sigma) {
                ok = false;
                detail = form + ": chi " + std::to_string(chi) + "/" + std::to_string(expected.chi) + ", sigma " +
                         std::to_string(sig) + "/" + std::to_string(expected.sigma);
                return;
            }
            if (expected.chi >= 2 && chromatic_profile(g).pair_family != expected.pairs) {
                ok = false;
                detail = form + ": class-pair family mismatch";
            }
        });
    }
    if (ok && graphs != 208) {
        ok = false;
        detail = "expected 208 graphs, profiled " + std::to_string(graphs);
    }
    conclude(6, "chromatic data matches naive color enumeration on all 208 graphs up to order 6", ok, detail);
}

// --- 7: rebalancing parts never loses copies ---------------------------------

// Balancing is monotone for K_{p,q} whenever q <= 2p-1 (here K22, K23,
// K33, on any part sizes); for K24 that bound fails and small hosts are
// genuine counterexamples (K24 appears once in K_{4,2} and never in
// K_{3,3}), so K24 is only monotone once the parts carry enough
// vertices -- within this box, from 13 onward.
void check_rebalance_monotone() {
    struct Regime {
        std::vector<int> pattern;
        int min_part_total;
    };
    const std::vector<Regime> regimes{{{2, 2}, 0}, {{2, 3}, 0}, {{3, 3}, 0}, {{2, 4}, 13}};
    std::string detail;
    bool ok = true;
    for (int apex = 0; apex <= 2 && ok; ++apex)
        for (int small = 1; small <= 8 && ok; ++small)
            for (int large = small; large <= 8 && ok; ++large)
                for (const auto& regime : regimes) {
                    if (large + small < regime.min_part_total) continue;
                    ConstructionDescriptor d{apex, {large, small}};
                    CopyCount previous = count_multipartite_in_construction(regime.pattern, d);
                    while (true) {
                        const RebalanceResult step = rebalance_step(d, 0, 1);
                        if (step.balanced) break;
                        const CopyCount now = count_multipartite_in_construction(regime.pattern, step.descriptor);
                        if (now < previous) {
                            ok = false;
                            std::ostringstream what;
                            what << "apex " << apex << ", parts {" << large << "," << small << "} dropped "
                                 << previous.str() << " -> " << now.str();
                            detail = what.str();
                            break;
                        }
                        previous = now;
                        d = step.descriptor;
                    }
                    if (!ok) break;
                }
    // The K24 exception is real, not a counting artifact: both counting
    // paths agree that balancing {4,2} destroys the single copy.
    if (ok) {
        const Graph k24 = complete_multipartite({2, 4});
        const bool drop_confirmed = count_copies(k24, realize(ConstructionDescriptor{0, {4, 2}})) == 1 &&
                                    count_copies(k24, realize(ConstructionDescriptor{0, {3, 3}})) == 0;
        if (!drop_confirmed) {
            ok = false;
            detail = "the documented small-host exception did not reproduce";
        }
    }
    conclude(7, "rebalancing toward equal parts never loses copies in the supported regimes", ok, detail);
}

// --- 8: generator calibration ------------------------------------------------

void check_generator_calibration() {
    const std::vector<long long> expected{1, 1, 2, 4, 11, 34, 156, 1044};
    const Graph k8 = clique(8);
    const GenerationStats unrestricted = count_ffree_classes(7, nullptr);
    const GenerationStats vacuous = count_ffree_classes(7, &k8);
    bool ok = unrestricted.level_counts == expected && vacuous.level_counts == expected;
    std::string detail;
    if (!ok) {
        std::ostringstream what;
        what << "got";
        for (long long c : unrestricted.level_counts) what << " " << c;
        detail = what.str();
    }
    conclude(8, "the generator reproduces the unrestricted class counts through order 7", ok, detail);
}

}  // namespace

int main() {
    check_edges_under_cliques();
    check_triangles_under_claw();
    check_stars_under_square();
    check_closed_form_against_backtracking();
    check_construction_freeness();
    check_chromatic_profiles();
    check_rebalance_monotone();
    check_generator_calibration();
    if (failures != 0) std::cout << failures << " acceptance check(s) failed\n";
    return failures == 0 ? 0 : 1;
}
