#pragma once

#include "turan/coloring.hpp"
#include "turan/constructions.hpp"
#include "turan/embedding.hpp"
#include "turan/errors.hpp"
#include "turan/graph.hpp"
#include "turan/graph6.hpp"
#include "turan/search.hpp"
#include "turan/subgraph.hpp"

#include <json.hpp>

#include <chrono>
#include <optional>
#include <ostream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace turan {

enum class VerifyMode { exact, heuristic, none };

inline std::string to_string(VerifyMode mode) {
    switch (mode) {
        case VerifyMode::exact: return "exact";
        case VerifyMode::heuristic: return "heuristic";
        case VerifyMode::none: return "none";
    }
    return "?";
}

inline VerifyMode verify_mode_from_string(const std::string& s) {
    if (s == "exact") return VerifyMode::exact;
    if (s == "heuristic") return VerifyMode::heuristic;
    if (s == "none") return VerifyMode::none;
    throw std::invalid_argument("unknown mode '" + s + "' (expected exact, heuristic or none)");
}

struct VerifyOptions {
    int n = 0;
    Graph pattern{0};
    Graph forbidden{0};
    VerifyMode mode = VerifyMode::exact;
    std::string variant = "auto";  ///< auto | extremal | kbar | star | turan
    std::optional<int> sigma_override;  ///< replaces sigma(F) in the kbar variant
    int threads = 1;
    std::uint64_t seed = 1;
    long long max_steps = 10000;
    int restarts = 1;
    std::string checkpoint_path;
    bool override_capacity = false;
};

/// Everything one verification run establishes, serializable as one
/// JSON object per line (schema "turan.report/1").
struct VerificationReport {
    std::string schema = "turan.report/1";
    int n = 0;
    std::string pattern;    ///< canonical form of the counted pattern
    std::string forbidden;  ///< canonical form of the forbidden graph
    int chi = 0;
    int sigma = 0;
    std::vector<std::string> pair_family;
    std::string variant;       ///< resolved construction family
    std::string construction;  ///< graph6 as built (apex vertices first)
    std::optional<ConstructionDescriptor> descriptor;
    CopyCount construction_count = 0;
    std::string mode;
    std::optional<CopyCount> oracle_count;
    std::string verdict;  ///< matches | construction-below-oracle | oracle-skipped
    bool degenerate = false;
    std::vector<std::string> witnesses;  ///< optimal classes from the exact oracle
    long long ffree_count = -1;          ///< -1 when no exact oracle ran
    std::vector<std::pair<std::string, double>> timings_ms;

    bool operator==(const VerificationReport& other) const = default;
};

inline constexpr const char* kVerdictMatches = "matches";
inline constexpr const char* kVerdictBelowOracle = "construction-below-oracle";
inline constexpr const char* kVerdictSkipped = "oracle-skipped";

namespace detail {

struct BuiltConstruction {
    Graph graph{0};
    std::optional<ConstructionDescriptor> descriptor;
    std::string variant;
};

/// Pick and realize the candidate construction for forbidding f.
inline BuiltConstruction build_construction(const std::string& variant, const ChromaticProfile& profile, const Graph& f,
                                            int n, std::optional<int> sigma_override) {
    std::string choice = variant;
    if (choice == "auto") {
        const auto leaves = star_leaves(f);
        if (profile.chi == 2 && leaves && *leaves >= 2) choice = "star";
        else choice = "extremal";
    }
    if (choice == "extremal") {
        if (profile.chi < 2) throw std::invalid_argument("variant extremal: forbidden graph must have chromatic number >= 2");
        const auto d = extremal_descriptor(profile, n);
        return {realize(d), d, choice};
    }
    if (choice == "kbar") {
        const int s = sigma_override.value_or(profile.sigma);
        if (s < 1) throw std::invalid_argument("variant kbar: s must be positive");
        if (n < s - 1) throw std::invalid_argument("variant kbar: order too small for the apex clique");
        const ConstructionDescriptor d{s - 1, {n - s + 1}};
        return {realize(d), d, choice};
    }
    if (choice == "star") {
        const auto leaves = star_leaves(f);
        if (!leaves || *leaves < 2)
            throw std::invalid_argument("variant star: forbidden graph must be a star with at least two leaves");
        return {star_free_construction(n, *leaves), std::nullopt, choice};
    }
    if (choice == "turan") {
        if (profile.chi < 2) throw std::invalid_argument("variant turan: forbidden graph must have chromatic number >= 2");
        const ConstructionDescriptor d{0, turan_part_sizes(n, profile.chi - 1)};
        return {realize(d), d, choice};
    }
    throw std::invalid_argument("unknown variant '" + variant + "' (expected auto, extremal, kbar, star or turan)");
}

/// Closed-form copy count of a complete multipartite pattern in a
/// disjoint union of cliques (connected patterns live inside one
/// component). Empty optional when no closed form applies.
inline std::optional<CopyCount> closed_form_count(const Graph& pattern, const BuiltConstruction& built, int n,
                                                  const Graph& f) {
    if (pattern.order() == 0) return std::nullopt;  // the empty pattern has one copy anywhere
    const auto pattern_parts = multipartite_parts(pattern);
    if (!pattern_parts) return std::nullopt;
    if (built.descriptor) return count_multipartite_in_construction(*pattern_parts, *built.descriptor);
    if (built.variant == "star" && (pattern_parts->size() >= 2 || pattern.order() == 1)) {
        const int t = *star_leaves(f);
        CopyCount total = 0;
        const ConstructionDescriptor whole_clique{t, {}};
        total += CopyCount(n / t) * count_multipartite_in_construction(*pattern_parts, whole_clique);
        if (n % t != 0) total += count_multipartite_in_construction(*pattern_parts, ConstructionDescriptor{n % t, {}});
        return total;
    }
    return std::nullopt;
}

class PhaseTimer {
public:
    explicit PhaseTimer(std::vector<std::pair<std::string, double>>& sink) : sink_(sink) {}
    template <typename Fn>
    auto time(const std::string& label, Fn&& fn) {
        const auto start = std::chrono::steady_clock::now();
        if constexpr (std::is_void_v<decltype(fn())>) {
            fn();
            sink_.emplace_back(label, ms_since(start));
        } else {
            auto value = fn();
            sink_.emplace_back(label, ms_since(start));
            return value;
        }
    }

private:
    static double ms_since(std::chrono::steady_clock::time_point start) {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    std::vector<std::pair<std::string, double>>& sink_;
};

}  // namespace detail

/// Run one full verification: profile the forbidden graph, build the
/// candidate construction, count the pattern in it (cross-checked
/// against a closed form where one applies), consult the requested
/// oracle and compare.
inline VerificationReport verify_instance(const VerifyOptions& opts) {
    if (opts.n < 0) throw std::invalid_argument("verify: negative order");
    if (opts.forbidden.order() == 0) throw std::invalid_argument("verify: forbidden graph must have at least one vertex");
    if (opts.forbidden.edge_count() == 0)
        throw std::invalid_argument("verify: an edgeless forbidden graph leaves no graphs to search");

    VerificationReport report;
    detail::PhaseTimer timer(report.timings_ms);
    report.n = opts.n;
    report.mode = to_string(opts.mode);
    report.pattern = canonical_form(opts.pattern);
    report.forbidden = canonical_form(opts.forbidden);
    report.degenerate = contains(opts.pattern, opts.forbidden);

    const ChromaticProfile profile = timer.time("profile", [&] { return chromatic_profile(opts.forbidden); });
    report.chi = profile.chi;
    report.sigma = profile.sigma;
    report.pair_family = profile.pair_family;

    const detail::BuiltConstruction built = timer.time("construct", [&] {
        return detail::build_construction(opts.variant, profile, opts.forbidden, opts.n, opts.sigma_override);
    });
    report.variant = built.variant;
    report.descriptor = built.descriptor;
    report.construction = graph6_encode(built.graph);
    if (contains(built.graph, opts.forbidden))
        throw std::invalid_argument("verify: the selected construction contains the forbidden graph (bad variant/s choice)");

    report.construction_count = timer.time("count", [&] {
        const CopyCount backtracking = count_copies(opts.pattern, built.graph, opts.threads);
        const auto closed = detail::closed_form_count(opts.pattern, built, opts.n, opts.forbidden);
        if (closed && *closed != backtracking)
            throw internal_invariant_error("verify: closed-form count " + closed->str() +
                                           " disagrees with backtracking count " + backtracking.str());
        return backtracking;
    });

    if (opts.mode == VerifyMode::exact) {
        const SearchResult oracle = timer.time("oracle", [&] {
            SearchOptions sopts;
            sopts.threads = opts.threads;
            sopts.override_capacity = opts.override_capacity;
            sopts.checkpoint_path = opts.checkpoint_path;
            return brute_force_ex(opts.n, opts.pattern, opts.forbidden, sopts);
        });
        report.oracle_count = oracle.optimum;
        report.witnesses = oracle.witnesses;
        report.ffree_count = oracle.ffree_count;
        if (report.construction_count > oracle.optimum)
            throw internal_invariant_error("verify: construction count " + report.construction_count.str() +
                                           " exceeds the exhaustive optimum " + oracle.optimum.str());
        if (report.construction_count == oracle.optimum) {
            report.verdict = kVerdictMatches;
            const std::string form = canonical_form(built.graph);
            bool found = false;
            for (const auto& w : report.witnesses) found = found || w == form;
            if (!found && oracle.ffree_count > 0)
                throw internal_invariant_error("verify: construction attains the optimum but is missing from the witness list");
        } else {
            report.verdict = kVerdictBelowOracle;
        }
    } else if (opts.mode == VerifyMode::heuristic) {
        const HillClimbResult oracle = timer.time("oracle", [&] {
            HillClimbOptions hopts;
            hopts.max_steps = opts.max_steps;
            hopts.restarts = opts.restarts;
            hopts.seed = opts.seed;
            return hill_climb(opts.n, opts.pattern, opts.forbidden, hopts);
        });
        report.oracle_count = oracle.best_count;
        // A heuristic can only refute, never confirm: "matches" here
        // means the search found nothing better.
        report.verdict = oracle.best_count > report.construction_count ? kVerdictBelowOracle : kVerdictMatches;
    } else {
        report.verdict = kVerdictSkipped;
    }
    return report;
}

// --- JSON serialization (one object per line; counts as decimal strings) ---

inline void to_json(nlohmann::json& j, const ConstructionDescriptor& d) {
    j = nlohmann::json{{"apex", d.apex_clique}, {"parts", d.part_sizes}};
}

inline void from_json(const nlohmann::json& j, ConstructionDescriptor& d) {
    j.at("apex").get_to(d.apex_clique);
    j.at("parts").get_to(d.part_sizes);
}

inline void to_json(nlohmann::json& j, const VerificationReport& r) {
    j = nlohmann::json{{"schema", r.schema},
                       {"n", r.n},
                       {"pattern", r.pattern},
                       {"forbidden", r.forbidden},
                       {"chi", r.chi},
                       {"sigma", r.sigma},
                       {"pair_family", r.pair_family},
                       {"variant", r.variant},
                       {"construction", r.construction},
                       {"construction_count", r.construction_count.str()},
                       {"mode", r.mode},
                       {"verdict", r.verdict},
                       {"degenerate", r.degenerate},
                       {"witnesses", r.witnesses},
                       {"ffree_count", r.ffree_count}};
    if (r.descriptor) j["descriptor"] = *r.descriptor;
    if (r.oracle_count) j["oracle_count"] = r.oracle_count->str();
    auto& timings = j["timings_ms"] = nlohmann::json::array();
    for (const auto& [label, ms] : r.timings_ms) timings.push_back({{"phase", label}, {"ms", ms}});
}

inline void from_json(const nlohmann::json& j, VerificationReport& r) {
    j.at("schema").get_to(r.schema);
    if (r.schema != "turan.report/1") throw std::invalid_argument("unsupported report schema '" + r.schema + "'");
    j.at("n").get_to(r.n);
    j.at("pattern").get_to(r.pattern);
    j.at("forbidden").get_to(r.forbidden);
    j.at("chi").get_to(r.chi);
    j.at("sigma").get_to(r.sigma);
    j.at("pair_family").get_to(r.pair_family);
    j.at("variant").get_to(r.variant);
    j.at("construction").get_to(r.construction);
    r.construction_count = CopyCount(j.at("construction_count").get<std::string>());
    j.at("mode").get_to(r.mode);
    j.at("verdict").get_to(r.verdict);
    j.at("degenerate").get_to(r.degenerate);
    j.at("witnesses").get_to(r.witnesses);
    j.at("ffree_count").get_to(r.ffree_count);
    r.descriptor.reset();
    if (j.contains("descriptor")) r.descriptor = j.at("descriptor").get<ConstructionDescriptor>();
    r.oracle_count.reset();
    if (j.contains("oracle_count")) r.oracle_count = CopyCount(j.at("oracle_count").get<std::string>());
    r.timings_ms.clear();
    for (const auto& entry : j.at("timings_ms"))
        r.timings_ms.emplace_back(entry.at("phase").get<std::string>(), entry.at("ms").get<double>());
}

inline std::string to_jsonl(const VerificationReport& r) {
    nlohmann::json j = r;
    return j.dump();
}

inline VerificationReport report_from_jsonl(const std::string& line) {
    return nlohmann::json::parse(line).get<VerificationReport>();
}

/// Human-readable rendering of a report.
inline void render_text(std::ostream& out, const VerificationReport& r) {
    out << "order            " << r.n << "\n"
        << "pattern          " << r.pattern << "\n"
        << "forbidden        " << r.forbidden << "  (chi=" << r.chi << ", sigma=" << r.sigma << ")\n";
    out << "pair family     ";
    if (r.pair_family.empty()) out << " (none)";
    for (const auto& p : r.pair_family) out << " " << p;
    out << "\n";
    out << "variant          " << r.variant << "\n"
        << "construction     " << r.construction;
    if (r.descriptor) {
        out << "  = K_" << r.descriptor->apex_clique << " joined to parts [";
        for (std::size_t i = 0; i < r.descriptor->part_sizes.size(); ++i)
            out << (i ? "," : "") << r.descriptor->part_sizes[i];
        out << "]";
    }
    out << "\n";
    if (r.degenerate) out << "note             pattern contains the forbidden graph; every count is zero\n";
    out << "construction has " << r.construction_count.str() << " copies\n";
    if (r.oracle_count)
        out << "oracle (" << r.mode << ")   optimum " << r.oracle_count->str() << " over "
            << (r.ffree_count >= 0 ? std::to_string(r.ffree_count) + " classes" : std::string("sampled graphs")) << "\n";
    if (!r.witnesses.empty()) {
        out << "witnesses       ";
        for (const auto& w : r.witnesses) out << " " << w;
        out << "\n";
    }
    out << "verdict          " << r.verdict << "\n";
}

}  // namespace turan
