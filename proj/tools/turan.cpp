// Command-line front end: analyze forbidden graphs, build candidate
// constructions, count pattern copies, test containment, enumerate
// F-free isomorphism classes, and verify constructions against an
// oracle. Exit codes: 0 success, 2 usage/parse error, 3 capacity
// refusal, 4 construction below oracle, 5 internal invariant failure.

#include <turan/turan.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitAnomaly = 4;
constexpr int kExitInternal = 5;

turan::Graph parse_or_usage(const std::string& spec, const char* what) {
    try {
        return turan::parse_pattern(spec);
    } catch (const turan::parse_error& e) {
        throw std::invalid_argument(std::string(what) + " '" + spec + "': " + e.what());
    }
}

/// Apply fn to the host argument, or to every graph6 line on stdin
/// when the argument is "-".
template <typename Fn>
void for_each_host(const std::string& host_spec, Fn&& fn) {
    if (host_spec != "-") {
        fn(parse_or_usage(host_spec, "host"));
        return;
    }
    std::string line;
    while (std::getline(std::cin, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        fn(turan::graph6_decode(line));
    }
}

struct AnalyzeArgs {
    std::string forbidden;
    bool json = false;
};

int run_analyze(const AnalyzeArgs& args) {
    const turan::Graph f = parse_or_usage(args.forbidden, "forbidden");
    if (f.order() == 0) throw std::invalid_argument("analyze: graph must have at least one vertex");
    const turan::ChromaticProfile profile = turan::chromatic_profile(f);
    const auto size_profiles = turan::coloring_size_profiles(f);

    if (args.json) {
        nlohmann::json j{{"schema", "turan.analyze/1"},
                         {"graph", turan::canonical_form(f)},
                         {"n", f.order()},
                         {"edges", f.edge_count()},
                         {"chi", profile.chi},
                         {"sigma", profile.sigma},
                         {"pair_family", profile.pair_family}};
        auto& profiles = j["size_profiles"] = nlohmann::json::array();
        for (const auto& [sizes, count] : size_profiles)
            profiles.push_back({{"sizes", sizes}, {"colorings", count}});
        std::cout << j.dump() << "\n";
        return kExitSuccess;
    }

    std::cout << "graph       " << turan::canonical_form(f) << "  (n=" << f.order() << ", m=" << f.edge_count() << ")\n";
    std::cout << "chi         " << profile.chi << "\n";
    std::cout << "sigma       " << profile.sigma << "\n";
    long long total = 0;
    for (const auto& [sizes, count] : size_profiles) total += count;
    std::cout << "colorings   " << total << " optimal";
    for (const auto& [sizes, count] : size_profiles) {
        std::cout << "; sizes ";
        for (std::size_t i = 0; i < sizes.size(); ++i) std::cout << (i ? "+" : "") << sizes[i];
        std::cout << " (x" << count << ")";
    }
    std::cout << "\n";
    std::cout << "pair family ";
    if (profile.pair_family.empty()) std::cout << "(none)";
    for (const auto& p : profile.pair_family) std::cout << p << " ";
    std::cout << "\n";
    return kExitSuccess;
}

struct ConstructArgs {
    int n = 0;
    std::string forbidden;
    std::string variant = "auto";
    std::optional<int> sigma_override;
    bool json = false;
};

int run_construct(const ConstructArgs& args) {
    const turan::Graph f = parse_or_usage(args.forbidden, "forbidden");
    if (f.order() == 0 || f.edge_count() == 0)
        throw std::invalid_argument("construct: forbidden graph must have at least one edge");
    const turan::ChromaticProfile profile = turan::chromatic_profile(f);
    const auto built = turan::detail::build_construction(args.variant, profile, f, args.n, args.sigma_override);
    if (turan::contains(built.graph, f))
        throw std::invalid_argument("construct: the selected construction contains the forbidden graph (bad variant/s choice)");

    if (args.json) {
        nlohmann::json j{{"schema", "turan.construct/1"},
                         {"n", args.n},
                         {"forbidden", turan::canonical_form(f)},
                         {"variant", built.variant},
                         {"construction", turan::graph6_encode(built.graph)},
                         {"edges", built.graph.edge_count()}};
        if (built.descriptor) turan::to_json(j["descriptor"], *built.descriptor);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << turan::graph6_encode(built.graph) << "\n";
    }
    return kExitSuccess;
}

struct CountArgs {
    std::string pattern;
    std::string host;
    int threads = 1;
};

int run_count(const CountArgs& args) {
    const turan::Graph h = parse_or_usage(args.pattern, "pattern");
    for_each_host(args.host, [&](const turan::Graph& g) {
        std::cout << turan::count_copies(h, g, args.threads).str() << "\n";
    });
    return kExitSuccess;
}

struct ContainsArgs {
    std::string forbidden;
    std::string host;
};

int run_contains(const ContainsArgs& args) {
    const turan::Graph f = parse_or_usage(args.forbidden, "forbidden");
    for_each_host(args.host, [&](const turan::Graph& g) {
        std::cout << (turan::contains(g, f) ? "true" : "false") << "\n";
    });
    return kExitSuccess;
}

struct GenerateArgs {
    int n = 0;
    std::string forbidden;
    int threads = 1;
    std::string checkpoint;
    bool count_only = false;
};

int run_generate(const GenerateArgs& args) {
    std::optional<turan::Graph> f;
    if (!args.forbidden.empty()) f = parse_or_usage(args.forbidden, "forbidden");
    turan::EnumOptions opts;
    opts.threads = args.threads;
    opts.checkpoint_path = args.checkpoint;
    const auto stats = turan::enumerate_ffree(args.n, f ? &*f : nullptr, opts,
                                              [&](const turan::Graph&, const std::string& form) {
                                                  if (!args.count_only) std::cout << form << "\n";
                                              });
    for (std::size_t k = 0; k < stats.level_counts.size(); ++k)
        std::cerr << "order " << k << ": " << stats.level_counts[k] << " classes\n";
    if (args.count_only) std::cout << stats.level_counts.back() << "\n";
    return kExitSuccess;
}

struct VerifyArgs {
    int n = 0;
    std::string pattern;
    std::string forbidden;
    std::string mode = "exact";
    std::string variant = "auto";
    std::optional<int> sigma_override;
    int threads = 1;
    std::uint64_t seed = 1;
    long long max_steps = 10000;
    int restarts = 1;
    std::string checkpoint;
    bool force = false;
    bool json = false;
};

int run_verify(const VerifyArgs& args) {
    turan::VerifyOptions opts;
    opts.n = args.n;
    opts.pattern = parse_or_usage(args.pattern, "pattern");
    opts.forbidden = parse_or_usage(args.forbidden, "forbidden");
    opts.mode = turan::verify_mode_from_string(args.mode);
    opts.variant = args.variant;
    opts.sigma_override = args.sigma_override;
    opts.threads = args.threads;
    opts.seed = args.seed;
    opts.max_steps = args.max_steps;
    opts.restarts = args.restarts;
    opts.checkpoint_path = args.checkpoint;
    opts.override_capacity = args.force;

    const turan::VerificationReport report = turan::verify_instance(opts);
    if (args.json) std::cout << turan::to_jsonl(report) << "\n";
    else turan::render_text(std::cout, report);
    return report.verdict == turan::kVerdictBelowOracle ? kExitAnomaly : kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for generalized Turan problems: constructions, copy counts, exhaustive verification"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "turan 1.0.0");

    AnalyzeArgs analyze_args;
    auto* analyze = app.add_subcommand("analyze", "chromatic profile of a forbidden graph");
    analyze->add_option("forbidden", analyze_args.forbidden, "graph (pattern shortcut or graph6)")->required();
    analyze->add_flag("--json", analyze_args.json, "machine-readable output");

    ConstructArgs construct_args;
    auto* construct = app.add_subcommand("construct", "build the candidate extremal construction");
    construct->add_option("--n", construct_args.n, "number of vertices")->required();
    construct->add_option("-F,--forbidden", construct_args.forbidden, "forbidden graph")->required();
    construct->add_option("--variant", construct_args.variant, "auto|extremal|kbar|star|turan (default auto)");
    construct->add_option("--s", construct_args.sigma_override, "override sigma for the kbar variant");
    construct->add_flag("--json", construct_args.json, "machine-readable output");

    CountArgs count_args;
    auto* count = app.add_subcommand("count", "count copies of a pattern in host graphs");
    count->add_option("-H,--pattern", count_args.pattern, "pattern graph")->required();
    count->add_option("host", count_args.host, "host graph, or - for graph6 lines on stdin")->required();
    count->add_option("--threads", count_args.threads, "worker threads");

    ContainsArgs contains_args;
    auto* contains = app.add_subcommand("contains", "test whether hosts contain a forbidden graph");
    contains->add_option("-F,--forbidden", contains_args.forbidden, "forbidden graph")->required();
    contains->add_option("host", contains_args.host, "host graph, or - for graph6 lines on stdin")->required();

    GenerateArgs generate_args;
    auto* generate = app.add_subcommand("generate", "enumerate F-free isomorphism classes");
    generate->add_option("--n", generate_args.n, "number of vertices")->required();
    generate->add_option("-F,--forbidden", generate_args.forbidden, "forbidden graph (omit for all classes)");
    generate->add_option("--threads", generate_args.threads, "worker threads");
    generate->add_option("--checkpoint", generate_args.checkpoint, "checkpoint file to write/resume");
    generate->add_flag("--count-only", generate_args.count_only, "print only the class count at order n");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "compare a construction against an oracle");
    verify->add_option("--n", verify_args.n, "number of vertices")->required();
    verify->add_option("-H,--pattern", verify_args.pattern, "pattern whose copies are counted")->required();
    verify->add_option("-F,--forbidden", verify_args.forbidden, "forbidden graph")->required();
    verify->add_option("--mode", verify_args.mode, "exact|heuristic|none (default exact)");
    verify->add_option("--variant", verify_args.variant, "auto|extremal|kbar|star|turan (default auto)");
    verify->add_option("--s", verify_args.sigma_override, "override sigma for the kbar variant");
    verify->add_option("--threads", verify_args.threads, "worker threads");
    verify->add_option("--seed", verify_args.seed, "hill-climb RNG seed");
    verify->add_option("--max-steps", verify_args.max_steps, "hill-climb step budget per restart");
    verify->add_option("--restarts", verify_args.restarts, "hill-climb restarts");
    verify->add_option("--checkpoint", verify_args.checkpoint, "checkpoint file for the exact oracle");
    verify->add_flag("--force", verify_args.force, "lift the exhaustive-search order cap");
    verify->add_flag("--json", verify_args.json, "machine-readable output (one JSON object per line)");

    try {
        app.parse(argc, argv);
        if (*analyze) return run_analyze(analyze_args);
        if (*construct) return run_construct(construct_args);
        if (*count) return run_count(count_args);
        if (*contains) return run_contains(contains_args);
        if (*generate) return run_generate(generate_args);
        if (*verify) return run_verify(verify_args);
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const turan::internal_invariant_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const turan::capacity_error& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const turan::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const turan::checkpoint_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const turan::precondition_error& e) {
        std::cerr << "precondition violated (" << e.clause << "): " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
}
