#include <turan/constructions.hpp>
#include <turan/report.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <algorithm>
#include <sstream>

using namespace turan;

namespace {

VerifyOptions stars_under_square() {
    VerifyOptions opts;
    opts.n = 5;
    opts.pattern = complete_multipartite({1, 3});
    opts.forbidden = cycle_graph(4);
    return opts;
}

bool has_phase(const VerificationReport& r, const std::string& label) {
    return std::any_of(r.timings_ms.begin(), r.timings_ms.end(), [&](const auto& t) { return t.first == label; });
}

}  // namespace

TEST_CASE("exact verification of the star count under a forbidden square") {
    const VerificationReport r = verify_instance(stars_under_square());
    REQUIRE(r.verdict == kVerdictMatches);
    REQUIRE(r.n == 5);
    REQUIRE(r.chi == 2);
    REQUIRE(r.sigma == 2);
    REQUIRE(r.pair_family == std::vector<std::string>{canonical_form(cycle_graph(4))});
    REQUIRE(r.variant == "extremal");
    REQUIRE(r.descriptor == ConstructionDescriptor{1, {4}});
    REQUIRE(r.construction == graph6_encode(kbar(1, 4)));
    REQUIRE(r.construction_count == 4);
    REQUIRE(r.oracle_count.has_value());
    REQUIRE(*r.oracle_count == 4);
    REQUIRE(r.ffree_count == 18);
    REQUIRE(r.witnesses.size() == 3);
    REQUIRE_FALSE(r.degenerate);
    REQUIRE(has_phase(r, "profile"));
    REQUIRE(has_phase(r, "construct"));
    REQUIRE(has_phase(r, "count"));
    REQUIRE(has_phase(r, "oracle"));
}

TEST_CASE("reports survive a JSONL round trip unchanged") {
    const VerificationReport r = verify_instance(stars_under_square());
    const std::string line = to_jsonl(r);
    REQUIRE(line.find('\n') == std::string::npos);
    REQUIRE(report_from_jsonl(line) == r);
}

TEST_CASE("tampered schemas are rejected") {
    auto j = nlohmann::json::parse(to_jsonl(verify_instance(stars_under_square())));
    j["schema"] = "turan.report/2";
    REQUIRE_THROWS_AS(report_from_jsonl(j.dump()), std::invalid_argument);
}

TEST_CASE("heuristic verification agrees on the two-class optimum") {
    VerifyOptions opts;
    opts.n = 5;
    opts.pattern = clique(2);
    opts.forbidden = clique(3);
    opts.mode = VerifyMode::heuristic;
    opts.max_steps = 300;
    opts.restarts = 2;
    opts.seed = 7;
    const VerificationReport r = verify_instance(opts);
    REQUIRE(r.variant == "extremal");
    REQUIRE(r.descriptor == ConstructionDescriptor{0, {3, 2}});
    REQUIRE(r.construction_count == 6);
    REQUIRE(*r.oracle_count == 6);
    REQUIRE(r.verdict == kVerdictMatches);
    REQUIRE(r.ffree_count == -1);  // no exhaustive enumeration ran
    REQUIRE(r.witnesses.empty());
}

TEST_CASE("mode none skips the oracle") {
    VerifyOptions opts = stars_under_square();
    opts.mode = VerifyMode::none;
    const VerificationReport r = verify_instance(opts);
    REQUIRE(r.verdict == kVerdictSkipped);
    REQUIRE_FALSE(r.oracle_count.has_value());
    REQUIRE(r.ffree_count == -1);
    REQUIRE(r.construction_count == 4);
    REQUIRE_FALSE(has_phase(r, "oracle"));
}

TEST_CASE("a deliberately bad construction is reported below the oracle") {
    VerifyOptions opts;
    opts.n = 5;
    opts.pattern = clique(2);
    opts.forbidden = clique(3);
    opts.variant = "kbar";
    opts.sigma_override = 1;  // forces the edgeless construction
    const VerificationReport r = verify_instance(opts);
    REQUIRE(r.variant == "kbar");
    REQUIRE(r.construction_count == 0);
    REQUIRE(*r.oracle_count == 6);
    REQUIRE(r.verdict == kVerdictBelowOracle);
}

TEST_CASE("the star variant splits into near-equal cliques") {
    VerifyOptions opts;
    opts.n = 7;
    opts.pattern = clique(3);
    opts.forbidden = complete_multipartite({1, 3});
    const VerificationReport r = verify_instance(opts);
    REQUIRE(r.variant == "star");
    REQUIRE_FALSE(r.descriptor.has_value());
    REQUIRE(r.construction_count == 2);  // two disjoint triangles and a spare vertex
    REQUIRE(*r.oracle_count == 2);
    REQUIRE(r.verdict == kVerdictMatches);
}

TEST_CASE("degenerate instances still verify cleanly") {
    VerifyOptions opts;
    opts.n = 4;
    opts.pattern = cycle_graph(4);
    opts.forbidden = path_graph(3);  // every four-cycle contains a two-edge path
    const VerificationReport r = verify_instance(opts);
    REQUIRE(r.degenerate);
    REQUIRE(r.variant == "star");  // a two-edge path is the two-leaf star
    REQUIRE(r.construction_count == 0);
    REQUIRE(*r.oracle_count == 0);
    REQUIRE(r.verdict == kVerdictMatches);
    REQUIRE(r.ffree_count == 3);  // the three matchings on four vertices
}

TEST_CASE("verification rejects unusable inputs") {
    VerifyOptions opts = stars_under_square();
    SECTION("negative order") {
        opts.n = -1;
        REQUIRE_THROWS_AS(verify_instance(opts), std::invalid_argument);
    }
    SECTION("empty forbidden graph") {
        opts.forbidden = Graph(0);
        REQUIRE_THROWS_AS(verify_instance(opts), std::invalid_argument);
    }
    SECTION("edgeless forbidden graph") {
        opts.forbidden = empty_graph(2);
        REQUIRE_THROWS_AS(verify_instance(opts), std::invalid_argument);
    }
    SECTION("unknown variant") {
        opts.variant = "bogus";
        REQUIRE_THROWS_AS(verify_instance(opts), std::invalid_argument);
    }
    SECTION("star variant needs a star") {
        opts.forbidden = clique(3);
        opts.variant = "star";
        REQUIRE_THROWS_AS(verify_instance(opts), std::invalid_argument);
    }
    SECTION("kbar needs a positive class size") {
        opts.variant = "kbar";
        opts.sigma_override = 0;
        REQUIRE_THROWS_AS(verify_instance(opts), std::invalid_argument);
    }
    SECTION("a construction that contains the forbidden graph is refused") {
        opts.forbidden = clique(2);
        opts.pattern = clique(1);
        opts.variant = "kbar";
        opts.sigma_override = 2;  // apex + independent set has edges, which the forbidden K2 matches
        REQUIRE_THROWS_AS(verify_instance(opts), std::invalid_argument);
    }
}

TEST_CASE("mode strings round-trip") {
    for (VerifyMode m : {VerifyMode::exact, VerifyMode::heuristic, VerifyMode::none})
        REQUIRE(verify_mode_from_string(to_string(m)) == m);
    REQUIRE_THROWS_AS(verify_mode_from_string("quick"), std::invalid_argument);
}

TEST_CASE("text rendering carries the verdict and the construction") {
    const VerificationReport r = verify_instance(stars_under_square());
    std::ostringstream out;
    render_text(out, r);
    const std::string text = out.str();
    REQUIRE(text.find("verdict          matches") != std::string::npos);
    REQUIRE(text.find(r.construction) != std::string::npos);
    REQUIRE(text.find("chi=2") != std::string::npos);
}
