#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corpus.hpp"
#include "zdga/theorems.hpp"

using namespace zdga;

namespace {

const TheoremCase* find_case(const std::vector<TheoremCase>& cases, const std::string& id,
                             const std::string& spec) {
    for (const auto& c : cases)
        if (c.theorem_id == id && c.spec_text == spec) return &c;
    return nullptr;
}

} // namespace

TEST_CASE("generated families include the expected representatives") {
    auto cases = generate_cases(64);
    const TheoremCase* c = find_case(cases, "FxK", "GF(4)xGF(4)");
    REQUIRE(c);
    CHECK(c->predicted_psi_g == 3);
    REQUIRE(c->predicted_gamma_a.has_value());
    CHECK(*c->predicted_gamma_a == 2);

    c = find_case(cases, "Z2Z2xF", "Z2xZ2xZ5");
    REQUIRE(c);
    CHECK(c->predicted_psi_g == 1);

    auto wide = generate_cases(128);
    c = find_case(wide, "FxLOCAL", "Z3xZ9");
    REQUIRE(c);
    CHECK(c->predicted_psi_g == 2);
    c = find_case(wide, "FxLOCAL", "Z3xZ4");
    REQUIRE(c);
    CHECK(c->predicted_psi_g == 1);

    // Output is sorted by (theorem id, spec text) and duplicate-free.
    for (std::size_t i = 1; i < cases.size(); ++i) {
        auto key = [](const TheoremCase& t) { return std::pair(t.theorem_id, t.spec_text); };
        CHECK(key(cases[i - 1]) < key(cases[i]));
    }
}

TEST_CASE("gamma_a predictions follow the closed forms") {
    auto cases = generate_cases(64);
    for (auto [spec, expected] :
         {std::pair<const char*, int>{"Z8", 2}, {"Z16", 4}, {"Z27", 4}, {"Z25", 2}}) {
        bool found = false;
        for (const auto& c : cases)
            if (c.spec_text == spec && c.predicted_gamma_a) {
                CHECK(*c.predicted_gamma_a == expected);
                found = true;
            }
        CAPTURE(spec);
        CHECK(found);
    }
}

TEST_CASE("construction replays") {
    SUBCASE("Z27 splits the valuation classes in half") {
        PartitionCertificate cert = construct_known_partition("ZPN", parse("Z27"));
        REQUIRE(cert.class_count() == 2);
        CHECK(cert.classes[0].members.count() == 4);
        CHECK(cert.classes[1].members.count() == 4);
        verify_certificate(build_graph(build_ring("Z27")), cert);
    }

    SUBCASE("Z2xZ4 uses the explicit 2/3 split") {
        PartitionCertificate cert = construct_known_partition("Z2xLOCAL", parse("Z2xZ4"));
        ZeroDivisorGraph g = build_graph(build_ring("Z2xZ4"));
        verify_certificate(g, cert);
        CHECK(cert.classes[0].members == tests::vertex_set(g, {"(1,0)", "(0,2)"}));
        CHECK(cert.classes[1].members == tests::vertex_set(g, {"(0,1)", "(0,3)", "(1,2)"}));
    }

    SUBCASE("two-vertex local rings force singleton halves") {
        PartitionCertificate cert = construct_known_partition("LOCAL_M2", parse("Z3[x]/(x^2)"));
        ZeroDivisorGraph g = build_graph(build_ring("Z3[x]/(x^2)"));
        verify_certificate(g, cert);
        CHECK(cert.classes[0].members == tests::vertex_set(g, {"x"}));
        CHECK(cert.classes[1].members == tests::vertex_set(g, {"2x"}));
    }

    SUBCASE("non-partitionable cases are refused") {
        CHECK_THROWS_AS(construct_known_partition("LOCAL_M2", parse("Z4")), NotApplicableError);
        CHECK_THROWS_AS(construct_known_partition("FxLOCAL", parse("Z3xZ4")), NotApplicableError);
        CHECK_THROWS_AS(construct_known_partition("NOPE", parse("Z9")), NotApplicableError);
    }
}

TEST_CASE("every partitionable generated case has a verified construction") {
    SuiteOptions options;
    options.max_ring_order = 32;
    TheoremReport report = run_suite(options);
    CHECK(report.total > 20);
    CHECK(report.mismatched == 0);
    for (const auto& c : report.cases) {
        if (c.skipped || !c.has_construction) continue;
        CAPTURE(c.theorem_id);
        CAPTURE(c.spec_text);
        REQUIRE(c.construction_verified.has_value());
        CHECK(*c.construction_verified);
        CHECK(c.constructed_classes == c.predicted_psi_g);
        // The solver can never beat an explicitly constructed partition.
        CHECK(*c.computed_psi_g >= c.constructed_classes);
    }
}

TEST_CASE("restricting the order cap restricts the case list") {
    auto small = run_suite({16, 28, 24});
    CHECK(small.mismatched == 0);
    CHECK(small.total < static_cast<int>(generate_cases(64).size()));
    for (const auto& c : small.cases) CHECK(build_ring(c.spec_text).order <= 16);
}

TEST_CASE("a corrupted prediction surfaces as a mismatch, not an error") {
    auto cases = generate_cases(16);
    bool corrupted = false;
    for (auto& c : cases)
        if (c.spec_text == "Z9") {
            c.predicted_psi_g = 3; // deliberately wrong
            c.has_construction = false;
            corrupted = true;
        }
    REQUIRE(corrupted);
    TheoremReport report = evaluate_cases(cases, {});
    CHECK(report.mismatched >= 1);
    CHECK_FALSE(report.all_match());
    const TheoremCase* z9 = nullptr;
    for (const auto& c : report.cases)
        if (c.spec_text == "Z9" && !c.match) z9 = &c;
    REQUIRE(z9);
    CHECK(*z9->computed_psi_g == 2);
}

TEST_CASE("suite runs are deterministic") {
    SuiteOptions options;
    options.max_ring_order = 24;
    TheoremReport a = run_suite(options);
    TheoremReport b = run_suite(options);
    REQUIRE(a.cases.size() == b.cases.size());
    for (std::size_t i = 0; i < a.cases.size(); ++i) {
        CHECK(a.cases[i].theorem_id == b.cases[i].theorem_id);
        CHECK(a.cases[i].spec_text == b.cases[i].spec_text);
        CHECK(a.cases[i].computed_psi_g == b.cases[i].computed_psi_g);
        CHECK(a.cases[i].match == b.cases[i].match);
    }
}
