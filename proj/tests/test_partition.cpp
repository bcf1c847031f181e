#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corpus.hpp"
#include "zdga/partition.hpp"

using namespace zdga;
using tests::vertex_set;

TEST_CASE("upper bound formulas") {
    ZeroDivisorGraph k33 = build_graph(build_ring("GF(4)xGF(4)"));
    CHECK(psi_g_upper_bound(k33, 2) == 3); // min(3, 3, 3)

    ZeroDivisorGraph g = build_graph(build_ring("Z2xZ4"));
    CHECK(psi_g_upper_bound(g, alliance_number(g).value) <= 2); // min-degree bound

    ZeroDivisorGraph z9 = build_graph(build_ring("Z9"));
    CHECK(psi_g_upper_bound(z9, 1) == 2); // 2^2 - 2 <= 2

    CHECK_THROWS_AS(psi_g_upper_bound(z9, 0), Error);
}

TEST_CASE("find_partition fixtures") {
    ZeroDivisorGraph g = build_graph(build_ring("Z2xZ4"));
    auto cert = find_partition(g, 2);
    REQUIRE(cert.has_value());
    CHECK(cert->class_count() == 2);
    verify_certificate(g, *cert);

    CHECK_FALSE(find_partition(g, 3).has_value());
    CHECK(find_partition(g, 1)->classes[0].members == VertexSet::full(g.vertex_count()));
    CHECK_FALSE(find_partition(build_graph(build_ring("Z2xZ3")), 2).has_value());
    CHECK_FALSE(find_partition(g, 99).has_value());
    CHECK_THROWS_AS(find_partition(build_graph(build_ring("Z5")), 1), EmptyGraphError);
}

TEST_CASE("psi_g fixtures") {
    CHECK(psi_g(build_graph(build_ring("Z9"))).value == 2);
    CHECK(psi_g(build_graph(build_ring("GF(4)xGF(4)"))).value == 3);
    CHECK(psi_g(build_graph(build_ring("Z4"))).value == 1);
    CHECK(psi_g(build_graph(build_ring("Z25"))).value == 2);
}

TEST_CASE("brute-force enumeration fixtures") {
    CHECK(psi_g_bruteforce(build_graph(build_ring("Z9"))) == 2);
    CHECK(psi_g_bruteforce(build_graph(build_ring("Z2xZ4"))) == 2);
    CHECK(psi_g_bruteforce(build_graph(build_ring("GF(4)xGF(4)"))) == 3);
    CHECK_THROWS_AS(psi_g_bruteforce(build_graph(build_ring("Z2xZ2xGF(4)"))), SizeLimitError);
}

TEST_CASE("solver agrees with enumeration on all small corpus graphs") {
    for (const auto& spec : tests::corpus_specs()) {
        ZeroDivisorGraph g = build_graph(build_ring(spec));
        if (g.vertex_count() == 0 || g.vertex_count() > 10) continue;
        CAPTURE(spec);
        CHECK(psi_g(g).value == psi_g_bruteforce(g));
    }
}

TEST_CASE("bound and certificate properties over the corpus") {
    for (const auto& spec : tests::corpus_specs()) {
        CAPTURE(spec);
        FiniteRing ring = build_ring(spec);
        ZeroDivisorGraph g = build_graph(ring);
        int gamma_a = alliance_number(g).value;
        auto [value, cert] = psi_g(g, gamma_a);

        CHECK(value <= psi_g_upper_bound(g, gamma_a));
        // |Z(R)| >= psi^2 - psi + 1, with |Z(R)| = |V| + 1.
        CHECK(g.vertex_count() + 1 >= value * value - value + 1);
        CHECK(gamma_a * value <= g.vertex_count());

        verify_certificate(g, cert);
        CHECK(cert.class_count() == value);

        // Merging any two classes preserves the alliance property.
        for (int i = 0; i < cert.class_count(); ++i)
            for (int j = i + 1; j < cert.class_count(); ++j)
                CHECK(is_global_defensive_alliance(
                    g, cert.classes[i].members | cert.classes[j].members));

        // Partitionability is monotone downward in the class count.
        for (int r = value; r >= 1; --r) CHECK(find_partition(g, r).has_value());
    }
}

TEST_CASE("certificates detect tampering") {
    ZeroDivisorGraph g = build_graph(build_ring("Z2xZ4"));
    PartitionCertificate cert = *find_partition(g, 2);

    PartitionCertificate bad = cert;
    bad.classes[0].stats[0].deg_in += 1;
    CHECK_THROWS_AS(verify_certificate(g, bad), VerificationError);

    bad = cert;
    bad.classes.pop_back();
    CHECK_THROWS_AS(verify_certificate(g, bad), VerificationError);

    bad = cert;
    bad.graph_hash ^= 1;
    CHECK_THROWS_AS(verify_certificate(g, bad), VerificationError);

    // A certificate checked against a different graph must fail.
    ZeroDivisorGraph other = build_graph(build_ring("Z3xZ3"));
    CHECK_THROWS_AS(verify_certificate(other, cert), VerificationError);

    // Non-alliance classes are rejected at construction time.
    VertexSet a = vertex_set(g, {"(0,1)"});
    CHECK_THROWS_AS(make_certificate(g, {a, a.complement()}), VerificationError);
}

TEST_CASE("solver output is deterministic") {
    for (const char* spec : {"Z2xZ4", "Z27", "GF(4)xGF(4)", "Z2xZ2xZ3"}) {
        CAPTURE(spec);
        ZeroDivisorGraph g = build_graph(build_ring(spec));
        auto r1 = psi_g(g);
        auto r2 = psi_g(g);
        CHECK(r1.value == r2.value);
        REQUIRE(r1.certificate.class_count() == r2.certificate.class_count());
        for (int i = 0; i < r1.certificate.class_count(); ++i)
            CHECK(r1.certificate.classes[i].members == r2.certificate.classes[i].members);
    }
}
