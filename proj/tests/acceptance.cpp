// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Built as a plain executable so the output stays a flat list.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "corpus.hpp"
#include "zdga/report.hpp"

using namespace zdga;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    std::printf("%s criterion %2d: %s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                note.c_str());
    if (!ok) ++failures;
}

int psi(const std::string& spec) {
    ZeroDivisorGraph g = build_graph(build_ring(spec));
    return psi_g(g, alliance_number(g).value).value;
}

int gamma_a(const std::string& spec) {
    return alliance_number(build_graph(build_ring(spec))).value;
}

bool expect_psi(const std::vector<std::pair<std::string, int>>& fixtures) {
    bool ok = true;
    for (const auto& [spec, expected] : fixtures) {
        int got = psi(spec);
        if (got != expected) {
            std::fprintf(stderr, "  psi_g(%s) = %d, expected %d\n", spec.c_str(), got, expected);
            ok = false;
        }
    }
    return ok;
}

std::string cli_path() {
    return ZDGA_CLI_PATH;
}

int run_cli(const std::string& args) {
    std::string cmd = "\"" + cli_path() + "\" " + args;
    int rc = std::system(cmd.c_str());
    return rc < 0 ? rc : WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

} // namespace

int main() {
    criterion(1, "prime-power psi_g fixtures", [] {
        return expect_psi({{"Z4", 1},
                           {"Z8", 1},
                           {"Z16", 1},
                           {"Z9", 2},
                           {"Z25", 2},
                           {"Z27", 2},
                           {"Z49", 2},
                           {"Z125", 2}});
    });

    criterion(2, "gamma_a closed-form cross-checks", [] {
        bool ok = gamma_a("Z8") == 2 && gamma_a("Z16") == 4 && gamma_a("Z27") == 4 &&
                  gamma_a("Z125") == 12 && gamma_a("Z25") == 2;
        for (int q1 : {3, 4, 5, 7})
            for (int q2 : {3, 4, 5, 7}) {
                if (q2 < q1) continue;
                auto f = [](int q) { return q == 4 ? std::string("GF(4)") : "Z" + std::to_string(q); };
                int expected = (q1 - 1) / 2 + (q2 - 1) / 2;
                if (gamma_a(f(q1) + "x" + f(q2)) != expected) ok = false;
            }
        return ok;
    });

    criterion(3, "Z2 x field family", [] {
        return expect_psi(
            {{"Z2xZ2", 2}, {"Z2xZ3", 1}, {"Z2xGF(4)", 1}, {"Z2xZ5", 1}, {"Z2xZ7", 1}});
    });

    criterion(4, "Z2 x local family", [] {
        return expect_psi(
            {{"Z2xZ4", 2}, {"Z2xZ2[x]/(x^2)", 2}, {"Z2xZ9", 1}, {"Z2xZ8", 1}});
    });

    criterion(5, "field x field family", [] {
        return expect_psi({{"GF(4)xGF(4)", 3},
                           {"Z3xZ3", 2},
                           {"Z3xGF(4)", 2},
                           {"Z3xZ5", 2},
                           {"Z5xZ5", 2},
                           {"Z3xZ7", 2},
                           {"Z5xGF(4)", 2}});
    });

    criterion(6, "field x local family and idealizations", [] {
        return expect_psi({{"Z3xZ9", 2},
                           {"Z5xZ9", 2},
                           {"Z3xZ4", 1},
                           {"Z5xZ4", 1},
                           {"Z3x(Z3(+)Z3)", 2},
                           {"Z3x(Z2(+)Z2)", 1}});
    });

    criterion(7, "three-factor families", [] {
        return expect_psi({{"Z2xZ2xZ2", 2},
                           {"Z2xZ2xZ3", 2},
                           {"Z2xZ2xGF(4)", 2},
                           {"Z2xZ2xZ5", 1},
                           {"Z2xZ3xZ3", 1}});
    });

    criterion(8, "classification representatives", [] {
        bool ok = true;
        for (const char* spec : {"Z2xZ2", "Z9", "Z3[x]/(x^2)"}) {
            FiniteRing ring = build_ring(spec);
            ok = ok && gamma_a(spec) == 1 && zero_divisors(ring).size() == 3 && psi(spec) == 2;
        }
        for (const char* spec :
             {"Z2xZ4", "Z2xZ2[x]/(x^2)", "Z3xZ3", "Z3xGF(4)", "Z25", "Z5[x]/(x^2)"})
            ok = ok && gamma_a(spec) == 2 && psi(spec) == 2;
        ok = ok && gamma_a("GF(4)xGF(4)") == 2 && psi("GF(4)xGF(4)") == 3;
        return ok;
    });

    criterion(9, "solver agrees with set-partition enumeration (|V| <= 10)", [] {
        bool ok = true;
        for (const auto& spec : tests::corpus_specs()) {
            ZeroDivisorGraph g = build_graph(build_ring(spec));
            if (g.vertex_count() == 0 || g.vertex_count() > 10) continue;
            if (psi_g(g).value != psi_g_bruteforce(g)) {
                std::fprintf(stderr, "  oracle disagreement on %s\n", spec.c_str());
                ok = false;
            }
        }
        return ok;
    });

    criterion(10, "bound inequalities on every corpus graph", [] {
        bool ok = true;
        for (const auto& spec : tests::corpus_specs()) {
            ZeroDivisorGraph g = build_graph(build_ring(spec));
            auto dom = domination_number(g);
            auto gda = alliance_number(g);
            int value = psi_g(g, gda.value).value;
            int zcount = g.vertex_count() + 1;
            if (!(zcount >= value * value - value + 1) || !(gda.value * value <= g.vertex_count()) ||
                !(value <= (min_degree(g) + 3) / 2) || !(gda.value >= dom.value)) {
                std::fprintf(stderr, "  bound violation on %s\n", spec.c_str());
                ok = false;
            }
        }
        return ok;
    });

    criterion(11, "explicit constructions pass independent re-verification", [] {
        const std::vector<std::pair<std::string, std::string>> constructions = {
            {"ZPN", "Z27"},          {"ZPN", "Z125"},
            {"FxK", "Z3xZ3"},        {"FxK", "Z3xGF(4)"},
            {"FxK", "GF(4)xGF(4)"},  {"FxK", "Z3xZ5"},
            {"FxLOCAL", "Z3xZ9"},    {"Z2xLOCAL", "Z2xZ4"},
            {"LOCAL_M2", "Z9"},      {"LOCAL_M2", "Z3[x]/(x^2)"},
            {"LOCAL_M2", "Z3(+)Z3"}, {"Z2Z2xF", "Z2xZ2xZ3"},
        };
        bool ok = true;
        for (const auto& [id, spec] : constructions) {
            PartitionCertificate cert = construct_known_partition(id, parse(spec));
            ZeroDivisorGraph g = build_graph(build_ring(spec));
            try {
                verify_certificate(g, cert);
            } catch (const VerificationError&) {
                std::fprintf(stderr, "  construction %s on %s failed verification\n", id.c_str(),
                             spec.c_str());
                ok = false;
            }
            if (cert.class_count() < 2) ok = false;
        }
        return ok;
    });

    criterion(12, "property suites (axioms, predicate forms, merge closure, determinism)", [] {
        bool ok = true;

        // Ring axioms across 50+ generated rings.
        std::vector<FiniteRing> rings;
        for (int n = 2; n <= 40; ++n) rings.push_back(build_zn(n));
        for (const char* spec : {"GF(4)", "GF(8)", "GF(9)", "GF(27)", "Z2[x]/(x^2)",
                                 "Z3[x]/(x^2)", "Z5[x]/(x^2)", "Z2[x]/(x^3)", "Z2xZ4", "Z3xZ9",
                                 "Z2xZ3xZ5", "Z2(+)Z2", "Z3(+)Z3^2", "Z3x(Z3(+)Z3)"})
            rings.push_back(build_ring(spec));
        if (rings.size() < 50) ok = false;
        for (const auto& ring : rings)
            if (!verify_ring_axioms(ring).all_pass()) {
                std::fprintf(stderr, "  axiom failure in %s\n", ring.spec_text.c_str());
                ok = false;
            }

        // The two defensive-alliance inequality forms agree on 1000
        // random (graph, S) pairs.
        std::mt19937 rng(424242);
        auto graphs = tests::corpus_graphs();
        int pairs = 0;
        while (pairs < 1000) {
            const ZeroDivisorGraph& g = graphs[pairs % graphs.size()];
            int n = g.vertex_count();
            VertexSet s(n);
            std::uniform_int_distribution<int> coin(0, 1);
            for (int v = 0; v < n; ++v)
                if (coin(rng)) s.set(v);
            if (s.count() == 0) s.set(std::uniform_int_distribution<int>(0, n - 1)(rng));
            ++pairs;
            bool alt = true;
            s.for_each([&](int v) {
                int dout = g.degrees[v] - g.adjacency[v].intersection_count(s);
                if (g.degrees[v] + 1 < 2 * dout) alt = false;
            });
            if (is_defensive(g, s) != alt) ok = false;
        }

        // Merge closure on every certificate the solver produces.
        for (const auto& spec : tests::corpus_specs()) {
            ZeroDivisorGraph g = build_graph(build_ring(spec));
            PartitionCertificate cert = psi_g(g, alliance_number(g).value).certificate;
            for (int i = 0; i < cert.class_count(); ++i)
                for (int j = i + 1; j < cert.class_count(); ++j)
                    if (!is_global_defensive_alliance(g, cert.classes[i].members |
                                                             cert.classes[j].members))
                        ok = false;
        }

        // Two CLI runs with --no-timing produce identical bytes.
        std::string out1 = "acceptance_run1.json", out2 = "acceptance_run2.json";
        if (run_cli("analyze Z2xZ4 --json " + out1 + " --certificate --no-timing") != 0) ok = false;
        if (run_cli("analyze Z2xZ4 --json " + out2 + " --certificate --no-timing") != 0) ok = false;
        std::string b1 = slurp(out1), b2 = slurp(out2);
        if (b1.empty() || b1 != b2) ok = false;
        std::remove(out1.c_str());
        std::remove(out2.c_str());
        return ok;
    });

    criterion(13, "verify-theorems --max-order 64 exits 0", [] {
        return run_cli("verify-theorems --max-order 64 > acceptance_theorems.txt") == 0;
    });
    std::remove("acceptance_theorems.txt");

    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
