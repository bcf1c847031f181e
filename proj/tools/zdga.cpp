#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "zdga/report.hpp"

namespace {

// Exit-code contract, stable for CI:
//   0 ok, 1 theorem mismatch, 2 parse error, 3 cap exceeded,
//   4 verification/domain failure, 5 I/O error.
enum ExitCode {
    kOk = 0,
    kTheoremMismatch = 1,
    kParseError = 2,
    kCapExceeded = 3,
    kVerifyError = 4,
    kIoError = 5,
};

int default_max_order() {
    if (const char* env = std::getenv("ZDGA_MAX_ORDER")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<int>(v);
        std::cerr << "warning: ignoring malformed ZDGA_MAX_ORDER=" << env << "\n";
    }
    return zdga::kDefaultOrderCap;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open " + path + " for writing");
    out << content;
    if (!out.flush()) throw std::ios_base::failure("write to " + path + " failed");
}

int run(int argc, char** argv) {
    CLI::App app{"zero-divisor graph alliance analyzer"};
    app.require_subcommand(1);

    std::string spec_text;
    std::string json_path, dot_path;
    int max_order = default_max_order();
    int max_exact = 28;
    bool with_certificate = false;
    bool oracle = false;
    bool no_timing = false;

    auto* analyze = app.add_subcommand("analyze", "compute the alliance invariants of a ring");
    analyze->add_option("spec", spec_text, "ring spec, e.g. Z12 or Z3xGF(4)")->required();
    analyze->add_option("--json", json_path, "write the report as JSON to this path");
    analyze->add_option("--dot", dot_path, "write the graph as DOT to this path");
    analyze->add_flag("--certificate", with_certificate, "include the full certificate in JSON");
    analyze->add_option("--max-order", max_order, "ring order cap");
    analyze->add_option("--max-exact", max_exact, "exact-solve vertex cap");
    analyze->add_flag("--oracle", oracle, "cross-check psi_g exhaustively when |V| <= 10");
    analyze->add_flag("--no-timing", no_timing, "omit timings for byte-stable output");

    auto* verify = app.add_subcommand("verify-theorems", "run the theorem suite and compare");
    verify->add_option("--max-order", max_order, "ring order cap for generated cases");
    verify->add_option("--json", json_path, "write the report as JSON to this path");

    auto* graph = app.add_subcommand("graph", "export the zero-divisor graph as DOT");
    graph->add_option("spec", spec_text, "ring spec")->required();
    graph->add_option("--dot", dot_path, "output path (default: stdout)");
    graph->add_option("--max-order", max_order, "ring order cap");

    CLI11_PARSE(app, argc, argv);

    if (analyze->parsed()) {
        zdga::AnalysisOptions options;
        options.max_order = max_order;
        options.max_exact_vertices = max_exact;
        options.oracle = oracle;
        options.timing = !no_timing;
        zdga::AnalysisReport report = zdga::analyze(spec_text, options);
        std::cout << zdga::to_table(report);
        if (!json_path.empty()) write_file(json_path, zdga::to_json(report, with_certificate));
        if (!dot_path.empty()) {
            zdga::ZeroDivisorGraph g =
                zdga::build_graph(zdga::build_ring(spec_text, {max_order}));
            write_file(dot_path, zdga::export_dot(g));
        }
        return report.psi_g_status == zdga::PsiGStatus::NotComputedCap ? kCapExceeded : kOk;
    }

    if (verify->parsed()) {
        zdga::SuiteOptions options;
        options.max_ring_order = max_order;
        zdga::TheoremReport report = zdga::run_suite(options);
        std::cout << zdga::to_table(report);
        if (!json_path.empty()) write_file(json_path, zdga::to_json(report));
        if (!report.all_match()) {
            for (const auto& c : report.cases)
                if (c.evaluated && !c.match)
                    std::cerr << "mismatch: " << c.theorem_id << " " << c.spec_text << "\n";
            return kTheoremMismatch;
        }
        return kOk;
    }

    zdga::ZeroDivisorGraph g = zdga::build_graph(zdga::build_ring(spec_text, {max_order}));
    if (g.vertex_count() == 0)
        throw zdga::EmptyGraphError(spec_text + " has no nonzero zero-divisors");
    std::string dot = zdga::export_dot(g);
    if (dot_path.empty())
        std::cout << dot;
    else
        write_file(dot_path, dot);
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const zdga::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const zdga::SizeLimitError& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kCapExceeded;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kIoError;
    } catch (const zdga::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerifyError;
    }
}
