#ifndef ZDGA_REPORT_HPP
#define ZDGA_REPORT_HPP

#include <map>
#include <optional>
#include <string>

#include "zdga/partition.hpp"
#include "zdga/theorems.hpp"

namespace zdga {

inline constexpr int kSchemaVersion = 1;

struct AnalysisOptions {
    int max_order = kDefaultOrderCap;
    int max_exact_vertices = 28; // beyond this only bounds are reported
    bool oracle = false;         // cross-check against exhaustive enumeration, |V| <= 10
    bool timing = true;
};

/// Why psi_g (and gamma, gamma_a) may be absent from a report.
enum class PsiGStatus {
    Computed,
    UndefinedEmptyGraph, // no vertices: the invariant has no value
    NotComputedCap,      // vertex count exceeds the exact-solve cap
};

struct BoundBreakdown {
    int quadratic = 0;                    // largest r with r^2 - r <= |V|
    std::optional<int> gamma_a_product;   // floor(|V| / gamma_a), when gamma_a is known
    int min_degree = 0;                   // floor((delta + 3) / 2)
};

struct AnalysisReport {
    std::string spec_text;
    int ring_order = 0;
    int zero_divisor_count = 0; // |Z(R)|, zero included
    int vertex_count = 0;
    std::optional<int> min_degree;
    std::optional<int> gamma;
    std::optional<int> gamma_a;
    PsiGStatus psi_g_status = PsiGStatus::Computed;
    std::optional<int> psi_g;
    std::optional<BoundBreakdown> bounds; // absent for the empty graph
    std::optional<PartitionCertificate> certificate;
    std::map<std::string, double> timings_ms;
};

/// Full pipeline: parse, build ring and graph, compute gamma, gamma_a,
/// psi_g (with certificate) within the caps. With `oracle` set, a
/// disagreement with the exhaustive enumerator raises VerificationError.
AnalysisReport analyze(std::string_view spec_text, const AnalysisOptions& options = {});

// JSON serialization. Field names are part of the stable schema
// (schemas/*.schema.json); timings are omitted when absent.
std::string to_json(const PartitionCertificate& cert, int indent = 2);
std::string to_json(const AnalysisReport& report, bool include_certificate, int indent = 2);
std::string to_json(const TheoremReport& report, int indent = 2);

// Human-readable renderings for terminal output.
std::string to_table(const AnalysisReport& report);
std::string to_table(const TheoremReport& report);

} // namespace zdga

#endif
