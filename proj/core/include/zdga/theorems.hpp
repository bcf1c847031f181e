#ifndef ZDGA_THEOREMS_HPP
#define ZDGA_THEOREMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "zdga/partition.hpp"
#include "zdga/ringspec.hpp"

namespace zdga {

/// One (ring, prediction) pair for a theorem family, plus the computed
/// values filled in by the suite run.
struct TheoremCase {
    std::string theorem_id;
    std::string spec_text;
    int predicted_psi_g = 1; // 1 means "not partitionable"
    std::optional<int> predicted_gamma_a;
    std::optional<int> predicted_zero_divisors;
    bool has_construction = false;

    // Filled by evaluate_cases / run_suite.
    bool evaluated = false;
    bool skipped = false; // graph exceeds the exact-solve cap
    std::optional<int> computed_psi_g;
    std::optional<int> computed_gamma_a;
    std::optional<int> computed_zero_divisors;
    std::optional<bool> construction_verified;
    int constructed_classes = 0;
    bool match = false;
};

/// Concrete ring specs per theorem family within the order cap, with
/// predictions computed from the theorem statements.
std::vector<TheoremCase> generate_cases(int max_ring_order);

/// Replays the theorem's explicit partition construction for a
/// partitionable case ("a half of elements" is always the
/// lexicographically first half in vertex order). The returned
/// certificate passes independent re-verification; non-partitionable
/// cases raise NotApplicableError.
PartitionCertificate construct_known_partition(const std::string& theorem_id,
                                               const RingSpec& spec,
                                               const ElaborateOptions& options = {});

struct SuiteOptions {
    int max_ring_order = 64;
    int max_exact_vertices = 28; // solver cap; larger graphs are skipped
    int gamma_a_vertex_cap = 24; // compute gamma_a below this even when unpredicted
};

struct TheoremReport {
    std::vector<TheoremCase> cases;
    int total = 0;
    int matched = 0;
    int mismatched = 0;
    int skipped = 0;

    bool all_match() const { return mismatched == 0; }
};

/// Computes the solver values for each case and compares them with the
/// predictions; mismatches are report content, not errors.
TheoremReport evaluate_cases(std::vector<TheoremCase> cases, const SuiteOptions& options);

/// generate_cases + evaluate_cases; the report is order-stable
/// (sorted by theorem id, then spec text).
TheoremReport run_suite(const SuiteOptions& options = {});

} // namespace zdga

#endif
