#ifndef ZDGA_PARTITION_HPP
#define ZDGA_PARTITION_HPP

#include <optional>
#include <string>
#include <vector>

#include "zdga/alliance.hpp"
#include "zdga/graph.hpp"

namespace zdga {

/// One class of a partition certificate, with the witness data needed to
/// re-check it without rerunning the solver.
struct ClassCertificate {
    VertexSet members;

    struct VertexStat {
        int vertex;
        int deg_in;  // neighbors inside the class
        int deg_out; // neighbors outside the class
    };
    std::vector<VertexStat> stats;

    struct DominationWitness {
        int vertex;   // a vertex outside the class
        int neighbor; // one of its neighbors inside the class
    };
    std::vector<DominationWitness> domination;
};

/// An ordered list of disjoint vertex sets covering V, each annotated
/// with domination/defense witness data.
struct PartitionCertificate {
    std::vector<ClassCertificate> classes;
    std::string ring_spec;
    std::uint64_t graph_hash = 0;

    int class_count() const { return static_cast<int>(classes.size()); }
};

/// Builds the certificate for the given classes, filling per-vertex
/// degree pairs and domination witnesses. Throws VerificationError if
/// the classes do not form a partition into global defensive alliances.
PartitionCertificate make_certificate(const ZeroDivisorGraph& g,
                                      const std::vector<VertexSet>& classes);

/// Independent re-verification: disjoint cover, every class a global
/// defensive alliance, witness data consistent with the adjacency.
void verify_certificate(const ZeroDivisorGraph& g, const PartitionCertificate& cert);

/// min of three standard upper bounds: largest r with r^2 - r <= |V|,
/// floor(|V| / gamma_a), floor((delta+3)/2). Never below 1.
int psi_g_upper_bound(const ZeroDivisorGraph& g, int gamma_a);

/// Exact search for a partition of V into exactly r global defensive
/// alliances. Returns nullopt only after exhausting the pruned search
/// space; all prunes are sound, so there are no false negatives.
std::optional<PartitionCertificate> find_partition(const ZeroDivisorGraph& g, int r);

struct PsiGResult {
    int value = 0;
    PartitionCertificate certificate;
};

/// psi_g by descending search from the upper bound; the first r that
/// admits a partition is the maximum because disjoint global defensive
/// alliances merge into one. Pass gamma_a when known to tighten the
/// bound; with nullopt only the quadratic and min-degree bounds gate r.
PsiGResult psi_g(const ZeroDivisorGraph& g, std::optional<int> gamma_a = std::nullopt);

/// Ground-truth oracle: enumerates every set partition of V (restricted
/// growth strings) and returns the maximum class count over partitions
/// whose classes are all global defensive alliances.
int psi_g_bruteforce(const ZeroDivisorGraph& g, int vertex_cap = 10);

} // namespace zdga

#endif
