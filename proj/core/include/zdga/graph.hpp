#ifndef ZDGA_GRAPH_HPP
#define ZDGA_GRAPH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "zdga/bitset.hpp"
#include "zdga/ring.hpp"

namespace zdga {

using VertexSet = Bitset;

/// The zero-divisor graph: vertices are the nonzero
/// zero-divisors of the source ring (in element-index order), v-w is an
/// edge iff v != w and v*w = 0. Immutable after build.
struct ZeroDivisorGraph {
    std::vector<int> vertex_elements; // ring element index per vertex position
    std::vector<std::string> labels;  // canonical ring-element labels
    std::vector<VertexSet> adjacency; // per-vertex bit-vector over positions
    std::vector<int> degrees;
    std::string ring_spec;

    int vertex_count() const { return static_cast<int>(vertex_elements.size()); }

    bool has_edge(int v, int w) const {
        check_vertex(v);
        return adjacency[v].test(w);
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count())
            throw IndexError("vertex " + std::to_string(v) + " out of range [0, " +
                             std::to_string(vertex_count()) + ")");
    }

    std::uint64_t hash() const;
};

ZeroDivisorGraph build_graph(const FiniteRing& ring);

const VertexSet& neighborhood(const ZeroDivisorGraph& g, int v);
VertexSet closed_neighborhood(const ZeroDivisorGraph& g, int v);
int degree(const ZeroDivisorGraph& g, int v);
int min_degree(const ZeroDivisorGraph& g);

/// deg_S(v) = |S ∩ N(v)|; v's own membership in S is not counted.
int deg_in(const ZeroDivisorGraph& g, const VertexSet& s, int v);

/// Byte-stable DOT text: one `graph` block, vertex ids are the canonical
/// element labels, each edge once, everything sorted lexicographically.
std::string export_dot(const ZeroDivisorGraph& g);

bool is_connected(const ZeroDivisorGraph& g);
int diameter(const ZeroDivisorGraph& g);

} // namespace zdga

#endif
