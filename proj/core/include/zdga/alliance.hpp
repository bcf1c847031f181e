#ifndef ZDGA_ALLIANCE_HPP
#define ZDGA_ALLIANCE_HPP

#include "zdga/graph.hpp"

namespace zdga {

/// True iff every vertex outside S has a neighbor in S. Empty S is
/// dominating only in the empty graph.
bool is_dominating(const ZeroDivisorGraph& g, const VertexSet& s);

/// Defensive alliance: forall v in S, deg_S(v) + 1 >= deg_Sbar(v).
/// The definition starts from a nonempty set, so empty S is an error
/// rather than a truth value.
bool is_defensive(const ZeroDivisorGraph& g, const VertexSet& s);

/// Strong version: deg_S(v) >= deg_Sbar(v) for every v in S.
bool is_strong_defensive(const ZeroDivisorGraph& g, const VertexSet& s);

bool is_global_defensive_alliance(const ZeroDivisorGraph& g, const VertexSet& s);

struct MinSearchResult {
    int value = 0;
    VertexSet witness;
};

/// Exact domination number with the lexicographically first minimum
/// witness (increasing-cardinality search).
MinSearchResult domination_number(const ZeroDivisorGraph& g);

/// Exact global defensive alliance number gamma_a, same search order.
MinSearchResult alliance_number(const ZeroDivisorGraph& g);

} // namespace zdga

#endif
