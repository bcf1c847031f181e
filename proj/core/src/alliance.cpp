#include "zdga/alliance.hpp"

namespace zdga {

namespace {

void check_set(const ZeroDivisorGraph& g, const VertexSet& s) {
    if (s.size() != g.vertex_count())
        throw IndexError("vertex set width does not match the graph");
}

void check_nonempty(const VertexSet& s) {
    if (s.none()) throw EmptySetError("alliance predicates require a nonempty set");
}

} // namespace

bool is_dominating(const ZeroDivisorGraph& g, const VertexSet& s) {
    check_set(g, s);
    VertexSet cover = s;
    s.for_each([&](int v) { cover |= g.adjacency[v]; });
    return cover == VertexSet::full(g.vertex_count());
}

bool is_defensive(const ZeroDivisorGraph& g, const VertexSet& s) {
    check_set(g, s);
    check_nonempty(s);
    bool ok = true;
    s.for_each([&](int v) {
        int din = g.adjacency[v].intersection_count(s);
        int dout = g.degrees[v] - din;
        if (din + 1 < dout) ok = false;
    });
    return ok;
}

bool is_strong_defensive(const ZeroDivisorGraph& g, const VertexSet& s) {
    check_set(g, s);
    check_nonempty(s);
    bool ok = true;
    s.for_each([&](int v) {
        int din = g.adjacency[v].intersection_count(s);
        if (din < g.degrees[v] - din) ok = false;
    });
    return ok;
}

bool is_global_defensive_alliance(const ZeroDivisorGraph& g, const VertexSet& s) {
    return is_dominating(g, s) && is_defensive(g, s);
}

namespace {

// Increasing-cardinality combination search shared by both minimum
// invariants. Candidates are tried in index order, so the first hit is
// the lexicographically first witness of minimum size. suffix_cover[i]
// is the union of closed neighborhoods of vertices >= i; a branch whose
// partial cover plus suffix cover cannot dominate is dead regardless of
// the predicate ("remaining vertices cannot complete domination").
template <typename Predicate>
bool search_combinations(const ZeroDivisorGraph& g, const std::vector<VertexSet>& suffix_cover,
                         const VertexSet& full, VertexSet& current, VertexSet& cover, int start,
                         int remaining, Predicate&& accept) {
    int n = g.vertex_count();
    if (remaining == 0) return accept(current, cover);
    if (n - start < remaining) return false;
    if (!((cover | suffix_cover[start]) == full)) return false;
    for (int v = start; v <= n - remaining; ++v) {
        current.set(v);
        VertexSet saved = cover;
        cover |= g.adjacency[v];
        cover.set(v);
        if (search_combinations(g, suffix_cover, full, current, cover, v + 1, remaining - 1,
                                accept))
            return true;
        cover = saved;
        current.reset(v);
    }
    return false;
}

template <typename Predicate>
MinSearchResult minimum_search(const ZeroDivisorGraph& g, Predicate&& accept) {
    int n = g.vertex_count();
    if (n == 0) throw EmptyGraphError("minimum search requires a nonempty graph");
    VertexSet full = VertexSet::full(n);
    std::vector<VertexSet> suffix_cover(n + 1, VertexSet(n));
    for (int i = n - 1; i >= 0; --i) {
        suffix_cover[i] = suffix_cover[i + 1] | g.adjacency[i];
        suffix_cover[i].set(i);
    }
    for (int k = 1; k <= n; ++k) {
        VertexSet current(n), cover(n);
        if (search_combinations(g, suffix_cover, full, current, cover, 0, k, accept))
            return {k, current};
    }
    throw Error("internal: no witness found (V itself should qualify)");
}

} // namespace

MinSearchResult domination_number(const ZeroDivisorGraph& g) {
    VertexSet full = VertexSet::full(g.vertex_count());
    return minimum_search(g, [&](const VertexSet&, const VertexSet& cover) {
        return cover == full;
    });
}

MinSearchResult alliance_number(const ZeroDivisorGraph& g) {
    VertexSet full = VertexSet::full(g.vertex_count());
    return minimum_search(g, [&](const VertexSet& s, const VertexSet& cover) {
        return cover == full && is_defensive(g, s);
    });
}

} // namespace zdga
