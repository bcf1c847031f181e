#include "zdga/partition.hpp"

#include <algorithm>

namespace zdga {

PartitionCertificate make_certificate(const ZeroDivisorGraph& g,
                                      const std::vector<VertexSet>& classes) {
    int n = g.vertex_count();
    VertexSet seen(n);
    for (const auto& cls : classes) {
        if (cls.size() != n) throw VerificationError("certificate class width mismatch");
        if (cls.none()) throw VerificationError("certificate class is empty");
        if (seen.intersects(cls)) throw VerificationError("certificate classes overlap");
        seen |= cls;
    }
    if (!(seen == VertexSet::full(n)))
        throw VerificationError("certificate classes do not cover the vertex set");

    PartitionCertificate cert;
    cert.ring_spec = g.ring_spec;
    cert.graph_hash = g.hash();
    for (const auto& cls : classes) {
        if (!is_global_defensive_alliance(g, cls))
            throw VerificationError("certificate class is not a global defensive alliance");
        ClassCertificate cc;
        cc.members = cls;
        cls.for_each([&](int v) {
            int din = g.adjacency[v].intersection_count(cls);
            cc.stats.push_back({v, din, g.degrees[v] - din});
        });
        for (int v = 0; v < n; ++v) {
            if (cls.test(v)) continue;
            VertexSet hits = g.adjacency[v] & cls;
            cc.domination.push_back({v, hits.first()});
        }
        cert.classes.push_back(std::move(cc));
    }
    return cert;
}

void verify_certificate(const ZeroDivisorGraph& g, const PartitionCertificate& cert) {
    int n = g.vertex_count();
    if (cert.graph_hash != g.hash())
        throw VerificationError("certificate graph hash does not match the graph");
    VertexSet seen(n);
    for (const auto& cc : cert.classes) {
        if (cc.members.size() != n) throw VerificationError("class width mismatch");
        if (cc.members.none()) throw VerificationError("empty class");
        if (seen.intersects(cc.members)) throw VerificationError("classes overlap");
        seen |= cc.members;
    }
    if (!(seen == VertexSet::full(n))) throw VerificationError("classes do not cover V");

    for (const auto& cc : cert.classes) {
        if (!is_global_defensive_alliance(g, cc.members))
            throw VerificationError("class fails the global defensive alliance predicates");
        if (static_cast<int>(cc.stats.size()) != cc.members.count())
            throw VerificationError("per-vertex stats incomplete");
        for (const auto& st : cc.stats) {
            if (!cc.members.test(st.vertex)) throw VerificationError("stat vertex not in class");
            int din = g.adjacency[st.vertex].intersection_count(cc.members);
            if (st.deg_in != din || st.deg_out != g.degrees[st.vertex] - din)
                throw VerificationError("recorded degree pair is wrong");
        }
        if (static_cast<int>(cc.domination.size()) != n - cc.members.count())
            throw VerificationError("domination witness map incomplete");
        for (const auto& dw : cc.domination) {
            if (cc.members.test(dw.vertex))
                throw VerificationError("domination witness for an inside vertex");
            if (dw.neighbor < 0 || !cc.members.test(dw.neighbor) ||
                !g.adjacency[dw.vertex].test(dw.neighbor))
                throw VerificationError("domination witness is not an edge into the class");
        }
    }
}

int psi_g_upper_bound(const ZeroDivisorGraph& g, int gamma_a) {
    if (gamma_a < 1) throw Error("gamma_a must be >= 1");
    int n = g.vertex_count();
    if (n == 0) return 1;
    int quad = 1;
    while (static_cast<long long>(quad + 1) * quad <= n) ++quad;
    int product = n / gamma_a;
    int mindeg = (min_degree(g) + 3) / 2;
    return std::max(1, std::min({quad, product, mindeg}));
}

namespace {

// Backtracking search for a partition of V into exactly r global
// defensive alliances.
//
// Branching assigns one vertex at a time, most-constrained first (most
// already-assigned neighbors; ties by ascending degree, then index).
// Symmetry is broken by first-touch class order: a vertex may open at
// most one new class, and the seed vertex sits in class 0.
//
// Sound prunes:
//  - domination: for every vertex v and class c, N[v] must be able to
//    meet c; once N[v] is fully assigned away from c the branch is dead.
//    A last free slot in N[v] is a forced assignment and is propagated.
//  - defense: deg(v)+1 >= 2*deg_out(v) with unassigned neighbors counted
//    optimistically as same-class.
class PartitionSearch {
public:
    PartitionSearch(const ZeroDivisorGraph& g, int r)
        : g_(g), r_(r), n_(g.vertex_count()), assign_(n_, -1), an_(n_, 0),
          ncc_(static_cast<std::size_t>(n_) * r, 0) {}

    std::optional<std::vector<VertexSet>> run() {
        // Seed: the most constrained vertex overall is a minimum-degree
        // one; pinning it to class 0 breaks class symmetry at the root.
        int seed = 0;
        for (int v = 1; v < n_; ++v)
            if (g_.degrees[v] < g_.degrees[seed]) seed = v;
        do_assign(seed, 0);
        if (!dfs()) return std::nullopt;
        std::vector<VertexSet> classes(r_, VertexSet(n_));
        for (int v = 0; v < n_; ++v) classes[assign_[v]].set(v);
        return classes;
    }

private:
    const ZeroDivisorGraph& g_;
    int r_, n_;
    std::vector<int> assign_;
    std::vector<int> an_; // assigned-neighbor count
    std::vector<int> ncc_; // neighbors-in-class counts, [v * r + c]
    std::vector<int> trail_;
    int used_ = 0;
    int assigned_ = 0;

    int ncc(int v, int c) const { return ncc_[static_cast<std::size_t>(v) * r_ + c]; }

    void do_assign(int v, int c) {
        assign_[v] = c;
        if (c == used_) ++used_;
        ++assigned_;
        trail_.push_back(v);
        g_.adjacency[v].for_each([&](int w) {
            ++an_[w];
            ++ncc_[static_cast<std::size_t>(w) * r_ + c];
        });
    }

    void undo_to(std::size_t mark, int saved_used) {
        while (trail_.size() > mark) {
            int v = trail_.back();
            trail_.pop_back();
            int c = assign_[v];
            assign_[v] = -1;
            --assigned_;
            g_.adjacency[v].for_each([&](int w) {
                --an_[w];
                --ncc_[static_cast<std::size_t>(w) * r_ + c];
            });
        }
        used_ = saved_used;
    }

    // The single unassigned vertex in N[v]; -1 if there is none or more
    // than one caller-side bookkeeping was wrong (callers guarantee one).
    int unique_free_in_closed(int v) const {
        if (assign_[v] < 0) return v;
        int found = -1;
        g_.adjacency[v].for_each([&](int w) {
            if (assign_[w] < 0) found = w;
        });
        return found;
    }

    // Checks feasibility and applies forced assignments to fixpoint.
    bool propagate() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < n_; ++v) {
                int free_closed = (g_.degrees[v] - an_[v]) + (assign_[v] < 0 ? 1 : 0);
                // Defensive feasibility, optimistic for unassigned slots.
                if (assign_[v] >= 0) {
                    int cross = an_[v] - ncc(v, assign_[v]);
                    if (g_.degrees[v] + 1 < 2 * cross) return false;
                } else {
                    int best_in = 0;
                    for (int c = 0; c < used_; ++c) best_in = std::max(best_in, ncc(v, c));
                    if (g_.degrees[v] + 1 < 2 * (an_[v] - best_in)) return false;
                }
                // Domination feasibility per class.
                for (int c = 0; c < used_; ++c) {
                    if (assign_[v] == c || ncc(v, c) > 0) continue;
                    if (free_closed == 0) return false;
                    if (free_closed == 1) {
                        int u = unique_free_in_closed(v);
                        do_assign(u, c);
                        changed = true;
                        break; // counts changed; rescan v
                    }
                }
                if (changed) break;
                if (used_ < r_) {
                    // All unopened classes are empty and interchangeable.
                    if (free_closed == 0) return false;
                    if (free_closed == 1) {
                        if (r_ - used_ >= 2) return false;
                        int u = unique_free_in_closed(v);
                        do_assign(u, used_);
                        changed = true;
                        break;
                    }
                }
            }
        }
        return true;
    }

    int select() const {
        int best = -1;
        for (int v = 0; v < n_; ++v) {
            if (assign_[v] >= 0) continue;
            if (best < 0 || an_[v] > an_[best] ||
                (an_[v] == an_[best] && g_.degrees[v] < g_.degrees[best]))
                best = v;
        }
        return best;
    }

    bool dfs() {
        if (!propagate()) return false;
        if (n_ - assigned_ < r_ - used_) return false;
        if (assigned_ == n_) {
            if (used_ != r_) return false;
            // Exact final check; the defensive prune was only optimistic.
            std::vector<VertexSet> classes(r_, VertexSet(n_));
            for (int v = 0; v < n_; ++v) classes[assign_[v]].set(v);
            for (const auto& cls : classes)
                if (!is_global_defensive_alliance(g_, cls)) return false;
            return true;
        }
        int v = select();
        int max_class = std::min(used_, r_ - 1);
        for (int c = 0; c <= max_class; ++c) {
            std::size_t mark = trail_.size();
            int saved_used = used_;
            do_assign(v, c);
            if (dfs()) return true;
            undo_to(mark, saved_used);
        }
        return false;
    }
};

} // namespace

std::optional<PartitionCertificate> find_partition(const ZeroDivisorGraph& g, int r) {
    int n = g.vertex_count();
    if (n == 0) throw EmptyGraphError("find_partition requires a nonempty graph");
    if (r < 1) throw Error("find_partition requires r >= 1");
    if (r > n) return std::nullopt;
    if (r == 1) return make_certificate(g, {VertexSet::full(n)});

    PartitionSearch search(g, r);
    auto classes = search.run();
    if (!classes) return std::nullopt;
    return make_certificate(g, *classes);
}

PsiGResult psi_g(const ZeroDivisorGraph& g, std::optional<int> gamma_a) {
    int n = g.vertex_count();
    if (n == 0) throw EmptyGraphError("psi_g is undefined on the empty graph");
    int ub = gamma_a ? psi_g_upper_bound(g, *gamma_a)
                     : psi_g_upper_bound(g, 1); // only quadratic/min-degree gate
    for (int r = std::min(ub, n); r >= 2; --r) {
        auto cert = find_partition(g, r);
        if (cert) return {r, std::move(*cert)};
    }
    return {1, *find_partition(g, 1)};
}

namespace {

void bruteforce_rec(const ZeroDivisorGraph& g, std::vector<VertexSet>& blocks, int v, int& best) {
    int n = g.vertex_count();
    if (v == n) {
        for (const auto& b : blocks)
            if (!is_global_defensive_alliance(g, b)) return;
        best = std::max(best, static_cast<int>(blocks.size()));
        return;
    }
    // Index-based: the recursive call grows and shrinks `blocks`, which
    // can reallocate and invalidate references into it.
    const std::size_t existing = blocks.size();
    for (std::size_t i = 0; i < existing; ++i) {
        blocks[i].set(v);
        bruteforce_rec(g, blocks, v + 1, best);
        blocks[i].reset(v);
    }
    blocks.emplace_back(n);
    blocks.back().set(v);
    bruteforce_rec(g, blocks, v + 1, best);
    blocks.pop_back();
}

} // namespace

int psi_g_bruteforce(const ZeroDivisorGraph& g, int vertex_cap) {
    int n = g.vertex_count();
    if (n == 0) throw EmptyGraphError("psi_g_bruteforce requires a nonempty graph");
    if (n > vertex_cap)
        throw SizeLimitError("psi_g_bruteforce cap " + std::to_string(vertex_cap) +
                             " exceeded by " + std::to_string(n) + " vertices");
    std::vector<VertexSet> blocks;
    int best = 0;
    bruteforce_rec(g, blocks, 0, best);
    return best;
}

} // namespace zdga
