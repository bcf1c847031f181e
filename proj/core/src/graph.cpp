#include "zdga/graph.hpp"

#include <algorithm>
#include <queue>

namespace zdga {

std::uint64_t ZeroDivisorGraph::hash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(vertex_count()));
    for (const auto& row : adjacency) mix(row.hash());
    return h;
}

ZeroDivisorGraph build_graph(const FiniteRing& ring) {
    ZeroDivisorGraph g;
    g.ring_spec = ring.spec_text;
    for (int x : zero_divisors(ring))
        if (x != 0) {
            g.vertex_elements.push_back(x);
            g.labels.push_back(ring.labels[x]);
        }
    int n = g.vertex_count();
    g.adjacency.assign(n, VertexSet(n));
    g.degrees.assign(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (ring.mul(g.vertex_elements[i], g.vertex_elements[j]) == 0) {
                g.adjacency[i].set(j);
                g.adjacency[j].set(i);
                ++g.degrees[i];
                ++g.degrees[j];
            }
    return g;
}

const VertexSet& neighborhood(const ZeroDivisorGraph& g, int v) {
    g.check_vertex(v);
    return g.adjacency[v];
}

VertexSet closed_neighborhood(const ZeroDivisorGraph& g, int v) {
    g.check_vertex(v);
    VertexSet s = g.adjacency[v];
    s.set(v);
    return s;
}

int degree(const ZeroDivisorGraph& g, int v) {
    g.check_vertex(v);
    return g.degrees[v];
}

int min_degree(const ZeroDivisorGraph& g) {
    if (g.vertex_count() == 0) throw EmptyGraphError("min_degree requires a nonempty graph");
    return *std::min_element(g.degrees.begin(), g.degrees.end());
}

int deg_in(const ZeroDivisorGraph& g, const VertexSet& s, int v) {
    g.check_vertex(v);
    if (s.size() != g.vertex_count())
        throw IndexError("vertex set width does not match the graph");
    return g.adjacency[v].intersection_count(s);
}

std::string export_dot(const ZeroDivisorGraph& g) {
    std::vector<std::string> nodes = g.labels;
    std::sort(nodes.begin(), nodes.end());

    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j = i + 1; j < g.vertex_count(); ++j)
            if (g.adjacency[i].test(j)) {
                std::string a = g.labels[i], b = g.labels[j];
                if (b < a) std::swap(a, b);
                edges.emplace_back(std::move(a), std::move(b));
            }
    std::sort(edges.begin(), edges.end());

    std::string out = "graph zdg {\n";
    for (const auto& n : nodes) out += "  \"" + n + "\";\n";
    for (const auto& [a, b] : edges) out += "  \"" + a + "\" -- \"" + b + "\";\n";
    out += "}\n";
    return out;
}

namespace {

// BFS distances from src; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const ZeroDivisorGraph& g, int src) {
    std::vector<int> dist(g.vertex_count(), -1);
    dist[src] = 0;
    std::queue<int> q;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        g.adjacency[v].for_each([&](int w) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        });
    }
    return dist;
}

} // namespace

bool is_connected(const ZeroDivisorGraph& g) {
    if (g.vertex_count() == 0) return true;
    auto dist = bfs_distances(g, 0);
    return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

int diameter(const ZeroDivisorGraph& g) {
    if (g.vertex_count() == 0) throw EmptyGraphError("diameter requires a nonempty graph");
    int diam = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto dist = bfs_distances(g, v);
        for (int d : dist) {
            if (d < 0) throw DisconnectedGraphError("diameter requested on a disconnected graph");
            diam = std::max(diam, d);
        }
    }
    return diam;
}

} // namespace zdga
