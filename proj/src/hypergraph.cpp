#include <dpcolor/hypergraph.hpp>

#include <dpcolor/error.hpp>

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <utility>

namespace dpcolor {

namespace {

std::string edge_text(const Edge& e) {
    std::string s = "{";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e[i]);
    }
    return s + "}";
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a < b) std::swap(a, b);
        parent_[a] = b; // root is always the smallest member
    }

private:
    std::vector<std::size_t> parent_;
};

} // namespace

std::string_view to_string(Classification c) noexcept {
    switch (c) {
    case Classification::Forest: return "forest";
    case Classification::Hypertree: return "hypertree";
    case Classification::Unicyclic: return "unicyclic";
    case Classification::Multicyclic: return "multicyclic";
    case Classification::NonlinearUnclassified: return "nonlinear-unclassified";
    }
    return "unknown";
}

Hypergraph::Hypergraph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), incidence_(n) {
    for (EdgeIndex j = 0; j < edges_.size(); ++j)
        for (Vertex v : edges_[j]) incidence_[v].push_back(j);
}

Hypergraph Hypergraph::validate(std::size_t vertex_count, std::vector<Edge> raw_edges) {
    if (vertex_count == 0) throw Error(ErrorCode::EmptyVertexSet, "hypergraph must have at least one vertex");
    for (EdgeIndex j = 0; j < raw_edges.size(); ++j) {
        Edge& e = raw_edges[j];
        std::sort(e.begin(), e.end());
        for (Vertex v : e)
            if (v >= vertex_count)
                throw Error(ErrorCode::OutOfRangeVertex,
                            "edge " + std::to_string(j) + " has vertex " + std::to_string(v) +
                                " outside [0," + std::to_string(vertex_count) + ")");
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw Error(ErrorCode::DuplicateEdge, "edge " + std::to_string(j) + " repeats a vertex");
        if (e.size() < 2)
            throw Error(ErrorCode::EdgeTooSmall, "edge " + std::to_string(j) + " has fewer than 2 vertices");
    }
    for (EdgeIndex a = 0; a < raw_edges.size(); ++a) {
        for (EdgeIndex b = a + 1; b < raw_edges.size(); ++b) {
            const Edge& ea = raw_edges[a];
            const Edge& eb = raw_edges[b];
            if (ea == eb)
                throw Error(ErrorCode::DuplicateEdge,
                            "edges " + std::to_string(a) + " and " + std::to_string(b) + " are equal");
            if (std::includes(eb.begin(), eb.end(), ea.begin(), ea.end()) ||
                std::includes(ea.begin(), ea.end(), eb.begin(), eb.end()))
                throw Error(ErrorCode::EdgeContainment,
                            "edges " + edge_text(ea) + " and " + edge_text(eb) + " violate simplicity");
        }
    }
    return Hypergraph(vertex_count, std::move(raw_edges));
}

const Edge& Hypergraph::edge(EdgeIndex j) const {
    if (j >= edges_.size())
        throw Error(ErrorCode::IndexOutOfRange, "edge index " + std::to_string(j) + " out of range");
    return edges_[j];
}

std::optional<std::size_t> Hypergraph::uniform_size() const noexcept {
    if (edges_.empty()) return std::nullopt;
    const std::size_t r = edges_.front().size();
    for (const Edge& e : edges_)
        if (e.size() != r) return std::nullopt;
    return r;
}

std::size_t Hypergraph::total_incidences() const noexcept {
    std::size_t total = 0;
    for (const Edge& e : edges_) total += e.size();
    return total;
}

std::uint64_t Hypergraph::hash() const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::uint64_t word) {
        for (int byte = 0; byte < 8; ++byte) {
            h ^= (word >> (8 * byte)) & 0xffU;
            h *= 0x100000001b3ULL;
        }
    };
    mix(n_);
    mix(edges_.size());
    for (const Edge& e : edges_) {
        mix(e.size());
        for (Vertex v : e) mix(v);
    }
    return h;
}

std::vector<Component> components(const Hypergraph& h) {
    const std::size_t n = h.vertex_count();
    UnionFind uf(n);
    for (const Edge& e : h.edges())
        for (std::size_t i = 1; i < e.size(); ++i) uf.unite(e[0], e[i]);

    std::vector<Component> out;
    std::vector<std::size_t> slot(n, SIZE_MAX);
    for (Vertex v = 0; v < n; ++v) {
        const std::size_t root = uf.find(v);
        if (slot[root] == SIZE_MAX) {
            slot[root] = out.size();
            out.emplace_back();
        }
        out[slot[root]].vertices.push_back(v);
    }
    for (EdgeIndex j = 0; j < h.edge_count(); ++j) out[slot[uf.find(h.edges()[j][0])]].edges.push_back(j);
    return out;
}

Hypergraph induced_component(const Hypergraph& h, const Component& c) {
    std::vector<Vertex> relabel(h.vertex_count(), 0);
    for (std::size_t i = 0; i < c.vertices.size(); ++i) relabel[c.vertices[i]] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    edges.reserve(c.edges.size());
    for (EdgeIndex j : c.edges) {
        Edge e;
        for (Vertex v : h.edges()[j]) e.push_back(relabel[v]);
        edges.push_back(std::move(e));
    }
    return Hypergraph::validate(c.vertices.size(), std::move(edges));
}

Hypergraph delete_edge(const Hypergraph& h, EdgeIndex j) {
    if (j >= h.edge_count())
        throw Error(ErrorCode::IndexOutOfRange, "edge index " + std::to_string(j) + " out of range");
    std::vector<Edge> edges = h.edges();
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(j));
    return Hypergraph::validate(h.vertex_count(), std::move(edges));
}

namespace {

bool is_linear(const Hypergraph& h) {
    std::set<std::pair<Vertex, Vertex>> pairs;
    for (const Edge& e : h.edges())
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b)
                if (!pairs.emplace(e[a], e[b]).second) return false;
    return true;
}

// Strips degree-1 nodes of the incidence graph; for a connected graph of
// cycle rank 1 what survives is exactly the cycle.
void extract_cycle(const Hypergraph& h, StructureReport& rep) {
    const std::size_t n = h.vertex_count();
    const std::size_t m = h.edge_count();
    // nodes 0..n-1 are vertices, n..n+m-1 are edges
    std::vector<std::size_t> deg(n + m, 0);
    for (Vertex v = 0; v < n; ++v) deg[v] = h.degree(v);
    for (EdgeIndex j = 0; j < m; ++j) deg[n + j] = h.edges()[j].size();

    std::vector<bool> removed(n + m, false);
    std::queue<std::size_t> leaves;
    for (std::size_t x = 0; x < n + m; ++x)
        if (deg[x] <= 1) leaves.push(x);
    while (!leaves.empty()) {
        const std::size_t x = leaves.front();
        leaves.pop();
        if (removed[x]) continue;
        removed[x] = true;
        auto drop = [&](std::size_t y) {
            if (!removed[y] && --deg[y] == 1) leaves.push(y);
        };
        if (x < n) {
            for (EdgeIndex j : h.incident(static_cast<Vertex>(x))) drop(n + j);
        } else {
            for (Vertex v : h.edges()[x - n]) drop(v);
        }
    }
    std::vector<EdgeIndex> cyc_edges;
    std::vector<Vertex> cyc_vertices;
    for (Vertex v = 0; v < n; ++v)
        if (!removed[v]) cyc_vertices.push_back(v);
    for (EdgeIndex j = 0; j < m; ++j)
        if (!removed[n + j]) cyc_edges.push_back(j);
    rep.cycle_length = cyc_edges.size();
    rep.cycle_edges = std::move(cyc_edges);
    rep.cycle_vertices = std::move(cyc_vertices);
}

} // namespace

StructureReport classify(const Hypergraph& h) {
    StructureReport rep;
    rep.component_count = components(h).size();
    rep.connected = rep.component_count == 1;
    rep.uniform_r = h.uniform_size();
    rep.linear = is_linear(h);
    // |incidences| - |nodes| + |components|; every edge node shares the
    // component of its vertices, so incidence components = vertex components.
    rep.incidence_rank = h.total_incidences() + rep.component_count - h.vertex_count() - h.edge_count();

    if (!rep.linear) {
        rep.classification = Classification::NonlinearUnclassified;
    } else if (rep.incidence_rank == 0) {
        rep.classification = rep.connected ? Classification::Hypertree : Classification::Forest;
    } else if (rep.incidence_rank == 1 && rep.connected) {
        rep.classification = Classification::Unicyclic;
        extract_cycle(h, rep);
    } else {
        rep.classification = Classification::Multicyclic;
    }
    return rep;
}

} // namespace dpcolor
