#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace dpcolor {

using Vertex = std::uint32_t;
using EdgeIndex = std::size_t;
using Edge = std::vector<Vertex>;

/// A finite simple hypergraph on vertices 0..n-1.
///
/// Edges are stored as strictly ascending vertex lists. Edge order is part of
/// the identity of the object: covers refer to edges by index, so the order
/// given at construction is preserved.
class Hypergraph {
public:
    /// Validates raw input. Each raw edge may be given in any order; it is
    /// sorted internally. Throws Error with one of EmptyVertexSet,
    /// OutOfRangeVertex, EdgeTooSmall, DuplicateEdge, EdgeContainment.
    static Hypergraph validate(std::size_t vertex_count, std::vector<Edge> raw_edges);

    [[nodiscard]] std::size_t vertex_count() const noexcept { return n_; }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
    [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
    [[nodiscard]] const Edge& edge(EdgeIndex j) const;

    /// Edge indices incident to v, ascending.
    [[nodiscard]] const std::vector<EdgeIndex>& incident(Vertex v) const { return incidence_[v]; }
    [[nodiscard]] std::size_t degree(Vertex v) const { return incidence_[v].size(); }

    /// Common edge size, if every edge has the same size. Absent for edgeless
    /// hypergraphs.
    [[nodiscard]] std::optional<std::size_t> uniform_size() const noexcept;

    /// Sum of edge sizes.
    [[nodiscard]] std::size_t total_incidences() const noexcept;

    /// Stable 64-bit FNV-1a hash of (n, edge list). Identical across platforms.
    [[nodiscard]] std::uint64_t hash() const noexcept;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    Hypergraph(std::size_t n, std::vector<Edge> edges);

    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeIndex>> incidence_;
};

enum class Classification { Forest, Hypertree, Unicyclic, Multicyclic, NonlinearUnclassified };

std::string_view to_string(Classification c) noexcept;

struct StructureReport {
    bool connected = false;
    std::size_t component_count = 0;
    std::optional<std::size_t> uniform_r;
    bool linear = false;
    /// Cycle rank of the bipartite vertex-edge incidence graph.
    std::size_t incidence_rank = 0;
    Classification classification = Classification::Forest;
    std::optional<std::size_t> cycle_length;
    /// Ascending edge indices of the unique cycle (unicyclic only).
    std::optional<std::vector<EdgeIndex>> cycle_edges;
    /// Ascending vertices linking consecutive cycle edges (unicyclic only).
    std::optional<std::vector<Vertex>> cycle_vertices;
};

/// Structural classification. Linear hypergraphs are classified as
///   forest       incidence_rank 0, disconnected
///   hypertree    incidence_rank 0, connected
///   unicyclic    incidence_rank 1, connected
///   multicyclic  any other cyclic case (rank >= 2, or a disconnected
///                hypergraph with a cycle)
/// Non-linear inputs are NonlinearUnclassified; no cycle data is reported.
StructureReport classify(const Hypergraph& h);

/// H - e_j on the same vertex set. Edges after j shift down by one index;
/// edges before j keep their index.
Hypergraph delete_edge(const Hypergraph& h, EdgeIndex j);

struct Component {
    std::vector<Vertex> vertices;   // ascending
    std::vector<EdgeIndex> edges;   // ascending
};

/// Connected components ordered by their lowest vertex. Isolated vertices are
/// singleton components.
std::vector<Component> components(const Hypergraph& h);

/// A component as a standalone hypergraph: vertices relabelled to
/// 0..|vertices|-1 in ascending order, edges kept in ascending index order.
Hypergraph induced_component(const Hypergraph& h, const Component& c);

} // namespace dpcolor
