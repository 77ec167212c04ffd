#pragma once

#include <dpcolor/hypergraph.hpp>
#include <dpcolor/random.hpp>

#include <set>
#include <vector>

namespace fx {

using dpcolor::Hypergraph;

inline Hypergraph single_edge() { return Hypergraph::validate(3, {{0, 1, 2}}); }
inline Hypergraph path2() { return Hypergraph::validate(5, {{0, 1, 2}, {2, 3, 4}}); }
inline Hypergraph loose3() { return Hypergraph::validate(6, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}}); }
inline Hypergraph loose4() { return Hypergraph::validate(8, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}, {6, 7, 0}}); }
/// loose3 with a pendant edge at vertex 1.
inline Hypergraph loose3_pendant() { return Hypergraph::validate(8, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}, {1, 6, 7}}); }
inline Hypergraph triangle() { return Hypergraph::validate(3, {{0, 1}, {1, 2}, {2, 0}}); }
inline Hypergraph c4() { return Hypergraph::validate(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
inline Hypergraph c5() { return Hypergraph::validate(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }
inline Hypergraph edgeless(std::size_t n) { return Hypergraph::validate(n, {}); }
/// Two loose 3-uniform cycles sharing the path {0,1,2},{2,3,4}: incidence rank 2.
inline Hypergraph theta() {
    return Hypergraph::validate(9, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}, {4, 6, 7}, {7, 8, 0}});
}

/// Small random simple hypergraph with edge sizes in [2, max_r].
inline Hypergraph random_small(dpcolor::Rng& rng, std::size_t max_n, std::size_t max_m, std::size_t max_r) {
    const std::size_t n = 2 + dpcolor::uniform_below(rng, max_n - 1);
    const std::size_t target = dpcolor::uniform_below(rng, max_m + 1);
    std::vector<dpcolor::Edge> edges;
    for (std::size_t attempt = 0; attempt < 50 && edges.size() < target; ++attempt) {
        const std::size_t r = 2 + dpcolor::uniform_below(rng, std::min(max_r, n) - 1);
        std::set<dpcolor::Vertex> s;
        while (s.size() < r) s.insert(static_cast<dpcolor::Vertex>(dpcolor::uniform_below(rng, n)));
        dpcolor::Edge e(s.begin(), s.end());
        bool ok = true;
        for (const auto& f : edges) {
            if (std::includes(f.begin(), f.end(), e.begin(), e.end()) ||
                std::includes(e.begin(), e.end(), f.begin(), f.end()))
                ok = false;
        }
        if (ok) edges.push_back(std::move(e));
    }
    return Hypergraph::validate(n, std::move(edges));
}

} // namespace fx
