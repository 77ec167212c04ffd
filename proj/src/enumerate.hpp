#pragma once

// Exact counting of colorings that avoid a family of forbidden patterns.
//
// Every constraint has an anchor vertex and a list of other vertices, each
// with a lookup table indexed by the anchor's color. A coloring f violates the
// constraint iff f(v) == table_v[f(anchor)] for every other vertex v. Twisted
// covers use permutation tables; single partial maps use tables that only
// match one anchor color (all other entries hold `kNoMatch`).

#include <dpcolor/bigint.hpp>
#include <dpcolor/chromcount.hpp>
#include <dpcolor/cover.hpp>
#include <dpcolor/hypergraph.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dpcolor::detail {

using Color = std::uint16_t;
inline constexpr Color kNoMatch = 0xffff;
inline constexpr int kFree = -1;

class PatternSet {
public:
    /// Throws ResourceLimit when k does not fit the 16-bit color tables.
    PatternSet(std::size_t n, unsigned k);

    /// `tables` is (others.size() * k) entries, row i belongs to others[i].
    void add(Vertex anchor, std::span<const Vertex> others, std::span<const Color> tables);

    [[nodiscard]] std::size_t vertex_count() const noexcept { return n_; }
    [[nodiscard]] unsigned colors() const noexcept { return k_; }
    [[nodiscard]] std::size_t size() const noexcept { return anchors_.size(); }

    /// Number of colorings avoiding every pattern. `pinned[v]` >= 0 fixes the
    /// color of v; empty span means nothing is pinned.
    [[nodiscard]] std::uint64_t count(std::span<const int> pinned = {}) const;

private:
    bool violated(std::size_t c, const std::vector<Color>& f) const;

    std::size_t n_;
    unsigned k_;
    std::vector<Vertex> anchors_;
    std::vector<std::size_t> begin_;   // into others_/tables_ (rows)
    std::vector<std::size_t> end_;
    std::vector<Vertex> others_;
    std::vector<Color> tables_;
    std::vector<std::vector<std::size_t>> by_last_;
};

/// k^n * max(m, 1): the number of elementary edge checks a full enumeration
/// performs.
BigInt enumeration_cost(std::size_t n, std::size_t m, unsigned k);

/// Throws ResourceLimit when `cost` exceeds the budget.
void require_budget(const BigInt& cost, const Budget& budget, const std::string& what);

/// The natural cover as patterns: forbids monochromatic edges.
PatternSet natural_patterns(const Hypergraph& h, unsigned k);

/// Patterns of an already validated twist cover.
PatternSet twist_patterns(std::size_t n, const TwistCover& c);

} // namespace dpcolor::detail
