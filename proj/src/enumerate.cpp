#include "enumerate.hpp"

#include <dpcolor/error.hpp>

#include <algorithm>
#include <numeric>

namespace dpcolor::detail {

void PatternSet::add(Vertex anchor, std::span<const Vertex> others, std::span<const Color> tables) {
    anchors_.push_back(anchor);
    begin_.push_back(others_.size());
    others_.insert(others_.end(), others.begin(), others.end());
    end_.push_back(others_.size());
    tables_.insert(tables_.end(), tables.begin(), tables.end());
    Vertex last = anchor;
    for (Vertex v : others) last = std::max(last, v);
    by_last_[last].push_back(anchors_.size() - 1);
}

bool PatternSet::violated(std::size_t c, const std::vector<Color>& f) const {
    const Color a = f[anchors_[c]];
    for (std::size_t i = begin_[c]; i < end_[c]; ++i)
        if (f[others_[i]] != tables_[i * k_ + a]) return false;
    return true;
}

std::uint64_t PatternSet::count(std::span<const int> pinned) const {
    if (n_ == 0) return 1;
    std::vector<Color> f(n_, 0);
    std::uint64_t total = 0;

    // Assign vertices in ascending order; a pattern is checked as soon as its
    // largest vertex has a color.
    auto rec = [&](auto&& self, std::size_t v) -> void {
        Color lo = 0;
        Color hi = static_cast<Color>(k_);
        if (!pinned.empty() && pinned[v] != kFree) {
            lo = static_cast<Color>(pinned[v]);
            hi = static_cast<Color>(lo + 1);
        }
        const auto& checks = by_last_[v];
        for (Color c = lo; c < hi; ++c) {
            f[v] = c;
            bool ok = true;
            for (std::size_t idx : checks)
                if (violated(idx, f)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            if (v + 1 == n_)
                ++total;
            else
                self(self, v + 1);
        }
    };
    rec(rec, 0);
    return total;
}

PatternSet::PatternSet(std::size_t n, unsigned k) : n_(n), k_(k), by_last_(n) {
    if (k >= kNoMatch)
        throw Error(ErrorCode::ResourceLimit, "at most " + std::to_string(kNoMatch - 1) + " colors are supported");
}

BigInt enumeration_cost(std::size_t n, std::size_t m, unsigned k) {
    return ipow(BigInt(k), static_cast<unsigned>(n)) * BigInt(std::max<std::size_t>(m, 1));
}

void require_budget(const BigInt& cost, const Budget& budget, const std::string& what) {
    if (cost > BigInt(budget.limit))
        throw Error(ErrorCode::ResourceLimit, what + " needs an estimated " + cost.str() +
                                                  " edge checks, budget is " + std::to_string(budget.limit));
}

PatternSet natural_patterns(const Hypergraph& h, unsigned k) {
    PatternSet ps(h.vertex_count(), k);
    std::vector<Color> tables;
    for (const Edge& e : h.edges()) {
        tables.clear();
        for (std::size_t i = 1; i < e.size(); ++i)
            for (unsigned c = 0; c < k; ++c) tables.push_back(static_cast<Color>(c));
        ps.add(e[0], std::span(e).subspan(1), tables);
    }
    return ps;
}

PatternSet twist_patterns(std::size_t n, const TwistCover& c) {
    PatternSet ps(n, c.k);
    std::vector<Color> tables;
    for (const TwistEdge& te : c.edges) {
        tables.clear();
        for (const Permutation& p : te.mu)
            for (dpcolor::Color x : p.images()) tables.push_back(static_cast<Color>(x));
        ps.add(te.anchor(), std::span(te.order).subspan(1), tables);
    }
    return ps;
}

} // namespace dpcolor::detail
