#include <dpcolor/cover.hpp>

#include <dpcolor/error.hpp>

#include "enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace dpcolor {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<Color> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Color c : images_) {
        if (c >= images_.size() || seen[c]) throw Error(ErrorCode::InvalidCover, "permutation is not a bijection");
        seen[c] = true;
    }
}

Permutation Permutation::identity(unsigned k) {
    Permutation p;
    p.images_.resize(k);
    std::iota(p.images_.begin(), p.images_.end(), 0U);
    return p;
}

Permutation Permutation::cyclic_shift(unsigned k) {
    Permutation p;
    p.images_.resize(k);
    for (Color c = 0; c < k; ++c) p.images_[c] = (c + 1) % k;
    return p;
}

bool Permutation::is_identity() const noexcept {
    for (Color c = 0; c < images_.size(); ++c)
        if (images_[c] != c) return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.images_.resize(images_.size());
    for (Color c = 0; c < images_.size(); ++c) p.images_[images_[c]] = c;
    return p;
}

bool Permutation::advance() { return std::next_permutation(images_.begin(), images_.end()); }

Permutation compose(const Permutation& outer, const Permutation& inner) {
    std::vector<Color> out(inner.size());
    for (Color c = 0; c < inner.size(); ++c) out[c] = outer(inner(c));
    return Permutation(std::move(out));
}

Permutation random_permutation(unsigned k, Rng& rng) {
    std::vector<Color> img(k);
    std::iota(img.begin(), img.end(), 0U);
    for (unsigned i = k; i > 1; --i) std::swap(img[i - 1], img[uniform_below(rng, i)]);
    return Permutation(std::move(img));
}

GaugeMap GaugeMap::identity(std::size_t n, unsigned k) { return GaugeMap{std::vector<Permutation>(n, Permutation::identity(k))}; }

// ---------------------------------------------------------------------------
// Twist covers

namespace {

TwistEdge identity_edge(std::vector<Vertex> order, unsigned k) {
    TwistEdge e;
    e.mu.assign(order.size() - 1, Permutation::identity(k));
    e.order = std::move(order);
    return e;
}

std::size_t position_in(const std::vector<Vertex>& order, Vertex v) {
    return static_cast<std::size_t>(std::find(order.begin(), order.end(), v) - order.begin());
}

} // namespace

TwistCover natural_cover(const Hypergraph& h, unsigned k) {
    TwistCover c;
    c.k = k;
    for (const Edge& e : h.edges()) c.edges.push_back(identity_edge(e, k));
    return c;
}

void validate_twist(const Hypergraph& h, const TwistCover& c) {
    if (c.edges.size() != h.edge_count())
        throw Error(ErrorCode::InvalidCover, "cover describes " + std::to_string(c.edges.size()) +
                                                 " edges, hypergraph has " + std::to_string(h.edge_count()));
    for (EdgeIndex j = 0; j < h.edge_count(); ++j) {
        const TwistEdge& te = c.edges[j];
        std::vector<Vertex> sorted = te.order;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != h.edges()[j])
            throw Error(ErrorCode::InvalidCover, "vertex order of edge " + std::to_string(j) + " does not match");
        if (te.mu.size() + 1 != te.order.size())
            throw Error(ErrorCode::InvalidCover, "edge " + std::to_string(j) + " needs one permutation per non-anchor");
        for (const Permutation& p : te.mu)
            if (p.size() != c.k)
                throw Error(ErrorCode::InvalidCover, "permutation size differs from k on edge " + std::to_string(j));
    }
}

TwistEdge reanchor(const TwistEdge& e, Vertex new_anchor) {
    const std::size_t pos = position_in(e.order, new_anchor);
    if (pos == e.order.size()) throw Error(ErrorCode::InvalidCover, "new anchor is not on the edge");
    const unsigned k = e.mu.empty() ? 0 : e.mu.front().size();
    // Old map c sends new_anchor to mu_b(c); re-index the maps by that color.
    const Permutation b_inv = pos == 0 ? Permutation::identity(k) : e.mu[pos - 1].inverse();
    std::vector<std::pair<Vertex, Permutation>> rest;
    for (std::size_t i = 0; i < e.order.size(); ++i) {
        if (i == pos) continue;
        rest.emplace_back(e.order[i], i == 0 ? b_inv : compose(e.mu[i - 1], b_inv));
    }
    std::sort(rest.begin(), rest.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    TwistEdge out;
    out.order.push_back(new_anchor);
    for (auto& [v, p] : rest) {
        out.order.push_back(v);
        out.mu.push_back(std::move(p));
    }
    return out;
}

BigInt count_colorings(const Hypergraph& h, const TwistCover& c, const Budget& budget) {
    validate_twist(h, c);
    detail::require_budget(detail::enumeration_cost(h.vertex_count(), h.edge_count(), c.k), budget,
                           "cover coloring count");
    return BigInt(detail::twist_patterns(h.vertex_count(), c).count());
}

// ---------------------------------------------------------------------------
// General covers

void validate_general(const Hypergraph& h, const GeneralCover& f) {
    std::vector<std::vector<const PartialMap*>> per_edge(h.edge_count());
    for (const PartialMap& pm : f.maps) {
        if (pm.edge >= h.edge_count() || pm.colors.size() != h.edges()[pm.edge].size())
            throw Error(ErrorCode::DomainNotAnEdge, "partial map domain is not an edge of the hypergraph");
        for (Color c : pm.colors)
            if (c >= f.k) throw Error(ErrorCode::InvalidCover, "partial map color outside [k]");
        for (const PartialMap* other : per_edge[pm.edge])
            for (std::size_t i = 0; i < pm.colors.size(); ++i)
                if (other->colors[i] == pm.colors[i])
                    throw Error(ErrorCode::DisjointnessViolation,
                                "two maps on edge " + std::to_string(pm.edge) + " agree at vertex " +
                                    std::to_string(h.edges()[pm.edge][i]));
        per_edge[pm.edge].push_back(&pm);
        if (per_edge[pm.edge].size() > f.k)
            throw Error(ErrorCode::TooManyMapsOnEdge, "more than k maps on edge " + std::to_string(pm.edge));
    }
}

GeneralCover general_from_domains(const Hypergraph& h, unsigned k,
                                  const std::vector<std::pair<std::vector<Vertex>, std::vector<Color>>>& raw) {
    GeneralCover f;
    f.k = k;
    for (const auto& [domain, colors] : raw) {
        if (domain.size() != colors.size())
            throw Error(ErrorCode::InvalidCover, "partial map has mismatched domain and colors");
        std::vector<std::size_t> idx(domain.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return domain[a] < domain[b]; });
        Edge sorted;
        PartialMap pm;
        for (std::size_t i : idx) {
            sorted.push_back(domain[i]);
            pm.colors.push_back(colors[i]);
        }
        const auto it = std::find(h.edges().begin(), h.edges().end(), sorted);
        if (it == h.edges().end()) throw Error(ErrorCode::DomainNotAnEdge, "partial map domain is not an edge");
        pm.edge = static_cast<EdgeIndex>(it - h.edges().begin());
        f.maps.push_back(std::move(pm));
    }
    return f;
}

BigInt count_colorings(const Hypergraph& h, const GeneralCover& f, const Budget& budget) {
    validate_general(h, f);
    detail::require_budget(detail::enumeration_cost(h.vertex_count(), f.maps.size(), f.k), budget,
                           "cover coloring count");
    detail::PatternSet ps(h.vertex_count(), f.k);
    std::vector<detail::Color> tables;
    for (const PartialMap& pm : f.maps) {
        const Edge& e = h.edges()[pm.edge];
        tables.assign((e.size() - 1) * f.k, detail::kNoMatch);
        for (std::size_t i = 1; i < e.size(); ++i)
            tables[(i - 1) * f.k + pm.colors[0]] = static_cast<detail::Color>(pm.colors[i]);
        ps.add(e[0], std::span(e).subspan(1), tables);
    }
    return BigInt(ps.count());
}

GeneralCover complete_cover(const Hypergraph& h, const GeneralCover& f) {
    validate_general(h, f);
    GeneralCover out = f;
    for (EdgeIndex j = 0; j < h.edge_count(); ++j) {
        const std::size_t r = h.edges()[j].size();
        std::vector<std::vector<bool>> used(r, std::vector<bool>(f.k, false));
        std::size_t present = 0;
        for (const PartialMap& pm : f.maps) {
            if (pm.edge != j) continue;
            ++present;
            for (std::size_t i = 0; i < r; ++i) used[i][pm.colors[i]] = true;
        }
        for (; present < f.k; ++present) {
            PartialMap pm{j, std::vector<Color>(r)};
            for (std::size_t i = 0; i < r; ++i) {
                Color c = 0;
                while (used[i][c]) ++c;
                used[i][c] = true;
                pm.colors[i] = c;
            }
            out.maps.push_back(std::move(pm));
        }
    }
    return out;
}

GeneralCover twist_to_general(const Hypergraph& h, const TwistCover& c) {
    validate_twist(h, c);
    GeneralCover f;
    f.k = c.k;
    for (EdgeIndex j = 0; j < h.edge_count(); ++j) {
        const Edge& e = h.edges()[j];
        const TwistEdge& te = c.edges[j];
        for (Color col = 0; col < c.k; ++col) {
            PartialMap pm{j, std::vector<Color>(e.size())};
            for (std::size_t i = 0; i < te.order.size(); ++i) {
                const std::size_t pos = position_in(e, te.order[i]);
                pm.colors[pos] = i == 0 ? col : te.mu[i - 1](col);
            }
            f.maps.push_back(std::move(pm));
        }
    }
    return f;
}

TwistCover general_to_twist(const Hypergraph& h, const GeneralCover& f) {
    validate_general(h, f);
    std::vector<std::vector<const PartialMap*>> per_edge(h.edge_count());
    for (const PartialMap& pm : f.maps) per_edge[pm.edge].push_back(&pm);
    TwistCover c;
    c.k = f.k;
    for (EdgeIndex j = 0; j < h.edge_count(); ++j) {
        if (per_edge[j].size() != f.k)
            throw Error(ErrorCode::NotFull, "edge " + std::to_string(j) + " has " +
                                                std::to_string(per_edge[j].size()) + " maps, expected k");
        const Edge& e = h.edges()[j];
        TwistEdge te;
        te.order = e;
        std::vector<std::vector<Color>> images(e.size() - 1, std::vector<Color>(f.k));
        for (const PartialMap* pm : per_edge[j])
            for (std::size_t i = 1; i < e.size(); ++i) images[i - 1][pm->colors[0]] = pm->colors[i];
        for (auto& img : images) te.mu.emplace_back(std::move(img));
        c.edges.push_back(std::move(te));
    }
    return c;
}

TwistCover apply_gauge(const Hypergraph& h, const TwistCover& c, const GaugeMap& g) {
    validate_twist(h, c);
    if (g.tau.size() != h.vertex_count()) throw Error(ErrorCode::InvalidCover, "gauge needs one permutation per vertex");
    TwistCover out = c;
    for (TwistEdge& te : out.edges) {
        const Permutation anchor_inv = g.tau[te.anchor()].inverse();
        for (std::size_t i = 0; i < te.mu.size(); ++i)
            te.mu[i] = compose(g.tau[te.order[i + 1]], compose(te.mu[i], anchor_inv));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Canonicalization
//
// Why the free slots are the whole search space for P_DP:
//  * Adding a map to a cover can only remove colorings, so the minimum is
//    attained by a full cover (k pairwise disjoint maps on every edge).
//  * A full cover is a TwistCover; recoloring each vertex through its own
//    permutation (a gauge) is a bijection on colorings and preserves counts.
//  * Along a breadth-first spanning structure, each newly reached vertex can
//    absorb the permutation of the edge that reaches it. On an acyclic
//    hypergraph this turns any cover into the natural cover, which is the
//    bijection between an arbitrary cover and the natural cover of a
//    cycle-free hypergraph. Only positions that close a cycle of the
//    incidence graph keep a residual permutation.

CanonicalFrame canonical_frame(const Hypergraph& h) {
    const std::size_t n = h.vertex_count();
    constexpr std::size_t kUnseen = SIZE_MAX;
    std::vector<std::size_t> visit(n, kUnseen);
    std::vector<bool> done(h.edge_count(), false);
    std::size_t clock = 0;

    CanonicalFrame frame;
    frame.order.resize(h.edge_count());
    for (Vertex root = 0; root < n; ++root) {
        if (visit[root] != kUnseen) continue;
        visit[root] = clock++;
        std::queue<Vertex> queue;
        queue.push(root);
        while (!queue.empty()) {
            const Vertex u = queue.front();
            queue.pop();
            for (EdgeIndex j : h.incident(u)) {
                if (done[j]) continue;
                done[j] = true;
                frame.edge_order.push_back(j);
                const Edge& e = h.edges()[j];
                Vertex anchor = u;
                for (Vertex w : e)
                    if (visit[w] != kUnseen && visit[w] < visit[anchor]) anchor = w;
                std::vector<Vertex> order{anchor};
                for (Vertex w : e)
                    if (w != anchor) order.push_back(w);
                for (std::size_t i = 1; i < order.size(); ++i) {
                    const Vertex w = order[i];
                    if (visit[w] == kUnseen) {
                        visit[w] = clock++;
                        queue.push(w);
                    } else {
                        frame.free_slots.push_back(FrameSlot{j, i - 1, w});
                    }
                }
                frame.order[j] = std::move(order);
            }
        }
    }
    return frame;
}

Canonical canonicalize(const Hypergraph& h, const TwistCover& c) {
    validate_twist(h, c);
    const CanonicalFrame frame = canonical_frame(h);
    const unsigned k = c.k;

    Canonical out;
    out.gauge = GaugeMap::identity(h.vertex_count(), k);

    TwistCover anchored = c;
    for (EdgeIndex j = 0; j < h.edge_count(); ++j) anchored.edges[j] = reanchor(c.edges[j], frame.order[j][0]);

    // Replay the BFS: the first time a vertex is reached its tau is chosen so
    // that tau_w ∘ mu_w ∘ tau_a^{-1} = id, i.e. tau_w = tau_a ∘ mu_w^{-1}.
    std::size_t slot_cursor = 0;
    for (EdgeIndex j : frame.edge_order) {
        const TwistEdge& te = anchored.edges[j];
        const Vertex a = te.anchor();
        for (std::size_t i = 0; i < te.mu.size(); ++i) {
            const Vertex w = te.order[i + 1];
            const bool slot_here = slot_cursor < frame.free_slots.size() &&
                                   frame.free_slots[slot_cursor].edge == j &&
                                   frame.free_slots[slot_cursor].position == i;
            if (slot_here) {
                ++slot_cursor;
                continue;
            }
            out.gauge.tau[w] = compose(out.gauge.tau[a], te.mu[i].inverse());
        }
    }

    out.cover = apply_gauge(h, anchored, out.gauge);
    for (const FrameSlot& s : frame.free_slots)
        out.free_slots.push_back(FreeSlot{s.edge, s.vertex, out.cover.edges[s.edge].mu[s.position]});
    return out;
}

TwistCover assemble_from_frame(const CanonicalFrame& frame, unsigned k, const std::vector<Permutation>& slots) {
    TwistCover c;
    c.k = k;
    for (const auto& order : frame.order) c.edges.push_back(identity_edge(order, k));
    for (std::size_t s = 0; s < frame.free_slots.size(); ++s)
        c.edges[frame.free_slots[s].edge].mu[frame.free_slots[s].position] = slots.at(s);
    return c;
}

// ---------------------------------------------------------------------------
// Constructions

TwistCover extremal_cover(const Hypergraph& h, EdgeIndex e, unsigned k, ExtremalVariant variant) {
    if (e >= h.edge_count()) throw Error(ErrorCode::IndexOutOfRange, "edge index " + std::to_string(e) + " out of range");
    if (k < 2) throw Error(ErrorCode::DomainError, "extremal cover needs k >= 2");
    TwistCover c = natural_cover(h, k);
    const std::vector<Vertex> vs = boundary_order(h, e);
    // anchor v_2 so that phi_i(v_2) = i, then v_1 carries the twist
    std::vector<Vertex> order{vs[1], vs[0]};
    for (std::size_t i = 2; i < vs.size(); ++i) order.push_back(vs[i]);
    c.edges[e] = identity_edge(std::move(order), k);
    if (variant == ExtremalVariant::Shifted) c.edges[e].mu[0] = Permutation::cyclic_shift(k);
    return c;
}

TwistCover random_cover(const Hypergraph& h, unsigned k, std::uint64_t seed) {
    Rng rng(seed);
    return random_cover(h, k, rng);
}

TwistCover random_cover(const Hypergraph& h, unsigned k, Rng& rng) {
    TwistCover c = natural_cover(h, k);
    for (TwistEdge& te : c.edges)
        for (Permutation& p : te.mu) p = random_permutation(k, rng);
    return c;
}

} // namespace dpcolor
