#pragma once

#include <dpcolor/bigint.hpp>
#include <dpcolor/chromcount.hpp>
#include <dpcolor/hypergraph.hpp>
#include <dpcolor/random.hpp>

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace dpcolor {

/// Colors are 0-based internally; serialized forms are 1-based.
using Color = unsigned;

/// A bijection of {0..k-1}. Ordered lexicographically by image list.
class Permutation {
public:
    Permutation() = default;
    /// Throws InvalidCover unless `images` is a bijection of {0..size-1}.
    explicit Permutation(std::vector<Color> images);

    static Permutation identity(unsigned k);
    /// c -> c+1 mod k.
    static Permutation cyclic_shift(unsigned k);

    [[nodiscard]] unsigned size() const noexcept { return static_cast<unsigned>(images_.size()); }
    [[nodiscard]] Color operator()(Color c) const { return images_[c]; }
    [[nodiscard]] const std::vector<Color>& images() const noexcept { return images_; }
    [[nodiscard]] bool is_identity() const noexcept;
    [[nodiscard]] Permutation inverse() const;

    /// Lexicographic successor; returns false (and wraps to identity) after
    /// the last permutation.
    bool advance();

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<Color> images_;
};

/// outer ∘ inner.
Permutation compose(const Permutation& outer, const Permutation& inner);
Permutation random_permutation(unsigned k, Rng& rng);

/// A map defined exactly on edge `edge`; colors[i] is the color of the i-th
/// (ascending) vertex of that edge.
struct PartialMap {
    EdgeIndex edge = 0;
    std::vector<Color> colors;

    friend bool operator==(const PartialMap&, const PartialMap&) = default;
};

struct GeneralCover {
    unsigned k = 0;
    std::vector<PartialMap> maps;

    friend bool operator==(const GeneralCover&, const GeneralCover&) = default;
};

/// The k maps of a full cover on one edge, relative to an anchor vertex:
/// map c sends the anchor to c and order[i+1] to mu[i](c).
struct TwistEdge {
    std::vector<Vertex> order;     // anchor first
    std::vector<Permutation> mu;   // mu[i] belongs to order[i+1]

    [[nodiscard]] Vertex anchor() const { return order.front(); }

    friend bool operator==(const TwistEdge&, const TwistEdge&) = default;
};

/// A full k-fold cover: edges[j] describes the maps on edge j.
struct TwistCover {
    unsigned k = 0;
    std::vector<TwistEdge> edges;

    friend bool operator==(const TwistCover&, const TwistCover&) = default;
};

/// One color relabelling per vertex.
struct GaugeMap {
    std::vector<Permutation> tau;

    static GaugeMap identity(std::size_t n, unsigned k);
};

/// Anchor at the lowest vertex, every permutation the identity: the maps on
/// each edge are exactly its constant colorings.
TwistCover natural_cover(const Hypergraph& h, unsigned k);

/// Throws InvalidCover if `c` does not describe a full cover of h.
void validate_twist(const Hypergraph& h, const TwistCover& c);

/// Same maps, indexed from a different anchor vertex of the edge.
TwistEdge reanchor(const TwistEdge& e, Vertex new_anchor);

/// Number of colorings f: V -> [k] containing no map of the cover.
BigInt count_colorings(const Hypergraph& h, const TwistCover& c, const Budget& budget = {});
BigInt count_colorings(const Hypergraph& h, const GeneralCover& f, const Budget& budget = {});

/// Throws DomainNotAnEdge, DisjointnessViolation, TooManyMapsOnEdge or
/// InvalidCover (color out of range).
void validate_general(const Hypergraph& h, const GeneralCover& f);

/// Raw maps given as (domain vertices, colors). Each domain must be exactly an
/// edge of h (any vertex order), otherwise DomainNotAnEdge.
GeneralCover general_from_domains(const Hypergraph& h, unsigned k,
                                  const std::vector<std::pair<std::vector<Vertex>, std::vector<Color>>>& raw);

/// Extends f to k maps per edge. New maps are appended edge by edge; each
/// takes, at every vertex, the smallest color not yet used there.
GeneralCover complete_cover(const Hypergraph& h, const GeneralCover& f);

GeneralCover twist_to_general(const Hypergraph& h, const TwistCover& c);
/// Requires exactly k maps on every edge (NotFull otherwise). Anchors at the
/// lowest vertex of each edge.
TwistCover general_to_twist(const Hypergraph& h, const GeneralCover& f);

/// Recolors vertex v through tau[v]. In anchor coordinates:
/// mu'_v = tau_v ∘ mu_v ∘ tau_anchor^{-1}.
TwistCover apply_gauge(const Hypergraph& h, const TwistCover& c, const GaugeMap& g);

/// Gauge-fixing skeleton of a hypergraph. Edges are visited breadth-first:
/// each component is rooted at its lowest vertex, vertices are dequeued in
/// visit order and their incident edges taken in ascending index. An edge's
/// anchor is its earliest-visited vertex. A non-anchor position whose vertex
/// was already visited is a free slot; the rest are absorbed by the gauge.
struct FrameSlot {
    EdgeIndex edge = 0;
    std::size_t position = 0;   // index into TwistEdge::mu
    Vertex vertex = 0;
};

struct CanonicalFrame {
    std::vector<EdgeIndex> edge_order;       // BFS processing order
    std::vector<std::vector<Vertex>> order;  // per edge: anchor, then rest ascending
    std::vector<FrameSlot> free_slots;       // in BFS order
};

CanonicalFrame canonical_frame(const Hypergraph& h);

struct FreeSlot {
    EdgeIndex edge = 0;
    Vertex vertex = 0;
    Permutation residual;
};

struct Canonical {
    TwistCover cover;
    GaugeMap gauge;
    std::vector<FreeSlot> free_slots;
};

/// Gauge-fixes `c` along canonical_frame(h). Every non-free permutation of
/// the result is the identity and apply_gauge(c, gauge) describes the same
/// maps as `cover`. Acyclic h yields no free slots, so the result is the
/// natural cover.
Canonical canonicalize(const Hypergraph& h, const TwistCover& c);

/// Twist cover with the frame's anchors, identity everywhere except the given
/// free-slot permutations (one per frame.free_slots entry).
TwistCover assemble_from_frame(const CanonicalFrame& frame, unsigned k, const std::vector<Permutation>& slots);

enum class ExtremalVariant { Aligned, Shifted };

/// Natural cover except on edge e. With v_1, v_2, ... = boundary_order(h, e):
/// Aligned keeps the constant maps on e; Shifted uses maps phi_i with
/// phi_i(v_1) = i+1 (mod k) and phi_i(v_j) = i for j >= 2.
TwistCover extremal_cover(const Hypergraph& h, EdgeIndex e, unsigned k, ExtremalVariant variant);

/// Anchor at the lowest vertex of each edge; every other permutation drawn
/// uniformly and independently, edges ascending, vertices ascending.
TwistCover random_cover(const Hypergraph& h, unsigned k, std::uint64_t seed);
TwistCover random_cover(const Hypergraph& h, unsigned k, Rng& rng);

} // namespace dpcolor
