#include <dpcolor/genlib.hpp>

#include <dpcolor/error.hpp>
#include <dpcolor/random.hpp>

#include <array>
#include <utility>

namespace dpcolor {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 7> kNames{{
    {Family::Edgeless, "edgeless"},
    {Family::LoosePath, "loose_path"},
    {Family::StarHypertree, "star_hypertree"},
    {Family::RandomHypertree, "random_hypertree"},
    {Family::LooseCycle, "loose_cycle"},
    {Family::Unicyclic, "unicyclic"},
    {Family::GraphCycle, "graph_cycle"},
}};

void require(bool ok, const std::string& msg) {
    if (!ok) throw Error(ErrorCode::BadParameters, msg);
}

std::vector<Edge> loose_cycle_edges(unsigned r, unsigned p) {
    const Vertex n = (r - 1) * p;
    std::vector<Edge> edges;
    for (unsigned i = 0; i < p; ++i) {
        Edge e;
        for (unsigned t = 0; t < r; ++t) e.push_back(((r - 1) * i + t) % n);
        edges.push_back(std::move(e));
    }
    return edges;
}

// Glues an edge of r-1 fresh vertices onto one existing vertex, chosen
// uniformly among 0..n-1.
void attach_pendant(std::vector<Edge>& edges, std::size_t& n, unsigned r, Rng& rng) {
    Edge e{static_cast<Vertex>(uniform_below(rng, n))};
    for (unsigned t = 1; t < r; ++t) e.push_back(static_cast<Vertex>(n++));
    edges.push_back(std::move(e));
}

} // namespace

std::string_view to_string(Family f) noexcept {
    for (const auto& [fam, name] : kNames)
        if (fam == f) return name;
    return "unknown";
}

Family family_from_string(std::string_view name) {
    for (const auto& [fam, n] : kNames)
        if (n == name) return fam;
    throw Error(ErrorCode::BadParameters, "unknown family '" + std::string(name) + "'");
}

Hypergraph generate(const GenSpec& spec) {
    std::vector<Edge> edges;
    std::size_t n = 0;
    switch (spec.family) {
    case Family::Edgeless:
        require(spec.n >= 1, "edgeless needs n >= 1");
        n = spec.n;
        break;
    case Family::LoosePath:
        require(spec.r >= 2, "loose_path needs r >= 2");
        n = static_cast<std::size_t>(spec.r - 1) * spec.m + 1;
        for (unsigned i = 0; i < spec.m; ++i) {
            Edge e;
            for (unsigned t = 0; t < spec.r; ++t) e.push_back((spec.r - 1) * i + t);
            edges.push_back(std::move(e));
        }
        break;
    case Family::StarHypertree:
        require(spec.r >= 2, "star_hypertree needs r >= 2");
        n = 1;
        for (unsigned i = 0; i < spec.m; ++i) {
            Edge e{0};
            for (unsigned t = 1; t < spec.r; ++t) e.push_back(static_cast<Vertex>(n++));
            edges.push_back(std::move(e));
        }
        break;
    case Family::RandomHypertree: {
        require(spec.r >= 2, "random_hypertree needs r >= 2");
        Rng rng(spec.seed);
        n = 1;
        for (unsigned i = 0; i < spec.m; ++i) attach_pendant(edges, n, spec.r, rng);
        break;
    }
    case Family::LooseCycle:
        require(spec.r >= 2, "loose_cycle needs r >= 2");
        require(spec.p >= 3, "loose_cycle needs p >= 3");
        edges = loose_cycle_edges(spec.r, spec.p);
        n = static_cast<std::size_t>(spec.r - 1) * spec.p;
        break;
    case Family::Unicyclic: {
        require(spec.r >= 2, "unicyclic needs r >= 2");
        require(spec.p >= 3, "unicyclic needs p >= 3");
        Rng rng(spec.seed);
        edges = loose_cycle_edges(spec.r, spec.p);
        n = static_cast<std::size_t>(spec.r - 1) * spec.p;
        for (unsigned i = 0; i < spec.m; ++i) attach_pendant(edges, n, spec.r, rng);
        break;
    }
    case Family::GraphCycle:
        require(spec.p >= 3, "graph_cycle needs p >= 3");
        edges = loose_cycle_edges(2, spec.p);
        n = spec.p;
        break;
    }
    return Hypergraph::validate(n, std::move(edges));
}

} // namespace dpcolor
