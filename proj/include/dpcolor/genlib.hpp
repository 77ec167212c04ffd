#pragma once

#include <dpcolor/hypergraph.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace dpcolor {

enum class Family { Edgeless, LoosePath, StarHypertree, RandomHypertree, LooseCycle, Unicyclic, GraphCycle };

std::string_view to_string(Family f) noexcept;
/// Throws BadParameters for unknown names.
Family family_from_string(std::string_view name);

/// Instance family plus its parameters. Unused parameters are ignored.
///   edgeless(n)
///   loose_path(r, m)          edges {(r-1)i, ..., (r-1)i + r-1}, n = (r-1)m + 1
///   star_hypertree(r, m)      m edges through vertex 0, n = (r-1)m + 1
///   random_hypertree(r, m, seed)
///   loose_cycle(r, p)         n = (r-1)p
///   unicyclic(r, m, p, seed)  loose_cycle plus m pendant edges
///   graph_cycle(p)            loose_cycle(2, p)
struct GenSpec {
    Family family = Family::LoosePath;
    unsigned r = 3;
    unsigned m = 0;
    unsigned p = 3;
    std::size_t n = 1;
    std::uint64_t seed = 0;
};

/// Throws BadParameters when the parameters are outside the family's range.
Hypergraph generate(const GenSpec& spec);

} // namespace dpcolor
