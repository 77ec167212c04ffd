#pragma once

#include <dpcolor/bigint.hpp>
#include <dpcolor/chromcount.hpp>
#include <dpcolor/cover.hpp>
#include <dpcolor/hypergraph.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dpcolor {

struct DpOptions {
    Budget budget;
    /// Worker threads for cover enumeration. Results do not depend on it.
    unsigned workers = 1;
    /// With exactly one free slot, examine one permutation per conjugacy
    /// class. Same value and witness as the full search.
    bool conjugacy_pruning = false;
};

struct DpResult {
    BigInt value;
    TwistCover witness;
    std::uint64_t covers_examined = 0;
    std::size_t free_slot_count = 0;
};

/// k^n (k^{r-1} - 1)^m / k^{(r-1)m}: the mean number of colorings of a
/// uniformly random full cover of an r-uniform hypergraph. Throws NotUniform
/// for mixed edge sizes and DomainError for k = 0. Edgeless: k^n.
Rational dp_upper_bound(const Hypergraph& h, unsigned k);

/// Minimum number of F-colorings over all k-fold covers F.
///
/// The search runs over free-slot assignments of canonical_frame(h) only (see
/// the soundness note in cover.cpp). Assignments are ordered
/// lexicographically, first slot most significant; the witness is the first
/// minimizer in that order.
DpResult dp_exact(const Hypergraph& h, unsigned k, const DpOptions& opts = {});

/// Same value as dp_exact, computed per connected component and multiplied.
DpResult dp_exact_by_components(const Hypergraph& h, unsigned k, const DpOptions& opts = {});

struct ClosedForm {
    BigInt value;
    std::string provenance;
};

/// Closed form for P_DP where one is known: uniform hypertrees (equal to P)
/// and linear r-uniform unicyclic hypergraphs with r >= 3 (odd cycle: equal to
/// P; even cycle: (k^{r-1}-1)^{m+p} - (k^{r-1}-1)^m).
std::optional<ClosedForm> dp_closed(const Hypergraph& h, unsigned k);

struct StrictLessReport {
    bool holds = false;
    Rational lhs;   // P(H-e, k)
    Rational rhs;   // k^{r-1} / (k^{r-1} - 1) * P(H, k)
    BigInt p;
    /// Computed when `holds`, and then strictly below p.
    std::optional<BigInt> p_dp;
};

/// Sufficient condition for P_DP(H,k) < P(H,k) via a single edge. When it
/// holds, dp_exact is run as a cross-check; a violation throws
/// ConsistencyFailure.
StrictLessReport strict_less_test(const Hypergraph& h, EdgeIndex e, unsigned k, const DpOptions& opts = {});

/// Smallest k <= k_max with P_DP(H,k) > 0.
std::optional<unsigned> dp_chromatic_number(const Hypergraph& h, unsigned k_max, const DpOptions& opts = {});

struct SampleStats {
    Rational mean;
    BigInt min;
    BigInt max;
    std::uint64_t samples = 0;
    std::map<BigInt, std::uint64_t> histogram;
};

/// Mean coloring count over `trials` covers drawn by random_cover from one
/// generator seeded with `seed`.
SampleStats monte_carlo_mean(const Hypergraph& h, unsigned k, std::uint64_t trials, std::uint64_t seed,
                             const DpOptions& opts = {});

/// Exact mean over every free-slot assignment. Gauge-fixing maps the uniform
/// distribution on full covers onto the uniform distribution on assignments,
/// so for r-uniform h this equals dp_upper_bound.
SampleStats exact_free_slot_average(const Hypergraph& h, unsigned k, const DpOptions& opts = {});

struct GapRow {
    unsigned k = 0;
    BigInt p;
    BigInt p_dp;
    BigInt gap;
    Rational normalized_gap;   // gap / k^{n-2}
};

std::vector<GapRow> gap_profile(const Hypergraph& h, unsigned k_min, unsigned k_max, const DpOptions& opts = {});

} // namespace dpcolor
