#include <dpcolor/dpfunc.hpp>

#include <dpcolor/error.hpp>

#include "enumerate.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace dpcolor {

namespace {

std::vector<Permutation> all_permutations(unsigned k) {
    std::vector<Permutation> out;
    Permutation p = Permutation::identity(k);
    do {
        out.push_back(p);
    } while (p.advance());
    return out;
}

std::vector<std::size_t> cycle_type(const Permutation& p) {
    std::vector<bool> seen(p.size(), false);
    std::vector<std::size_t> lengths;
    for (Color c = 0; c < p.size(); ++c) {
        if (seen[c]) continue;
        std::size_t len = 0;
        for (Color x = c; !seen[x]; x = p(x)) {
            seen[x] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

// Lexicographically first member of each conjugacy class.
std::vector<Permutation> class_representatives(unsigned k) {
    std::vector<Permutation> reps;
    std::set<std::vector<std::size_t>> seen;
    for (Permutation& p : all_permutations(k))
        if (seen.insert(cycle_type(p)).second) reps.push_back(std::move(p));
    return reps;
}

struct SlotSearch {
    CanonicalFrame frame;
    unsigned k = 0;
    std::vector<Permutation> choices;   // candidate permutations per slot, lex order
    std::uint64_t total = 0;

    [[nodiscard]] std::vector<Permutation> decode(std::uint64_t idx) const {
        const std::size_t s = frame.free_slots.size();
        std::vector<Permutation> slots(s);
        for (std::size_t i = s; i-- > 0;) {
            slots[i] = choices[idx % choices.size()];
            idx /= choices.size();
        }
        return slots;
    }
};

struct SlotStats {
    std::uint64_t examined = 0;
    std::uint64_t min = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t max = 0;
    std::uint64_t argmin = 0;
    BigInt sum = 0;
    std::map<BigInt, std::uint64_t> histogram;

    // Chunks are merged in index order, so ties keep the smaller index.
    void merge(const SlotStats& o) {
        if (o.examined == 0) return;
        if (examined == 0 || o.min < min) {
            min = o.min;
            argmin = o.argmin;
        }
        max = std::max(max, o.max);
        examined += o.examined;
        sum += o.sum;
        for (const auto& [v, c] : o.histogram) histogram[v] += c;
    }
};

SlotSearch make_search(const Hypergraph& h, unsigned k, bool prune, const Budget& budget) {
    SlotSearch s;
    s.frame = canonical_frame(h);
    s.k = k;
    const std::size_t slots = s.frame.free_slots.size();
    s.choices = (prune && slots == 1) ? class_representatives(k) : all_permutations(k);
    const BigInt covers = ipow(BigInt(s.choices.size()), static_cast<unsigned>(slots));
    detail::require_budget(covers * detail::enumeration_cost(h.vertex_count(), h.edge_count(), k), budget,
                           std::to_string(slots) + " free slot(s) at k=" + std::to_string(k) + " (" +
                               covers.str() + " covers)");
    s.total = static_cast<std::uint64_t>(covers);
    return s;
}

SlotStats scan(const Hypergraph& h, const SlotSearch& s, unsigned workers) {
    std::vector<SlotStats> partial(std::max(1U, workers));
    detail::parallel_chunks(s.total, workers, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
        SlotStats& st = partial[w];
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            const TwistCover cover = assemble_from_frame(s.frame, s.k, s.decode(idx));
            const std::uint64_t value = detail::twist_patterns(h.vertex_count(), cover).count();
            if (st.examined == 0 || value < st.min) {
                st.min = value;
                st.argmin = idx;
            }
            st.max = std::max(st.max, value);
            ++st.examined;
            st.sum += value;
            ++st.histogram[BigInt(value)];
        }
    });
    SlotStats out;
    for (const SlotStats& p : partial) out.merge(p);
    return out;
}

} // namespace

Rational dp_upper_bound(const Hypergraph& h, unsigned k) {
    if (k == 0) throw Error(ErrorCode::DomainError, "upper bound needs k >= 1");
    const BigInt kb = k;
    const std::size_t n = h.vertex_count();
    const std::size_t m = h.edge_count();
    if (m == 0) return Rational(ipow(kb, static_cast<unsigned>(n)));
    const auto r = h.uniform_size();
    if (!r) throw Error(ErrorCode::NotUniform, "upper bound needs an r-uniform hypergraph");
    const unsigned rm1 = static_cast<unsigned>(*r - 1);
    return Rational(ipow(kb, static_cast<unsigned>(n)) * ipow(ipow(kb, rm1) - 1, static_cast<unsigned>(m)),
                    ipow(kb, rm1 * static_cast<unsigned>(m)));
}

DpResult dp_exact(const Hypergraph& h, unsigned k, const DpOptions& opts) {
    if (k <= 1) {
        // P_DP(H,0) = 0 on a nonempty vertex set; with one color the only
        // coloring is forbidden as soon as an edge exists.
        CanonicalFrame frame = canonical_frame(h);
        DpResult res;
        res.value = (k == 1 && h.edge_count() == 0) ? 1 : 0;
        res.witness = assemble_from_frame(frame, k, std::vector<Permutation>(frame.free_slots.size(), Permutation::identity(k)));
        res.covers_examined = 1;
        res.free_slot_count = frame.free_slots.size();
        return res;
    }
    const SlotSearch search = make_search(h, k, opts.conjugacy_pruning, opts.budget);
    const SlotStats st = scan(h, search, opts.workers);
    DpResult res;
    res.value = st.min;
    res.witness = assemble_from_frame(search.frame, k, search.decode(st.argmin));
    res.covers_examined = st.examined;
    res.free_slot_count = search.frame.free_slots.size();
    return res;
}

DpResult dp_exact_by_components(const Hypergraph& h, unsigned k, const DpOptions& opts) {
    DpResult res;
    res.value = 1;
    res.witness = natural_cover(h, k);
    for (const Component& comp : components(h)) {
        const Hypergraph sub = induced_component(h, comp);
        const DpResult part = dp_exact(sub, k, opts);
        res.value *= part.value;
        res.covers_examined += part.covers_examined;
        res.free_slot_count += part.free_slot_count;
        for (std::size_t i = 0; i < comp.edges.size(); ++i) {
            TwistEdge te = part.witness.edges[i];
            for (Vertex& v : te.order) v = comp.vertices[v];
            res.witness.edges[comp.edges[i]] = std::move(te);
        }
    }
    return res;
}

std::optional<ClosedForm> dp_closed(const Hypergraph& h, unsigned k) {
    const StructureReport rep = classify(h);
    const BigInt kb = k;
    if (rep.classification == Classification::Hypertree) {
        if (h.edge_count() == 0) return ClosedForm{kb, "hypertree"};
        if (!rep.uniform_r) return std::nullopt;
        return ClosedForm{hypertree_poly(static_cast<unsigned>(*rep.uniform_r), static_cast<unsigned>(h.edge_count()), kb),
                          "hypertree"};
    }
    if (rep.classification != Classification::Unicyclic || !rep.uniform_r || *rep.uniform_r < 3) return std::nullopt;
    // The cycle formulas are derived for k >= 2; below that every edge kills
    // all colorings.
    if (k < 2) return ClosedForm{BigInt(0), "unicyclic-small-k"};
    const unsigned r = static_cast<unsigned>(*rep.uniform_r);
    const unsigned p = static_cast<unsigned>(*rep.cycle_length);
    const unsigned m = static_cast<unsigned>(h.edge_count()) - p;
    if (p % 2 == 1) return ClosedForm{unicyclic_poly(r, m, p, kb), "unicyclic-odd"};
    const BigInt base = ipow(kb, r - 1) - 1;
    return ClosedForm{ipow(base, m + p) - ipow(base, m), "unicyclic-even"};
}

StrictLessReport strict_less_test(const Hypergraph& h, EdgeIndex e, unsigned k, const DpOptions& opts) {
    const auto r = h.uniform_size();
    if (!r) throw Error(ErrorCode::NotUniform, "strict inequality test needs an r-uniform hypergraph");
    if (k < 2) throw Error(ErrorCode::DomainError, "strict inequality test needs k >= 2");
    const Hypergraph rest = delete_edge(h, e);
    StrictLessReport rep;
    rep.p = count_proper(h, k, opts.budget);
    const BigInt q = ipow(BigInt(k), static_cast<unsigned>(*r - 1));
    rep.lhs = Rational(count_proper(rest, k, opts.budget));
    rep.rhs = Rational(q * rep.p, q - 1);
    rep.holds = rep.lhs < rep.rhs;
    if (rep.holds) {
        rep.p_dp = dp_exact(h, k, opts).value;
        if (!(*rep.p_dp < rep.p))
            throw Error(ErrorCode::ConsistencyFailure, "strict inequality hypothesis holds but P_DP = " +
                                                           rep.p_dp->str() + " is not below P = " + rep.p.str());
    }
    return rep;
}

std::optional<unsigned> dp_chromatic_number(const Hypergraph& h, unsigned k_max, const DpOptions& opts) {
    for (unsigned k = 1; k <= k_max; ++k)
        if (dp_exact(h, k, opts).value > 0) return k;
    return std::nullopt;
}

namespace {

SampleStats finish(const BigInt& sum, std::uint64_t samples, BigInt min, BigInt max,
                   std::map<BigInt, std::uint64_t> histogram) {
    SampleStats out;
    out.mean = Rational(sum, BigInt(samples));
    out.min = std::move(min);
    out.max = std::move(max);
    out.samples = samples;
    out.histogram = std::move(histogram);
    return out;
}

} // namespace

SampleStats monte_carlo_mean(const Hypergraph& h, unsigned k, std::uint64_t trials, std::uint64_t seed,
                             const DpOptions& opts) {
    if (trials == 0) throw Error(ErrorCode::BadParameters, "Monte Carlo needs at least one trial");
    detail::require_budget(BigInt(trials) * detail::enumeration_cost(h.vertex_count(), h.edge_count(), k),
                           opts.budget, std::to_string(trials) + " Monte Carlo trials");
    // Draw sequentially so the sample does not depend on the worker count.
    Rng rng(seed);
    std::vector<TwistCover> covers;
    covers.reserve(trials);
    for (std::uint64_t t = 0; t < trials; ++t) covers.push_back(random_cover(h, k, rng));

    std::vector<std::uint64_t> values(trials);
    detail::parallel_chunks(trials, opts.workers, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t t = begin; t < end; ++t)
            values[t] = detail::twist_patterns(h.vertex_count(), covers[t]).count();
    });
    BigInt sum = 0;
    std::map<BigInt, std::uint64_t> hist;
    for (std::uint64_t v : values) {
        sum += v;
        ++hist[BigInt(v)];
    }
    const BigInt lo = hist.begin()->first;
    const BigInt hi = hist.rbegin()->first;
    return finish(sum, trials, lo, hi, std::move(hist));
}

SampleStats exact_free_slot_average(const Hypergraph& h, unsigned k, const DpOptions& opts) {
    const SlotSearch search = make_search(h, k, false, opts.budget);
    SlotStats st = scan(h, search, opts.workers);
    const BigInt lo = st.min;
    const BigInt hi = st.max;
    return finish(st.sum, st.examined, lo, hi, std::move(st.histogram));
}

std::vector<GapRow> gap_profile(const Hypergraph& h, unsigned k_min, unsigned k_max, const DpOptions& opts) {
    if (k_min < 1 || k_min > k_max) throw Error(ErrorCode::BadParameters, "gap profile needs 1 <= kmin <= kmax");
    std::vector<GapRow> rows;
    const long long n = static_cast<long long>(h.vertex_count());
    for (unsigned k = k_min; k <= k_max; ++k) {
        GapRow row;
        row.k = k;
        row.p = count_proper(h, k, opts.budget);
        row.p_dp = dp_exact(h, k, opts).value;
        row.gap = row.p - row.p_dp;
        const BigInt kb = k;
        row.normalized_gap = n >= 2 ? Rational(row.gap, ipow(kb, static_cast<unsigned>(n - 2)))
                                    : Rational(row.gap * ipow(kb, static_cast<unsigned>(2 - n)));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace dpcolor
