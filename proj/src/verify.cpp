#include <dpcolor/verify.hpp>

#include <dpcolor/error.hpp>
#include <dpcolor/genlib.hpp>

#include <functional>
#include <sstream>

namespace dpcolor {

namespace {

// Records the first failed check of a claim; later checks still run so a
// thrown Error is attributed to the claim that hit it.
class Claim {
public:
    explicit Claim(std::string name) { result_.claim = std::move(name); }

    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (!ok && failure_.empty()) failure_ = what;
    }

    ClaimResult finish() {
        result_.passed = failure_.empty();
        result_.detail = result_.passed ? std::to_string(checks_) + " checks" : failure_;
        return result_;
    }

private:
    ClaimResult result_;
    std::string failure_;
    std::size_t checks_ = 0;
};

ClaimResult run_claim(const std::string& name, const std::function<void(Claim&)>& body) {
    Claim c(name);
    try {
        body(c);
    } catch (const Error& e) {
        c.expect(false, std::string(to_string(e.code())) + ": " + e.what());
    }
    return c.finish();
}

std::string show(const Hypergraph& h, unsigned k) {
    std::ostringstream s;
    s << "n=" << h.vertex_count() << " m=" << h.edge_count() << " k=" << k;
    return s.str();
}

Hypergraph loose_path(unsigned r, unsigned m) { return generate({Family::LoosePath, r, m, 3, 1, 0}); }
Hypergraph loose_cycle(unsigned r, unsigned p) { return generate({Family::LooseCycle, r, 0, p, 1, 0}); }
Hypergraph unicyclic(unsigned r, unsigned m, unsigned p, std::uint64_t seed) {
    return generate({Family::Unicyclic, r, m, p, 1, seed});
}
Hypergraph random_tree(unsigned r, unsigned m, std::uint64_t seed) {
    return generate({Family::RandomHypertree, r, m, 3, 1, seed});
}

// Connected uniform instances on both sides of the hypertree dichotomy.
std::vector<Hypergraph> catalog() {
    return {
        loose_path(2, 3),
        loose_path(3, 1),
        loose_path(3, 3),
        generate({Family::StarHypertree, 3, 3, 3, 1, 0}),
        random_tree(3, 3, 4),
        generate({Family::GraphCycle, 2, 0, 3, 1, 0}),
        generate({Family::GraphCycle, 2, 0, 4, 1, 0}),
        loose_cycle(3, 3),
        loose_cycle(3, 4),
        unicyclic(3, 1, 3, 7),
        Hypergraph::validate(9, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}, {4, 6, 7}, {7, 8, 0}}),
    };
}

void hypertree_counts(Claim& c) {
    for (unsigned r = 2; r <= 4; ++r)
        for (unsigned m = 0; m <= 3; ++m)
            for (const Hypergraph& h : {loose_path(r, m), random_tree(r, m, 11 + m)})
                for (unsigned k = 0; k <= 4; ++k)
                    c.expect(count_proper(h, k) == hypertree_poly(r, m, k), "hypertree count " + show(h, k));
}

void unicyclic_counts(Claim& c) {
    for (unsigned p : {3U, 4U})
        for (unsigned m : {0U, 1U}) {
            const Hypergraph h = unicyclic(3, m, p, 7);
            for (unsigned k : {2U, 3U})
                c.expect(count_proper(h, k) == unicyclic_poly(3, m, p, k), "unicyclic count " + show(h, k));
        }
}

void hypertree_covers(Claim& c) {
    Rng rng(2024);
    for (unsigned m = 1; m <= 3; ++m) {
        const Hypergraph h = random_tree(3, m, m);
        for (unsigned k : {2U, 3U}) {
            const BigInt p = count_proper(h, k);
            for (int t = 0; t < 20; ++t) {
                const TwistCover f = random_cover(h, k, rng);
                const Canonical can = canonicalize(h, f);
                c.expect(can.free_slots.empty() && can.cover == natural_cover(h, k), "canonical form " + show(h, k));
                c.expect(count_colorings(h, f) == p, "cover count " + show(h, k));
            }
        }
    }
}

void profiles(Claim& c) {
    // Hypertree: every tuple on the last edge of a loose path is equally common.
    const Hypergraph path = loose_path(3, 2);
    const BoundaryProfile tp = boundary_profile(path, 1, 2);
    const ProfileSplit ts = split_constant(tp);
    c.expect(ts.uniform && ts.t1 == BigInt(3) && ts.t2 == BigInt(3), "hypertree profile");
    const BigInt pe = count_proper(delete_edge(path, 1), 2);
    const BigInt ph = count_proper(path, 2);
    c.expect(2 * *ts.t1 == pe - ph, "hypertree t1 identity");
    c.expect(2 * 3 * *ts.t2 == ph, "hypertree t2 identity");

    for (unsigned p : {3U, 4U})
        for (unsigned k : {2U, 3U}) {
            const Hypergraph h = loose_cycle(3, p);
            const BoundaryProfile bp = boundary_profile(h, 0, k);
            const ProfileSplit s = split_leading_pair(bp);
            const BigInt P = count_proper(h, k);
            const BigInt Pe = count_proper(delete_edge(h, 0), k);
            const BigInt kk = k;
            c.expect(s.uniform, "cycle profile depends only on i1 == i2, " + show(h, k));
            c.expect(s.t1 && kk * *s.t1 == Pe - P, "cycle t1 " + show(h, k));
            c.expect(s.t2 && ipow(kk, 2) * (kk - 1) * *s.t2 == kk * P + (1 - kk) * Pe, "cycle t2 " + show(h, k));
            if (p == 3 && k == 2) c.expect(s.t1 == BigInt(5) && s.t2 == BigInt(4), "loose 3-cycle t1 = 5, t2 = 4");
        }
}

void closed_forms(Claim& c, const DpOptions& opts) {
    for (const Hypergraph& h : {loose_cycle(3, 3), loose_cycle(3, 4), loose_cycle(3, 5), unicyclic(3, 1, 3, 7),
                                unicyclic(3, 1, 4, 3), loose_path(3, 3), random_tree(3, 3, 4)})
        for (unsigned k : {2U, 3U}) {
            if (h.vertex_count() >= 10 && k == 3) continue;
            const DpResult r = dp_exact(h, k, opts);
            const auto closed = dp_closed(h, k);
            c.expect(closed.has_value(), "closed form missing " + show(h, k));
            if (closed) c.expect(closed->value == r.value, "closed form " + closed->provenance + " " + show(h, k));
            c.expect(count_colorings(h, r.witness) == r.value, "witness count " + show(h, k));
        }
}

void odd_even(Claim& c, const DpOptions& opts) {
    for (unsigned k : {2U, 3U}) {
        const Hypergraph odd = loose_cycle(3, 3);
        c.expect(dp_exact(odd, k, opts).value == count_proper(odd, k), "odd cycle equality " + show(odd, k));
        const Hypergraph even = loose_cycle(3, 4);
        const BigInt base = ipow(BigInt(k), 2) - 1;
        const DpResult r = dp_exact(even, k, opts);
        c.expect(r.value == ipow(base, 4) - 1, "even cycle value " + show(even, k));
        c.expect(r.value < count_proper(even, k), "even cycle strict " + show(even, k));
        const TwistCover shifted = extremal_cover(even, 0, k, ExtremalVariant::Shifted);
        c.expect(count_colorings(even, shifted) == r.value, "shifted cover attains the minimum " + show(even, k));
    }
}

void extremal_bounds(Claim& c) {
    for (const Hypergraph& h : {loose_cycle(3, 3), loose_cycle(3, 4), unicyclic(3, 1, 3, 7), unicyclic(3, 1, 4, 1)}) {
        const StructureReport s = classify(h);
        for (unsigned k : {2U, 3U}) {
            const BigInt P = count_proper(h, k);
            const BigInt kk = k;
            for (EdgeIndex e : *s.cycle_edges) {
                const BigInt Pe = count_proper(delete_edge(h, e), k);
                const BigInt aligned = count_colorings(h, extremal_cover(h, e, k, ExtremalVariant::Aligned));
                const BigInt shifted = count_colorings(h, extremal_cover(h, e, k, ExtremalVariant::Shifted));
                const Rational formula = Rational((kk * kk - 1) * Pe - kk * P, kk * (kk - 1));
                c.expect(aligned == P, "aligned cover equals P " + show(h, k));
                c.expect(Rational(shifted) == formula, "shifted cover count " + show(h, k));
            }
        }
    }
    // Edges whose removal leaves every boundary tuple equally likely.
    for (const Hypergraph& h : {loose_path(3, 2), loose_path(3, 3), generate({Family::StarHypertree, 3, 3, 3, 1, 0})})
        for (unsigned k : {2U, 3U})
            for (EdgeIndex e = 0; e < h.edge_count(); ++e) {
                if (!split_constant(boundary_profile(h, e, k)).uniform) continue;
                const BigInt P = count_proper(h, k);
                const BigInt Pe = count_proper(delete_edge(h, e), k);
                const BigInt q = ipow(BigInt(k), 2) - 1;
                const BigInt shifted = count_colorings(h, extremal_cover(h, e, k, ExtremalVariant::Shifted));
                c.expect(Rational(shifted) == Rational(Pe) - Rational(P, q), "shifted tree cover " + show(h, k));
            }
}

void upper_bound(Claim& c, const DpOptions& opts) {
    for (const Hypergraph& h : catalog()) {
        const bool tree = classify(h).classification == Classification::Hypertree;
        for (unsigned k : {2U, 3U}) {
            const Rational bound = dp_upper_bound(h, k);
            const DpResult r = dp_exact(h, k, opts);
            c.expect(Rational(r.value) <= bound, "value above bound " + show(h, k));
            c.expect((Rational(r.value) == bound) == tree, "equality iff hypertree " + show(h, k));
            c.expect(exact_free_slot_average(h, k, opts).mean == bound, "exact average " + show(h, k));
        }
    }
}

void monte_carlo(Claim& c, const DpOptions& opts) {
    const Hypergraph h = loose_cycle(3, 3);
    const SampleStats s = monte_carlo_mean(h, 2, 4000, 1, opts);
    const Rational bound = dp_upper_bound(h, 2);
    const Rational err = s.mean > bound ? Rational(s.mean - bound) : Rational(bound - s.mean);
    c.expect(err * 50 <= bound, "sample mean within 2% of the bound");
    c.expect(s.min >= dp_exact(h, 2, opts).value, "sample below the minimum");
}

void strict_less(Claim& c, const DpOptions& opts) {
    const StrictLessReport even = strict_less_test(loose_cycle(3, 4), 0, 2, opts);
    c.expect(even.holds && even.p_dp && *even.p_dp < even.p, "even cycle hypothesis and conclusion");
    for (const Hypergraph& h : {loose_path(3, 2), loose_path(3, 3), random_tree(3, 3, 4)})
        for (EdgeIndex e = 0; e < h.edge_count(); ++e)
            for (unsigned k : {2U, 3U}) {
                const StrictLessReport t = strict_less_test(h, e, k, opts);
                c.expect(!t.holds && t.lhs == t.rhs, "hypertree sides equal " + show(h, k));
            }
}

void graphs(Claim& c, const DpOptions& opts) {
    const Hypergraph c4 = generate({Family::GraphCycle, 2, 0, 4, 1, 0});
    const Hypergraph c5 = generate({Family::GraphCycle, 2, 0, 5, 1, 0});
    c.expect(dp_exact(c4, 2, opts).value == 0, "C4 at k=2");
    c.expect(dp_chromatic_number(c4, 4, opts) == 3U, "C4 DP chromatic number");
    c.expect(dp_exact(c5, 3, opts).value == 30 && count_proper(c5, 3) == 30, "C5 at k=3");
    c.expect(!dp_closed(c4, 2).has_value(), "no closed form for graph cycles");
}

void below_proper(Claim& c, const DpOptions& opts) {
    for (const Hypergraph& h : catalog())
        for (unsigned k = 1; k <= 3; ++k) {
            const DpResult r = dp_exact(h, k, opts);
            c.expect(r.value <= count_proper(h, k), "value above P " + show(h, k));
        }
    const Hypergraph u = Hypergraph::validate(9, {{0, 1, 2}, {3, 4, 5}, {5, 6, 7}, {7, 8, 3}});
    c.expect(dp_exact(u, 2, opts).value == dp_exact_by_components(u, 2, opts).value, "component product");
    c.expect(dp_exact(u, 2, opts).value == 6 * 26, "edge plus loose 3-cycle");
}

} // namespace

std::vector<ClaimResult> run_theorem_suite(const DpOptions& opts) {
    return {
        run_claim("hypertree proper counts", hypertree_counts),
        run_claim("unicyclic proper counts", unicyclic_counts),
        run_claim("hypertree covers collapse to the natural cover", hypertree_covers),
        run_claim("boundary profiles", profiles),
        run_claim("closed forms match exhaustive search", [&](Claim& c) { closed_forms(c, opts); }),
        run_claim("odd and even loose cycles", [&](Claim& c) { odd_even(c, opts); }),
        run_claim("extremal cover counts", extremal_bounds),
        run_claim("upper bound attained exactly by hypertrees", [&](Claim& c) { upper_bound(c, opts); }),
        run_claim("random cover mean", [&](Claim& c) { monte_carlo(c, opts); }),
        run_claim("single-edge strict inequality test", [&](Claim& c) { strict_less(c, opts); }),
        run_claim("graph cycles", [&](Claim& c) { graphs(c, opts); }),
        run_claim("DP count never exceeds proper count", [&](Claim& c) { below_proper(c, opts); }),
    };
}

} // namespace dpcolor
