#include <doctest.h>

#include <dpcolor/chromcount.hpp>
#include <dpcolor/error.hpp>

#include "fixtures.hpp"
#include "oracle.hpp"

using namespace dpcolor;

TEST_CASE("count_proper on small instances") {
    CHECK(count_proper(fx::single_edge(), 2) == 6);
    CHECK(count_proper(fx::path2(), 2) == 18);
    CHECK(count_proper(fx::loose3(), 2) == 26);
    CHECK(count_proper(fx::edgeless(3), 2) == 8);
    CHECK(count_proper(fx::single_edge(), 0) == 0);
    CHECK(count_proper(fx::edgeless(2), 0) == 0);
}

TEST_CASE("count_proper agrees with brute force") {
    for (const Hypergraph& h : {fx::single_edge(), fx::path2(), fx::loose3(), fx::loose4(), fx::triangle(), fx::c4(),
                                fx::c5(), fx::theta(), fx::loose3_pendant()})
        for (unsigned k = 0; k <= 3; ++k) CHECK(count_proper(h, k) == oracle::proper_count(h, k));
}

TEST_CASE("count_proper refuses oversized enumerations") {
    Budget tiny{100};
    try {
        (void)count_proper(fx::loose4(), 2, tiny);
        FAIL("expected ResourceLimit");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ResourceLimit);
        // 2^8 colorings times 4 edges
        CHECK(std::string(e.what()).find("1024") != std::string::npos);
    }
}

TEST_CASE("chromatic_polynomial of small hypergraphs") {
    CHECK(chromatic_polynomial(fx::single_edge()).coeffs() == std::vector<BigInt>{0, -1, 0, 1});
    CHECK(chromatic_polynomial(fx::triangle()).coeffs() == std::vector<BigInt>{0, 2, -3, 1});
    // k (k^2 - 1)^2 = k^5 - 2k^3 + k
    CHECK(chromatic_polynomial(fx::path2()).coeffs() == std::vector<BigInt>{0, 1, 0, -2, 0, 1});
    CHECK(chromatic_polynomial(fx::edgeless(1)).coeffs() == std::vector<BigInt>{0, 1});
}

TEST_CASE("chromatic_polynomial is monic of degree n and predicts unseen k") {
    for (const Hypergraph& h : {fx::loose3(), fx::c5(), fx::loose4()}) {
        const Polynomial p = chromatic_polynomial(h);
        CHECK(p.degree() == h.vertex_count());
        CHECK(p.coeffs().back() == 1);
        const unsigned n = static_cast<unsigned>(h.vertex_count());
        if (n <= 6)
            for (unsigned k = n + 1; k <= n + 2; ++k) CHECK(p(BigInt(k)) == oracle::proper_count(h, k));
    }
}

TEST_CASE("hypertree and unicyclic closed forms") {
    CHECK(hypertree_poly(3, 0, 7) == 7);
    CHECK(hypertree_poly(3, 2, 2) == 18);
    CHECK(hypertree_poly(2, 3, 3) == 24);
    CHECK(hypertree_poly(2, 3, 3) == oracle::proper_count(Hypergraph::validate(4, {{0, 1}, {1, 2}, {2, 3}}), 3));

    CHECK(unicyclic_poly(3, 0, 3, 2) == 26);
    CHECK(unicyclic_poly(3, 0, 4, 2) == 82);
    CHECK(unicyclic_poly(3, 1, 3, 2) == 78);
    CHECK(unicyclic_poly(3, 0, 4, 2) == oracle::proper_count(fx::loose4(), 2));
    CHECK(unicyclic_poly(3, 1, 3, 2) == oracle::proper_count(fx::loose3_pendant(), 2));

    CHECK_THROWS_AS(unicyclic_poly(2, 0, 3, 2), Error);
    CHECK_THROWS_AS(unicyclic_poly(3, 0, 2, 2), Error);
}

TEST_CASE("boundary profile of a hypertree is constant on both classes") {
    const Hypergraph h = fx::path2();
    const BoundaryProfile prof = boundary_profile(h, 1, 2);
    CHECK(prof.order == std::vector<Vertex>{2, 3, 4});
    CHECK(prof.counts.size() == 8);
    for (const auto& [tuple, count] : prof.counts) CHECK(count == 3);
    CHECK(prof.total() == count_proper(delete_edge(h, 1), 2));

    const ProfileSplit s = split_constant(prof);
    CHECK(s.uniform);
    CHECK(*s.t1 == 3);
    CHECK(*s.t2 == 3);
}

TEST_CASE("boundary profile of a unicyclic cycle edge splits on the attachment pair") {
    const Hypergraph h = fx::loose3();
    const BoundaryProfile prof = boundary_profile(h, 2, 2);   // edge {0,4,5}
    CHECK(prof.order == std::vector<Vertex>{0, 4, 5});
    for (const auto& [t, count] : prof.counts) CHECK(count == (t[0] == t[1] ? 5 : 4));
    const ProfileSplit s = split_leading_pair(prof);
    CHECK(s.uniform);
    CHECK(*s.t1 == 5);
    CHECK(*s.t2 == 4);
    CHECK_FALSE(split_constant(prof).uniform);

    // the counts agree with brute force of H - e with pinned colors
    const Hypergraph rest = delete_edge(h, 2);
    for (const auto& [t, count] : prof.counts) {
        std::uint64_t manual = 0;
        oracle::for_each_coloring(6, 2, [&](const std::vector<unsigned>& f) {
            if (f[0] != t[0] || f[4] != t[1] || f[5] != t[2]) return;
            for (const auto& e : rest.edges())
                if (oracle::monochromatic(e, f)) return;
            ++manual;
        });
        CHECK(count == manual);
    }
}

TEST_CASE("boundary profile of a single edge") {
    const BoundaryProfile prof = boundary_profile(fx::single_edge(), 0, 2);
    for (const auto& [t, count] : prof.counts) CHECK(count == 1);
    CHECK_THROWS_AS(boundary_profile(fx::single_edge(), 1, 2), Error);
    CHECK_THROWS_AS(boundary_profile(fx::single_edge(), 0, 0), Error);
}
