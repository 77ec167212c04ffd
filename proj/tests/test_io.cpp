#include <doctest.h>

#include <dpcolor/error.hpp>
#include <dpcolor/io.hpp>

#include "fixtures.hpp"

using namespace dpcolor;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::ConsistencyFailure;
}

} // namespace

TEST_CASE("both hypergraph formats") {
    const Hypergraph a = io::parse_hypergraph(R"({"n": 6, "edges": [[0,1,2],[2,3,4],[4,5,0]]})");
    const Hypergraph b = io::parse_hypergraph("# loose cycle\nn=6\ne=0 1 2\ne=2 3 4\n\ne=4 5 0\n");
    CHECK(a == b);
    CHECK(a == fx::loose3());
    CHECK(io::parse_hypergraph(io::to_terse(a)) == a);
    CHECK(io::parse_hypergraph(io::to_json(a).dump()) == a);
}

TEST_CASE("parse errors") {
    CHECK(code_of([] { io::parse_hypergraph(""); }) == ErrorCode::ParseError);
    CHECK(code_of([] { io::parse_hypergraph("{\"n\": 3"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { io::parse_hypergraph("e=0 1\n"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { io::parse_hypergraph("n=3\ne=0 x\n"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { io::parse_hypergraph("n=3\ne=0 3\n"); }) == ErrorCode::OutOfRangeVertex);
    CHECK(code_of([] { io::parse_hypergraph(R"({"n":4,"edges":[[0,1],[0,1,2]]})"); }) == ErrorCode::EdgeContainment);
    CHECK(code_of([] { io::read_hypergraph("/nonexistent/file"); }) == ErrorCode::ParseError);
}

TEST_CASE("twist cover json") {
    const Hypergraph h = fx::loose3();
    const io::Json sample = io::Json::parse(R"({"k":2,"edges":[{"edge":2,"anchor":4,"mu":{"5":[1,2],"0":[2,1]}}]})");
    const TwistCover c = io::twist_from_json(h, sample);
    CHECK(c.edges[2].anchor() == 4);
    CHECK(c.edges[2].order == std::vector<Vertex>{4, 0, 5});
    CHECK(c.edges[2].mu[0] == Permutation({1, 0}));
    CHECK(c.edges[2].mu[1].is_identity());
    CHECK(c.edges[0] == natural_cover(h, 2).edges[0]);
    CHECK(io::twist_from_json(h, io::to_json(c)) == c);

    const TwistCover r = random_cover(h, 3, 8);
    CHECK(io::twist_from_json(h, io::to_json(r)) == r);

    CHECK_THROWS_AS(io::twist_from_json(h, io::Json::parse(R"({"k":2,"edges":[{"edge":5}]})")), Error);
    CHECK_THROWS_AS(io::twist_from_json(h, io::Json::parse(R"({"k":2,"edges":[{"edge":0,"mu":{"1":[1,1]}}]})")),
                    Error);
    CHECK_THROWS_AS(io::twist_from_json(h, io::Json::parse(R"({"k":2,"edges":[{"edge":0,"anchor":5}]})")), Error);
}

TEST_CASE("general cover json") {
    const Hypergraph h = fx::single_edge();
    const io::Json j = io::Json::parse(R"({"k":2,"maps":[{"domain":[2,0,1],"colors":[1,2,2]}]})");
    const GeneralCover f = io::general_from_json(h, j);
    REQUIRE(f.maps.size() == 1);
    CHECK(f.maps[0].colors == std::vector<Color>{1, 1, 0});
    CHECK(io::general_from_json(h, io::to_json(h, f)) == f);
}

TEST_CASE("result serialization") {
    CHECK(io::to_json(Polynomial({BigInt(0), BigInt(-3), BigInt(1)})).dump() == "[0,-3,1]");
    CHECK(io::to_json(Polynomial({ipow(BigInt(10), 30)})).dump() == "[\"1000000000000000000000000000000\"]");

    const io::Json prof = io::to_json(boundary_profile(fx::path2(), 1, 2));
    CHECK(prof["counts"]["1,2,1"] == "3");
    CHECK(prof["counts"].size() == 8);

    const io::Json dp = io::to_json(dp_exact(fx::loose4(), 2));
    CHECK(dp["value"] == "80");
    CHECK(dp["covers_examined"] == 2);
    CHECK(dp["free_slots"] == 1);
    CHECK(io::twist_from_json(fx::loose4(), dp["witness"]) == dp_exact(fx::loose4(), 2).witness);

    const std::string csv = io::gap_csv(gap_profile(fx::loose4(), 2, 2));
    CHECK(csv == "k,P,P_DP,gap,normalized_gap\n2,82,80,2,1/32\n");

    const io::Json s = io::to_json(classify(fx::loose3()));
    CHECK(s["classification"] == "unicyclic");
    CHECK(s["cycle_length"] == 3);
    CHECK(s["uniform_r"] == 3);
}

TEST_CASE("genspec json") {
    const GenSpec s{Family::Unicyclic, 3, 2, 4, 1, 17};
    const GenSpec t = io::genspec_from_json(io::to_json(s));
    CHECK(generate(t) == generate(s));
    CHECK_THROWS_AS(io::genspec_from_json(io::Json::parse(R"({"family":"nope"})")), Error);
    CHECK_THROWS_AS(io::genspec_from_json(io::Json::parse(R"({"r":3})")), Error);
}
