#include "doctest.h"
#include "helpers.hpp"

#include "scottpersist/json_io.hpp"
#include "scottpersist/random.hpp"

using sp::Json;

TEST_CASE("rationals are strings")
{
    CHECK(sp::to_json(Q("-3/4")) == "-3/4");
    CHECK(sp::to_json(Q("2")) == "2");
    CHECK(sp::rational_from_json(Json(5)) == 5);
    CHECK(sp::rational_from_json(Json("1/2")) == Q("1/2"));
    CHECK_THROWS_AS(sp::rational_from_json(Json(0.5)), sp::ParseError);
    CHECK_THROWS_AS(sp::rational_from_json(Json("x")), sp::ParseError);
}

TEST_CASE("poset round trips")
{
    for (const auto& p : {sp::Poset::standard(2), sp::Poset::orthant(3), sp::Poset::cone(sp::Matrix{{1, 0}, {1, 1}}),
                          sp::Poset::finite(3, {{0, 1}, {1, 2}}),
                          sp::Poset::product({sp::Poset::standard(1), sp::Poset::orthant(1)})})
        CHECK(sp::poset_from_json(sp::to_json(p)) == p);
    CHECK_THROWS_AS(sp::poset_from_json(sp::parse_json(R"({"kind":"torus","dim":2})")), sp::ParseError);
    CHECK_THROWS_AS(sp::poset_from_json(sp::parse_json(R"({"kind":"finite","dim":2,"hasse":[[0,1],[1,0]]})")),
                    sp::DomainError);
}

TEST_CASE("region round trips")
{
    sp::Rng rng(8);
    for (int i = 0; i < 50; ++i) {
        auto r = sp::gen::staircase(rng, 2);
        CHECK(sp::region_from_json(sp::to_json(r)) == r);
        auto c = sp::gen::convex(rng, 2);
        CHECK(sp::convex_from_json(sp::to_json(c)) == c);
    }
    auto r = sp::region_from_json(sp::parse_json(R"({"kind":"down","flavor":"closed","gens":[["1","1"]]})"));
    CHECK(r == down(closed, {{1, 1}}));
    CHECK_THROWS_AS(sp::region_from_json(sp::parse_json(R"({"kind":"down","flavor":"ajar","gens":[]})")),
                    sp::ParseError);
    CHECK_THROWS_AS(sp::region_from_json(sp::parse_json(R"({"kind":"up","flavor":"open","gens":[]})")),
                    sp::ParseError);
}

TEST_CASE("module round trips")
{
    sp::Rng rng(10);
    for (int i = 0; i < 30; ++i) {
        auto m = sp::gen::module(rng);
        CHECK(sp::module_from_json(sp::to_json(m)) == m);
    }
    auto j = sp::parse_json(R"({"dim":2,"constant_regions":[{"kind":"up","flavor":"closed","gens":[["0","0"]]}]})");
    CHECK(sp::module_from_json(j) == sp::indicator(up(closed, {{0, 0}})));
    CHECK(sp::module_or_indicator_from_json(j["constant_regions"][0]) == sp::indicator(up(closed, {{0, 0}})));
    // A step from a 1-dimensional to a 0-dimensional cell with the wrong shape.
    auto bad = sp::parse_json(R"({"dim":1,"breakpoints":[["0"]],"cells":[{"index":[0],"space":1}],
                                  "steps":[{"cell":[0],"axis":0,"matrix":[["1"]]}]})");
    CHECK_THROWS_AS(sp::module_from_json(bad), sp::ParseError);
    CHECK_THROWS_AS(sp::parse_json("{"), sp::ParseError);
}

TEST_CASE("certificates and verdicts")
{
    auto m = sp::indicator(up(closed, {{0, 0}}));
    sp::InterleavingCertificate c{1, {1, 1}, sp::CellMorphism::identity(m), sp::CellMorphism::identity(m)};
    auto back = sp::certificate_from_json(sp::to_json(c));
    CHECK(back.eps == 1);
    CHECK(back.f == c.f);
    CHECK(sp::to_json(sp::Distance::infinity()) == "inf");
    auto v = sp::is_meager(sp::boundary(down(closed, {{1, 1}})));
    CHECK(sp::to_json(v)["meager"] == true);
}

TEST_CASE("output is deterministic")
{
    sp::Rng a(3), b(3);
    CHECK(sp::dump(sp::to_json(sp::gen::module(a))) == sp::dump(sp::to_json(sp::gen::module(b))));
}
