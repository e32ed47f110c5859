#include "doctest.h"
#include "helpers.hpp"

#include "scottpersist/functors.hpp"

using sp::CellModule;
using sp::IsoVerdict;

namespace {

bool iso(const CellModule& a, const CellModule& b)
{
    return sp::isomorphic(a, b) == IsoVerdict::isomorphic;
}

CellModule zero2()
{
    return CellModule::zero(sp::CellComplex::trivial(2));
}

} // namespace

TEST_CASE("overline examples")
{
    CHECK(iso(sp::overline(sp::indicator(up(closed, {{0, 0}}))).output, sp::indicator(up(open, {{0, 0}}))));
    CHECK(iso(sp::overline(sp::indicator(down(open, {{1, 1}}))).output, sp::indicator(down(closed, {{1, 1}}))));
    auto m = sp::indicator(sp::ConvexRegion(up(closed, {{0, 0}}), up(open, {{1, 2}})));
    auto o = sp::overline(m).output;
    CHECK(sp::overline(o).output == o);
}

TEST_CASE("underline examples")
{
    CHECK(iso(sp::underline(sp::indicator(up(open, {{0, 0}}))).output, sp::indicator(up(closed, {{0, 0}}))));
    CHECK(iso(sp::underline(sp::indicator(down(closed, {{1, 1}}))).output, sp::indicator(down(open, {{1, 1}}))));
    auto u = sp::underline(sp::indicator(down(closed, {{1, 1}}))).output;
    CHECK(sp::underline(u).output == u);
}

TEST_CASE("radical, socle, top")
{
    auto d = sp::indicator(down(closed, {{1, 1}}));
    CHECK(iso(sp::scott_socle(d).output, sp::indicator(sp::boundary(down(closed, {{1, 1}})))));
    CHECK(sp::scott_top(d).is_zero);
    CHECK(iso(sp::scott_radical(sp::indicator(up(closed, {{0, 0}}))).output, sp::indicator(up(open, {{0, 0}}))));
}

TEST_CASE("derived functors")
{
    CHECK(iso(sp::r1_socle(sp::indicator(up(open, {{0, 0}}))).output, sp::indicator(sp::boundary(up(closed, {{0, 0}})))));
    CHECK(sp::r1_socle(sp::indicator(down(closed, {{1, 1}}))).is_zero);
    CHECK(iso(sp::l1_top(sp::indicator(down(open, {{1, 1}}))).output, sp::indicator(sp::boundary(down(closed, {{1, 1}})))));
    CHECK(sp::l1_top(sp::indicator(up(closed, {{0, 0}}))).is_zero);
    auto upper = sp::indicator(down(open, {{1, 1}}));
    CHECK(sp::is_upper_semicontinuous(upper));
    CHECK(sp::r1_socle(upper).is_zero);
    auto lower = sp::indicator(down(closed, {{1, 1}}));
    CHECK(sp::l1_top(lower).is_zero);
}

TEST_CASE("ephemerality")
{
    CHECK(sp::is_ephemeral(sp::indicator(sp::boundary(down(closed, {{1, 1}})))));
    CHECK_FALSE(sp::is_ephemeral(sp::indicator(up(closed, {{0, 0}}))));
    CHECK(sp::is_ephemeral(zero2()));
}

TEST_CASE("semi-continuity examples")
{
    CHECK(sp::is_lower_semicontinuous(sp::indicator(down(closed, {{1, 1}}))));
    CHECK_FALSE(sp::is_upper_semicontinuous(sp::indicator(down(closed, {{1, 1}}))));
    CHECK(sp::is_upper_semicontinuous(sp::indicator(down(open, {{1, 1}}))));
    CHECK(sp::is_upper_semicontinuous(sp::indicator(up(closed, {{0, 0}}))));
    CHECK_FALSE(sp::is_lower_semicontinuous(sp::indicator(up(closed, {{0, 0}}))));
}

TEST_CASE("j_* representatives")
{
    CHECK(sp::same_scott_sheaf(sp::indicator(up(closed, {{0, 0}})), sp::indicator(up(open, {{0, 0}})))
          == IsoVerdict::isomorphic);
    CHECK(sp::same_scott_sheaf(sp::indicator(down(open, {{1, 1}})), sp::indicator(down(closed, {{1, 1}})))
          == IsoVerdict::isomorphic);
    CHECK(sp::jstar_representative(sp::indicator(sp::boundary(down(closed, {{1, 1}})))).is_zero());
    CHECK(sp::same_scott_sheaf(sp::indicator(up(closed, {{0, 0}})), sp::indicator(up(closed, {{0, 1}})))
          == IsoVerdict::not_isomorphic);
}

TEST_CASE("isomorphism test on a non-thin module")
{
    auto a = sp::indicator(up(closed, {{0, 0}}));
    auto b = sp::indicator(down(closed, {{2, 2}}));
    auto s1 = sp::direct_sum(a, b);
    auto s2 = sp::direct_sum(b, a);
    CHECK(sp::isomorphic(s1, s2) == IsoVerdict::isomorphic);
    CHECK(sp::isomorphic(s1, sp::direct_sum(a, a)) == IsoVerdict::not_isomorphic);
}

TEST_CASE("soc/top connection and exactness on indicators")
{
    for (const auto& m : {sp::indicator(up(closed, {{0, 0}, {1, -1}})), sp::indicator(down(open, {{1, 1}})),
                          sp::indicator(sp::boundary(up(closed, {{0, 0}})))}) {
        auto c = sp::soc_top_connection(m);
        CHECK(c.r1soc_top);
        CHECK(c.l1top_soc);
        CHECK_FALSE(sp::exactness_defect(m));
    }
}
