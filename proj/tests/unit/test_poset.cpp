#include "doctest.h"
#include "helpers.hpp"

#include "scottpersist/errors.hpp"

using sp::Point;
using sp::Poset;

namespace {

Poset chain(std::size_t n)
{
    std::vector<std::pair<std::size_t, std::size_t>> h;
    for (std::size_t i = 0; i + 1 < n; ++i)
        h.emplace_back(i, i + 1);
    return Poset::finite(n, h);
}

} // namespace

TEST_CASE("le examples")
{
    CHECK(Poset::standard(2).le({0, 0}, {1, 1}));
    CHECK_FALSE(Poset::cone(sp::Matrix::identity(2)).le({0, 0}, {1, -1}));
    CHECK(chain(3).le({0}, {2}));
    CHECK_FALSE(chain(3).le({2}, {0}));
    CHECK_THROWS_AS(Poset::standard(2).le({0}, {1, 1}), sp::DimensionError);
    CHECK_THROWS_AS(Poset::orthant(2).le({-1, 0}, {1, 1}), sp::DomainError);
}

TEST_CASE("way below examples")
{
    CHECK_FALSE(Poset::standard(2).way_below({0, 0}, {0, 1}));
    CHECK(Poset::orthant(2).way_below({1, 0}, {2, 0}));
    CHECK_FALSE(Poset::orthant(2).way_below({1, 0}, {1, 5}));
    CHECK(chain(2).way_below({0}, {0}));
    CHECK(Poset::cone(sp::Matrix{{1, 1}, {0, 1}}).way_below({0, 0}, {1, 1}));
    CHECK_FALSE(Poset::cone(sp::Matrix{{1, 1}, {0, 1}}).way_below({0, 0}, {1, 0}));
}

TEST_CASE("interpolation")
{
    CHECK(Poset::standard(2).interpolate({0, 0}, {2, 2}) == Point{1, 1});
    CHECK(Poset::cone(sp::Matrix::identity(2)).interpolate({0, 0}, {4, 2}) == Point{2, 1});
    CHECK(chain(2).interpolate({0}, {1}) == Point{0});
    CHECK_THROWS_AS(Poset::standard(2).interpolate({0, 0}, {0, 2}), sp::DomainError);
    const Poset o = Poset::orthant(2);
    Point y = o.interpolate({0, 1}, {0, 3});
    CHECK(o.way_below({0, 1}, y));
    CHECK(o.way_below(y, {0, 3}));
}

TEST_CASE("join, meet, compactness")
{
    const Poset r2 = Poset::standard(2);
    CHECK(r2.join({1, 0}, {0, 2}) == Point{1, 2});
    CHECK(r2.meet({1, 0}, {0, 2}) == Point{0, 0});
    CHECK(r2.join({1, 1}, {1, 1}) == Point{1, 1});
    CHECK_THROWS_AS(chain(2).join({0}, {1}), sp::DomainError);
    CHECK_FALSE(Poset::standard(1).is_compact({0}));
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(chain(4).is_compact({sp::Rational(static_cast<long>(i))}));
}

TEST_CASE("orthant origin is compact")
{
    // Brute-force check of the directed-set definition on a rational grid:
    // every increasing sequence in the orthant whose limit is >= 0 contains
    // an element >= 0, trivially, so 0 << 0; and the oracle agrees.
    const Poset o = Poset::orthant(2);
    CHECK(o.is_compact({0, 0}));
    CHECK_FALSE(o.is_compact({1, 0}));
    // x = (1,0) is not compact: the chain (1 - 1/k, 0) has supremum (1,0)
    // but never reaches it.
    for (int k = 1; k < 50; ++k)
        CHECK_FALSE(o.le({1, 0}, {sp::Rational(k - 1, k), 0}));
}

TEST_CASE("cone validation")
{
    CHECK(sp::validate_cone(sp::Matrix::identity(2)).valid);
    auto r1 = sp::validate_cone(sp::Matrix{{1, 0}});
    CHECK_FALSE(r1.valid);
    CHECK_FALSE(r1.full_rank);
    auto r2 = sp::validate_cone(sp::Matrix{{1, 0}, {-1, 0}, {0, 1}});
    CHECK_FALSE(r2.valid);
    CHECK(r2.full_rank);
    CHECK_FALSE(r2.interior_nonempty);
    CHECK_THROWS_AS(Poset::cone(sp::Matrix{{1, 0}}), sp::DomainError);
}

TEST_CASE("Fourier-Motzkin against explicit witnesses")
{
    // x >= 1, y >= 1, x + y <= 3 : feasible at (1,1)
    CHECK(sp::inequalities_feasible(sp::Matrix{{1, 0}, {0, 1}, {-1, -1}}, {1, 1, -3}));
    // x + y <= 1 with x, y >= 1 : infeasible
    CHECK_FALSE(sp::inequalities_feasible(sp::Matrix{{1, 0}, {0, 1}, {-1, -1}}, {1, 1, -1}));
    // 0 >= 1 after elimination of nothing
    CHECK_FALSE(sp::inequalities_feasible(sp::Matrix{{0, 0}}, {1}));
}

TEST_CASE("finite posets reject cycles")
{
    CHECK_THROWS_AS(Poset::finite(2, {{0, 1}, {1, 0}}), sp::DomainError);
    CHECK_THROWS_AS(Poset::finite(2, {{0, 2}}), sp::DomainError);
}

TEST_CASE("product order is componentwise")
{
    const Poset p = Poset::product({Poset::standard(1), chain(2)});
    CHECK(p.dim() == 2);
    CHECK(p.le({0, 0}, {1, 1}));
    CHECK(p.way_below({0, 1}, {1, 1}));
    CHECK_FALSE(p.way_below({0, 0}, {0, 1}));
}
