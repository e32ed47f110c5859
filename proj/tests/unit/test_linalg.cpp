#include "doctest.h"
#include "helpers.hpp"

#include "scottpersist/errors.hpp"
#include "scottpersist/rng.hpp"

using sp::Matrix;

namespace {

Matrix random_matrix(sp::Rng& rng, std::size_t r, std::size_t c, int lo = -2, int hi = 2)
{
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = sp::Rational(rng.integer(lo, hi));
    return m;
}

// Rank by plain Gaussian elimination over Q, written out separately.
std::size_t naive_rank(Matrix a)
{
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0)
            ++p;
        if (p == a.rows())
            continue;
        for (std::size_t j = 0; j < a.cols(); ++j)
            std::swap(a(p, j), a(r, j));
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            sp::Rational f = a(i, c) / a(r, c);
            for (std::size_t j = 0; j < a.cols(); ++j)
                a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

} // namespace

TEST_CASE("parse and format rationals")
{
    CHECK(sp::parse_rational("3/6") == sp::Rational(1, 2));
    CHECK(sp::parse_rational("-1.25") == sp::Rational(-5, 4));
    CHECK(sp::parse_rational("7") == 7);
    CHECK(sp::format_rational(sp::Rational(-3, 9)) == "-1/3");
    CHECK(sp::format_rational(sp::Rational(4)) == "4");
    CHECK_THROWS_AS(sp::parse_rational("1/0"), sp::ParseError);
    CHECK_THROWS_AS(sp::parse_rational("x"), sp::ParseError);
}

TEST_CASE("rank examples")
{
    CHECK(sp::rank(Matrix{{1, 0}, {0, 0}}) == 1);
    CHECK(sp::rank(Matrix(0, 0)) == 0);
    CHECK(sp::rank(Matrix{{1, 2}, {2, 4}}) == 1);
    CHECK(sp::rank(Matrix{{Q("1/2"), Q("1/3")}, {Q("1/4"), Q("1/6")}}) == 1);
}

TEST_CASE("kernel examples")
{
    CHECK(sp::kernel_basis(Matrix::identity(2)).cols() == 0);
    CHECK(sp::kernel_basis(Matrix(1, 2)).cols() == 2);
    Matrix k = sp::kernel_basis(Matrix{{1, 1}});
    REQUIRE(k.cols() == 1);
    CHECK(k(0, 0) == -k(1, 0));
    CHECK(k(0, 0) != 0);
}

TEST_CASE("intersection, quotient, compose")
{
    Matrix e1{{1}, {0}};
    Matrix e2{{0}, {1}};
    std::vector<Matrix> both{e1, e2};
    CHECK(sp::subspace_intersection(both).cols() == 0);
    std::vector<Matrix> same{Matrix{{1}, {1}}, Matrix{{2}, {2}}};
    CHECK(sp::subspace_intersection(same).cols() == 1);

    Matrix q = sp::quotient_map(2, e1);
    CHECK(q.rows() == 1);
    CHECK(sp::rank(q) == 1);
    CHECK(sp::multiply(q, e1).is_zero());

    Matrix a{{1, 2, 3}, {4, 5, 6}};
    CHECK(sp::compose(Matrix::identity(2), a) == a);
    CHECK_THROWS_AS(sp::multiply(a, a), sp::DimensionError);
}

TEST_CASE("random rank-nullity, quotient and solve")
{
    sp::Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        const std::size_t r = rng.integer(0, 5), c = rng.integer(0, 5);
        Matrix a = random_matrix(rng, r, c);
        const std::size_t rk = sp::rank(a);
        CHECK(rk == naive_rank(a));
        Matrix k = sp::kernel_basis(a);
        CHECK(rk + k.cols() == c);
        CHECK(sp::multiply(a, k).is_zero());
        CHECK(sp::rank(k) == k.cols());
        Matrix im = sp::image_basis(a);
        CHECK(im.cols() == rk);
        Matrix q = sp::quotient_map(r, im);
        CHECK(q.rows() == r - rk);
        CHECK(sp::multiply(q, a).is_zero());
        Matrix s = sp::right_inverse(q);
        CHECK(sp::multiply(q, s) == Matrix::identity(q.rows()));
        Matrix x = random_matrix(rng, c, 1);
        auto sol = sp::solve(a, sp::multiply(a, x));
        REQUIRE(sol);
        CHECK(sp::multiply(a, *sol) == sp::multiply(a, x));
    }
}

TEST_CASE("prime field agrees with Q on small integer matrices")
{
    const sp::Field fp = sp::Field::prime(32003);
    sp::Rng rng(5);
    for (int t = 0; t < 200; ++t) {
        Matrix a = random_matrix(rng, rng.integer(1, 5), rng.integer(1, 5));
        CHECK(sp::rank(a) == sp::rank(sp::reduce(a, fp), fp));
        Matrix k = sp::kernel_basis(sp::reduce(a, fp), fp);
        CHECK(sp::multiply(sp::reduce(a, fp), k, fp).is_zero());
    }
    CHECK(fp.reduce(sp::Rational(-1)) == 32002);
    CHECK(fp.reduce(sp::Rational(1, 2)) == 16002);
    CHECK_THROWS_AS(sp::Field::prime(32004), sp::DomainError);
    CHECK(sp::Field::parse("fp:7").characteristic() == 7);
    CHECK(sp::Field::parse("rational").is_rational());
    CHECK_THROWS_AS(sp::Field::parse("fp:x"), sp::ParseError);
}
