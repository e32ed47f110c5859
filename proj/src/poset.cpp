#include "scottpersist/poset.hpp"

#include "scottpersist/errors.hpp"

#include <algorithm>
#include <set>

namespace scottpersist {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_dim(const Poset& poset, const Point& x)
{
    if (x.dim() != poset.dim())
        throw DimensionError("point " + to_string(x) + " used with a poset of dimension "
                             + std::to_string(poset.dim()));
}

std::size_t finite_index(const Poset::Finite& f, const Point& x)
{
    const Rational& c = x[0];
    if (c.get_den() != 1 || c < 0 || c >= static_cast<long>(f.count))
        throw DomainError("finite poset element " + format_rational(c) + " out of range");
    return c.get_num().get_ui();
}

// A (y - x) as a vector of row values.
std::vector<Rational> facet_values(const Matrix& a, const Point& x, const Point& y)
{
    std::vector<Rational> out(a.rows());
    for (std::size_t k = 0; k < a.rows(); ++k)
        for (std::size_t i = 0; i < a.cols(); ++i)
            out[k] += a(k, i) * (y[i] - x[i]);
    return out;
}

// Apply a per-factor predicate to the coordinate slices of a product.
template <class Pred>
bool all_factors(const Poset::Product& p, const Point& x, const Point& y, Pred pred)
{
    std::size_t offset = 0;
    for (const auto& f : p.factors) {
        const std::size_t d = f.dim();
        Point xs(std::vector<Rational>(x.begin() + offset, x.begin() + offset + d));
        Point ys(std::vector<Rational>(y.begin() + offset, y.begin() + offset + d));
        if (!pred(f, xs, ys))
            return false;
        offset += d;
    }
    return true;
}

} // namespace

Poset Poset::standard(std::size_t n)
{
    return Poset(Standard{n});
}

Poset Poset::cone(Matrix facets)
{
    ConeReport report = validate_cone(facets);
    if (!report.valid)
        throw DomainError("invalid cone: " + report.message);
    const std::size_t n = facets.cols();
    return Poset(Cone{n, std::move(facets)});
}

Poset Poset::orthant(std::size_t n)
{
    return Poset(Orthant{n});
}

Poset Poset::finite(std::size_t count, std::vector<std::pair<std::size_t, std::size_t>> hasse)
{
    std::vector<std::vector<char>> reach(count, std::vector<char>(count, 0));
    for (std::size_t i = 0; i < count; ++i)
        reach[i][i] = 1;
    for (auto [i, j] : hasse) {
        if (i >= count || j >= count)
            throw DomainError("Hasse pair references element outside 0.." + std::to_string(count - 1));
        if (i == j)
            throw DomainError("Hasse pair (" + std::to_string(i) + ", " + std::to_string(i) + ") is a loop");
        reach[i][j] = 1;
    }
    for (std::size_t k = 0; k < count; ++k)
        for (std::size_t i = 0; i < count; ++i)
            if (reach[i][k])
                for (std::size_t j = 0; j < count; ++j)
                    if (reach[k][j])
                        reach[i][j] = 1;
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j)
            if (reach[i][j] && reach[j][i])
                throw DomainError("Hasse relation has a cycle through " + std::to_string(i) + " and "
                                  + std::to_string(j));
    return Poset(Finite{count, std::move(hasse), std::move(reach)});
}

Poset Poset::product(std::vector<Poset> factors)
{
    if (factors.empty())
        throw DomainError("product of no factors");
    return Poset(Product{std::move(factors)});
}

PosetKind Poset::kind() const
{
    return std::visit(overloaded{[](const Standard&) { return PosetKind::standard; },
                                 [](const Cone&) { return PosetKind::cone; },
                                 [](const Orthant&) { return PosetKind::orthant; },
                                 [](const Finite&) { return PosetKind::finite; },
                                 [](const Product&) { return PosetKind::product; }},
                      variant_);
}

std::size_t Poset::dim() const
{
    return std::visit(overloaded{[](const Standard& s) { return s.n; }, [](const Cone& c) { return c.n; },
                                 [](const Orthant& o) { return o.n; }, [](const Finite&) { return std::size_t{1}; },
                                 [](const Product& p) {
                                     std::size_t d = 0;
                                     for (const auto& f : p.factors)
                                         d += f.dim();
                                     return d;
                                 }},
                      variant_);
}

std::string Poset::describe() const
{
    return std::visit(overloaded{[](const Standard& s) { return "R^" + std::to_string(s.n); },
                                 [](const Cone& c) {
                                     return "R^" + std::to_string(c.n) + " ordered by cone " + to_string(c.facets);
                                 },
                                 [](const Orthant& o) { return "R^" + std::to_string(o.n) + "_{>=0}"; },
                                 [](const Finite& f) { return "finite poset on " + std::to_string(f.count) + " elements"; },
                                 [](const Product& p) {
                                     std::string s;
                                     for (const auto& f : p.factors)
                                         s += (s.empty() ? "" : " x ") + f.describe();
                                     return s;
                                 }},
                      variant_);
}

void Poset::check_point(const Point& x) const
{
    require_dim(*this, x);
    std::visit(overloaded{[&](const Orthant&) {
                              for (const auto& c : x)
                                  if (c < 0)
                                      throw DomainError("point " + to_string(x) + " leaves the non-negative orthant");
                          },
                          [&](const Finite& f) { finite_index(f, x); },
                          [&](const Product& p) {
                              std::size_t offset = 0;
                              for (const auto& f : p.factors) {
                                  Point xs(std::vector<Rational>(x.begin() + offset, x.begin() + offset + f.dim()));
                                  f.check_point(xs);
                                  offset += f.dim();
                              }
                          },
                          [](const auto&) {}},
               variant_);
}

bool Poset::le(const Point& x, const Point& y) const
{
    check_point(x);
    check_point(y);
    return std::visit(overloaded{[&](const Standard&) {
                                     for (std::size_t i = 0; i < x.dim(); ++i)
                                         if (x[i] > y[i])
                                             return false;
                                     return true;
                                 },
                                 [&](const Orthant&) {
                                     for (std::size_t i = 0; i < x.dim(); ++i)
                                         if (x[i] > y[i])
                                             return false;
                                     return true;
                                 },
                                 [&](const Cone& c) {
                                     for (const auto& v : facet_values(c.facets, x, y))
                                         if (v < 0)
                                             return false;
                                     return true;
                                 },
                                 [&](const Finite& f) {
                                     return f.reach[finite_index(f, x)][finite_index(f, y)] != 0;
                                 },
                                 [&](const Product& p) {
                                     return all_factors(p, x, y, [](const Poset& f, const Point& a, const Point& b) {
                                         return f.le(a, b);
                                     });
                                 }},
                      variant_);
}

bool Poset::way_below(const Point& x, const Point& y) const
{
    check_point(x);
    check_point(y);
    return std::visit(overloaded{[&](const Standard&) {
                                     for (std::size_t i = 0; i < x.dim(); ++i)
                                         if (!(x[i] < y[i]))
                                             return false;
                                     return true;
                                 },
                                 [&](const Orthant&) {
                                     for (std::size_t i = 0; i < x.dim(); ++i)
                                         if (!(x[i] < y[i] || (sgn(x[i]) == 0 && sgn(y[i]) >= 0)))
                                             return false;
                                     return true;
                                 },
                                 [&](const Cone& c) {
                                     for (const auto& v : facet_values(c.facets, x, y))
                                         if (sgn(v) <= 0)
                                             return false;
                                     return true;
                                 },
                                 [&](const Finite& f) {
                                     return f.reach[finite_index(f, x)][finite_index(f, y)] != 0;
                                 },
                                 [&](const Product& p) {
                                     return all_factors(p, x, y, [](const Poset& f, const Point& a, const Point& b) {
                                         return f.way_below(a, b);
                                     });
                                 }},
                      variant_);
}

Point Poset::interpolate(const Point& x, const Point& z) const
{
    if (!way_below(x, z))
        throw DomainError("interpolate: " + to_string(x) + " is not way below " + to_string(z));
    return std::visit(overloaded{[&](const Finite&) { return x; },
                                 [&](const Product& p) {
                                     std::vector<Rational> out;
                                     std::size_t offset = 0;
                                     for (const auto& f : p.factors) {
                                         const std::size_t d = f.dim();
                                         Point xs(std::vector<Rational>(x.begin() + offset, x.begin() + offset + d));
                                         Point zs(std::vector<Rational>(z.begin() + offset, z.begin() + offset + d));
                                         Point ys = f.interpolate(xs, zs);
                                         out.insert(out.end(), ys.begin(), ys.end());
                                         offset += d;
                                     }
                                     return Point(std::move(out));
                                 },
                                 [&](const auto&) {
                                     // The midpoint keeps every strict inequality strict, and
                                     // keeps orthant coordinates that are 0 on both sides at 0.
                                     std::vector<Rational> mid(x.dim());
                                     for (std::size_t i = 0; i < x.dim(); ++i)
                                         mid[i] = (x[i] + z[i]) / 2;
                                     return Point(std::move(mid));
                                 }},
                      variant_);
}

Point Poset::join(const Point& x, const Point& y) const
{
    if (kind() != PosetKind::standard && kind() != PosetKind::orthant)
        throw DomainError("join is only available on R^n and its orthant, not on " + describe());
    check_point(x);
    check_point(y);
    std::vector<Rational> out(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i)
        out[i] = max(x[i], y[i]);
    return Point(std::move(out));
}

Point Poset::meet(const Point& x, const Point& y) const
{
    if (kind() != PosetKind::standard && kind() != PosetKind::orthant)
        throw DomainError("meet is only available on R^n and its orthant, not on " + describe());
    check_point(x);
    check_point(y);
    std::vector<Rational> out(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i)
        out[i] = min(x[i], y[i]);
    return Point(std::move(out));
}

bool operator==(const Poset& a, const Poset& b)
{
    if (a.kind() != b.kind() || a.dim() != b.dim())
        return false;
    switch (a.kind()) {
    case PosetKind::standard:
    case PosetKind::orthant:
        return true;
    case PosetKind::cone:
        return a.as_cone()->facets == b.as_cone()->facets;
    case PosetKind::finite:
        return a.as_finite()->count == b.as_finite()->count && a.as_finite()->reach == b.as_finite()->reach;
    case PosetKind::product:
        return a.as_product()->factors == b.as_product()->factors;
    }
    return false;
}

bool inequalities_feasible(const Matrix& a, const std::vector<Rational>& b)
{
    if (a.rows() != b.size())
        throw DimensionError("inequalities_feasible: right-hand side length differs from row count");
    using Row = std::vector<Rational>;  // coefficients..., rhs
    const std::size_t n = a.cols();

    // Scale so the first nonzero coefficient has magnitude 1; lets std::set drop duplicates.
    auto normalized = [](Row r) {
        for (std::size_t i = 0; i + 1 < r.size(); ++i)
            if (sgn(r[i]) != 0) {
                Rational s = abs(r[i]);
                for (auto& x : r)
                    x /= s;
                break;
            }
        return r;
    };

    std::set<Row> rows;
    for (std::size_t k = 0; k < a.rows(); ++k) {
        Row r(n + 1);
        for (std::size_t i = 0; i < n; ++i)
            r[i] = a(k, i);
        r[n] = b[k];
        rows.insert(normalized(std::move(r)));
    }

    for (std::size_t var = n; var-- > 0;) {
        std::vector<Row> pos, neg;
        std::set<Row> next;
        for (const auto& r : rows) {
            const int s = sgn(r[var]);
            if (s > 0)
                pos.push_back(r);
            else if (s < 0)
                neg.push_back(r);
            else
                next.insert(r);
        }
        // c_p x_var >= ...  and  -c_n x_var >= ...  combine to eliminate x_var.
        for (const auto& p : pos)
            for (const auto& q : neg) {
                Row r(n + 1);
                const Rational wp = -q[var];
                const Rational wq = p[var];
                for (std::size_t i = 0; i <= n; ++i)
                    r[i] = wp * p[i] + wq * q[i];
                r[var] = 0;
                next.insert(normalized(std::move(r)));
            }
        rows = std::move(next);
    }
    for (const auto& r : rows)
        if (r[n] > 0)  // 0 >= positive
            return false;
    return true;
}

ConeReport validate_cone(const Matrix& facets)
{
    ConeReport report;
    const std::size_t n = facets.cols();
    report.rank = rank(facets);
    report.full_rank = report.rank == n;
    report.interior_nonempty = inequalities_feasible(facets, std::vector<Rational>(facets.rows(), Rational(1)));
    report.valid = report.full_rank && report.interior_nonempty && n > 0;
    if (n == 0)
        report.message = "facet matrix has no columns";
    else if (!report.full_rank)
        report.message = "rank " + std::to_string(report.rank) + " < " + std::to_string(n) + ": cone is not proper";
    else if (!report.interior_nonempty)
        report.message = "A x >= 1 is infeasible: cone has empty interior";
    else
        report.message = "ok";
    return report;
}

} // namespace scottpersist
