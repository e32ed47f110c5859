#include "scottpersist/random.hpp"

#include "scottpersist/errors.hpp"

namespace scottpersist::gen {

Point point(Rng& rng, std::size_t n)
{
    std::vector<Rational> c(n);
    for (auto& x : c)
        x = rng.rational(-5, 5, 4);
    return Point(std::move(c));
}

StaircaseRegion staircase(Rng& rng, std::size_t n, SetKind kind, Flavor flavor, std::size_t max_gens)
{
    std::vector<Point> g;
    const auto count = static_cast<std::size_t>(rng.integer(1, static_cast<std::int64_t>(max_gens)));
    for (std::size_t i = 0; i < count; ++i)
        g.push_back(point(rng, n));
    return StaircaseRegion(Poset::standard(n), kind, flavor, std::move(g));
}

StaircaseRegion staircase(Rng& rng, std::size_t n, std::size_t max_gens)
{
    const SetKind kind = rng.coin() ? SetKind::up : SetKind::down;
    const Flavor flavor = rng.coin() ? Flavor::closed : Flavor::open;
    return staircase(rng, n, kind, flavor, max_gens);
}

ConvexRegion convex(Rng& rng, std::size_t n, std::size_t max_gens)
{
    StaircaseRegion outer = staircase(rng, n, max_gens);
    if (rng.chance(1, 4))
        return ConvexRegion(outer);
    // Pushing every generator strictly into the outer set keeps the inner
    // set inside it whatever the flavors.
    const Rational sign = outer.kind() == SetKind::up ? 1 : -1;
    std::vector<Point> inner;
    for (const auto& g : outer.gens()) {
        std::vector<Rational> c(n);
        for (std::size_t i = 0; i < n; ++i)
            c[i] = g[i] + sign * rng.rational(1, 3, 2);
        inner.emplace_back(std::move(c));
    }
    const Flavor flavor = rng.coin() ? Flavor::closed : Flavor::open;
    return ConvexRegion(outer, StaircaseRegion(Poset::standard(n), outer.kind(), flavor, std::move(inner)));
}

namespace {

std::vector<CellModule> on_common_complex(const std::vector<CellModule>& parts, std::size_t n)
{
    CellComplex k = CellComplex::trivial(n);
    for (const auto& p : parts)
        k = k.merged(p.complex());
    std::vector<CellModule> out;
    for (const auto& p : parts)
        out.push_back(p.refine(k));
    return out;
}

// Position of part j inside the stalk of the sum at cell c.
std::vector<std::vector<long>> positions(const std::vector<CellModule>& parts, std::size_t cells)
{
    std::vector<std::vector<long>> pos(cells, std::vector<long>(parts.size(), -1));
    for (std::size_t c = 0; c < cells; ++c) {
        long at = 0;
        for (std::size_t j = 0; j < parts.size(); ++j) {
            if (parts[j].dim(c) == 0)
                continue;
            if (parts[j].dim(c) != 1)
                throw DomainError("sum_morphism: summands must be thin");
            pos[c][j] = at++;
        }
    }
    return pos;
}

} // namespace

CellModule sum(const std::vector<CellModule>& parts, std::size_t n)
{
    CellModule out = CellModule::zero(CellComplex::trivial(n));
    for (const auto& p : parts)
        out = direct_sum(out, p);
    return out;
}

CellMorphism sum_morphism(Rng& rng, const std::vector<CellModule>& source, const std::vector<CellModule>& target)
{
    const std::size_t n = source.empty() ? target.front().ambient_dim() : source.front().ambient_dim();
    std::vector<CellModule> all = source;
    all.insert(all.end(), target.begin(), target.end());
    all = on_common_complex(all, n);
    const std::vector<CellModule> src(all.begin(), all.begin() + static_cast<long>(source.size()));
    const std::vector<CellModule> tgt(all.begin() + static_cast<long>(source.size()), all.end());
    const CellModule s = sum(src, n).refine(all.front().complex());
    const CellModule t = sum(tgt, n).refine(all.front().complex());
    const std::size_t cells = s.complex().cell_count();
    const auto ps = positions(src, cells);
    const auto pt = positions(tgt, cells);

    std::vector<Matrix> maps;
    for (std::size_t c = 0; c < cells; ++c)
        maps.emplace_back(t.dim(c), s.dim(c));
    for (std::size_t i = 0; i < src.size(); ++i)
        for (std::size_t j = 0; j < tgt.size(); ++j) {
            const Rational scalar(rng.integer(-2, 2));
            if (sgn(scalar) == 0)
                continue;
            std::vector<Matrix> e;
            for (std::size_t c = 0; c < cells; ++c) {
                Matrix m(t.dim(c), s.dim(c));
                if (ps[c][i] >= 0 && pt[c][j] >= 0)
                    m(static_cast<std::size_t>(pt[c][j]), static_cast<std::size_t>(ps[c][i])) = 1;
                e.push_back(std::move(m));
            }
            if (!CellMorphism(s, t, e).is_natural())
                continue;
            for (std::size_t c = 0; c < cells; ++c)
                maps[c] = add(maps[c], scale(e[c], scalar, s.field()), s.field());
        }
    return CellMorphism(s, t, std::move(maps));
}

namespace {

CellModule principal(const Point& g, SetKind kind, Flavor flavor)
{
    return indicator(StaircaseRegion(Poset::standard(g.dim()), kind, flavor, {g}));
}

std::size_t parts(Rng& rng)
{
    return static_cast<std::size_t>(rng.integer(1, 3));
}

} // namespace

CellModule image_module(Rng& rng, std::size_t n)
{
    std::vector<CellModule> src, tgt;
    for (std::size_t i = parts(rng); i > 0; --i)
        src.push_back(indicator(staircase(rng, n, SetKind::up, rng.coin() ? Flavor::closed : Flavor::open, 2)));
    for (std::size_t i = parts(rng); i > 0; --i)
        tgt.push_back(indicator(staircase(rng, n, SetKind::down, rng.coin() ? Flavor::closed : Flavor::open, 2)));
    return image(sum_morphism(rng, src, tgt)).module.simplified();
}

CellModule finitely_generated(Rng& rng, std::size_t n)
{
    // Relations sit above generators; always at least one generator is left
    // over so the cokernel is nonzero.
    std::vector<Point> gens;
    std::vector<CellModule> src, tgt;
    const std::size_t g = parts(rng);
    for (std::size_t i = 0; i < g; ++i) {
        gens.push_back(point(rng, n));
        tgt.push_back(principal(gens.back(), SetKind::up, Flavor::closed));
    }
    for (auto i = rng.integer(0, 2); i > 0; --i) {
        const Point& base = gens[static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(g) - 1))];
        std::vector<Rational> c(n);
        for (std::size_t a = 0; a < n; ++a)
            c[a] = base[a] + rng.rational(0, 2, 2);
        c[0] += Rational(1, 4);  // strictly above, so the minimal generators survive
        src.push_back(principal(Point(std::move(c)), SetKind::up, Flavor::closed));
    }
    if (src.empty())
        return sum(tgt, n);
    return cokernel(sum_morphism(rng, src, tgt)).module.simplified();
}

CellModule finitely_cogenerated(Rng& rng, std::size_t n)
{
    std::vector<Point> cogens;
    std::vector<CellModule> src, tgt;
    const std::size_t g = parts(rng);
    for (std::size_t i = 0; i < g; ++i) {
        cogens.push_back(point(rng, n));
        src.push_back(principal(cogens.back(), SetKind::down, Flavor::closed));
    }
    for (auto i = rng.integer(0, 2); i > 0; --i) {
        const Point& base = cogens[static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(g) - 1))];
        std::vector<Rational> c(n);
        for (std::size_t a = 0; a < n; ++a)
            c[a] = base[a] - rng.rational(0, 2, 2);
        c[0] -= Rational(1, 4);
        tgt.push_back(principal(Point(std::move(c)), SetKind::down, Flavor::closed));
    }
    if (tgt.empty())
        return sum(src, n);
    return kernel(sum_morphism(rng, src, tgt)).module.simplified();
}

CellModule indicator_sum(Rng& rng, std::size_t n)
{
    std::vector<CellModule> out;
    for (std::size_t i = parts(rng); i > 0; --i)
        out.push_back(rng.coin() ? indicator(staircase(rng, n, 2)) : indicator(convex(rng, n)));
    return sum(out, n).simplified();
}

CellModule ephemeral(Rng& rng, std::size_t n)
{
    std::vector<CellModule> out;
    for (std::size_t i = parts(rng); i > 0; --i)
        out.push_back(indicator(boundary(staircase(rng, n, 2))));
    return sum(out, n).simplified();
}

CellModule module(Rng& rng, std::size_t n)
{
    if (n == 0)
        n = static_cast<std::size_t>(rng.integer(1, 3));
    switch (rng.integer(0, 5)) {
    case 0:
    case 1:
        return image_module(rng, n);
    case 2:
        return finitely_generated(rng, n);
    case 3:
        return finitely_cogenerated(rng, n);
    case 4:
        return indicator_sum(rng, n);
    default:
        return ephemeral(rng, n);
    }
}

FiniteModule finite_module(Rng& rng, std::size_t count)
{
    std::vector<std::pair<std::size_t, std::size_t>> hasse;
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j)
            if (rng.chance(1, 3))
                hasse.emplace_back(i, j);
    Poset poset = Poset::finite(count, hasse);
    const auto& reach = poset.as_finite()->reach;

    // Two interval summands [a, b] = {x : a <= x <= b}, rescaled per element.
    struct Interval {
        std::size_t a, b;
    };
    std::vector<Interval> intervals;
    for (int t = 0; t < 2; ++t) {
        std::size_t a = static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(count) - 1));
        std::vector<std::size_t> above;
        for (std::size_t b = 0; b < count; ++b)
            if (reach[a][b])
                above.push_back(b);
        intervals.push_back({a, above[static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(above.size()) - 1))]});
    }
    auto inside = [&](const Interval& iv, std::size_t x) { return reach[iv.a][x] && reach[x][iv.b]; };
    std::vector<std::vector<Rational>> lambda(count);
    std::vector<std::size_t> dims(count, 0);
    for (std::size_t x = 0; x < count; ++x)
        for (const auto& iv : intervals) {
            if (!inside(iv, x))
                continue;
            ++dims[x];
            // 1 is the fallback when 2 or 3 vanish in a small prime field
            Rational l(rng.integer(1, 3));
            if (default_field().reduce(l) == 0)
                l = 1;
            if (rng.coin())
                l = -l;
            lambda[x].push_back(l);
        }
    std::vector<Matrix> maps;
    for (auto [x, y] : hasse) {
        Matrix m(dims[y], dims[x]);
        std::size_t px = 0, py = 0;
        for (const auto& iv : intervals) {
            const bool in_x = inside(iv, x), in_y = inside(iv, y);
            if (in_x && in_y)
                m(py, px) = lambda[y][py] / lambda[x][px];
            px += in_x ? 1 : 0;
            py += in_y ? 1 : 0;
        }
        maps.push_back(std::move(m));
    }
    return FiniteModule(std::move(poset), std::move(dims), std::move(maps));
}

} // namespace scottpersist::gen
