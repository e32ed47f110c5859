// Acceptance gate. One line per criterion, exit status 1 if any fails.
//
// Usage: acceptance [seed]

#include "oracles.hpp"

#include "scottpersist/errors.hpp"
#include "scottpersist/finite_module.hpp"
#include "scottpersist/functors.hpp"
#include "scottpersist/metrics.hpp"
#include "scottpersist/random.hpp"
#include "scottpersist/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

namespace sp = scottpersist;
using sp::Point;
using sp::Rational;

namespace {

std::uint64_t g_seed = 20261016;

/// Cases run, failures, first failure.
struct Tally {
    std::size_t cases = 0;
    std::size_t failed = 0;
    std::string first;
    std::string note;

    void check(bool ok, const std::string& what)
    {
        if (ok)
            return;
        if (failed == 0)
            first = what;
        ++failed;
    }
    void run(const std::string& label, const std::function<void()>& body)
    {
        ++cases;
        const std::size_t before = failed;
        try {
            body();
        } catch (const std::exception& e) {
            check(false, label + ": exception " + e.what());
        }
        // several checks in one case still count as one failed case
        if (failed > before + 1)
            failed = before + 1;
    }
};

sp::Rng case_rng(std::uint64_t criterion, std::size_t i)
{
    return sp::Rng(sp::case_seed(g_seed ^ (criterion << 40), i));
}

std::size_t small_dim(sp::Rng& rng)
{
    const auto r = rng.integer(0, 5);
    return r == 0 ? 1 : r == 5 ? 3 : 2;
}

// ---------------------------------------------------------------- 1

struct Variant {
    std::string name;
    sp::Poset poset;
    std::function<Point(sp::Rng&)> point;
    std::function<Point(sp::Rng&, const Point&)> above;  // something often >= the input
    std::function<bool(const Point&, const Point&)> le;
    std::function<bool(const Point&, const Point&)> wb;
};

Rational step(sp::Rng& rng)
{
    switch (rng.integer(0, 5)) {
    case 0:
        return 0;
    case 1:
        return -rng.rational(0, 2, 2);
    default:
        return rng.rational(0, 2, 2);
    }
}

Point add_steps(sp::Rng& rng, const Point& x, bool clamp)
{
    std::vector<Rational> c(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) {
        c[i] = x[i] + step(rng);
        if (clamp && c[i] < 0)
            c[i] = 0;
    }
    return Point(std::move(c));
}

Point real_point(sp::Rng& rng, std::size_t n)
{
    std::vector<Rational> c(n);
    for (auto& x : c)
        x = rng.rational(-3, 3, 2);
    return Point(std::move(c));
}

Variant euclidean(std::size_t n)
{
    return {"R^" + std::to_string(n),
            sp::Poset::standard(n),
            [n](sp::Rng& r) { return real_point(r, n); },
            [](sp::Rng& r, const Point& x) { return add_steps(r, x, false); },
            [](const Point& x, const Point& y) {
                for (std::size_t i = 0; i < x.dim(); ++i)
                    if (!(x[i] <= y[i]))
                        return false;
                return true;
            },
            [](const Point& x, const Point& y) {
                for (std::size_t i = 0; i < x.dim(); ++i)
                    if (!(x[i] < y[i]))
                        return false;
                return true;
            }};
}

Variant cone(const sp::Matrix& a)
{
    const std::size_t n = a.cols();
    auto sign_of = [a, n](const Point& x, const Point& y, bool strict) {
        for (std::size_t i = 0; i < a.rows(); ++i) {
            Rational s = 0;
            for (std::size_t j = 0; j < n; ++j)
                s += a(i, j) * (y[j] - x[j]);
            if (strict ? s <= 0 : s < 0)
                return false;
        }
        return true;
    };
    return {"cone " + std::to_string(a.rows()) + "x" + std::to_string(n),
            sp::Poset::cone(a),
            [n](sp::Rng& r) { return real_point(r, n); },
            [](sp::Rng& r, const Point& x) { return add_steps(r, x, false); },
            [sign_of](const Point& x, const Point& y) { return sign_of(x, y, false); },
            [sign_of](const Point& x, const Point& y) { return sign_of(x, y, true); }};
}

Variant orthant(std::size_t n)
{
    return {"orthant " + std::to_string(n),
            sp::Poset::orthant(n),
            [n](sp::Rng& r) {
                std::vector<Rational> c(n);
                for (auto& x : c)
                    x = r.chance(1, 3) ? Rational(0) : r.rational(0, 3, 2);
                return Point(std::move(c));
            },
            [](sp::Rng& r, const Point& x) { return add_steps(r, x, true); },
            [](const Point& x, const Point& y) {
                for (std::size_t i = 0; i < x.dim(); ++i)
                    if (!(x[i] <= y[i]))
                        return false;
                return true;
            },
            [](const Point& x, const Point& y) {
                for (std::size_t i = 0; i < x.dim(); ++i)
                    if (!(x[i] < y[i] || (x[i] == 0 && y[i] >= 0)))
                        return false;
                return true;
            }};
}

Variant finite(sp::Rng& rng, std::size_t count)
{
    std::vector<std::pair<std::size_t, std::size_t>> hasse;
    std::vector<std::vector<char>> reach(count, std::vector<char>(count, 0));
    for (std::size_t i = 0; i < count; ++i) {
        reach[i][i] = 1;
        for (std::size_t j = i + 1; j < count; ++j)
            if (rng.chance(1, 3)) {
                hasse.emplace_back(i, j);
                reach[i][j] = 1;
            }
    }
    for (std::size_t k = 0; k < count; ++k)
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = 0; j < count; ++j)
                if (reach[i][k] && reach[k][j])
                    reach[i][j] = 1;
    auto index = [](const Point& p) { return static_cast<std::size_t>(p[0].get_num().get_ui()); };
    auto le = [reach, index](const Point& x, const Point& y) { return reach[index(x)][index(y)] != 0; };
    auto element = [count](sp::Rng& r) {
        return Point{Rational(static_cast<long>(r.integer(0, static_cast<std::int64_t>(count) - 1)))};
    };
    return {"finite " + std::to_string(count),
            sp::Poset::finite(count, hasse),
            element,
            [element](sp::Rng& r, const Point&) { return element(r); },
            le,
            le};
}

Variant product()
{
    // R x R_{>=0}
    Variant line = euclidean(1), half = orthant(1);
    auto split = [](const Point& p) { return std::pair{Point{p[0]}, Point{p[1]}}; };
    return {"R x orthant 1",
            sp::Poset::product({line.poset, half.poset}),
            [line, half](sp::Rng& r) {
                const Point a = line.point(r), b = half.point(r);
                return Point{a[0], b[0]};
            },
            [](sp::Rng& r, const Point& x) {
                Point y = add_steps(r, x, false);
                return Point{y[0], y[1] < 0 ? Rational(0) : y[1]};
            },
            [line, half, split](const Point& x, const Point& y) {
                auto [x1, x2] = split(x);
                auto [y1, y2] = split(y);
                return line.le(x1, y1) && half.le(x2, y2);
            },
            [line, half, split](const Point& x, const Point& y) {
                auto [x1, x2] = split(x);
                auto [y1, y2] = split(y);
                return line.wb(x1, y1) && half.wb(x2, y2);
            }};
}

Tally way_below()
{
    sp::Rng setup = case_rng(1, 999999);
    std::vector<Variant> variants{euclidean(1), euclidean(2), euclidean(3),
                                  cone(sp::Matrix{{1, 0}, {1, 1}}), cone(sp::Matrix{{1, 0, 0}, {0, 1, 0}, {1, 1, 1}}),
                                  cone(sp::Matrix{{2, -1}, {-1, 2}}), orthant(2), orthant(3),
                                  finite(setup, 6), finite(setup, 9), product()};
    Tally t;
    std::ostringstream note;
    for (std::size_t vi = 0; vi < variants.size(); ++vi) {
        const Variant& v = variants[vi];
        std::size_t chain_hits = 0;
        for (std::size_t i = 0; i < 1000; ++i) {
            sp::Rng rng = case_rng(1, vi * 1000 + i);
            t.run(v.name, [&] {
                // Mostly comparable chains, so the implications are exercised.
                auto next = [&](const Point& a) {
                    Point b = v.above(rng, a);
                    for (int tries = 0; tries < 8 && !v.le(a, b) && rng.chance(3, 4); ++tries)
                        b = v.above(rng, a);
                    return b;
                };
                const Point x = v.point(rng);
                const Point y = next(x);
                const Point z = next(y);
                const std::string at = v.name + " at " + sp::to_string(x) + ", " + sp::to_string(y) + ", "
                                       + sp::to_string(z);
                const sp::Poset& p = v.poset;
                for (const auto& [a, b] : {std::pair{x, y}, std::pair{y, z}, std::pair{x, z}}) {
                    t.check(p.le(a, b) == v.le(a, b), "le disagrees with the oracle " + at);
                    t.check(p.way_below(a, b) == v.wb(a, b), "way_below disagrees with the oracle " + at);
                    t.check(!p.way_below(a, b) || p.le(a, b), "way below but not below " + at);
                }
                if (p.le(x, y) && p.way_below(y, z))
                    t.check(p.way_below(x, z), "x <= y << z without x << z " + at);
                if (p.way_below(x, y) && p.le(y, z)) {
                    ++chain_hits;
                    t.check(p.way_below(x, z), "x << y <= z without x << z " + at);
                }
                if (p.way_below(x, z)) {
                    const Point m = p.interpolate(x, z);
                    t.check(p.way_below(x, m) && p.way_below(m, z), "interpolation fails " + at);
                }
            });
        }
        if (chain_hits < 50)
            t.check(false, v.name + ": only " + std::to_string(chain_hits) + " non-vacuous chains");
        note << (vi ? ", " : "") << chain_hits;
    }
    const sp::Poset id_cone = sp::Poset::cone(sp::Matrix{{1, 0}, {0, 1}});
    const sp::Poset plane = sp::Poset::standard(2);
    for (std::size_t i = 0; i < 1000; ++i) {
        sp::Rng rng = case_rng(1, 50000 + i);
        t.run("identity cone", [&] {
            const Point x = real_point(rng, 2);
            const Point y = add_steps(rng, x, false);
            t.check(id_cone.way_below(x, y) == plane.way_below(x, y) && id_cone.le(x, y) == plane.le(x, y),
                    "identity cone differs from R^2 at " + sp::to_string(x) + ", " + sp::to_string(y));
        });
    }
    t.note = std::to_string(variants.size()) + " variants x 1000 triples, non-vacuous chains " + note.str()
             + "; identity cone 1000 pairs";
    return t;
}

// ---------------------------------------------------------------- 2

bool all_le(const Point& a, const Point& b, bool strict)
{
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (strict ? !(a[i] < b[i]) : !(a[i] <= b[i]))
            return false;
    return true;
}

/// Membership in the staircase region straight from its generators.
bool in_region(const std::vector<Point>& gens, sp::SetKind kind, bool strict, const Point& p)
{
    for (const auto& g : gens)
        if (kind == sp::SetKind::up ? all_le(g, p, strict) : all_le(p, g, strict))
            return true;
    return false;
}

sp::CellComplex with_gens(const sp::CellComplex& k, const std::vector<Point>& gens)
{
    std::vector<std::vector<Rational>> b = k.all_breakpoints();
    for (const auto& g : gens)
        for (std::size_t a = 0; a < g.dim(); ++a)
            b[a].push_back(g[a]);
    return sp::CellComplex(std::move(b));
}

/// m is thin, supported exactly where `inside` holds, with every step
/// between supported cells nonzero; and it is isomorphic to the indicator.
template <class Pred>
std::string indicator_mismatch(const sp::CellModule& got, const std::vector<Point>& gens, Pred inside)
{
    const sp::CellComplex k = with_gens(got.complex(), gens);
    const sp::CellModule m = got.refine(k);
    for (std::size_t c = 0; c < k.cell_count(); ++c) {
        const std::size_t want = inside(k.representative(c)) ? 1 : 0;
        if (m.dim(c) != want)
            return "dimension " + std::to_string(m.dim(c)) + " at " + sp::to_string(k.representative(c));
        for (std::size_t a = 0; a < k.dim(); ++a)
            if (auto s = k.successor(c, a); s && want == 1 && inside(k.representative(*s)) && m.step(a, c).is_zero())
                return "zero step at " + sp::to_string(k.representative(c));
    }
    if (!sp::thin_isomorphic(m, oracle::cell_indicator(k, inside)))
        return "not isomorphic to the indicator";
    return "";
}

Tally closed_forms()
{
    Tally t;
    for (std::size_t i = 0; i < 100; ++i) {
        sp::Rng rng = case_rng(2, i);
        const sp::SetKind kind = i < 50 ? sp::SetKind::up : sp::SetKind::down;
        const sp::Flavor flavor = rng.coin() ? sp::Flavor::closed : sp::Flavor::open;
        const sp::StaircaseRegion r = sp::gen::staircase(rng, small_dim(rng), kind, flavor);
        t.run(sp::dump(sp::to_json(r)), [&] {
            const auto& g = r.gens();
            const bool open = flavor == sp::Flavor::open;
            auto self = [&](const Point& p) { return in_region(g, kind, open, p); };
            auto in_int = [&](const Point& p) { return in_region(g, kind, true, p); };
            auto in_cl = [&](const Point& p) { return in_region(g, kind, false, p); };
            auto none = [](const Point&) { return false; };
            const sp::CellModule m = sp::indicator(r);
            auto check = [&](const char* name, const sp::FunctorReport& rep, auto pred) {
                const std::string why = indicator_mismatch(rep.output, g, pred);
                t.check(why.empty(), std::string(name) + " of " + sp::dump(sp::to_json(r)) + ": " + why);
            };
            if (kind == sp::SetKind::up) {
                check("overline", sp::overline(m), in_int);
                check("underline", sp::underline(m), in_cl);
                check("soc", sp::scott_socle(m), none);
                check("rad", sp::scott_radical(m), in_int);
                check("top", sp::scott_top(m), [&](const Point& p) { return self(p) && !in_int(p); });
                check("R1soc", sp::r1_socle(m), [&](const Point& p) { return in_cl(p) && !self(p); });
                check("L1top", sp::l1_top(m), none);
            } else {
                check("overline", sp::overline(m), in_cl);
                check("underline", sp::underline(m), in_int);
                check("soc", sp::scott_socle(m), [&](const Point& p) { return self(p) && !in_int(p); });
                check("rad", sp::scott_radical(m), self);
                check("top", sp::scott_top(m), none);
                check("R1soc", sp::r1_socle(m), none);
                check("L1top", sp::l1_top(m), [&](const Point& p) { return in_cl(p) && !self(p); });
            }
        });
    }
    t.note = "50 up-sets, 50 down-sets, 7 functors each";
    return t;
}

// ---------------------------------------------------------------- 3, 5, 8, 9 via the property suites

Tally suite(const std::string& name, std::uint64_t criterion, std::size_t cases)
{
    const sp::VerificationReport r = sp::run_suite(name, g_seed ^ (criterion << 40), cases);
    Tally t;
    for (const auto& c : r.results) {
        ++t.cases;
        t.check(c.pass, "case " + std::to_string(c.index) + ": " + c.witness);
    }
    t.note = name + " suite, " + std::to_string(cases) + " cases";
    return t;
}

// ---------------------------------------------------------------- 4

std::size_t rank_of(const sp::Matrix& m, const sp::Field& f)
{
    return sp::rank(m, f);
}

/// Kernel and cokernel dimensions of the canonical map, cell by cell,
/// against the modules the functors return.
std::string kernel_cokernel_defect(const sp::CellMorphism& map, const sp::CellModule& ker, const sp::CellModule& coker)
{
    const sp::CellComplex k = map.complex().merged(ker.complex()).merged(coker.complex());
    const sp::CellMorphism h = map.refine(k);
    const sp::CellModule kr = ker.refine(k), cr = coker.refine(k);
    for (std::size_t c = 0; c < k.cell_count(); ++c) {
        const std::size_t r = rank_of(h.map(c), h.source().field());
        const long sum = static_cast<long>(kr.dim(c)) - static_cast<long>(h.source().dim(c))
                         + static_cast<long>(h.target().dim(c)) - static_cast<long>(cr.dim(c));
        if (kr.dim(c) + r != h.source().dim(c) || cr.dim(c) + r != h.target().dim(c) || sum != 0)
            return "at " + sp::to_string(k.representative(c));
    }
    return "";
}

Tally exactness()
{
    Tally t;
    for (std::size_t i = 0; i < 50; ++i) {
        sp::Rng rng = case_rng(4, i);
        const sp::CellModule m = sp::gen::module(rng, small_dim(rng));
        t.run("exactness", [&] {
            const auto under = sp::underline(m);
            const auto over = sp::overline(m);
            const std::string a = kernel_cokernel_defect(*under.canonical, sp::scott_socle(m).output,
                                                         sp::r1_socle(m).output);
            const std::string b = kernel_cokernel_defect(*over.canonical, sp::l1_top(m).output, sp::scott_top(m).output);
            t.check(a.empty(), "0 -> soc -> M -> underline -> R1soc -> 0 " + a + " in " + sp::dump(sp::to_json(m)));
            t.check(b.empty(), "0 -> L1top -> overline -> M -> top -> 0 " + b + " in " + sp::dump(sp::to_json(m)));
            t.check(!sp::exactness_defect(m), "library bookkeeping: " + sp::exactness_defect(m).value_or(""));
        });
    }
    t.note = "50 modules, both sequences, ranks of the canonical maps";
    return t;
}

// ---------------------------------------------------------------- 5

bool same_dims(const sp::CellModule& a, const sp::CellModule& b)
{
    auto [x, y] = sp::align(a, b);
    return x.dims() == y.dims();
}

Tally soc_top()
{
    Tally t;
    for (std::size_t i = 0; i < 50; ++i) {
        sp::Rng rng = case_rng(5, i);
        const sp::CellModule m = sp::gen::module(rng, small_dim(rng));
        t.run("soc-top", [&] {
            const sp::CellModule over = sp::overline(m).output, under = sp::underline(m).output;
            const sp::SocTopCheck c = sp::soc_top_connection(m);
            t.check(c.r1soc_top && c.l1top_soc, "comparison maps not isomorphisms: " + c.detail);
            t.check(same_dims(sp::r1_socle(over).output, sp::scott_top(under).output),
                    "dim R1soc(overline M) != dim top(underline M) in " + sp::dump(sp::to_json(m)));
            t.check(same_dims(sp::l1_top(under).output, sp::scott_socle(over).output),
                    "dim L1top(underline M) != dim soc(overline M) in " + sp::dump(sp::to_json(m)));
        });
    }
    t.note = "50 modules";
    return t;
}

// ---------------------------------------------------------------- 6, 11

/// No nonzero map M(p <= q) with p << q: on every cell, the map to the cell
/// just up and to the right is zero.
bool ephemeral_oracle(const sp::CellModule& m)
{
    const sp::CellComplex& k = m.complex();
    for (std::size_t c = 0; c < k.cell_count(); ++c) {
        std::size_t up = 0;
        for (std::size_t a = 0; a < k.dim(); ++a) {
            const std::size_t s = k.stratum(c, a);
            up += (s % 2 == 1 ? s + 1 : s) * k.stride(a);
        }
        if (!m.cell_map(c, up).is_zero())
            return false;
    }
    return true;
}

Tally ephemerality()
{
    Tally t;
    std::size_t eph = 0;
    for (std::size_t i = 0; i < 70; ++i) {
        sp::Rng rng = case_rng(6, i);
        const std::size_t n = small_dim(rng);
        std::optional<sp::ConvexRegion> region;
        sp::CellModule m;
        if (i < 50) {
            m = sp::gen::module(rng, n);
        } else {
            region = sp::boundary(sp::gen::staircase(rng, n, 3));
            m = sp::indicator(*region);
        }
        t.run("ephemeral", [&] {
            const bool e = ephemeral_oracle(m);
            eph += e ? 1 : 0;
            const std::string in = " for " + sp::dump(sp::to_json(m));
            t.check(sp::is_ephemeral(m) == e, "is_ephemeral disagrees with the oracle" + in);
            t.check(sp::overline(m).is_zero == e, "overline M = 0 disagrees" + in);
            t.check(sp::underline(m).is_zero == e, "underline M = 0 disagrees" + in);
            t.check(same_dims(sp::scott_socle(m).output, m) == e, "soc M = M disagrees" + in);
            t.check(same_dims(sp::scott_top(m).output, m) == e, "top M = M disagrees" + in);
            t.check(sp::scott_radical(m).is_zero == e, "rad M = 0 disagrees" + in);
            if (region) {
                t.check(e, "boundary indicator not ephemeral" + in);
                const sp::MeagerVerdict v = sp::is_meager(*region, rng.engine()());
                t.check(v.status == sp::MeagerStatus::meager, "boundary support not recognised as meager" + in);
            }
        });
    }
    t.note = "50 random modules and 20 boundary indicators, " + std::to_string(eph) + " ephemeral";
    if (eph <= 20)
        t.check(false, "no ephemeral module among the random ones");
    return t;
}

Tally zero_distance()
{
    Tally t;
    std::size_t eph = 0;
    for (std::size_t i = 0; i < 40; ++i) {
        sp::Rng rng = case_rng(11, i);
        const std::size_t n = small_dim(rng);
        const sp::CellModule m = i % 4 == 0 ? sp::gen::ephemeral(rng, n) : sp::gen::module(rng, n);
        t.run("distance to zero", [&] {
            const auto f = sp::SuperlinearFamily::standard(n);
            const sp::TrFlags tr = sp::tr_flags(f, sp::Poset::standard(n));
            t.check(tr.tr1 && tr.tr2 && tr.tr3, "TR flags fail for (1, ..., 1)");
            const bool e = ephemeral_oracle(m);
            eph += e ? 1 : 0;
            const sp::Distance d = sp::distance_to_zero(m, f);
            t.check((d == sp::Distance::finite(0)) == e,
                    "d(M, 0) = " + d.to_string() + (e ? " for an ephemeral " : " for a non-ephemeral ")
                        + sp::dump(sp::to_json(m)));
        });
    }
    t.note = "40 modules, " + std::to_string(eph) + " ephemeral";
    if (eph == 0 || eph == 40)
        t.check(false, "corpus lacks one of the two classes");
    return t;
}

// ---------------------------------------------------------------- 7

Tally semicontinuity()
{
    Tally t;
    for (std::size_t i = 0; i < 50; ++i) {
        sp::Rng rng = case_rng(7, i);
        const sp::SetKind kind = i % 2 ? sp::SetKind::up : sp::SetKind::down;
        const sp::Flavor flavor = i % 4 < 2 ? sp::Flavor::closed : sp::Flavor::open;
        const sp::StaircaseRegion r = sp::gen::staircase(rng, small_dim(rng), kind, flavor);
        t.run("region", [&] {
            // Scott-open up-sets and closed down-sets are lower; the other two upper.
            const bool want_lower = (kind == sp::SetKind::up) == (flavor == sp::Flavor::open);
            const sp::CellModule k = sp::indicator(r);
            t.check(sp::is_lower_semicontinuous(k) == want_lower && sp::is_upper_semicontinuous(k) == !want_lower,
                    "misclassified " + sp::dump(sp::to_json(r)));
        });
    }
    auto iso_everywhere = [](const sp::CellMorphism& h) {
        for (std::size_t c = 0; c < h.complex().cell_count(); ++c) {
            const std::size_t d = h.source().dim(c);
            if (h.target().dim(c) != d || rank_of(h.map(c), h.source().field()) != d)
                return false;
        }
        return true;
    };
    for (std::size_t i = 0; i < 50; ++i) {
        sp::Rng rng = case_rng(7, 100 + i);
        const sp::CellModule m = sp::gen::module(rng, small_dim(rng));
        t.run("hom criterion", [&] {
            const bool upper = sp::is_upper_semicontinuous(m), lower = sp::is_lower_semicontinuous(m);
            const std::string in = " for " + sp::dump(sp::to_json(m));
            t.check(upper == iso_everywhere(*sp::underline(m).canonical), "upper but M -> underline M not iso" + in);
            t.check(lower == iso_everywhere(*sp::overline(m).canonical), "lower but overline M -> M not iso" + in);
            t.check(upper == (sp::scott_socle(m).is_zero && sp::r1_socle(m).is_zero), "upper iff soc = R1soc = 0" + in);
            t.check(lower == (sp::scott_top(m).is_zero && sp::l1_top(m).is_zero), "lower iff top = L1top = 0" + in);
        });
    }
    for (std::size_t i = 0; i < 50; ++i) {
        sp::Rng rng = case_rng(7, 200 + i);
        const sp::FiniteModule m = sp::gen::finite_module(rng, static_cast<std::size_t>(rng.integer(1, 8)));
        t.run("finite", [&] {
            t.check(sp::is_lower_semicontinuous(m) && sp::is_upper_semicontinuous(m),
                    "finite-poset module not bi-semi-continuous: " + sp::dump(sp::to_json(m.poset())));
        });
    }
    t.note = "50 regions over 4 kinds, 50 modules, 50 finite-poset modules";
    return t;
}

// ---------------------------------------------------------------- 10

Tally isometry()
{
    Tally t;
    for (std::size_t i = 0; i < 30; ++i) {
        sp::Rng rng = case_rng(10, i);
        const std::size_t n = small_dim(rng);
        const sp::SetKind kind = rng.coin() ? sp::SetKind::up : sp::SetKind::down;
        auto flavor = [&] { return rng.coin() ? sp::Flavor::closed : sp::Flavor::open; };
        const sp::StaircaseRegion r1 = sp::gen::staircase(rng, n, kind, flavor(), 3);
        const sp::StaircaseRegion r2 = sp::gen::staircase(rng, n, kind, flavor(), 3);
        t.run("isometry", [&] {
            const auto f = sp::SuperlinearFamily::standard(n);
            // overline of an up-set indicator is its interior, of a down-set its closure
            const sp::Flavor over = kind == sp::SetKind::up ? sp::Flavor::open : sp::Flavor::closed;
            const sp::Distance d = sp::distance_indicator(r1, r2, f);
            const sp::Distance d_over = sp::distance_indicator(r1.with_flavor(over), r2.with_flavor(over), f);
            const sp::ScottDistance ds = sp::distance_scott(sp::indicator(r1), sp::indicator(r2), f);
            const auto brute = oracle::certificate_distance(sp::indicator(r1), sp::indicator(r2), f.v);
            const sp::Distance want = brute ? sp::Distance::finite(*brute) : sp::Distance::infinity();
            const std::string in = " for " + sp::dump(sp::to_json(r1)) + " and " + sp::dump(sp::to_json(r2));
            t.check(d == want, "d = " + d.to_string() + " but certificate search gives " + want.to_string() + in);
            t.check(d_over == d, "overline regions give " + d_over.to_string() + in);
            t.check(ds.computable && ds.d == d, "distance_scott gives " + (ds.computable ? ds.d.to_string() : ds.reason) + in);
        });
    }
    t.note = "30 indicator pairs";
    return t;
}

// ---------------------------------------------------------------- 12

Tally sections()
{
    Tally t;
    for (std::size_t i = 0; i < 30; ++i) {
        sp::Rng rng = case_rng(12, i);
        const std::size_t n = small_dim(rng);
        const sp::CellModule m = sp::gen::module(rng, n);
        const sp::SetKind kind = i % 2 ? sp::SetKind::up : sp::SetKind::down;
        const sp::StaircaseRegion r = sp::gen::staircase(rng, n, kind, rng.coin() ? sp::Flavor::closed : sp::Flavor::open, 3);
        t.run("sections", [&] {
            const std::size_t got = kind == sp::SetKind::up ? sp::sections(m, r).dim : sp::cosections(m, r);
            const std::size_t want = kind == sp::SetKind::up ? oracle::brute_sections(m, r) : oracle::brute_cosections(m, r);
            t.check(got == want, std::string(kind == sp::SetKind::up ? "sections " : "cosections ") + std::to_string(got)
                                     + " vs brute force " + std::to_string(want) + " over " + sp::dump(sp::to_json(r))
                                     + " of " + sp::dump(sp::to_json(m)));
        });
    }
    t.note = "15 up-sets, 15 down-sets";
    return t;
}

struct Criterion {
    int number;
    std::string name;
    long limit_ms;
    std::function<Tally()> run;
};

} // namespace

int main(int argc, char** argv)
{
    if (argc > 1)
        g_seed = std::strtoull(argv[1], nullptr, 10);
    const std::vector<Criterion> criteria{
        {1, "way-below oracles", 1000, way_below},
        {2, "indicator closed forms", 10000, closed_forms},
        {3, "line composition", 10000, [] { return suite("line-composition", 3, 50); }},
        {4, "exact-sequence bookkeeping", 10000, exactness},
        {5, "soc/top connection", 10000, soc_top},
        {6, "ephemerality equivalences", 10000, ephemerality},
        {7, "semi-continuity classification", 10000, semicontinuity},
        {8, "Nakayama", 5000, [] { return suite("nakayama", 8, 20); }},
        {9, "stability", 10000, [] { return suite("stability", 9, 30); }},
        {10, "isometry", 30000, isometry},
        {11, "distance to zero", 10000, zero_distance},
        {12, "sections oracle", 20000, sections},
    };
    std::cout << "seed " << g_seed << "\n";
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Tally t;
        try {
            t = c.run();
        } catch (const std::exception& e) {
            t.cases = std::max(t.cases, t.failed + 1);
            t.check(false, std::string("exception ") + e.what());
        }
        const long ms = static_cast<long>(
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
        const bool in_time = ms < c.limit_ms;
        const bool ok = t.failed == 0 && in_time;
        failed += ok ? 0 : 1;
        std::cout << (ok ? "PASS" : "FAIL") << "  " << c.number << ". " << c.name << ": " << t.cases - t.failed << "/"
                  << t.cases << " cases, " << ms << " ms (limit " << c.limit_ms << " ms); " << t.note << "\n";
        if (!in_time)
            std::cout << "      over the time limit\n";
        if (t.failed > 0)
            std::cout << "      first failure: " << t.first << "\n";
    }
    std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << "\n";
    return failed == 0 ? 0 : 1;
}
