#include "scottpersist/region.hpp"

#include "scottpersist/errors.hpp"
#include "scottpersist/rng.hpp"

#include <algorithm>
#include <set>

namespace scottpersist {

std::string to_string(SetKind k)
{
    return k == SetKind::up ? "up" : "down";
}

std::string to_string(Flavor f)
{
    return f == Flavor::closed ? "closed" : "open";
}

namespace {

bool dominated(const Poset& poset, SetKind kind, const Point& g, const Point& h)
{
    // The basic set of g is inside the basic set of h (either flavor).
    return kind == SetKind::up ? poset.le(h, g) : poset.le(g, h);
}

void require_standard(const StaircaseRegion& r, const char* what)
{
    if (!r.poset().is_standard())
        throw DomainError(std::string(what) + " is only implemented on R^n with the standard order, got "
                          + r.poset().describe());
}

} // namespace

StaircaseRegion::StaircaseRegion(Poset poset, SetKind kind, Flavor flavor, std::vector<Point> gens)
    : poset_(std::move(poset))
    , kind_(kind)
    , flavor_(flavor)
{
    for (const auto& g : gens)
        poset_.check_point(g);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < gens.size() && keep; ++j)
            if (i != j && dominated(poset_, kind_, gens[i], gens[j]))
                keep = false;
        if (keep)
            gens_.push_back(gens[i]);
    }
}

bool StaircaseRegion::contains(const Point& p) const
{
    poset_.check_point(p);
    for (const auto& g : gens_) {
        const bool in = kind_ == SetKind::up
            ? (flavor_ == Flavor::closed ? poset_.le(g, p) : poset_.way_below(g, p))
            : (flavor_ == Flavor::closed ? poset_.le(p, g) : poset_.way_below(p, g));
        if (in)
            return true;
    }
    return false;
}

std::string to_string(const StaircaseRegion& r)
{
    std::string sym = r.kind() == SetKind::up ? (r.flavor() == Flavor::closed ? "up" : "UP")
                                              : (r.flavor() == Flavor::closed ? "down" : "DOWN");
    if (r.empty())
        return "empty";
    std::string s;
    for (const auto& g : r.gens())
        s += (s.empty() ? "" : " u ") + sym + to_string(g);
    return s;
}

ConvexRegion::ConvexRegion(StaircaseRegion outer, StaircaseRegion inner)
    : outer_(std::move(outer))
    , inner_(std::move(inner))
{
    if (outer_.kind() != inner_.kind() || !(outer_.poset() == inner_.poset()))
        throw DomainError("convex region: outer and inner differ in kind or poset");
    if (!region_subset(inner_, outer_))
        throw DomainError("convex region: inner " + to_string(inner_) + " is not inside outer " + to_string(outer_));
}

ConvexRegion::ConvexRegion(StaircaseRegion outer)
    : outer_(outer)
    , inner_(outer.with_gens({}))
{
}

StaircaseRegion interior(const StaircaseRegion& u)
{
    if (u.kind() != SetKind::up)
        throw DomainError("interior: expected an up-set");
    if (u.poset().kind() != PosetKind::standard && u.poset().kind() != PosetKind::cone)
        throw DomainError("interior is only implemented for standard and cone orders");
    return u.with_flavor(Flavor::open);
}

StaircaseRegion closure(const StaircaseRegion& r)
{
    require_standard(r, "closure");
    return r.with_flavor(Flavor::closed);
}

StaircaseRegion interior_down(const StaircaseRegion& d)
{
    if (d.kind() != SetKind::down)
        throw DomainError("interior_down: expected a down-set");
    require_standard(d, "interior_down");
    return d.with_flavor(Flavor::open);
}

ConvexRegion boundary(const StaircaseRegion& r)
{
    require_standard(r, "boundary");
    return ConvexRegion(r.with_flavor(Flavor::closed), r.with_flavor(Flavor::open));
}

bool region_subset(const StaircaseRegion& a, const StaircaseRegion& b)
{
    if (a.kind() != b.kind() || !(a.poset() == b.poset()))
        throw DomainError("region_subset: regions differ in kind or poset");
    const Poset& P = a.poset();
    // A closed piece only fits into an open target if it sits strictly inside
    // one open basic set; every other combination reduces to the order.
    const bool strict = a.flavor() == Flavor::closed && b.flavor() == Flavor::open;
    for (const auto& g : a.gens()) {
        bool found = false;
        for (const auto& h : b.gens()) {
            const bool ok = a.kind() == SetKind::up ? (strict ? P.way_below(h, g) : P.le(h, g))
                                                    : (strict ? P.way_below(g, h) : P.le(g, h));
            if (ok) {
                found = true;
                break;
            }
        }
        if (!found)
            return false;
    }
    return true;
}

MeagerVerdict is_meager(const ConvexRegion& s, std::uint64_t seed)
{
    require_standard(s.outer(), "is_meager");
    MeagerVerdict verdict;
    if (s.outer().empty()) {
        verdict.status = MeagerStatus::meager;
        verdict.certificate = "empty set";
        return verdict;
    }
    // Subsets of U minus Int U contain no way-below pair.
    if (region_subset(s.outer().with_flavor(Flavor::open), s.inner())) {
        verdict.status = MeagerStatus::meager;
        verdict.certificate = "inner contains " + to_string(s.outer().with_flavor(Flavor::open))
            + ", so the set lies in the closure of the outer region minus its interior";
        return verdict;
    }

    const Poset& P = s.outer().poset();
    const std::size_t n = P.dim();
    std::vector<Point> base = s.outer().gens();
    base.insert(base.end(), s.inner().gens().begin(), s.inner().gens().end());

    std::set<Rational> values;
    for (const auto& g : base)
        values.insert(g.begin(), g.end());
    Rational delta = 1;
    for (auto it = values.begin(); it != values.end() && std::next(it) != values.end(); ++it)
        delta = min(delta, (*std::next(it) - *it) / 2);

    std::set<Point> cand(base.begin(), base.end());
    for (std::size_t i = 0; i < base.size(); ++i)
        for (std::size_t j = i + 1; j < base.size(); ++j) {
            cand.insert(P.join(base[i], base[j]));
            cand.insert(P.meet(base[i], base[j]));
        }
    std::vector<Point> midpoints;
    for (auto it = cand.begin(); it != cand.end(); ++it)
        for (auto jt = std::next(it); jt != cand.end(); ++jt) {
            std::vector<Rational> m(n);
            for (std::size_t k = 0; k < n; ++k)
                m[k] = ((*it)[k] + (*jt)[k]) / 2;
            midpoints.emplace_back(std::move(m));
        }
    cand.insert(midpoints.begin(), midpoints.end());
    const Point one = constant_point(n, 1);
    std::vector<Point> offsets;
    for (const auto& c : cand)
        for (int k : {-2, -1, 1, 2})
            offsets.push_back(c.translated(one, delta * k));
    cand.insert(offsets.begin(), offsets.end());

    std::vector<Point> inside;
    for (const auto& c : cand)
        if (s.contains(c))
            inside.push_back(c);
    for (const auto& x : inside)
        for (const auto& y : inside)
            if (P.way_below(x, y)) {
                verdict.status = MeagerStatus::not_meager;
                verdict.witness = std::make_pair(x, y);
                return verdict;
            }

    // Random pairs around the generators.
    Rational lo = values.empty() ? Rational(0) : *values.begin();
    Rational hi = values.empty() ? Rational(0) : *values.rbegin();
    Rng rng(seed);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<Rational> x(n), y(n);
        for (std::size_t k = 0; k < n; ++k) {
            x[k] = lo - 2 + (hi - lo + 4) * rng.rational(0, 1, 8);
            y[k] = x[k] + rng.rational(1, 8, 4) / 4;
        }
        Point px(std::move(x)), py(std::move(y));
        if (s.contains(px) && s.contains(py) && P.way_below(px, py)) {
            verdict.status = MeagerStatus::not_meager;
            verdict.witness = std::make_pair(px, py);
            return verdict;
        }
    }
    return verdict;
}

bool is_injective_indicator_region(const StaircaseRegion& d)
{
    if (d.kind() != SetKind::down)
        throw DomainError("is_injective_indicator_region: expected a down-set");
    require_standard(d, "is_injective_indicator_region");
    if (d.flavor() != Flavor::open || d.empty())
        return false;
    const StaircaseRegion cl = d.with_flavor(Flavor::closed);
    const auto& g = d.gens();
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (!cl.contains(d.poset().join(g[i], g[j])))
                return false;
    return true;
}

} // namespace scottpersist
