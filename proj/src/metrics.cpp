#include "scottpersist/metrics.hpp"

#include "scottpersist/functors.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace scottpersist {

const Rational& Distance::value() const
{
    if (infinite_)
        throw DomainError("distance is infinite");
    return value_;
}

namespace {

// Rows of the cone (identity for the standard order).
Matrix order_matrix(const Poset& poset)
{
    if (poset.kind() == PosetKind::standard)
        return Matrix::identity(poset.dim());
    if (const auto* c = poset.as_cone())
        return c->facets;
    throw DomainError("translation families are only implemented for standard and cone orders, not "
                      + poset.describe());
}

std::vector<Rational> apply_rows(const Matrix& a, const Point& x)
{
    std::vector<Rational> out(a.rows());
    for (std::size_t k = 0; k < a.rows(); ++k)
        for (std::size_t i = 0; i < a.cols(); ++i)
            out[k] += a(k, i) * x[i];
    return out;
}

void require_tr2(const SuperlinearFamily& f, const Poset& poset)
{
    TrFlags t = tr_flags(f, poset);
    if (!t.tr2)
        throw DomainError("family violates TR2: " + t.tr2_witness);
}

std::vector<Rational> offset(const Point& v, const Rational& eps)
{
    std::vector<Rational> o(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i)
        o[i] = eps * v[i];
    return o;
}

CellComplex minus(const CellComplex& k, const Point& v, const Rational& eps)
{
    return k.translated(offset(v, -eps));
}

// Cell of `target` holding the representative of each cell of `k` moved by
// t v. Complexes are products, so this is tabulated axis by axis.
class Locator {
public:
    Locator(const CellComplex& k, const CellComplex& target, const Point& v, const Rational& t)
        : k_(k)
        , table_(k.dim())
    {
        for (std::size_t a = 0; a < k.dim(); ++a)
            for (std::size_t s = 0; s < k.strata(a); ++s)
                table_[a].push_back(target.stratum_of(a, k.representative(a, s) + t * v[a]) * target.stride(a));
    }

    std::size_t operator()(std::size_t cell) const
    {
        std::size_t out = 0;
        for (std::size_t a = 0; a < table_.size(); ++a)
            out += table_[a][k_.stratum(cell, a)];
        return out;
    }

private:
    const CellComplex& k_;
    std::vector<std::vector<std::size_t>> table_;
};

} // namespace

TrFlags tr_flags(const SuperlinearFamily& f, const Poset& poset)
{
    const Matrix a = order_matrix(poset);
    if (f.v.dim() != poset.dim())
        throw DimensionError("family direction has the wrong dimension");
    TrFlags out;
    out.tr1 = true;  // x -> x + eps v is an order isomorphism of R^n
    const auto av = apply_rows(a, f.v);
    out.tr2 = std::all_of(av.begin(), av.end(), [](const Rational& x) { return sgn(x) > 0; });
    out.tr3 = std::all_of(av.begin(), av.end(), [](const Rational& x) { return sgn(x) >= 0; });
    if (!out.tr2)
        out.tr2_witness = "0 is not way below eps " + to_string(f.v) + " for any eps > 0";
    if (!out.tr3)
        out.tr3_witness = "p is not below p + eps " + to_string(f.v);
    return out;
}

bool check_interleaving(const CellModule& m, const CellModule& n, const InterleavingCertificate& cert)
{
    if (m.ambient_dim() != n.ambient_dim() || cert.v.dim() != m.ambient_dim())
        throw ComplexMismatch("certificate and modules differ in dimension");
    const Rational& eps = cert.eps;
    const Point& v = cert.v;
    auto fits = [&](const CellMorphism& h, const CellModule& src, const CellModule& tgt, const char* name) {
        const CellComplex& k = h.complex();
        try {
            if (!(h.source() == src.refine(k)) || !(h.target() == tgt.shift_onto(k, v, eps)))
                throw ComplexMismatch(std::string(name) + " does not go between the stated modules");
        } catch (const DomainError& e) {
            throw ComplexMismatch(std::string(name) + ": " + e.what());
        }
    };
    fits(cert.f, m, n, "f");
    fits(cert.g, n, m, "g");
    if (!cert.f.is_natural() || !cert.g.is_natural())
        return false;

    CellComplex k = m.complex().merged(n.complex());
    for (const CellComplex& c : {m.complex(), n.complex()})
        k = k.merged(minus(c, v, 2 * eps));
    for (const CellComplex& c : {cert.f.complex(), cert.g.complex()})
        k = k.merged(c).merged(minus(c, v, eps));

    const Field& field = m.field();
    const auto& fk = cert.f.complex();
    const auto& gk = cert.g.complex();
    const Locator f0(k, fk, v, 0), f1(k, fk, v, eps), g0(k, gk, v, 0), g1(k, gk, v, eps);
    const Locator m0(k, m.complex(), v, 0), m2(k, m.complex(), v, 2 * eps);
    const Locator n0(k, n.complex(), v, 0), n2(k, n.complex(), v, 2 * eps);
    // Many cells of k give the same cells of f, g and the modules, so each
    // distinct triangle is checked once.
    std::set<std::array<std::size_t, 4>> seen_m, seen_n;
    for (std::size_t c = 0; c < k.cell_count(); ++c) {
        const Matrix& fp = cert.f.map(f0(c));
        const Matrix& gp = cert.g.map(g0(c));
        const Matrix& fp1 = cert.f.map(f1(c));
        const Matrix& gp1 = cert.g.map(g1(c));
        if (gp1.cols() != fp.rows() || fp1.cols() != gp.rows())
            throw ComplexMismatch("certificate maps do not compose at " + to_string(k.representative(c)));
        if (seen_m.insert({f0(c), g1(c), m0(c), m2(c)}).second
            && !(multiply(gp1, fp, field) == m.cell_map(m0(c), m2(c))))
            return false;
        if (seen_n.insert({g0(c), f1(c), n0(c), n2(c)}).second
            && !(multiply(fp1, gp, field) == n.cell_map(n0(c), n2(c))))
            return false;
    }
    return true;
}

CanonicalInterleaving canonical_interleaving(const CellModule& m, LineSide side, const Rational& eps,
                                             const SuperlinearFamily& f)
{
    if (sgn(eps) <= 0)
        throw DomainError("canonical_interleaving needs eps > 0");
    require_tr2(f, Poset::standard(m.ambient_dim()));
    const bool over = side == LineSide::overline;
    FunctorReport line = over ? overline(m) : underline(m);
    const CellComplex& mk = m.complex();
    const auto maps = over ? lower_strata(mk) : upper_strata(mk);
    auto moved = [&](std::size_t cell) {
        std::size_t out = 0;
        for (std::size_t a = 0; a < mk.dim(); ++a)
            out += maps[a][mk.stratum(cell, a)] * mk.stride(a);
        return out;
    };

    const CellComplex k = mk.merged(minus(mk, f.v, eps));
    const Locator at(k, mk, f.v, 0), ahead(k, mk, f.v, eps);
    std::vector<Matrix> fm, gm;
    for (std::size_t c = 0; c < k.cell_count(); ++c) {
        const std::size_t here = at(c);
        const std::size_t there = ahead(c);
        // M -> partner shifted, and partner -> M shifted; the partner at a
        // cell is M at moved(cell).
        fm.push_back(m.cell_map(here, moved(there)));
        gm.push_back(m.cell_map(moved(here), there));
    }
    CellMorphism fmor(m.refine(k), line.output.shift_onto(k, f.v, eps), std::move(fm));
    CellMorphism gmor(line.output.refine(k), m.shift_onto(k, f.v, eps), std::move(gm));
    return {line.output, InterleavingCertificate{eps, f.v, std::move(fmor), std::move(gmor)}};
}

InterleavingCertificate weaken_certificate(const CellModule& m, const CellModule& n,
                                           const InterleavingCertificate& cert, const Rational& eps)
{
    if (eps < cert.eps)
        throw DomainError("weaken_certificate: new eps is smaller");
    const Point& v = cert.v;
    auto widen = [&](const CellMorphism& h, const CellModule& src, const CellModule& tgt) {
        const CellComplex k = h.complex()
                                  .merged(src.complex())
                                  .merged(minus(tgt.complex(), v, cert.eps))
                                  .merged(minus(tgt.complex(), v, eps));
        const Locator hk(k, h.complex(), v, 0), from(k, tgt.complex(), v, cert.eps), to(k, tgt.complex(), v, eps);
        std::vector<Matrix> maps;
        for (std::size_t c = 0; c < k.cell_count(); ++c)
            maps.push_back(multiply(tgt.cell_map(from(c), to(c)), h.map(hk(c)), src.field()));
        return CellMorphism(src.refine(k), tgt.shift_onto(k, v, eps), std::move(maps));
    };
    return InterleavingCertificate{eps, v, widen(cert.f, m, n), widen(cert.g, n, m)};
}

namespace {

// inf { eps >= 0 : b <= a + eps v } in the order given by the rows of `order`.
std::optional<Rational> reach(const Matrix& order, const Point& a, const Point& b, const Point& v)
{
    const auto av = apply_rows(order, v);
    const auto diff = apply_rows(order, b - a);
    Rational best = 0;
    for (std::size_t k = 0; k < av.size(); ++k) {
        if (sgn(diff[k]) <= 0)
            continue;
        if (sgn(av[k]) <= 0)
            return std::nullopt;
        best = max(best, diff[k] / av[k]);
    }
    return best;
}

// max over `from` of min over `to` of reach(from -> to), or reach(to -> from)
// when `reverse`; nullopt is infinity.
std::optional<Rational> hausdorff_side(const Matrix& order, const std::vector<Point>& from,
                                       const std::vector<Point>& to, const Point& v, bool reverse)
{
    Rational worst = 0;
    for (const auto& x : from) {
        std::optional<Rational> best;
        for (const auto& y : to) {
            auto e = reverse ? reach(order, y, x, v) : reach(order, x, y, v);
            if (e && (!best || *e < *best))
                best = e;
        }
        if (!best)
            return std::nullopt;
        worst = max(worst, *best);
    }
    return worst;
}

Distance combine(std::optional<Rational> a, std::optional<Rational> b)
{
    if (!a || !b)
        return Distance::infinity();
    return Distance::finite(max(*a, *b));
}

} // namespace

Distance distance_indicator(const StaircaseRegion& r1, const StaircaseRegion& r2, const SuperlinearFamily& f)
{
    if (r1.kind() != r2.kind())
        throw DomainError("distance_indicator: one up-set and one down-set");
    if (!(r1.poset() == r2.poset()))
        throw DomainError("distance_indicator: regions live in different posets");
    require_tr2(f, r1.poset());
    const Matrix order = order_matrix(r1.poset());
    if (r1.empty() && r2.empty())
        return Distance::finite(0);
    if (r1.empty() || r2.empty())
        return Distance::infinity();
    const auto& g1 = r1.gens();
    const auto& g2 = r2.gens();
    if (r1.kind() == SetKind::up) {
        // R1 + eps v inside R2: each g needs some h <= g + eps v; and back.
        return combine(hausdorff_side(order, g1, g2, f.v, false), hausdorff_side(order, g2, g1, f.v, false));
    }
    // R2 inside R1 + eps v: each h needs some g with h <= g + eps v; and back.
    return combine(hausdorff_side(order, g2, g1, f.v, true), hausdorff_side(order, g1, g2, f.v, true));
}

std::vector<Rational> candidate_epsilons(const CellComplex& k, const Point& v)
{
    std::set<Rational> c{0};
    for (std::size_t a = 0; a < k.dim(); ++a) {
        if (sgn(v[a]) <= 0)
            continue;
        const auto& b = k.breakpoints(a);
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j)
                c.insert((b[j] - b[i]) / v[a]);
    }
    return {c.begin(), c.end()};
}

namespace {

// M(p <= p + t v) = 0 for every p.
bool vanishes_after(const CellModule& m, const Point& v, const Rational& t)
{
    const CellComplex& mk = m.complex();
    const CellComplex k = mk.merged(minus(mk, v, t));
    const Locator at(k, mk, v, 0), ahead(k, mk, v, t);
    for (std::size_t c = 0; c < k.cell_count(); ++c)
        if (!m.cell_map(at(c), ahead(c)).is_zero())
            return false;
    return true;
}

} // namespace

Distance distance_to_zero(const CellModule& m, const SuperlinearFamily& f)
{
    const TrFlags t = tr_flags(f, Poset::standard(m.ambient_dim()));
    if (!t.tr3)
        throw DomainError("distance_to_zero: family violates TR3: " + t.tr3_witness);
    if (m.is_zero())
        return Distance::finite(0);
    if (t.tr2 && is_ephemeral(m))
        return Distance::finite(0);
    // The vanishing set of t is an up-ray and only changes at candidates.
    const auto cand = candidate_epsilons(m.complex(), f.v);
    for (std::size_t i = 0; i < cand.size(); ++i) {
        const Rational next = i + 1 < cand.size() ? cand[i + 1] : cand[i] + 1;
        if (vanishes_after(m, f.v, cand[i]) || vanishes_after(m, f.v, (cand[i] + next) / 2))
            return Distance::finite(cand[i] / 2);
    }
    return Distance::infinity();
}

namespace {

// A coordinate of a cell corner; nullopt is -inf for up-sets, +inf for down-sets.
using Corner = std::vector<std::optional<Rational>>;

struct Shape {
    SetKind kind;
    std::vector<Corner> corners;
};

// Support is up-closed (or down-closed) in the cell order, all stalks are at
// most one-dimensional and every step inside the support is nonzero: then M
// is isomorphic to the indicator of its support.
std::optional<Shape> indicator_shape(const CellModule& m)
{
    if (m.max_dim() > 1 || m.is_zero())
        return std::nullopt;
    const CellComplex& k = m.complex();
    bool up_closed = true, down_closed = true;
    for (std::size_t c = 0; c < k.cell_count(); ++c) {
        for (std::size_t a = 0; a < k.dim(); ++a) {
            auto s = k.successor(c, a);
            if (!s)
                continue;
            const bool in_c = m.dim(c) == 1, in_s = m.dim(*s) == 1;
            if (in_c && !in_s)
                up_closed = false;
            if (in_s && !in_c)
                down_closed = false;
            if (in_c && in_s && m.step(a, c).is_zero())
                return std::nullopt;
        }
    }
    if (!up_closed && !down_closed)
        return std::nullopt;
    Shape shape{up_closed ? SetKind::up : SetKind::down, {}};
    for (std::size_t c = 0; c < k.cell_count(); ++c) {
        if (m.dim(c) == 0)
            continue;
        bool extreme = true;
        for (std::size_t a = 0; a < k.dim() && extreme; ++a) {
            auto nb = shape.kind == SetKind::up ? k.predecessor(c, a) : k.successor(c, a);
            if (nb && m.dim(*nb) == 1)
                extreme = false;
        }
        if (!extreme)
            continue;
        Corner corner;
        for (std::size_t a = 0; a < k.dim(); ++a)
            corner.push_back(shape.kind == SetKind::up ? k.stratum_inf(a, k.stratum(c, a))
                                                       : k.stratum_sup(a, k.stratum(c, a)));
        shape.corners.push_back(std::move(corner));
    }
    return shape;
}

// inf { eps >= 0 : b <= a + eps v } with infinite corner coordinates.
std::optional<Rational> reach_corner(SetKind kind, const Corner& a, const Corner& b, const Point& v)
{
    Rational best = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (kind == SetKind::up) {
            if (!b[i])
                continue;  // -inf <= anything
            if (!a[i])
                return std::nullopt;
        } else {
            if (!a[i])
                continue;  // anything <= +inf
            if (!b[i])
                return std::nullopt;
        }
        const Rational d = *b[i] - *a[i];
        if (sgn(d) > 0)
            best = max(best, d / v[i]);
    }
    return best;
}

std::optional<Rational> corner_side(SetKind kind, const std::vector<Corner>& from, const std::vector<Corner>& to,
                                    const Point& v, bool reverse)
{
    Rational worst = 0;
    for (const auto& x : from) {
        std::optional<Rational> best;
        for (const auto& y : to) {
            auto e = reverse ? reach_corner(kind, y, x, v) : reach_corner(kind, x, y, v);
            if (e && (!best || *e < *best))
                best = e;
        }
        if (!best)
            return std::nullopt;
        worst = max(worst, *best);
    }
    return worst;
}

} // namespace

ScottDistance distance_scott(const CellModule& m, const CellModule& n, const SuperlinearFamily& f)
{
    if (m.ambient_dim() != n.ambient_dim())
        throw DimensionError("distance_scott: modules of different dimension");
    require_tr2(f, Poset::standard(m.ambient_dim()));
    const CellModule a = jstar_representative(m);
    const CellModule b = jstar_representative(n);
    ScottDistance out;
    if (a.is_zero() || b.is_zero()) {
        out.computable = true;
        out.d = a.is_zero() ? distance_to_zero(b, f) : distance_to_zero(a, f);
        return out;
    }
    auto sa = indicator_shape(a);
    auto sb = indicator_shape(b);
    if (!sa || !sb) {
        out.reason = "representatives are not both indicators of up-sets or of down-sets; only certificates can be checked";
        return out;
    }
    // A support that is everything is both an up-set and a down-set.
    auto everything = [](const Shape& s) {
        return s.corners.size() == 1
            && std::all_of(s.corners[0].begin(), s.corners[0].end(), [](const auto& x) { return !x; });
    };
    if (sa->kind != sb->kind) {
        if (everything(*sa) || everything(*sb)) {
            out.computable = true;
            out.d = everything(*sa) && everything(*sb) ? Distance::finite(0) : Distance::infinity();
            return out;
        }
        out.reason = "one representative is an up-set indicator and the other a down-set indicator";
        return out;
    }
    const SetKind kind = sa->kind;
    out.computable = true;
    if (kind == SetKind::up)
        out.d = combine(corner_side(kind, sa->corners, sb->corners, f.v, false),
                        corner_side(kind, sb->corners, sa->corners, f.v, false));
    else
        out.d = combine(corner_side(kind, sb->corners, sa->corners, f.v, true),
                        corner_side(kind, sa->corners, sb->corners, f.v, true));
    return out;
}

} // namespace scottpersist
