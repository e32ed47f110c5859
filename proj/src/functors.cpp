#include "scottpersist/functors.hpp"

#include "scottpersist/errors.hpp"
#include "scottpersist/rng.hpp"

#include <deque>

namespace scottpersist {

std::vector<std::vector<std::size_t>> lower_strata(const CellComplex& k)
{
    std::vector<std::vector<std::size_t>> maps(k.dim());
    for (std::size_t a = 0; a < k.dim(); ++a)
        for (std::size_t s = 0; s < k.strata(a); ++s)
            maps[a].push_back(s % 2 == 1 ? s - 1 : s);
    return maps;
}

std::vector<std::vector<std::size_t>> upper_strata(const CellComplex& k)
{
    std::vector<std::vector<std::size_t>> maps(k.dim());
    for (std::size_t a = 0; a < k.dim(); ++a)
        for (std::size_t s = 0; s < k.strata(a); ++s)
            maps[a].push_back(s % 2 == 1 ? s + 1 : s);
    return maps;
}

namespace {

std::size_t image_cell(const CellComplex& k, const std::vector<std::vector<std::size_t>>& maps, std::size_t c)
{
    std::size_t out = 0;
    for (std::size_t a = 0; a < k.dim(); ++a)
        out += maps[a][k.stratum(c, a)] * k.stride(a);
    return out;
}

FunctorReport report(CellModule out, std::optional<CellMorphism> canonical)
{
    if (canonical) {
        if (auto err = canonical->naturality_error())
            throw InternalError("canonical morphism: " + *err);
    }
    const bool zero = out.is_zero();
    return {std::move(out), std::move(canonical), zero};
}

CellMorphism line_morphism(const CellMorphism& f, bool lower)
{
    const auto& k = f.complex();
    const auto maps = lower ? lower_strata(k) : upper_strata(k);
    CellModule src = f.source().pullback(k, maps);
    CellModule tgt = f.target().pullback(k, maps);
    std::vector<Matrix> m;
    for (std::size_t c = 0; c < k.cell_count(); ++c)
        m.push_back(f.map(image_cell(k, maps, c)));
    CellMorphism out(std::move(src), std::move(tgt), std::move(m));
    if (auto err = out.naturality_error())
        throw InternalError("line functor on a morphism: " + *err);
    return out;
}

} // namespace

FunctorReport overline(const CellModule& m)
{
    const auto& k = m.complex();
    const auto maps = lower_strata(k);
    CellModule out = m.pullback(k, maps);
    std::vector<Matrix> eps;
    for (std::size_t c = 0; c < k.cell_count(); ++c)
        eps.push_back(m.cell_map(image_cell(k, maps, c), c));
    CellMorphism canonical(out, m, std::move(eps));
    return report(std::move(out), std::move(canonical));
}

FunctorReport underline(const CellModule& m)
{
    const auto& k = m.complex();
    const auto maps = upper_strata(k);
    CellModule out = m.pullback(k, maps);
    std::vector<Matrix> eta;
    for (std::size_t c = 0; c < k.cell_count(); ++c)
        eta.push_back(m.cell_map(c, image_cell(k, maps, c)));
    CellMorphism canonical(m, out, std::move(eta));
    return report(std::move(out), std::move(canonical));
}

CellMorphism overline(const CellMorphism& f)
{
    return line_morphism(f, true);
}

CellMorphism underline(const CellMorphism& f)
{
    return line_morphism(f, false);
}

FunctorReport scott_socle(const CellModule& m)
{
    Kernel k = kernel(*underline(m).canonical);
    return report(std::move(k.module), std::move(k.inclusion));
}

FunctorReport scott_radical(const CellModule& m)
{
    Image im = image(*overline(m).canonical);
    return report(std::move(im.module), std::move(im.inclusion));
}

FunctorReport scott_top(const CellModule& m)
{
    Cokernel q = cokernel(*overline(m).canonical);
    return report(std::move(q.module), std::move(q.projection));
}

FunctorReport r1_socle(const CellModule& m)
{
    Cokernel q = cokernel(*underline(m).canonical);
    return report(std::move(q.module), std::move(q.projection));
}

FunctorReport l1_top(const CellModule& m)
{
    Kernel k = kernel(*overline(m).canonical);
    return report(std::move(k.module), std::move(k.inclusion));
}

bool is_ephemeral(const CellModule& m)
{
    return overline(m).is_zero;
}

bool is_upper_semicontinuous(const CellModule& m)
{
    return underline(m).canonical->is_isomorphism();
}

bool is_lower_semicontinuous(const CellModule& m)
{
    return overline(m).canonical->is_isomorphism();
}

CellModule jstar_representative(const CellModule& m)
{
    return overline(m).output;
}

std::string to_string(IsoVerdict v)
{
    switch (v) {
    case IsoVerdict::isomorphic:
        return "isomorphic";
    case IsoVerdict::not_isomorphic:
        return "not isomorphic";
    case IsoVerdict::undetermined:
        return "undetermined";
    }
    return "?";
}

bool thin_isomorphic(const CellModule& a0, const CellModule& b0)
{
    auto [a, b] = align(a0, b0);
    if (a.max_dim() > 1 || b.max_dim() > 1)
        throw DomainError("thin_isomorphic: a stalk has dimension above 1");
    if (a.dims() != b.dims())
        return false;
    const auto& k = a.complex();
    const std::size_t cells = k.cell_count();

    // Adjacency along steps that are nonzero in both modules. An isomorphism
    // is a family of nonzero scalars with lambda_s * a_step = b_step * lambda_c.
    struct Edge {
        std::size_t to;
        Rational ratio;  // lambda_to = ratio * lambda_from
    };
    std::vector<std::vector<Edge>> adj(cells);
    for (std::size_t c = 0; c < cells; ++c) {
        if (a.dim(c) == 0)
            continue;
        for (std::size_t ax = 0; ax < k.dim(); ++ax) {
            auto s = k.successor(c, ax);
            if (!s || a.dim(*s) == 0)
                continue;
            const Rational& x = a.step(ax, c)(0, 0);
            const Rational& y = b.step(ax, c)(0, 0);
            if ((sgn(x) == 0) != (sgn(y) == 0))
                return false;
            if (sgn(x) == 0)
                continue;
            Rational r = y / x;
            a.field().reduce_in_place(r);
            Rational inv = x / y;
            a.field().reduce_in_place(inv);
            adj[c].push_back({*s, r});
            adj[*s].push_back({c, inv});
        }
    }
    std::vector<std::optional<Rational>> lambda(cells);
    for (std::size_t root = 0; root < cells; ++root) {
        if (a.dim(root) == 0 || lambda[root])
            continue;
        lambda[root] = Rational(1);
        std::deque<std::size_t> queue{root};
        while (!queue.empty()) {
            const std::size_t c = queue.front();
            queue.pop_front();
            for (const auto& e : adj[c]) {
                Rational want = e.ratio * *lambda[c];
                a.field().reduce_in_place(want);
                if (!lambda[e.to]) {
                    lambda[e.to] = want;
                    queue.push_back(e.to);
                } else if (*lambda[e.to] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

// Basis of Hom(a, b) as flattened per-cell matrices, or nullopt when the
// linear system would be too large to solve exactly here.
std::optional<Matrix> hom_basis(const CellModule& a, const CellModule& b, std::vector<std::size_t>& offset)
{
    const auto& k = a.complex();
    const std::size_t cells = k.cell_count();
    offset.assign(cells + 1, 0);
    for (std::size_t c = 0; c < cells; ++c)
        offset[c + 1] = offset[c] + b.dim(c) * a.dim(c);
    const std::size_t unknowns = offset.back();
    if (unknowns > 600)
        return std::nullopt;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
    for (std::size_t c = 0; c < cells; ++c)
        for (std::size_t ax = 0; ax < k.dim(); ++ax) {
            auto s = k.successor(c, ax);
            if (!s)
                continue;
            const Matrix& ns = b.step(ax, c);
            const Matrix& ms = a.step(ax, c);
            for (std::size_t i = 0; i < b.dim(*s); ++i)
                for (std::size_t j = 0; j < a.dim(c); ++j) {
                    std::vector<std::pair<std::size_t, Rational>> row;
                    for (std::size_t kk = 0; kk < b.dim(c); ++kk)
                        if (sgn(ns(i, kk)) != 0)
                            row.emplace_back(offset[c] + kk * a.dim(c) + j, ns(i, kk));
                    for (std::size_t l = 0; l < a.dim(*s); ++l)
                        if (sgn(ms(l, j)) != 0)
                            row.emplace_back(offset[*s] + i * a.dim(*s) + l, -ms(l, j));
                    if (!row.empty())
                        rows.push_back(std::move(row));
                }
        }
    Matrix sys(rows.size(), unknowns);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (auto& [col, v] : rows[r])
            sys(r, col) += v;
    return kernel_basis(reduce(sys, a.field()), a.field());
}

} // namespace

IsoVerdict isomorphic(const CellModule& a0, const CellModule& b0)
{
    auto [a, b] = align(a0, b0);
    if (a == b)
        return IsoVerdict::isomorphic;
    if (a.dims() != b.dims())
        return IsoVerdict::not_isomorphic;
    if (a.max_dim() <= 1)
        return thin_isomorphic(a, b) ? IsoVerdict::isomorphic : IsoVerdict::not_isomorphic;
    const auto& k = a.complex();
    for (std::size_t ax = 0; ax < k.dim(); ++ax)
        for (std::size_t c = 0; c < k.cell_count(); ++c)
            if (k.successor(c, ax) && rank(a.step(ax, c), a.field()) != rank(b.step(ax, c), a.field()))
                return IsoVerdict::not_isomorphic;

    std::vector<std::size_t> offset;
    auto basis = hom_basis(a, b, offset);
    if (!basis || basis->cols() == 0)
        return basis ? IsoVerdict::not_isomorphic : IsoVerdict::undetermined;
    // A generic element of Hom is invertible when any element is; try a few.
    Rng rng(0x5eed);
    for (int attempt = 0; attempt < 8; ++attempt) {
        Matrix coeff(basis->cols(), 1);
        for (std::size_t i = 0; i < coeff.rows(); ++i)
            coeff(i, 0) = Rational(rng.integer(-7, 7));
        Matrix x = multiply(*basis, coeff, a.field());
        std::vector<Matrix> maps;
        for (std::size_t c = 0; c < k.cell_count(); ++c) {
            Matrix m(b.dim(c), a.dim(c));
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j)
                    m(i, j) = x(offset[c] + i * a.dim(c) + j, 0);
            maps.push_back(std::move(m));
        }
        if (CellMorphism(a, b, std::move(maps)).is_isomorphism())
            return IsoVerdict::isomorphic;
    }
    return IsoVerdict::undetermined;
}

IsoVerdict same_scott_sheaf(const CellModule& a, const CellModule& b)
{
    return isomorphic(jstar_representative(a), jstar_representative(b));
}

SocTopCheck soc_top_connection(const CellModule& m)
{
    SocTopCheck out;
    FunctorReport over = overline(m);
    FunctorReport under = underline(m);
    const CellMorphism& eps = *over.canonical;   // overline M -> M
    const CellMorphism& eta = *under.canonical;  // M -> underline M

    CellMorphism alpha = *underline(over.output).canonical;  // overline M -> underline(overline M)
    CellMorphism beta = *overline(under.output).canonical;   // overline(underline M) -> underline M
    CellMorphism phi_src = overline(eta);                     // overline M -> overline(underline M)
    CellMorphism phi_tgt = underline(eps);                    // underline(overline M) -> underline M

    if (!(compose(beta, phi_src) == compose(phi_tgt, alpha))) {
        out.detail = "comparison square does not commute";
        return out;
    }
    Cokernel ca = cokernel(alpha);
    Cokernel cb = cokernel(beta);
    out.r1soc_top = induced_on_cokernels(ca, cb, phi_tgt).is_isomorphism();
    Kernel ka = kernel(alpha);
    Kernel kb = kernel(beta);
    out.l1top_soc = induced_on_kernels(ka, kb, phi_src).is_isomorphism();
    if (!out.r1soc_top)
        out.detail += "R1soc(overline M) -> top(underline M) is not an isomorphism. ";
    if (!out.l1top_soc)
        out.detail += "soc(overline M) -> L1top(underline M) is not an isomorphism.";
    return out;
}

std::optional<std::string> exactness_defect(const CellModule& m)
{
    const auto soc = scott_socle(m).output;
    const auto r1 = r1_socle(m).output;
    const auto top = scott_top(m).output;
    const auto l1 = l1_top(m).output;
    const auto over = overline(m).output;
    const auto under = underline(m).output;
    const auto& k = m.complex();
    for (std::size_t c = 0; c < k.cell_count(); ++c) {
        const long s1 = static_cast<long>(soc.dim(c)) - static_cast<long>(m.dim(c))
            + static_cast<long>(under.dim(c)) - static_cast<long>(r1.dim(c));
        const long s2 = static_cast<long>(l1.dim(c)) - static_cast<long>(over.dim(c))
            + static_cast<long>(m.dim(c)) - static_cast<long>(top.dim(c));
        if (s1 != 0 || s2 != 0)
            return "alternating sums " + std::to_string(s1) + ", " + std::to_string(s2) + " at "
                + to_string(k.representative(c));
    }
    return std::nullopt;
}

} // namespace scottpersist
