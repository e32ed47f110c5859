#include "scottpersist/cellmod.hpp"

#include "scottpersist/errors.hpp"

#include <algorithm>
#include <set>

namespace scottpersist {

// ---------------------------------------------------------------- complex

CellComplex::CellComplex(std::vector<std::vector<Rational>> breakpoints)
    : bps_(std::move(breakpoints))
{
    stride_.resize(bps_.size());
    count_ = 1;
    for (std::size_t a = 0; a < bps_.size(); ++a) {
        auto& b = bps_[a];
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        stride_[a] = count_;
        count_ *= 2 * b.size() + 1;
    }
}

std::size_t CellComplex::linear(const CellIndex& idx) const
{
    if (idx.size() != dim())
        throw DimensionError("cell index has the wrong length");
    std::size_t out = 0;
    for (std::size_t a = 0; a < dim(); ++a) {
        if (idx[a] >= strata(a))
            throw DomainError("stratum index out of range");
        out += idx[a] * stride_[a];
    }
    return out;
}

CellIndex CellComplex::multi(std::size_t cell) const
{
    CellIndex idx(dim());
    for (std::size_t a = 0; a < dim(); ++a)
        idx[a] = stratum(cell, a);
    return idx;
}

std::size_t CellComplex::stratum_of(std::size_t axis, const Rational& x) const
{
    const auto& b = bps_[axis];
    const std::size_t j = static_cast<std::size_t>(std::lower_bound(b.begin(), b.end(), x) - b.begin());
    if (j < b.size() && b[j] == x)
        return 2 * j + 1;
    return 2 * j;
}

std::size_t CellComplex::locate(const Point& p) const
{
    if (p.dim() != dim())
        throw DimensionError("point " + to_string(p) + " in a complex of dimension " + std::to_string(dim()));
    std::size_t out = 0;
    for (std::size_t a = 0; a < dim(); ++a)
        out += stratum_of(a, p[a]) * stride_[a];
    return out;
}

Rational CellComplex::representative(std::size_t axis, std::size_t s) const
{
    const auto& b = bps_[axis];
    if (s % 2 == 1)
        return b[s / 2];
    const std::size_t j = s / 2;
    if (b.empty())
        return 0;
    if (j == 0)
        return b.front() - 1;
    if (j == b.size())
        return b.back() + 1;
    return (b[j - 1] + b[j]) / 2;
}

Point CellComplex::representative(std::size_t cell) const
{
    std::vector<Rational> c(dim());
    for (std::size_t a = 0; a < dim(); ++a)
        c[a] = representative(a, stratum(cell, a));
    return Point(std::move(c));
}

std::optional<Rational> CellComplex::stratum_inf(std::size_t axis, std::size_t s) const
{
    const auto& b = bps_[axis];
    if (s % 2 == 1)
        return b[s / 2];
    if (s == 0)
        return std::nullopt;
    return b[s / 2 - 1];
}

std::optional<Rational> CellComplex::stratum_sup(std::size_t axis, std::size_t s) const
{
    const auto& b = bps_[axis];
    if (s % 2 == 1)
        return b[s / 2];
    if (s / 2 == b.size())
        return std::nullopt;
    return b[s / 2];
}

std::optional<std::size_t> CellComplex::successor(std::size_t cell, std::size_t axis) const
{
    if (stratum(cell, axis) + 1 >= strata(axis))
        return std::nullopt;
    return cell + stride_[axis];
}

std::optional<std::size_t> CellComplex::predecessor(std::size_t cell, std::size_t axis) const
{
    if (stratum(cell, axis) == 0)
        return std::nullopt;
    return cell - stride_[axis];
}

bool CellComplex::cell_le(std::size_t a, std::size_t b) const
{
    for (std::size_t ax = 0; ax < dim(); ++ax)
        if (stratum(a, ax) > stratum(b, ax))
            return false;
    return true;
}

CellComplex CellComplex::merged(const CellComplex& other) const
{
    if (other.dim() != dim())
        throw DimensionError("merging complexes of dimension " + std::to_string(dim()) + " and "
                             + std::to_string(other.dim()));
    auto b = bps_;
    for (std::size_t a = 0; a < dim(); ++a)
        b[a].insert(b[a].end(), other.bps_[a].begin(), other.bps_[a].end());
    return CellComplex(std::move(b));
}

CellComplex CellComplex::translated(const std::vector<Rational>& offset) const
{
    if (offset.size() != dim())
        throw DimensionError("translation of the wrong dimension");
    auto b = bps_;
    for (std::size_t a = 0; a < dim(); ++a)
        for (auto& r : b[a])
            r += offset[a];
    return CellComplex(std::move(b));
}

bool CellComplex::refines(const CellComplex& coarse) const
{
    if (coarse.dim() != dim())
        return false;
    for (std::size_t a = 0; a < dim(); ++a)
        for (const auto& r : coarse.bps_[a])
            if (!std::binary_search(bps_[a].begin(), bps_[a].end(), r))
                return false;
    return true;
}

// ----------------------------------------------------------------- module

CellModule::CellModule(CellComplex complex, std::vector<std::size_t> dims, std::vector<std::vector<Matrix>> steps,
                       Field field)
    : complex_(std::move(complex))
    , dims_(std::move(dims))
    , steps_(std::move(steps))
    , field_(field)
{
    const std::size_t n = complex_.dim();
    const std::size_t cells = complex_.cell_count();
    if (dims_.size() != cells)
        throw DomainError("module has " + std::to_string(dims_.size()) + " dimensions for "
                          + std::to_string(cells) + " cells");
    if (steps_.size() != n)
        throw DomainError("module needs one step list per axis");
    for (std::size_t a = 0; a < n; ++a) {
        if (steps_[a].size() != cells)
            throw DomainError("step list for axis " + std::to_string(a) + " has the wrong length");
        for (std::size_t c = 0; c < cells; ++c) {
            auto s = complex_.successor(c, a);
            if (!s) {
                steps_[a][c] = Matrix(0, dims_[c]);
                continue;
            }
            Matrix& m = steps_[a][c];
            if (m.rows() != dims_[*s] || m.cols() != dims_[c])
                throw DomainError("step at cell " + to_string(complex_.representative(c)) + " along axis "
                                  + std::to_string(a) + " should be " + std::to_string(dims_[*s]) + "x"
                                  + std::to_string(dims_[c]));
            if (!field_.is_rational())
                m = reduce(m, field_);
        }
    }
    if (auto err = validation_error())
        throw DomainError(*err);
}

CellModule CellModule::zero(CellComplex complex, Field field)
{
    const std::size_t cells = complex.cell_count();
    const std::size_t n = complex.dim();
    std::vector<std::vector<Matrix>> steps(n, std::vector<Matrix>(cells, Matrix(0, 0)));
    return CellModule(std::move(complex), std::vector<std::size_t>(cells, 0), std::move(steps), field);
}

std::size_t CellModule::total_dim() const
{
    std::size_t s = 0;
    for (auto d : dims_)
        s += d;
    return s;
}

std::size_t CellModule::max_dim() const
{
    std::size_t m = 0;
    for (auto d : dims_)
        m = std::max(m, d);
    return m;
}

bool CellModule::is_zero() const
{
    return std::all_of(dims_.begin(), dims_.end(), [](std::size_t d) { return d == 0; });
}

std::optional<std::string> CellModule::validation_error() const
{
    const std::size_t n = complex_.dim();
    for (std::size_t c = 0; c < complex_.cell_count(); ++c)
        for (std::size_t i = 0; i < n; ++i) {
            auto si = complex_.successor(c, i);
            if (!si)
                continue;
            for (std::size_t j = i + 1; j < n; ++j) {
                auto sj = complex_.successor(c, j);
                if (!sj)
                    continue;
                const std::size_t corner = *si + complex_.stride(j);
                Matrix lhs = multiply(steps_[j][*si], steps_[i][c], field_);
                Matrix rhs = multiply(steps_[i][*sj], steps_[j][c], field_);
                if (!(lhs == rhs))
                    return "square at cell " + to_string(complex_.representative(c)) + " on axes "
                        + std::to_string(i) + "," + std::to_string(j) + " does not commute (corner "
                        + to_string(complex_.representative(corner)) + ")";
            }
        }
    return std::nullopt;
}

Matrix CellModule::cell_map(std::size_t from, std::size_t to) const
{
    if (!complex_.cell_le(from, to))
        throw DomainError("cell_map: cell " + to_string(complex_.representative(from)) + " is not below "
                          + to_string(complex_.representative(to)));
    Matrix m = Matrix::identity(dims_[from]);
    std::size_t cur = from;
    for (std::size_t a = 0; a < complex_.dim(); ++a) {
        const std::size_t target = complex_.stratum(to, a);
        while (complex_.stratum(cur, a) < target) {
            m = multiply(steps_[a][cur], m, field_);
            cur += complex_.stride(a);
        }
    }
    return m;
}

CellModule CellModule::simplified() const
{
    const std::size_t n = complex_.dim();
    std::vector<std::vector<Rational>> kept(n);
    std::vector<std::vector<std::size_t>> maps(n);
    bool changed = false;
    for (std::size_t a = 0; a < n; ++a) {
        const auto& b = complex_.breakpoints(a);
        std::vector<char> removable(b.size(), 1);
        for (std::size_t c = 0; c < complex_.cell_count(); ++c) {
            const std::size_t s = complex_.stratum(c, a);
            if (s + 1 >= complex_.strata(a))
                continue;
            const Matrix& st = steps_[a][c];
            if (st.rows() != st.cols() || !(st == Matrix::identity(st.rows())))
                removable[s / 2] = 0;  // the step from 2j or 2j+1 crosses breakpoint j
        }
        // New strata map to the first old stratum they contain.
        maps[a].push_back(0);
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (removable[j]) {
                changed = true;
                continue;
            }
            kept[a].push_back(b[j]);
            maps[a].push_back(2 * j + 1);
            maps[a].push_back(2 * j + 2);
        }
    }
    if (!changed)
        return *this;
    return pullback(CellComplex(std::move(kept)), maps);
}

Matrix CellModule::eval_map(const Point& p, const Point& q) const
{
    if (p.dim() != ambient_dim() || q.dim() != ambient_dim())
        throw DimensionError("eval_map: points of the wrong dimension");
    for (std::size_t a = 0; a < p.dim(); ++a)
        if (p[a] > q[a])
            throw DomainError("eval_map: " + to_string(p) + " is not below " + to_string(q));
    return cell_map(complex_.locate(p), complex_.locate(q));
}

CellModule CellModule::pullback(const CellComplex& target, const std::vector<std::vector<std::size_t>>& maps) const
{
    const std::size_t n = complex_.dim();
    if (target.dim() != n || maps.size() != n)
        throw DimensionError("pullback: dimension mismatch");
    for (std::size_t a = 0; a < n; ++a) {
        if (maps[a].size() != target.strata(a))
            throw DomainError("pullback: stratum map for axis " + std::to_string(a) + " has the wrong length");
        for (std::size_t s = 0; s < maps[a].size(); ++s) {
            if (maps[a][s] >= complex_.strata(a))
                throw DomainError("pullback: stratum map leaves the source complex");
            if (s > 0 && maps[a][s] < maps[a][s - 1])
                throw DomainError("pullback: stratum map is not monotone");
        }
    }
    const std::size_t cells = target.cell_count();
    std::vector<std::size_t> image(cells);
    for (std::size_t c = 0; c < cells; ++c) {
        std::size_t src = 0;
        for (std::size_t a = 0; a < n; ++a)
            src += maps[a][target.stratum(c, a)] * complex_.stride(a);
        image[c] = src;
    }
    std::vector<std::size_t> dims(cells);
    for (std::size_t c = 0; c < cells; ++c)
        dims[c] = dims_[image[c]];
    std::vector<std::vector<Matrix>> steps(n, std::vector<Matrix>(cells));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < cells; ++c)
            if (auto s = target.successor(c, a))
                steps[a][c] = cell_map(image[c], image[*s]);
    return CellModule(target, std::move(dims), std::move(steps), field_);
}

CellModule CellModule::restrict_to(const CellComplex& target, const std::vector<Rational>& offset) const
{
    const std::size_t n = complex_.dim();
    if (target.dim() != n)
        throw DimensionError("restrict_to: dimension mismatch");
    std::vector<Rational> off = offset.empty() ? std::vector<Rational>(n) : offset;
    if (off.size() != n)
        throw DimensionError("restrict_to: offset of the wrong dimension");
    std::vector<Rational> neg(n);
    for (std::size_t a = 0; a < n; ++a)
        neg[a] = -off[a];
    if (!target.refines(complex_.translated(neg)))
        throw DomainError("restrict_to: target complex does not refine the translated source");
    std::vector<std::vector<std::size_t>> maps(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t s = 0; s < target.strata(a); ++s)
            maps[a].push_back(complex_.stratum_of(a, target.representative(a, s) + off[a]));
    return pullback(target, maps);
}

CellModule CellModule::shift(const Point& v, const Rational& eps) const
{
    if (v.dim() != ambient_dim())
        throw DimensionError("shift: direction of the wrong dimension");
    std::vector<Rational> off(v.dim());
    for (std::size_t a = 0; a < v.dim(); ++a)
        off[a] = -eps * v[a];
    return shift_onto(complex_.translated(off), v, eps);
}

CellModule CellModule::shift_onto(const CellComplex& target, const Point& v, const Rational& eps) const
{
    if (v.dim() != ambient_dim())
        throw DimensionError("shift: direction of the wrong dimension");
    if (eps < 0)
        throw DomainError("shift: negative epsilon");
    std::vector<Rational> off(v.dim());
    for (std::size_t a = 0; a < v.dim(); ++a) {
        if (v[a] < 0)
            throw DomainError("shift: direction " + to_string(v) + " is not >= 0");
        off[a] = eps * v[a];
    }
    return restrict_to(target, off);
}

bool operator==(const CellModule& a, const CellModule& b)
{
    return a.field_ == b.field_ && a.complex_ == b.complex_ && a.dims_ == b.dims_ && a.steps_ == b.steps_;
}

CellModule direct_sum(const CellModule& a, const CellModule& b)
{
    if (!(a.field() == b.field()))
        throw DomainError("direct_sum: modules over different fields");
    auto [x, y] = align(a, b);
    const auto& k = x.complex();
    const std::size_t cells = k.cell_count();
    std::vector<std::size_t> dims(cells);
    for (std::size_t c = 0; c < cells; ++c)
        dims[c] = x.dim(c) + y.dim(c);
    std::vector<std::vector<Matrix>> steps(k.dim(), std::vector<Matrix>(cells));
    for (std::size_t ax = 0; ax < k.dim(); ++ax)
        for (std::size_t c = 0; c < cells; ++c)
            if (k.successor(c, ax))
                steps[ax][c] = block_diagonal(x.step(ax, c), y.step(ax, c));
    return CellModule(k, std::move(dims), std::move(steps), x.field());
}

std::pair<CellModule, CellModule> align(const CellModule& a, const CellModule& b)
{
    if (a.complex() == b.complex())
        return {a, b};
    CellComplex k = a.complex().merged(b.complex());
    return {a.refine(k), b.refine(k)};
}

// --------------------------------------------------------------- morphism

CellMorphism::CellMorphism(CellModule source, CellModule target, std::vector<Matrix> maps)
    : source_(std::move(source))
    , target_(std::move(target))
    , maps_(std::move(maps))
{
    if (!(source_.complex() == target_.complex()))
        throw DomainError("morphism between modules on different complexes");
    if (maps_.size() != source_.complex().cell_count())
        throw DomainError("morphism needs one matrix per cell");
    for (std::size_t c = 0; c < maps_.size(); ++c) {
        if (maps_[c].rows() != target_.dim(c) || maps_[c].cols() != source_.dim(c))
            throw DomainError("morphism matrix at " + to_string(source_.complex().representative(c)) + " is "
                              + std::to_string(maps_[c].rows()) + "x" + std::to_string(maps_[c].cols())
                              + ", expected " + std::to_string(target_.dim(c)) + "x"
                              + std::to_string(source_.dim(c)));
        if (!source_.field().is_rational())
            maps_[c] = reduce(maps_[c], source_.field());
    }
}

CellMorphism CellMorphism::identity(const CellModule& m)
{
    std::vector<Matrix> maps;
    for (auto d : m.dims())
        maps.push_back(Matrix::identity(d));
    return CellMorphism(m, m, std::move(maps));
}

CellMorphism CellMorphism::zero(const CellModule& source, const CellModule& target)
{
    std::vector<Matrix> maps;
    for (std::size_t c = 0; c < source.complex().cell_count(); ++c)
        maps.emplace_back(target.dim(c), source.dim(c));
    return CellMorphism(source, target, std::move(maps));
}

std::optional<std::string> CellMorphism::naturality_error() const
{
    const auto& k = complex();
    const Field& f = source_.field();
    for (std::size_t c = 0; c < k.cell_count(); ++c)
        for (std::size_t a = 0; a < k.dim(); ++a) {
            auto s = k.successor(c, a);
            if (!s)
                continue;
            if (!(multiply(target_.step(a, c), maps_[c], f) == multiply(maps_[*s], source_.step(a, c), f)))
                return "naturality fails at " + to_string(k.representative(c)) + " along axis " + std::to_string(a);
        }
    return std::nullopt;
}

bool CellMorphism::is_isomorphism() const
{
    for (std::size_t c = 0; c < maps_.size(); ++c)
        if (maps_[c].rows() != maps_[c].cols() || rank(maps_[c], source_.field()) != maps_[c].rows())
            return false;
    return is_natural();
}

bool CellMorphism::is_zero() const
{
    return std::all_of(maps_.begin(), maps_.end(), [](const Matrix& m) { return m.is_zero(); });
}

CellMorphism CellMorphism::refine(const CellComplex& finer) const
{
    if (!finer.refines(complex()))
        throw DomainError("morphism refine: complex is not finer");
    std::vector<Matrix> maps;
    for (std::size_t c = 0; c < finer.cell_count(); ++c)
        maps.push_back(maps_[complex().locate(finer.representative(c))]);
    return CellMorphism(source_.refine(finer), target_.refine(finer), std::move(maps));
}

CellMorphism compose(const CellMorphism& g, const CellMorphism& f)
{
    if (!(f.target() == g.source()))
        throw DomainError("compose: target of the first morphism is not the source of the second");
    std::vector<Matrix> maps;
    for (std::size_t c = 0; c < f.maps().size(); ++c)
        maps.push_back(multiply(g.map(c), f.map(c), f.source().field()));
    return CellMorphism(f.source(), g.target(), std::move(maps));
}

// ----------------------------------------------------------- subquotients

namespace {

// Module on the same complex with the given per-cell bases (columns inside
// the ambient stalks); steps solve basis_succ X = ambient_step basis_c.
CellModule submodule(const CellModule& ambient, const std::vector<Matrix>& basis)
{
    const auto& k = ambient.complex();
    const Field& f = ambient.field();
    std::vector<std::size_t> dims;
    for (const auto& b : basis)
        dims.push_back(b.cols());
    std::vector<std::vector<Matrix>> steps(k.dim(), std::vector<Matrix>(k.cell_count()));
    for (std::size_t a = 0; a < k.dim(); ++a)
        for (std::size_t c = 0; c < k.cell_count(); ++c) {
            auto s = k.successor(c, a);
            if (!s)
                continue;
            auto x = solve(basis[*s], multiply(ambient.step(a, c), basis[c], f), f);
            if (!x)
                throw InternalError("subspace is not closed under the step at "
                                    + to_string(k.representative(c)) + " along axis " + std::to_string(a));
            steps[a][c] = std::move(*x);
        }
    try {
        return CellModule(k, std::move(dims), std::move(steps), f);
    } catch (const DomainError& e) {
        throw InternalError(std::string("submodule failed validation: ") + e.what());
    }
}

} // namespace

Kernel kernel(const CellMorphism& f)
{
    const Field& field = f.source().field();
    std::vector<Matrix> basis;
    for (const auto& m : f.maps())
        basis.push_back(kernel_basis(m, field));
    CellModule k = submodule(f.source(), basis);
    return {k, CellMorphism(k, f.source(), std::move(basis))};
}

Image image(const CellMorphism& f)
{
    const Field& field = f.source().field();
    std::vector<Matrix> basis;
    for (const auto& m : f.maps())
        basis.push_back(image_basis(m, field));
    CellModule im = submodule(f.target(), basis);
    return {im, CellMorphism(im, f.target(), std::move(basis))};
}

Cokernel cokernel(const CellMorphism& f)
{
    const auto& tgt = f.target();
    const auto& k = tgt.complex();
    const Field& field = tgt.field();
    std::vector<Matrix> q, s;
    std::vector<std::size_t> dims;
    for (std::size_t c = 0; c < k.cell_count(); ++c) {
        q.push_back(quotient_map(tgt.dim(c), image_basis(f.map(c), field), field));
        s.push_back(right_inverse(q.back(), field));
        dims.push_back(q.back().rows());
    }
    std::vector<std::vector<Matrix>> steps(k.dim(), std::vector<Matrix>(k.cell_count()));
    for (std::size_t a = 0; a < k.dim(); ++a)
        for (std::size_t c = 0; c < k.cell_count(); ++c)
            if (auto succ = k.successor(c, a))
                steps[a][c] = multiply(q[*succ], multiply(tgt.step(a, c), s[c], field), field);
    CellModule coker = [&] {
        try {
            return CellModule(k, dims, std::move(steps), field);
        } catch (const DomainError& e) {
            throw InternalError(std::string("cokernel failed validation: ") + e.what());
        }
    }();
    CellMorphism proj(tgt, coker, q);
    if (auto err = proj.naturality_error())
        throw InternalError("cokernel projection: " + *err);
    return {coker, std::move(proj), std::move(s)};
}

CellMorphism induced_on_kernels(const Kernel& ka, const Kernel& kb, const CellMorphism& phi_src)
{
    const Field& f = phi_src.source().field();
    std::vector<Matrix> maps;
    for (std::size_t c = 0; c < phi_src.maps().size(); ++c) {
        auto x = solve(kb.inclusion.map(c), multiply(phi_src.map(c), ka.inclusion.map(c), f), f);
        if (!x)
            throw DomainError("induced_on_kernels: the square does not commute at "
                              + to_string(phi_src.complex().representative(c)));
        maps.push_back(std::move(*x));
    }
    return CellMorphism(ka.module, kb.module, std::move(maps));
}

CellMorphism induced_on_cokernels(const Cokernel& ca, const Cokernel& cb, const CellMorphism& phi_tgt)
{
    const Field& f = phi_tgt.source().field();
    std::vector<Matrix> maps;
    for (std::size_t c = 0; c < phi_tgt.maps().size(); ++c)
        maps.push_back(multiply(cb.projection.map(c), multiply(phi_tgt.map(c), ca.sections[c], f), f));
    return CellMorphism(ca.module, cb.module, std::move(maps));
}

// -------------------------------------------------------------- indicator

namespace {

CellComplex complex_from_points(std::size_t n, const std::vector<Point>& pts)
{
    std::vector<std::vector<Rational>> b(n);
    for (const auto& p : pts)
        for (std::size_t a = 0; a < n; ++a)
            b[a].push_back(p[a]);
    return CellComplex(std::move(b));
}

template <class Region>
CellModule indicator_impl(const Region& r, const CellComplex& k, Field field)
{
    const std::size_t cells = k.cell_count();
    std::vector<char> in(cells);
    std::vector<std::size_t> dims(cells);
    for (std::size_t c = 0; c < cells; ++c) {
        in[c] = r.contains(k.representative(c)) ? 1 : 0;
        dims[c] = in[c];
    }
    std::vector<std::vector<Matrix>> steps(k.dim(), std::vector<Matrix>(cells));
    for (std::size_t a = 0; a < k.dim(); ++a)
        for (std::size_t c = 0; c < cells; ++c)
            if (auto s = k.successor(c, a))
                steps[a][c] = in[c] && in[*s] ? Matrix::identity(1) : Matrix(dims[*s], dims[c]);
    return CellModule(k, std::move(dims), std::move(steps), field);
}

void require_standard(const Poset& p, const char* what)
{
    if (!p.is_standard())
        throw DomainError(std::string(what) + " needs R^n with the standard order, got " + p.describe());
}

} // namespace

CellComplex complex_for(const StaircaseRegion& r)
{
    return complex_from_points(r.dim(), r.gens());
}

CellComplex complex_for(const ConvexRegion& r)
{
    return complex_for(r.outer()).merged(complex_for(r.inner()));
}

CellModule indicator(const StaircaseRegion& r, Field field)
{
    require_standard(r.poset(), "indicator");
    return indicator_impl(r, complex_for(r), field);
}

CellModule indicator(const ConvexRegion& r, Field field)
{
    require_standard(r.outer().poset(), "indicator");
    return indicator_impl(r, complex_for(r), field);
}

// ---------------------------------------------------------- grid encoding

std::size_t GridModule::vertex_count() const
{
    std::size_t c = 1;
    for (std::size_t a = 0; a < lo.size(); ++a)
        c *= static_cast<std::size_t>(hi[a] - lo[a] + 1);
    return c;
}

CellModule from_grid_encoding(const GridModule& grid, Field field)
{
    const std::size_t n = grid.lo.size();
    if (grid.hi.size() != n || grid.steps.size() != n)
        throw DimensionError("grid module: box and step lists disagree in dimension");
    std::vector<std::size_t> side(n), gstride(n);
    std::size_t count = 1;
    for (std::size_t a = 0; a < n; ++a) {
        if (grid.hi[a] < grid.lo[a])
            throw DomainError("grid module: empty box along axis " + std::to_string(a));
        side[a] = static_cast<std::size_t>(grid.hi[a] - grid.lo[a] + 1);
        gstride[a] = count;
        count *= side[a];
    }
    if (grid.dims.size() != count)
        throw DomainError("grid module: expected " + std::to_string(count) + " vertex dimensions");
    for (std::size_t a = 0; a < n; ++a) {
        if (grid.steps[a].size() != count)
            throw DomainError("grid module: step list for axis " + std::to_string(a) + " has the wrong length");
        for (std::size_t v = 0; v < count; ++v) {
            if ((v / gstride[a]) % side[a] + 1 == side[a])
                continue;
            const Matrix& m = grid.steps[a][v];
            if (m.rows() != grid.dims[v + gstride[a]] || m.cols() != grid.dims[v])
                throw DomainError("grid module: step of the wrong shape along axis " + std::to_string(a));
        }
    }

    // The grid becomes a cell module on breakpoints lo..hi whose point cells
    // carry the vertices; open strata are glued to the vertex above them (or
    // the last vertex), which is what ceil followed by clamping does.
    std::vector<std::vector<Rational>> bps(n);
    for (std::size_t a = 0; a < n; ++a)
        for (long z = grid.lo[a]; z <= grid.hi[a]; ++z)
            bps[a].push_back(Rational(z));
    CellComplex k(bps);

    std::vector<std::vector<std::size_t>> to_vertex(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t s = 0; s < k.strata(a); ++s) {
            const std::size_t j = s / 2;
            to_vertex[a].push_back(s % 2 == 1 ? j : std::min(j, side[a] - 1));
        }

    auto vertex_of = [&](std::size_t cell) {
        std::size_t v = 0;
        for (std::size_t a = 0; a < n; ++a)
            v += to_vertex[a][k.stratum(cell, a)] * gstride[a];
        return v;
    };

    std::vector<std::size_t> dims(k.cell_count());
    std::vector<std::vector<Matrix>> steps(n, std::vector<Matrix>(k.cell_count()));
    for (std::size_t c = 0; c < k.cell_count(); ++c) {
        const std::size_t v = vertex_of(c);
        dims[c] = grid.dims[v];
        for (std::size_t a = 0; a < n; ++a) {
            auto s = k.successor(c, a);
            if (!s)
                continue;
            const std::size_t w = vertex_of(*s);
            steps[a][c] = w == v ? Matrix::identity(dims[c]) : grid.steps[a][v];
        }
    }
    try {
        return CellModule(k, std::move(dims), std::move(steps), field);
    } catch (const DomainError& e) {
        throw DomainError(std::string("grid module squares do not commute: ") + e.what());
    }
}

// ----------------------------------------------------- sections/cosections

Rational probe_offset(const CellComplex& k, const std::vector<Point>& extra)
{
    std::optional<Rational> best;
    for (std::size_t a = 0; a < k.dim(); ++a) {
        std::set<Rational> vals(k.breakpoints(a).begin(), k.breakpoints(a).end());
        for (const auto& p : extra)
            vals.insert(p[a]);
        for (auto it = vals.begin(); it != vals.end() && std::next(it) != vals.end(); ++it) {
            Rational gap = *std::next(it) - *it;
            if (!best || gap < *best)
                best = gap;
        }
    }
    return best ? *best / 2 : Rational(1);
}

namespace {

std::vector<Point> probes_for(const CellModule& m, const StaircaseRegion& r)
{
    if (r.flavor() == Flavor::closed)
        return r.gens();
    const Rational delta = probe_offset(m.complex(), r.gens());
    const Point one = constant_point(r.dim(), 1);
    const Rational sign = r.kind() == SetKind::up ? 1 : -1;
    std::vector<Point> out;
    for (const auto& g : r.gens())
        out.push_back(g.translated(one, sign * delta));
    return out;
}

void check_region(const CellModule& m, const StaircaseRegion& r, SetKind kind, const char* what)
{
    require_standard(r.poset(), what);
    if (r.kind() != kind)
        throw DomainError(std::string(what) + ": wrong region kind");
    if (r.dim() != m.ambient_dim())
        throw DimensionError(std::string(what) + ": region and module dimensions differ");
    if (r.empty())
        throw DomainError(std::string(what) + ": empty region");
}

} // namespace

Sections sections(const CellModule& m, const StaircaseRegion& u)
{
    check_region(m, u, SetKind::up, "sections");
    const Field& f = m.field();
    Sections out;
    out.probes = probes_for(m, u);
    const auto& p = out.probes;
    std::vector<std::size_t> col0(p.size() + 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i)
        col0[i + 1] = col0[i] + m.dim_at(p[i]);

    std::vector<Matrix> blocks;
    std::size_t rows = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            pairs.emplace_back(i, j);
            rows += m.dim_at(u.poset().join(p[i], p[j]));
        }
    Matrix big(rows, col0.back());
    std::size_t r0 = 0;
    for (auto [i, j] : pairs) {
        const Point top = u.poset().join(p[i], p[j]);
        Matrix a = m.eval_map(p[i], top);
        Matrix b = scale(m.eval_map(p[j], top), -1, f);
        big.set_block(r0, col0[i], a);
        big.set_block(r0, col0[j], b);
        r0 += a.rows();
    }
    out.basis = kernel_basis(big, f);
    out.dim = out.basis.cols();
    return out;
}

std::size_t cosections(const CellModule& m, const StaircaseRegion& d)
{
    check_region(m, d, SetKind::down, "cosections");
    const Field& f = m.field();
    const auto p = probes_for(m, d);
    std::vector<std::size_t> row0(p.size() + 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i)
        row0[i + 1] = row0[i] + m.dim_at(p[i]);
    std::size_t cols = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            pairs.emplace_back(i, j);
            cols += m.dim_at(d.poset().meet(p[i], p[j]));
        }
    Matrix big(row0.back(), cols);
    std::size_t c0 = 0;
    for (auto [i, j] : pairs) {
        const Point bottom = d.poset().meet(p[i], p[j]);
        Matrix a = m.eval_map(bottom, p[i]);
        Matrix b = scale(m.eval_map(bottom, p[j]), -1, f);
        big.set_block(row0[i], c0, a);
        big.set_block(row0[j], c0, b);
        c0 += a.cols();
    }
    return row0.back() - rank(big, f);
}

} // namespace scottpersist
