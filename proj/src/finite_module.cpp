#include "scottpersist/finite_module.hpp"

#include "scottpersist/errors.hpp"

#include <algorithm>
#include <numeric>

namespace scottpersist {

namespace {

Point element(std::size_t i)
{
    return Point{Rational(static_cast<long>(i))};
}

// Elements ordered so that i < j in the poset puts i first.
std::vector<std::size_t> linear_extension(const Poset::Finite& f)
{
    std::vector<std::size_t> below(f.count, 0);
    for (std::size_t i = 0; i < f.count; ++i)
        for (std::size_t j = 0; j < f.count; ++j)
            below[j] += f.reach[i][j] ? 1 : 0;
    std::vector<std::size_t> order(f.count);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
    return order;
}

} // namespace

FiniteModule::FiniteModule(Poset poset, std::vector<std::size_t> dims, std::vector<Matrix> maps, Field field)
    : poset_(std::move(poset))
    , dims_(std::move(dims))
    , maps_(std::move(maps))
    , field_(field)
{
    const auto* f = poset_.as_finite();
    if (!f)
        throw DomainError("FiniteModule needs a finite poset, got " + poset_.describe());
    if (dims_.size() != f->count)
        throw DomainError("FiniteModule: " + std::to_string(dims_.size()) + " dimensions for "
                          + std::to_string(f->count) + " elements");
    if (maps_.size() != f->hasse.size())
        throw DomainError("FiniteModule: one matrix per Hasse pair expected");
    for (std::size_t k = 0; k < maps_.size(); ++k) {
        auto [i, j] = f->hasse[k];
        if (maps_[k].rows() != dims_[j] || maps_[k].cols() != dims_[i])
            throw DomainError("FiniteModule: map " + std::to_string(i) + " -> " + std::to_string(j) + " has shape "
                              + std::to_string(maps_[k].rows()) + "x" + std::to_string(maps_[k].cols()));
        maps_[k] = reduce(maps_[k], field_);
    }

    // composite_[i][j] = M(i <= j), built along a linear extension; every
    // further incoming Hasse pair is a path that has to agree.
    const std::size_t n = f->count;
    composite_.assign(n, std::vector<std::optional<Matrix>>(n));
    std::vector<std::vector<std::size_t>> incoming(n);
    for (std::size_t k = 0; k < f->hasse.size(); ++k)
        incoming[f->hasse[k].second].push_back(k);
    for (std::size_t j : linear_extension(*f)) {
        composite_[j][j] = Matrix::identity(dims_[j]);
        for (std::size_t k : incoming[j]) {
            const std::size_t mid = f->hasse[k].first;
            for (std::size_t i = 0; i < n; ++i) {
                if (!composite_[i][mid])
                    continue;
                Matrix via = multiply(maps_[k], *composite_[i][mid], field_);
                if (!composite_[i][j])
                    composite_[i][j] = std::move(via);
                else if (!(*composite_[i][j] == via))
                    throw DomainError("FiniteModule: two paths from " + std::to_string(i) + " to " + std::to_string(j)
                                      + " give different maps");
            }
        }
    }
}

const Matrix& FiniteModule::map(std::size_t i, std::size_t j) const
{
    if (i >= size() || j >= size() || !composite_[i][j])
        throw DomainError("FiniteModule::map: " + std::to_string(i) + " is not below " + std::to_string(j));
    return *composite_[i][j];
}

FiniteLine finite_overline(const FiniteModule& m)
{
    const auto& f = m.finite();
    const Field& field = m.field();
    FiniteLine out;
    out.canonical_iso = true;
    for (std::size_t p = 0; p < m.size(); ++p) {
        // Direct sum of M_x over x << p, modulo v - M(x <= y) v for Hasse pairs inside.
        std::vector<std::size_t> members, offset;
        std::size_t total = 0;
        for (std::size_t x = 0; x < m.size(); ++x) {
            offset.push_back(total);
            if (m.poset().way_below(element(x), element(p))) {
                members.push_back(x);
                total += m.dim(x);
            }
        }
        Matrix relations(total, 0);
        for (std::size_t k = 0; k < f.hasse.size(); ++k) {
            auto [x, y] = f.hasse[k];
            if (!m.poset().way_below(element(y), element(p)))
                continue;
            Matrix r(total, m.dim(x));
            r.set_block(offset[x], 0, scale(Matrix::identity(m.dim(x)), -1));
            r.set_block(offset[y], 0, m.hasse_maps()[k]);
            relations = hstack(relations, r);
        }
        Matrix to_p(m.dim(p), total);
        for (std::size_t x : members)
            to_p.set_block(0, offset[x], m.map(x, p));
        const std::size_t dim = total - rank(relations, field);
        const std::size_t r = rank(to_p, field);
        out.dims.push_back(dim);
        out.canonical_rank.push_back(r);
        // The map factors through the colimit: onto and equal dimensions.
        out.canonical_iso = out.canonical_iso && dim == m.dim(p) && r == m.dim(p);
    }
    return out;
}

FiniteLine finite_underline(const FiniteModule& m)
{
    const auto& f = m.finite();
    const Field& field = m.field();
    FiniteLine out;
    out.canonical_iso = true;
    for (std::size_t p = 0; p < m.size(); ++p) {
        // Families (v_x) over x >> p with M(x <= y) v_x = v_y on Hasse pairs inside.
        std::vector<std::size_t> members, offset;
        std::size_t total = 0;
        for (std::size_t x = 0; x < m.size(); ++x) {
            offset.push_back(total);
            if (m.poset().way_below(element(p), element(x))) {
                members.push_back(x);
                total += m.dim(x);
            }
        }
        Matrix constraints(0, total);
        for (std::size_t k = 0; k < f.hasse.size(); ++k) {
            auto [x, y] = f.hasse[k];
            if (!m.poset().way_below(element(p), element(x)))
                continue;
            Matrix c(m.dim(y), total);
            c.set_block(0, offset[x], m.hasse_maps()[k]);
            c.set_block(0, offset[y], scale(Matrix::identity(m.dim(y)), -1));
            constraints = vstack(constraints, c);
        }
        Matrix from_p(total, m.dim(p));
        for (std::size_t x : members)
            from_p.set_block(offset[x], 0, m.map(p, x));
        const std::size_t dim = total - rank(constraints, field);
        const std::size_t r = rank(from_p, field);
        out.dims.push_back(dim);
        out.canonical_rank.push_back(r);
        out.canonical_iso = out.canonical_iso && dim == m.dim(p) && r == m.dim(p);
    }
    return out;
}

bool is_lower_semicontinuous(const FiniteModule& m)
{
    return finite_overline(m).canonical_iso;
}

bool is_upper_semicontinuous(const FiniteModule& m)
{
    return finite_underline(m).canonical_iso;
}

} // namespace scottpersist
