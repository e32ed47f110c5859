#pragma once

// Constructible persistence modules over R^n.
//
// Each axis is cut by finitely many rational breakpoints r_1 < ... < r_k into
// 2k+1 strata, numbered from the left: even numbers are the open intervals
// and rays, odd number 2j+1 is the point {r_{j+1}}. A cell is one stratum per
// axis. A CellModule stores a vector space per cell and, per axis, the map to
// the next cell in that direction. Points p <= q have stratum(p_i) <=
// stratum(q_i) on every axis, so M(p <= q) is a product of steps.

#include "scottpersist/linalg.hpp"
#include "scottpersist/point.hpp"
#include "scottpersist/region.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace scottpersist {

using CellIndex = std::vector<std::size_t>;

class CellComplex {
public:
    CellComplex() = default;
    /// Breakpoints are sorted and deduplicated.
    explicit CellComplex(std::vector<std::vector<Rational>> breakpoints);
    static CellComplex trivial(std::size_t n) { return CellComplex(std::vector<std::vector<Rational>>(n)); }

    std::size_t dim() const { return bps_.size(); }
    const std::vector<Rational>& breakpoints(std::size_t axis) const { return bps_[axis]; }
    const std::vector<std::vector<Rational>>& all_breakpoints() const { return bps_; }
    std::size_t strata(std::size_t axis) const { return 2 * bps_[axis].size() + 1; }
    std::size_t cell_count() const { return count_; }
    std::size_t stride(std::size_t axis) const { return stride_[axis]; }

    std::size_t linear(const CellIndex& idx) const;
    CellIndex multi(std::size_t cell) const;
    std::size_t stratum(std::size_t cell, std::size_t axis) const { return cell / stride_[axis] % strata(axis); }

    std::size_t stratum_of(std::size_t axis, const Rational& x) const;
    std::size_t locate(const Point& p) const;

    /// A point inside the stratum: the breakpoint, an interval midpoint, or
    /// one unit beyond the outermost breakpoint (0 on an axis without any).
    Rational representative(std::size_t axis, std::size_t stratum) const;
    Point representative(std::size_t cell) const;
    /// Infimum / supremum of a stratum; nullopt stands for -inf / +inf.
    std::optional<Rational> stratum_inf(std::size_t axis, std::size_t stratum) const;
    std::optional<Rational> stratum_sup(std::size_t axis, std::size_t stratum) const;

    std::optional<std::size_t> successor(std::size_t cell, std::size_t axis) const;
    std::optional<std::size_t> predecessor(std::size_t cell, std::size_t axis) const;
    /// Strata-wise comparison of two cells.
    bool cell_le(std::size_t a, std::size_t b) const;

    /// Union of the breakpoint sets.
    CellComplex merged(const CellComplex& other) const;
    /// Breakpoints moved by +offset[axis].
    CellComplex translated(const std::vector<Rational>& offset) const;
    /// Every breakpoint of coarse is a breakpoint here.
    bool refines(const CellComplex& coarse) const;

    friend bool operator==(const CellComplex& a, const CellComplex& b) { return a.bps_ == b.bps_; }

private:
    std::vector<std::vector<Rational>> bps_;
    std::vector<std::size_t> stride_;
    std::size_t count_ = 1;
};

class CellModule {
public:
    CellModule() = default;
    /// steps[axis][cell] maps cell to its successor along axis; entries for
    /// cells without a successor are ignored. Throws DomainError on bad
    /// shapes or a non-commuting square.
    CellModule(CellComplex complex, std::vector<std::size_t> dims, std::vector<std::vector<Matrix>> steps,
               Field field = default_field());

    static CellModule zero(CellComplex complex, Field field = default_field());

    const CellComplex& complex() const { return complex_; }
    std::size_t ambient_dim() const { return complex_.dim(); }
    const Field& field() const { return field_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t dim(std::size_t cell) const { return dims_[cell]; }
    std::size_t dim_at(const Point& p) const { return dims_[complex_.locate(p)]; }
    std::size_t total_dim() const;
    std::size_t max_dim() const;
    const Matrix& step(std::size_t axis, std::size_t cell) const { return steps_[axis][cell]; }
    bool is_zero() const;

    /// Composite of steps from cell `from` to cell `to`; from <= to strata-wise.
    Matrix cell_map(std::size_t from, std::size_t to) const;
    /// M(p <= q). Throws DomainError unless p <= q.
    Matrix eval_map(const Point& p, const Point& q) const;

    /// Module on `target` whose value at a cell is this module at the cell
    /// maps[axis][stratum]; the maps must be monotone on every axis.
    CellModule pullback(const CellComplex& target, const std::vector<std::vector<std::size_t>>& maps) const;
    /// Value at a target point p is this module at p + offset. The target
    /// must contain every breakpoint minus offset. Empty offset means zero.
    CellModule restrict_to(const CellComplex& target, const std::vector<Rational>& offset = {}) const;
    CellModule refine(const CellComplex& finer) const { return restrict_to(finer); }
    /// The module p -> M(p + eps v), on the complex with breakpoints r - eps v.
    CellModule shift(const Point& v, const Rational& eps) const;
    /// Same, on a given complex that refines the shifted one.
    CellModule shift_onto(const CellComplex& target, const Point& v, const Rational& eps) const;

    /// Same module without the breakpoints across which every step is an
    /// identity matrix.
    CellModule simplified() const;

    /// Description of the first violated invariant, if any.
    std::optional<std::string> validation_error() const;

    friend bool operator==(const CellModule& a, const CellModule& b);

private:
    CellComplex complex_;
    std::vector<std::size_t> dims_;
    std::vector<std::vector<Matrix>> steps_;
    Field field_ = Field::rational();
};

CellModule direct_sum(const CellModule& a, const CellModule& b);
/// Both modules refined to the union of their breakpoints.
std::pair<CellModule, CellModule> align(const CellModule& a, const CellModule& b);

class CellMorphism {
public:
    /// Shapes are checked; naturality is not (see is_natural).
    CellMorphism(CellModule source, CellModule target, std::vector<Matrix> maps);

    static CellMorphism identity(const CellModule& m);
    static CellMorphism zero(const CellModule& source, const CellModule& target);

    const CellModule& source() const { return source_; }
    const CellModule& target() const { return target_; }
    const CellComplex& complex() const { return source_.complex(); }
    const Matrix& map(std::size_t cell) const { return maps_[cell]; }
    const std::vector<Matrix>& maps() const { return maps_; }

    std::optional<std::string> naturality_error() const;
    bool is_natural() const { return !naturality_error(); }
    /// Natural and invertible on every cell.
    bool is_isomorphism() const;
    bool is_zero() const;
    CellMorphism refine(const CellComplex& finer) const;

    friend bool operator==(const CellMorphism&, const CellMorphism&) = default;

private:
    CellModule source_;
    CellModule target_;
    std::vector<Matrix> maps_;
};

/// g after f.
CellMorphism compose(const CellMorphism& g, const CellMorphism& f);

struct Kernel {
    CellModule module;
    CellMorphism inclusion;
};
struct Image {
    CellModule module;
    CellMorphism inclusion;  ///< into the target of the morphism
};
struct Cokernel {
    CellModule module;
    CellMorphism projection;
    std::vector<Matrix> sections;  ///< right inverse of the projection, per cell
};

Kernel kernel(const CellMorphism& f);
Image image(const CellMorphism& f);
Cokernel cokernel(const CellMorphism& f);

/// For a commuting square beta phi_src = phi_tgt alpha, the induced map
/// ker alpha -> ker beta.
CellMorphism induced_on_kernels(const Kernel& ka, const Kernel& kb, const CellMorphism& phi_src);
/// Same square, the induced map coker alpha -> coker beta.
CellMorphism induced_on_cokernels(const Cokernel& ca, const Cokernel& cb, const CellMorphism& phi_tgt);

/// Complex whose breakpoints are the generator coordinates.
CellComplex complex_for(const StaircaseRegion& r);
CellComplex complex_for(const ConvexRegion& r);

/// k[R]: dimension 1 on R, identity steps inside R.
CellModule indicator(const StaircaseRegion& r, Field field = default_field());
CellModule indicator(const ConvexRegion& r, Field field = default_field());

/// A module on the integer box [lo, hi], axis 0 varying fastest.
struct GridModule {
    std::vector<long> lo;
    std::vector<long> hi;
    std::vector<std::size_t> dims;
    std::vector<std::vector<Matrix>> steps;  ///< steps[axis][vertex], to vertex + e_axis

    std::size_t vertex_count() const;
};

/// Pullback along x -> max(lo, min(ceil(x), hi)) per axis. Throws DomainError
/// when the grid squares do not commute.
CellModule from_grid_encoding(const GridModule& grid, Field field = default_field());

struct Sections {
    std::size_t dim = 0;
    Matrix basis;               ///< columns in the sum of the stalks at the probes
    std::vector<Point> probes;  ///< generators, or points just inside open ones
};

/// lim over U of M, as an equalizer over generators and pairwise joins.
Sections sections(const CellModule& m, const StaircaseRegion& u);
/// colim over D of M, as a coequalizer over generators and pairwise meets.
std::size_t cosections(const CellModule& m, const StaircaseRegion& d);

/// Half the smallest positive gap among breakpoints and the given
/// coordinates on any axis; 1 if there is none.
Rational probe_offset(const CellComplex& k, const std::vector<Point>& extra);

} // namespace scottpersist
