#pragma once

// Order and way-below oracles for the supported continuous posets.

#include "scottpersist/linalg.hpp"
#include "scottpersist/point.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace scottpersist {

enum class PosetKind { standard, cone, orthant, finite, product };

class Poset {
public:
    struct Standard {
        std::size_t n;
    };
    /// Order y - x in {z : A z >= 0}.
    struct Cone {
        std::size_t n;
        Matrix facets;
    };
    /// Non-negative orthant of R^n with the induced order.
    struct Orthant {
        std::size_t n;
    };
    struct Finite {
        std::size_t count;
        std::vector<std::pair<std::size_t, std::size_t>> hasse;
        std::vector<std::vector<char>> reach;  ///< reach[i][j]: i <= j
    };
    struct Product {
        std::vector<Poset> factors;
    };

    static Poset standard(std::size_t n);
    /// Throws DomainError when the facet matrix fails validate_cone.
    static Poset cone(Matrix facets);
    static Poset orthant(std::size_t n);
    /// Hasse pairs (i, j) mean i < j. Throws DomainError on a cycle.
    static Poset finite(std::size_t count, std::vector<std::pair<std::size_t, std::size_t>> hasse);
    static Poset product(std::vector<Poset> factors);

    PosetKind kind() const;
    std::size_t dim() const;
    std::string describe() const;

    const Cone* as_cone() const { return std::get_if<Cone>(&variant_); }
    const Finite* as_finite() const { return std::get_if<Finite>(&variant_); }
    const Product* as_product() const { return std::get_if<Product>(&variant_); }
    bool is_standard() const { return kind() == PosetKind::standard; }

    /// Throws DimensionError / DomainError for points outside the poset.
    void check_point(const Point& x) const;

    bool le(const Point& x, const Point& y) const;
    bool way_below(const Point& x, const Point& y) const;
    bool is_compact(const Point& x) const { return way_below(x, x); }
    /// Some y with x << y << z. Throws DomainError unless x << z.
    Point interpolate(const Point& x, const Point& z) const;
    /// Componentwise max / min; standard and orthant posets only.
    Point join(const Point& x, const Point& y) const;
    Point meet(const Point& x, const Point& y) const;

    friend bool operator==(const Poset& a, const Poset& b);

private:
    using Variant = std::variant<Standard, Cone, Orthant, Finite, Product>;
    explicit Poset(Variant v)
        : variant_(std::move(v))
    {
    }
    Variant variant_;
};

struct ConeReport {
    bool valid = false;
    bool full_rank = false;
    bool interior_nonempty = false;
    std::size_t rank = 0;
    std::string message;
};

/// Accepts A iff rank(A) = n and {x : A x >= 1} is nonempty.
ConeReport validate_cone(const Matrix& facets);

/// Exact Fourier-Motzkin feasibility of {x : A x >= b}.
bool inequalities_feasible(const Matrix& a, const std::vector<Rational>& b);

} // namespace scottpersist
