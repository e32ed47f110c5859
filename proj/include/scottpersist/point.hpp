#pragma once

#include "scottpersist/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace scottpersist {

/// A point of R^n with exact rational coordinates. Finite-poset elements are
/// encoded as one-coordinate points holding the element index.
class Point {
public:
    Point() = default;
    explicit Point(std::vector<Rational> coords)
        : coords_(std::move(coords))
    {
    }
    Point(std::initializer_list<Rational> coords)
        : coords_(coords)
    {
    }

    std::size_t dim() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Rational>& coords() const { return coords_; }
    auto begin() const { return coords_.begin(); }
    auto end() const { return coords_.end(); }

    /// this + s * v
    Point translated(const Point& v, const Rational& s) const;

    friend bool operator==(const Point& a, const Point& b) { return a.coords_ == b.coords_; }
    /// Lexicographic; only used for canonical ordering.
    friend bool operator<(const Point& a, const Point& b) { return a.coords_ < b.coords_; }

private:
    std::vector<Rational> coords_;
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point constant_point(std::size_t n, const Rational& value);

/// "(a, b, c)"
std::string to_string(const Point& p);

} // namespace scottpersist
