#include "scottpersist/point.hpp"

#include "scottpersist/errors.hpp"

namespace scottpersist {

Point Point::translated(const Point& v, const Rational& s) const
{
    if (v.dim() != dim())
        throw DimensionError("translation vector has dimension " + std::to_string(v.dim()) + ", point has "
                             + std::to_string(dim()));
    Point out = *this;
    for (std::size_t i = 0; i < dim(); ++i)
        out.coords_[i] += s * v.coords_[i];
    return out;
}

Point operator+(const Point& a, const Point& b)
{
    return a.translated(b, 1);
}

Point operator-(const Point& a, const Point& b)
{
    return a.translated(b, -1);
}

Point constant_point(std::size_t n, const Rational& value)
{
    return Point(std::vector<Rational>(n, value));
}

std::string to_string(const Point& p)
{
    std::string s = "(";
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (i)
            s += ", ";
        s += format_rational(p[i]);
    }
    return s + ")";
}

} // namespace scottpersist
