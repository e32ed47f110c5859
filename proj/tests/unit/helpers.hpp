#pragma once

#include "scottpersist/cellmod.hpp"
#include "scottpersist/errors.hpp"
#include "scottpersist/region.hpp"

#include <string>
#include <vector>

namespace sp = scottpersist;

inline sp::Rational Q(const char* s)
{
    return sp::parse_rational(s);
}

inline sp::StaircaseRegion up(sp::Flavor f, std::vector<sp::Point> g)
{
    const std::size_t n = g.empty() ? 2 : g.front().dim();
    return sp::StaircaseRegion::up(n, f, std::move(g));
}

inline sp::StaircaseRegion down(sp::Flavor f, std::vector<sp::Point> g)
{
    const std::size_t n = g.empty() ? 2 : g.front().dim();
    return sp::StaircaseRegion::down(n, f, std::move(g));
}

constexpr auto closed = sp::Flavor::closed;
constexpr auto open = sp::Flavor::open;
