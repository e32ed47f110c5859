#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace scottpersist {

using Rational = mpq_class;

/// Parses "p", "p/q" or a finite decimal such as "-1.25". Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers print without a denominator.
std::string format_rational(const Rational& value);

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

} // namespace scottpersist
