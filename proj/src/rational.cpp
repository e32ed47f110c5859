#include "scottpersist/rational.hpp"

#include "scottpersist/errors.hpp"

#include <cctype>

namespace scottpersist {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);

    bool negative = false;
    std::string_view body = s;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    Rational result;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("malformed rational '" + std::string(text) + "'");
        mpz_class d(std::string(den), 10);
        if (d == 0)
            throw ParseError("zero denominator in '" + std::string(text) + "'");
        result = Rational(mpz_class(std::string(num), 10), d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto whole = body.substr(0, dot);
        auto frac = body.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))
            || (whole.empty() && frac.empty()))
            throw ParseError("malformed decimal '" + std::string(text) + "'");
        mpz_class scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i)
            scale *= 10;
        mpz_class digits(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
        result = Rational(digits, scale);
    } else {
        if (!all_digits(body))
            throw ParseError("malformed rational '" + std::string(text) + "'");
        result = Rational(mpz_class(std::string(body), 10));
    }
    result.canonicalize();
    if (negative)
        result = -result;
    return result;
}

std::string format_rational(const Rational& value)
{
    Rational v = value;
    v.canonicalize();
    return v.get_str(10);
}

} // namespace scottpersist
