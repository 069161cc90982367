#include "homlex/numbers.hpp"

#include <cctype>
#include <cmath>

namespace homlex {

Rational parse_rational(std::string_view text) {
    auto check_digits = [](std::string_view s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    std::string num{text};
    std::string den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = std::string{text.substr(0, slash)};
        den = std::string{text.substr(slash + 1)};
    }
    if (!check_digits(num) || !check_digits(den))
        throw ParseError("not a rational: '" + std::string{text} + "'");
    mpz_class numz(num), denz(den);
    if (denz == 0)
        throw ParseError("zero denominator in '" + std::string{text} + "'");
    Rational r(numz, denz);
    r.canonicalize();
    return r;
}

std::int64_t isqrt(std::int64_t x) {
    if (x < 0) throw InfeasibleError("isqrt of negative value");
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

} // namespace homlex
