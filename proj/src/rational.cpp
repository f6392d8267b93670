#include "drf/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace drf {

std::string format_rational(const Rat& r)
{
    std::ostringstream out;
    out << numerator(r);
    if (denominator(r) != 1)
        out << '/' << denominator(r);
    return out.str();
}

Rat parse_rational(const std::string& text)
{
    auto parse_int = [](const std::string& s) -> Int {
        if (s.empty())
            throw std::invalid_argument("empty integer in rational literal");
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size())
            throw std::invalid_argument("sign without digits in rational literal");
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("bad rational literal: " + s);
        return Int(s);
    };

    auto slash = text.find('/');
    if (slash == std::string::npos)
        return Rat(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("zero denominator: " + text);
    return Rat(num, den);
}

} // namespace drf
