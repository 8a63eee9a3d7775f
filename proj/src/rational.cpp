#include "planardist/rational.hpp"

#include <stdexcept>

namespace planardist {

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

Rational parse_rational(const std::string& text) {
    try {
        std::size_t used = 0;
        auto slash = text.find('/');
        if (slash == std::string::npos) {
            std::int64_t num = std::stoll(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return Rational(num);
        }
        std::string a = text.substr(0, slash);
        std::string b = text.substr(slash + 1);
        std::int64_t num = std::stoll(a, &used);
        if (used != a.size()) throw std::invalid_argument(text);
        std::int64_t den = std::stoll(b, &used);
        if (used != b.size() || den == 0) throw std::invalid_argument(text);
        return Rational(num, den);
    } catch (const std::logic_error&) {
        throw std::invalid_argument("malformed rational: '" + text + "'");
    }
}

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
    std::int64_t q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

}  // namespace planardist
