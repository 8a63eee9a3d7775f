// rational.hpp - exact rational arithmetic for distance invariants and bounds.
#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace planardist {

// Always kept in lowest terms with a positive denominator.
using Rational = boost::rational<std::int64_t>;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    return Rational(num, den);
}

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

// Display only; never used for comparisons.
double to_double(const Rational& r);

// Parses "p/q" or "p". Throws std::invalid_argument on malformed text.
Rational parse_rational(const std::string& text);

std::int64_t floor_div(std::int64_t num, std::int64_t den);

}  // namespace planardist
