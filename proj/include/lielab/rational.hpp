#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <string>
#include <string_view>

namespace lielab {

// Exact rational scalar. Expression templates are off so the type composes
// with Eigen's own expression machinery.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline bool is_zero(const Rational& x) { return x.is_zero(); }

// "p/q" with q > 1, or "p" for integers.
std::string to_string(const Rational& x);

// Accepts "p", "-p", "p/q"; throws ParseError on anything else or q == 0.
Rational parse_rational(std::string_view text);

}  // namespace lielab
