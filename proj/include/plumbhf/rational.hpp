#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace plumbhf {

// Expression templates off: values behave like plain value types.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);

// p/q for any non-zero q (the backend wants a positive denominator).
Rational make_rational(const BigInt& p, const BigInt& q);

// Exact integer value of q; throws std::domain_error if q is not integral.
long long to_int(const Rational& q);

}  // namespace plumbhf
