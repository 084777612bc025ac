#include "plumbhf/rational.hpp"

#include <stdexcept>

namespace plumbhf {

std::string to_string(const BigInt& z) { return z.str(); }

std::string to_string(const Rational& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt p(s.substr(0, slash));
        BigInt q(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator");
        return make_rational(p, q);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("not a rational: " + s);
    }
}

Rational make_rational(const BigInt& p, const BigInt& q) {
    if (q == 0) throw std::domain_error("zero denominator");
    return q < 0 ? Rational(-p, -q) : Rational(p, q);
}

bool is_integer(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

long long to_int(const Rational& q) {
    if (!is_integer(q)) throw std::domain_error("expected an integer, got " + to_string(q));
    return boost::multiprecision::numerator(q).convert_to<long long>();
}

}  // namespace plumbhf
