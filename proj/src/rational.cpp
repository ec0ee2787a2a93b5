// rational.cpp
#include "secretary/rational.hpp"

#include <charconv>
#include <cctype>

#include "secretary/errors.hpp"

namespace secretary {

namespace {

Rational pow10(long e) {
    mpz_class z;
    mpz_ui_pow_ui(z.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rational(mpz_class(1), z) : Rational(z);
}

Rational parse_decimal(const std::string& s) {
    std::size_t pos = 0;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) neg = s[pos++] == '-';
    std::string digits;
    long scale = 0;
    bool any = false, dot = false;
    for (; pos < s.size(); ++pos) {
        const char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
            any = true;
            if (dot) --scale;
        } else if (c == '.' && !dot) {
            dot = true;
        } else {
            break;
        }
    }
    if (!any) throw domain_error("not a number: '" + s + "'");
    if (pos < s.size()) {
        if (s[pos] != 'e' && s[pos] != 'E') throw domain_error("not a number: '" + s + "'");
        ++pos;
        long ex = 0;
        const char* first = s.data() + pos;
        if (pos < s.size() && s[pos] == '+') ++first;
        auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), ex);
        if (ec != std::errc() || ptr != s.data() + s.size()) throw domain_error("bad exponent in '" + s + "'");
        scale += ex;
    }
    Rational q(mpz_class(digits, 10));
    q *= pow10(scale);
    q.canonicalize();
    return neg ? Rational(-q) : q;
}

}  // namespace

Rational parse_rational(const std::string& text, bool positive) {
    Rational q;
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        q = parse_decimal(text);
    } else {
        const Rational num = parse_decimal(text.substr(0, slash));
        const Rational den = parse_decimal(text.substr(slash + 1));
        if (den == 0) throw domain_error("zero denominator in '" + text + "'");
        q = num / den;
    }
    if (positive && q <= 0) throw domain_error("value must be positive: '" + text + "'");
    return q;
}

Rational rational_from_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc()) throw domain_error("cannot convert double to rational");
    return parse_rational(std::string(buf, ptr), false);
}

Rational rational_pow(const Rational& base, int e) {
    if (e < 0) return rational_pow(Rational(1) / base, -e);
    Rational r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace secretary
