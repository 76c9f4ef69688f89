#include "ptawit/rational.hpp"

#include <cctype>
#include <sstream>

namespace ptawit {

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

std::optional<Rational> parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        if (!is_integer_token(num) || !is_integer_token(den)) return std::nullopt;
        Integer d(den);
        if (d == 0) return std::nullopt;
        return Rational(Integer(num), d);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string whole = text.substr(0, dot);
        std::string frac = text.substr(dot + 1);
        if (whole.empty() || whole == "-" || whole == "+") whole += "0";
        if (!is_integer_token(whole) || frac.empty()) return std::nullopt;
        for (char c : frac)
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        Integer scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Rational value{Integer(whole)};
        Rational frac_part(Integer(frac), scale);
        bool negative = !whole.empty() && whole[0] == '-';
        if (negative) return Rational(value - frac_part);
        return Rational(value + frac_part);
    }
    if (!is_integer_token(text)) return std::nullopt;
    return Rational(Integer(text));
}

std::string to_fraction_string(const Rational& r) {
    std::ostringstream out;
    out << numerator(r) << "/" << denominator(r);
    return out.str();
}

std::string to_plain_string(const Rational& r) {
    std::ostringstream out;
    if (denominator(r) == 1)
        out << numerator(r);
    else
        out << numerator(r) << "/" << denominator(r);
    return out.str();
}

std::string to_decimal_string(const Rational& r) {
    Integer num = numerator(r);
    Integer den = denominator(r);
    bool negative = num < 0;
    if (negative) num = -num;

    // The expansion terminates iff den = 2^a * 5^b.
    Integer d = den;
    int twos = 0, fives = 0;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    bool terminates = (d == 1);

    int digits;
    if (terminates) {
        digits = std::max(twos, fives);
    } else {
        digits = 6;
    }

    Integer scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Integer scaled = num * scale;
    Integer q = scaled / den;
    if (!terminates) {
        // round half up
        Integer rem = scaled % den;
        if (2 * rem >= den) q += 1;
    }
    Integer whole = q / scale;
    Integer frac = q % scale;

    std::ostringstream out;
    if (!terminates) out << "~";
    if (negative) out << "-";
    out << whole;
    if (digits > 0) {
        std::string f = frac.str();
        while (static_cast<int>(f.size()) < digits) f.insert(f.begin(), '0');
        // trim trailing zeros of a terminating expansion
        if (terminates) {
            while (!f.empty() && f.back() == '0') f.pop_back();
        }
        if (!f.empty()) out << "." << f;
    }
    return out.str();
}

} // namespace ptawit
