#include "ode/complex_rational.hpp"
#include "ode/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace ode {

namespace {

struct Cursor {
    std::string_view s;
    std::size_t i = 0;

    bool done() const { return i >= s.size(); }
    char peek() const { return done() ? '\0' : s[i]; }
    bool eat(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
};

Integer parse_integer(Cursor& c) {
    std::string digits;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek())))
        digits += c.s[c.i++];
    if (digits.empty())
        throw std::invalid_argument("expected digits in '" + std::string(c.s) + "'");
    return Integer(digits);
}

Rational parse_rational_body(Cursor& c) {
    bool neg = false;
    if (c.eat('-'))
        neg = true;
    else
        c.eat('+');
    Integer num = parse_integer(c);
    Integer den = 1;
    if (c.eat('/'))
        den = parse_integer(c);
    if (neg)
        num = -num;
    return Rational(num, den);
}

} // namespace

Rational Rational::parse(std::string_view text) {
    Cursor c{text};
    Rational r = parse_rational_body(c);
    if (!c.done())
        throw std::invalid_argument("trailing characters in rational '" + std::string(text) + "'");
    return r;
}

std::string ComplexRational::str() const {
    if (is_zero())
        return "0";
    auto imag_str = [](const Rational& b) -> std::string {
        if (b == Rational(1))
            return "i";
        if (b == Rational(-1))
            return "-i";
        return b.str() + "i";
    };
    if (im.is_zero())
        return re.str();
    if (re.is_zero())
        return imag_str(im);
    std::string s = re.str();
    if (im.sign() > 0)
        s += "+" + imag_str(im);
    else
        s += "-" + imag_str(-im);
    return s;
}

ComplexRational ComplexRational::parse(std::string_view text) {
    Cursor c{text};
    auto parse_part = [&c]() -> ComplexRational {
        bool neg = false;
        if (c.eat('-'))
            neg = true;
        else
            c.eat('+');
        Rational mag;
        bool imag;
        if (c.eat('i')) { // bare "i"
            mag = Rational(1);
            imag = true;
        } else {
            Integer num = parse_integer(c);
            Integer den = 1;
            if (c.eat('/'))
                den = parse_integer(c);
            mag = Rational(num, den);
            c.eat('*');
            imag = c.eat('i');
        }
        if (neg)
            mag = -mag;
        return imag ? ComplexRational(Rational{}, mag) : ComplexRational(mag);
    };

    ComplexRational z = parse_part();
    if (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
        ComplexRational second = parse_part();
        if (!second.re.is_zero() || !z.im.is_zero())
            throw std::invalid_argument("malformed complex '" + std::string(text) + "'");
        z = z + second;
    }
    if (!c.done())
        throw std::invalid_argument("trailing characters in complex '" + std::string(text) + "'");
    return z;
}

} // namespace ode
