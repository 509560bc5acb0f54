#include "skewq/rational.hpp"

#include <cctype>

namespace skewq {

std::string GaussianRational::str() const {
    if (im.is_zero()) return re.str();
    std::string s;
    if (!re.is_zero()) {
        s = re.str();
        if (!(im < Rational(0))) s += "+";
    }
    Rational a = im;
    if (a == Rational(1)) return s + "i";
    if (a == Rational(-1)) return s + "-i";
    return s + a.str() + "*i";
}

namespace {

// rational := integer [ '/' integer ]
Rational parse_rational(const std::string& s, size_t& pos) {
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    if (pos == digits) throw std::invalid_argument("expected number in '" + s + "'");
    long long num = std::stoll(s.substr(start, pos - start));
    long long den = 1;
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t d0 = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos == d0) throw std::invalid_argument("expected denominator in '" + s + "'");
        den = std::stoll(s.substr(d0, pos - d0));
    }
    return Rational(num, den);
}

}  // namespace

GaussianRational parse_gaussian(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace((unsigned char)c)) s += c;
    if (s.empty()) throw std::invalid_argument("empty coefficient");

    size_t pos = 0;
    // Leading bare "i" or signed "i".
    auto is_imag_unit = [&](size_t p) {
        return p < s.size() && s[p] == 'i' && (p + 1 == s.size() || s[p + 1] == '+' || s[p + 1] == '-');
    };

    GaussianRational out;
    // First component.
    int sign = 1;
    size_t save = pos;
    if (s[pos] == '+' || s[pos] == '-') {
        sign = s[pos] == '-' ? -1 : 1;
        ++pos;
    }
    if (is_imag_unit(pos)) {
        out.im = Rational(sign);
        ++pos;
    } else {
        pos = save;
        Rational r = parse_rational(s, pos);
        if (pos < s.size() && s[pos] == '*') {
            if (pos + 1 >= s.size() || s[pos + 1] != 'i')
                throw std::invalid_argument("bad coefficient '" + raw + "'");
            out.im = r;
            pos += 2;
        } else if (pos < s.size() && s[pos] == 'i') {
            out.im = r;
            ++pos;
        } else {
            out.re = r;
        }
    }
    if (pos == s.size()) return out;

    // Optional imaginary tail.
    if (s[pos] != '+' && s[pos] != '-') throw std::invalid_argument("bad coefficient '" + raw + "'");
    if (!out.im.is_zero()) throw std::invalid_argument("bad coefficient '" + raw + "'");
    int isign = s[pos] == '-' ? -1 : 1;
    ++pos;
    if (is_imag_unit(pos)) {
        out.im = Rational(isign);
        ++pos;
    } else {
        Rational r = parse_rational(s, pos);
        if (isign < 0) r = -r;
        if (pos < s.size() && s[pos] == '*') {
            if (pos + 1 >= s.size() || s[pos + 1] != 'i')
                throw std::invalid_argument("bad coefficient '" + raw + "'");
            pos += 2;
        } else if (pos < s.size() && s[pos] == 'i') {
            ++pos;
        } else {
            throw std::invalid_argument("imaginary part needs 'i' in '" + raw + "'");
        }
        out.im = r;
    }
    if (pos != s.size()) throw std::invalid_argument("trailing junk in '" + raw + "'");
    return out;
}

}  // namespace skewq
