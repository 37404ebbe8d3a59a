#include "phc/rational.hpp"

namespace phc {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Integer num(s);
            return Rational(num);
        }
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (sgn(den) == 0) throw ParseError("zero denominator in '" + s + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal '" + s + "'");
    }
}

std::string rat_to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string gauss_to_string(const GaussRational& g) {
    if (is_zero(g.im)) return rat_to_string(g.re);
    std::string im = rat_to_string(g.im) + "*i";
    if (is_zero(g.re)) return im;
    if (sgn(g.im) >= 0) return rat_to_string(g.re) + "+" + im;
    return rat_to_string(g.re) + im;
}

}  // namespace phc
