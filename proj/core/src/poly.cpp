#include "phc/poly.hpp"

#include <stdexcept>

namespace phc {

Poly Poly::derivative(std::size_t var) const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        std::vector<unsigned> de = e;
        --de[var];
        r.add_term(de, c * Rational(static_cast<long>(e[var])));
    }
    return r;
}

Rational Poly::eval(const std::vector<Rational>& point) const {
    if (point.size() != nvars_) throw std::invalid_argument("Poly::eval: point size");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
        acc += term;
    }
    return acc;
}

unsigned Poly::degree() const {
    unsigned deg = 0;
    for (const auto& [e, c] : terms_) {
        unsigned d = 0;
        for (auto x : e) d += x;
        if (d > deg) deg = d;
    }
    return deg;
}

}  // namespace phc
