#pragma once

#include <map>
#include <vector>

#include "phc/rational.hpp"

namespace phc {

// Multivariate polynomial with rational coefficients, sparse in monomials.
class Poly {
public:
    Poly() : nvars_(0) {}
    explicit Poly(std::size_t nvars) : nvars_(nvars) {}

    static Poly constant(std::size_t nvars, Rational c) {
        Poly p(nvars);
        if (!is_zero(c)) p.terms_[std::vector<unsigned>(nvars, 0)] = std::move(c);
        return p;
    }
    static Poly variable(std::size_t nvars, std::size_t i) {
        Poly p(nvars);
        std::vector<unsigned> exp(nvars, 0);
        exp[i] = 1;
        p.terms_[std::move(exp)] = Rational(1);
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    bool is_zero_poly() const { return terms_.empty(); }
    const std::map<std::vector<unsigned>, Rational>& terms() const { return terms_; }

    void add_term(const std::vector<unsigned>& exp, const Rational& c) {
        if (is_zero(c)) return;
        auto it = terms_.find(exp);
        if (it == terms_.end()) {
            terms_[exp] = c;
        } else {
            it->second += c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    Poly operator+(const Poly& o) const {
        Poly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    Poly operator-(const Poly& o) const {
        Poly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }
    Poly operator*(const Poly& o) const {
        Poly r(nvars_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) {
                std::vector<unsigned> e(nvars_);
                for (std::size_t i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
                r.add_term(e, c1 * c2);
            }
        return r;
    }
    Poly operator*(const Rational& c) const {
        Poly r(nvars_);
        for (const auto& [e, v] : terms_) r.add_term(e, v * c);
        return r;
    }
    Poly operator-() const { return *this * Rational(-1); }

    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly derivative(std::size_t var) const;
    Rational eval(const std::vector<Rational>& point) const;
    unsigned degree() const;

private:
    std::size_t nvars_;
    std::map<std::vector<unsigned>, Rational> terms_;
};

}  // namespace phc
