#include "votopes/polynomial.hpp"

#include <numeric>
#include <stdexcept>

namespace votopes {

SparsePolynomial SparsePolynomial::constant(unsigned vars, const BigRational& c) {
    SparsePolynomial p(vars);
    p.add_term(Exponents(vars, 0), c);
    return p;
}

SparsePolynomial SparsePolynomial::variable(unsigned vars, unsigned index) {
    if (index >= vars) throw std::out_of_range("SparsePolynomial::variable");
    SparsePolynomial p(vars);
    Exponents e(vars, 0);
    e[index] = 1;
    p.add_term(e, BigRational(1));
    return p;
}

void SparsePolynomial::add_term(const Exponents& e, const BigRational& c) {
    if (e.size() != vars_)
        throw std::invalid_argument("SparsePolynomial: exponent arity mismatch");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& o) const {
    if (vars_ != o.vars_)
        throw std::invalid_argument("SparsePolynomial: variable count mismatch");
    SparsePolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& o) const {
    if (vars_ != o.vars_)
        throw std::invalid_argument("SparsePolynomial: variable count mismatch");
    SparsePolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& o) const {
    if (vars_ != o.vars_)
        throw std::invalid_argument("SparsePolynomial: variable count mismatch");
    SparsePolynomial r(vars_);
    Exponents e(vars_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            for (unsigned i = 0; i < vars_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

int SparsePolynomial::total_degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms_) {
        int d = std::accumulate(e.begin(), e.end(), 0);
        if (d > deg) deg = d;
    }
    return deg;
}

SparsePolynomial SparsePolynomial::leading_form() const {
    if (is_zero())
        throw std::invalid_argument("leading_form: zero polynomial");
    int deg = total_degree();
    SparsePolynomial r(vars_);
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) == deg) r.add_term(e, c);
    return r;
}

BigRational SparsePolynomial::eval(const std::vector<BigRational>& point) const {
    if (point.size() != vars_)
        throw std::invalid_argument("SparsePolynomial::eval arity mismatch");
    BigRational acc(0);
    for (const auto& [e, c] : terms_) {
        BigRational t = c;
        for (unsigned i = 0; i < vars_; ++i)
            for (unsigned j = 0; j < e[i]; ++j) t *= point[i];
        acc += t;
    }
    return acc;
}

SparsePolynomial binomial_poly(unsigned vars, unsigned index, unsigned u) {
    if (u == 0) throw std::invalid_argument("binomial_poly: u must be positive");
    SparsePolynomial p = SparsePolynomial::constant(vars, BigRational(1));
    SparsePolynomial y = SparsePolynomial::variable(vars, index);
    for (unsigned t = 1; t < u; ++t)
        p = p * (y + SparsePolynomial::constant(vars, BigRational(t)));
    if (u > 1) {
        BigRational inv = make_rational(BigInteger(1), factorial(u - 1));
        SparsePolynomial scaled(vars);
        for (const auto& [e, c] : p.terms()) scaled.add_term(e, c * inv);
        return scaled;
    }
    return p;
}

}  // namespace votopes
