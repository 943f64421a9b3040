#ifndef VOTOPES_POLYNOMIAL_HPP
#define VOTOPES_POLYNOMIAL_HPP

#include <map>
#include <vector>

#include "votopes/arith.hpp"

namespace votopes {

// Sparse multivariate polynomial with exact rational coefficients.
// Exponent vectors are dense (length = variable count); zero coefficients
// are never stored.
class SparsePolynomial {
  public:
    using Exponents = std::vector<unsigned>;

    explicit SparsePolynomial(unsigned vars) : vars_(vars) {}

    static SparsePolynomial constant(unsigned vars, const BigRational& c);
    static SparsePolynomial variable(unsigned vars, unsigned index);

    unsigned vars() const { return vars_; }
    const std::map<Exponents, BigRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& e, const BigRational& c);

    SparsePolynomial operator+(const SparsePolynomial& o) const;
    SparsePolynomial operator-(const SparsePolynomial& o) const;
    SparsePolynomial operator*(const SparsePolynomial& o) const;

    bool operator==(const SparsePolynomial& o) const = default;

    int total_degree() const;  // -1 for the zero polynomial

    // Homogeneous component of maximal total degree. Throws on zero input.
    SparsePolynomial leading_form() const;

    BigRational eval(const std::vector<BigRational>& point) const;

  private:
    unsigned vars_;
    std::map<Exponents, BigRational> terms_;
};

// binom(y + u - 1, u - 1) as a polynomial in the single variable `index`
// of a vars-variable ring: (y+1)(y+2)...(y+u-1) / (u-1)!.
SparsePolynomial binomial_poly(unsigned vars, unsigned index, unsigned u);

}  // namespace votopes

#endif
