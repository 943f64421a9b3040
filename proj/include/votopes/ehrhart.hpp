#ifndef VOTOPES_EHRHART_HPP
#define VOTOPES_EHRHART_HPP

#include "votopes/triangulation.hpp"

namespace votopes {

// Ehrhart series as a rational function: numerator over the product of
// (1 - t^g) for g in the denominator exponent multiset. Representations
// are not canonical; equality is meant as rational functions.
struct EhrhartSeries {
    std::vector<BigInteger> numerator;  // index = power of t
    std::vector<long long> denominator;  // exponent multiset, ascending
    int dim = 0;                         // cone dimension = multiset size

    long long denominator_sum() const;
    long long period() const;  // lcm of the denominator exponents
    int degree() const;        // highest nonzero numerator index, -1 if zero
    // degree as a rational function (numerator degree minus denominator
    // degree); the expansion agrees with the quasipolynomial for k beyond it
    long long rational_degree() const;
};

// coefficients 0..nterms-1 of the power series expansion
std::vector<BigInteger> expand_series(const EhrhartSeries& s, std::size_t nterms);

// Sum over the half-open simplicial cones of the generating function of
// their fundamental parallelepiped points over prod (1 - t^{g_i}), brought
// over the universal denominator (1 - t^l)^dim with l = lcm of all
// generator degrees, then greedily reduced factor by factor.
EhrhartSeries ehrhart_series_closed(const Triangulation& t, int threads = 1);

// Numerator reversed and shifted by w = sum g_i - dim - s over the same
// denominator; valid when the reciprocity theorem's hypotheses hold for the
// underlying polytope. Involutive.
EhrhartSeries reciprocity_transform(const EhrhartSeries& s);

// Lowers denominator exponents to divisors wherever the numerator admits
// the exact division; keeps the rational function unchanged.
EhrhartSeries reduce_representation(EhrhartSeries s);

struct QuasiPolynomial {
    long long period = 1;
    int degree = 0;
    // coeffs[r][j]: coefficient of k^j for k with k mod period == r
    std::vector<std::vector<BigRational>> coeffs;

    BigRational eval(long long k) const;
};

// Per-residue exact interpolation of the expanded series, interpolating on
// one window of dim coefficients per residue (starting beyond the rational
// degree) and validated on a second disjoint window.
QuasiPolynomial quasipolynomial(const EhrhartSeries& s);

// lowest exponent with nonzero coefficient in the expansion; the smallest
// number of voters realizing the (semiopen) event
long long min_voters(const EhrhartSeries& s);

// Closed-form probability that a Condorcet winner exists among four
// candidates with k voters, via per-residue branch formulas.
BigRational pcw_eval(long long k);

}  // namespace votopes

#endif
