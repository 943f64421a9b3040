#ifndef VOTOPES_POLYTOPE_HPP
#define VOTOPES_POLYTOPE_HPP

#include <cstdint>
#include <vector>

#include "votopes/arith.hpp"

namespace votopes {

// Integer linear form on the ambient space.
struct LinearForm {
    std::vector<long long> coeffs;

    long long eval(const std::vector<long long>& x) const;
    long long coeff_sum() const;
    bool operator==(const LinearForm&) const = default;
};

// Inequality-side description of a graded rational polytope (degree-1 cross
// section of the cone it spans). Strict inequalities are the excluded faces
// of the semiopen polytope; the closure turns them into closed ones.
// The grading is the all-ones form (total degree) throughout this project.
struct HPolytope {
    int ambient_dim = 0;
    std::vector<LinearForm> closed_inequalities;   // lambda(x) >= 0
    std::vector<LinearForm> strict_inequalities;   // lambda(x) > 0
    bool sign_conditions = true;                   // x_i >= 0 for all i
    LinearForm grading;                            // all ones

    void validate() const;  // throws on arity violations
};

HPolytope make_polytope(int ambient_dim);  // sign conditions + total degree only

// Reclassifies every strict inequality as closed.
HPolytope closure(const HPolytope& p);

// Generator-side description: primitive integer extreme rays with grading
// degrees, plus the irredundant support hyperplanes and their incidence.
struct ConeVRep {
    int ambient_dim = 0;
    std::vector<std::vector<long long>> generators;  // primitive
    std::vector<long long> degrees;                  // grading per generator
    std::vector<LinearForm> support_hyperplanes;
    int dim = 0;  // rank of the generator set

    // incidence[r] has bit h set iff support hyperplane h vanishes on ray r
    std::vector<std::vector<std::uint64_t>> incidence;
    bool incident(std::size_t ray, std::size_t hyp) const {
        return (incidence[ray][hyp >> 6] >> (hyp & 63)) & 1;
    }
};

// Maps each strict inequality of the source polytope to the index of the
// corresponding support hyperplane of the closure (-1 if the strict form is
// not a facet of the closure).
struct SemiopenMarking {
    std::vector<int> hyperplane_index;
};

// Theorem hypotheses for the semiopen/closed numerator relation: all
// non-sign constraints strict, each vanishing on the all-ones vector, and
// the polytope of full dimension N-1 in the degree-1 hyperplane.
bool reciprocity_applicable(const HPolytope& p, int polytope_dim);
bool reciprocity_applicable(const HPolytope& p);  // computes the dimension

}  // namespace votopes

#endif
