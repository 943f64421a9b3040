#ifndef VOTOPES_SYMMETRY_HPP
#define VOTOPES_SYMMETRY_HPP

#include "votopes/polynomial.hpp"
#include "votopes/polytope.hpp"

namespace votopes {

// Coordinate grouping of an inequality system: coordinates sharing the same
// coefficient in every non-sign form are replaced by their sum. Lattice
// points of the original polytope map to lattice points of the projection;
// the fiber over y has prod binom(u_j + y_j - 1, u_j - 1) points, which is
// the weight polynomial f.
struct SymmetryProjection {
    std::vector<std::vector<int>> groups;  // partition of the coordinates
    HPolytope projected;                   // ambient dimension = group count
    SparsePolynomial weight;               // f(y), total degree N - m

    int group_count() const { return static_cast<int>(groups.size()); }
};

// Finest partition compatible with all strict and closed forms; group order
// follows the first coordinate of each class.
SymmetryProjection detect_symmetry(const HPolytope& p);

// The projection pays off when it cuts the dimension by a third or more.
bool symmetrization_worthwhile(const SymmetryProjection& sp);

// Normalized volume of the original polytope, computed by integrating the
// leading form of the weight over a triangulation of the projected cone.
BigRational weighted_volume(const SymmetryProjection& sp, int threads = 1);

// Number of original lattice points of degree k: sum of f(y) over the
// lattice points y of the k-th dilate of the (semiopen) projection.
BigInteger weighted_count(const SymmetryProjection& sp, long long k,
                          long long budget = 100000000);

}  // namespace votopes

#endif
