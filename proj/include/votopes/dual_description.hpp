#ifndef VOTOPES_DUAL_DESCRIPTION_HPP
#define VOTOPES_DUAL_DESCRIPTION_HPP

#include "votopes/polytope.hpp"

namespace votopes {

// Converts the inequality description into the complete irredundant set of
// primitive extreme rays plus the irredundant support hyperplanes.
// Strict inequalities are treated as closed for the geometry; the marking
// records which support hyperplane each strict form corresponds to.
struct DualDescriptionResult {
    ConeVRep cone;
    SemiopenMarking marking;
};

DualDescriptionResult extreme_rays(const HPolytope& p);

// Incremental double description over an explicit list of forms (used
// directly by tests; extreme_rays assembles the form list from the
// polytope). The cone {x : f(x) >= 0 for all f} must be pointed.
std::vector<std::vector<long long>> dd_rays(const std::vector<LinearForm>& forms,
                                            int dim);

}  // namespace votopes

#endif
