#ifndef VOTOPES_TRIANGULATION_HPP
#define VOTOPES_TRIANGULATION_HPP

#include <cstdint>

#include "votopes/polytope.hpp"

namespace votopes {

// View of one simplicial cone of a triangulation: dim generator indices
// into the ConeVRep, the cached |det| of the generator matrix, and a bitmask
// of half-open (excluded) facets, bit i = facet opposite generators[i].
struct SimplicialCone {
    const std::uint32_t* generators;
    int dim;
    long long det_abs;
    std::uint32_t excluded_facets;
};

class Triangulation {
  public:
    Triangulation(ConeVRep v, int dim) : rays_(std::move(v)), dim_(dim) {}

    const ConeVRep& rays() const { return rays_; }
    int dim() const { return dim_; }
    std::size_t size() const { return det_.size(); }
    bool marked() const { return marked_; }

    SimplicialCone cone_at(std::size_t i) const {
        return {&gens_[i * dim_], dim_, det_[i],
                marked_ ? excluded_[i] : 0};
    }

    void append(const std::uint32_t* gens, long long det_abs);

  private:
    friend Triangulation stanley_mark(Triangulation t);
    ConeVRep rays_;
    int dim_;
    bool marked_ = false;
    std::vector<std::uint32_t> gens_;  // size * dim, each cone ascending
    std::vector<long long> det_;
    std::vector<std::uint32_t> excluded_;
};

// Placing (lexicographic) triangulation of a pointed full-rank cone,
// inserting generators in stored order. The triangulation keeps its own
// copy of the ray description.
Triangulation lex_triangulate(ConeVRep v);

// Half-open decomposition: excludes the facets of each simplicial cone that
// are invisible from a fixed generic interior point (the generator sum of
// the first cone, lexicographically perturbed). The half-open cones
// partition the cone exactly.
Triangulation stanley_mark(Triangulation t);

// Membership of an integer point in the (half-open) simplicial cone.
bool cone_contains(const ConeVRep& v, const SimplicialCone& c,
                   const std::vector<long long>& x, bool half_open);

}  // namespace votopes

#endif
