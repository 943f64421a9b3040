#ifndef VOTOPES_VOLUME_HPP
#define VOTOPES_VOLUME_HPP

#include <chrono>

#include "votopes/triangulation.hpp"

namespace votopes {

struct VolumeResult {
    BigRational value;  // lattice normalized, unit simplex = 1
    std::size_t cone_count = 0;
    std::chrono::duration<double> elapsed{0};
};

// Sum over simplicial cones of |det| / (g_1 * ... * g_d). Semiopenness never
// affects the volume, so the result equals the volume of the closure.
VolumeResult normalized_volume(const Triangulation& t, int threads = 1);

}  // namespace votopes

#endif
