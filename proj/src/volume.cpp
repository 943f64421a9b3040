#include "votopes/volume.hpp"

#include <map>
#include <stdexcept>
#include <thread>

namespace votopes {

namespace {

// partial sums of |det| grouped by the product of generator degrees; the
// grouped integer sums keep the rational arithmetic to a handful of
// divisions at the end
using DegreeSums = std::map<long long, BigInteger>;

void accumulate_range(const Triangulation& t, std::size_t lo, std::size_t hi,
                      DegreeSums& out) {
    const auto& degrees = t.rays().degrees;
    for (std::size_t s = lo; s < hi; ++s) {
        SimplicialCone c = t.cone_at(s);
        long long prod = 1;
        for (int i = 0; i < c.dim; ++i) {
            long long g = degrees[c.generators[i]];
            if (g < 1) throw std::invalid_argument("normalized_volume: degree < 1");
            if (!mul_ok(prod, g, prod))
                throw std::overflow_error("normalized_volume: degree product overflow");
        }
        out[prod] += to_mpz(c.det_abs);
    }
}

}  // namespace

VolumeResult normalized_volume(const Triangulation& t, int threads) {
    auto start = std::chrono::steady_clock::now();
    if (threads < 1) threads = 1;
    std::size_t n = t.size();
    std::vector<DegreeSums> partial(threads);
    if (threads == 1) {
        accumulate_range(t, 0, n, partial[0]);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w) {
            std::size_t lo = n * w / threads, hi = n * (w + 1) / threads;
            pool.emplace_back(
                [&t, lo, hi, &out = partial[w]] { accumulate_range(t, lo, hi, out); });
        }
        for (auto& th : pool) th.join();
    }
    DegreeSums sums;
    for (const auto& p : partial)
        for (const auto& [g, s] : p) sums[g] += s;
    VolumeResult r;
    r.value = 0;
    for (const auto& [g, s] : sums) r.value += make_rational(s, to_mpz(g));
    r.cone_count = n;
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

}  // namespace votopes
