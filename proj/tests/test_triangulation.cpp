#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "votopes/dual_description.hpp"
#include "votopes/elections.hpp"
#include "votopes/triangulation.hpp"
#include "votopes/matrix.hpp"
#include "votopes/volume.hpp"

using namespace votopes;

namespace {

ConeVRep cone_from_rays(std::vector<std::vector<long long>> rays, int d) {
    ConeVRep v;
    v.ambient_dim = d;
    v.generators = std::move(rays);
    v.dim = d;
    for (const auto& g : v.generators) {
        long long s = 0;
        for (long long x : g) s += x;
        v.degrees.push_back(s);
    }
    return v;
}

// every degree-k nonnegative integer point inside the closed cone must lie
// in exactly one half-open simplicial cone
void check_partition(const HPolytope& p, const Triangulation& tri, long long k) {
    const HPolytope cl = closure(p);
    int n = p.ambient_dim;
    std::vector<long long> x(n, 0);
    std::function<void(int, long long)> rec = [&](int i, long long rest) {
        if (i == n - 1) {
            x[i] = rest;
            bool inside = true;
            for (const auto& f : cl.closed_inequalities)
                if (f.eval(x) < 0) inside = false;
            int hits = 0;
            for (std::size_t s = 0; s < tri.size(); ++s)
                if (cone_contains(tri.rays(), tri.cone_at(s), x, true)) ++hits;
            CHECK(hits == (inside ? 1 : 0));
            return;
        }
        for (long long c = 0; c <= rest; ++c) {
            x[i] = c;
            rec(i + 1, rest - c);
        }
    };
    rec(0, k);
}

}  // namespace

TEST_CASE("simplicial cone stays a single unsplit cone") {
    auto v = cone_from_rays({{1, 0, 0}, {0, 1, 0}, {1, 1, 2}}, 3);
    auto tri = stanley_mark(lex_triangulate(v));
    REQUIRE(tri.size() == 1);
    auto c = tri.cone_at(0);
    CHECK(c.det_abs == 2);
    CHECK(c.excluded_facets == 0);
}

TEST_CASE("square cone splits into two half-open simplices sharing one wall") {
    auto v = cone_from_rays({{1, 0, 1}, {0, 1, 1}, {1, 1, 1}, {1, 2, 1}}, 3);
    auto tri = stanley_mark(lex_triangulate(v));
    REQUIRE(tri.size() == 2);
    // the wall between the two simplices is excluded from exactly one side
    int excluded_total = 0;
    for (std::size_t s = 0; s < tri.size(); ++s)
        excluded_total += __builtin_popcount(tri.cone_at(s).excluded_facets);
    CHECK(excluded_total == 1);
    for (long long k = 1; k <= 5; ++k) {
        long long pts = 0;
        std::vector<long long> x(3);
        for (x[0] = 0; x[0] <= k; ++x[0])
            for (x[1] = 0; x[1] <= k; ++x[1]) {
                x[2] = k - x[0] - x[1];  // not the grading; just scan a box
                for (x[2] = 0; x[2] <= k; ++x[2]) {
                    int hits = 0;
                    for (std::size_t s = 0; s < tri.size(); ++s)
                        if (cone_contains(v, tri.cone_at(s), x, true)) ++hits;
                    CHECK(hits <= 1);
                    pts += hits;
                }
            }
        CHECK(pts > 0);
    }
}

TEST_CASE("half-open cones partition the three-candidate election cones") {
    for (Event id : {Event::C, Event::T, Event::BSt, Event::BSg, Event::BSgRev}) {
        auto p = build_polytope(id, 3);
        auto tri = stanley_mark(lex_triangulate(extreme_rays(p).cone));
        CAPTURE(event_name(id));
        for (long long k = 1; k <= 3; ++k) check_partition(p, tri, k);
    }
}

TEST_CASE("random small cones: half-open partition and volume invariance") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 40; ++iter) {
        int d = 3 + static_cast<int>(rng() % 2);
        std::vector<LinearForm> forms;
        for (int i = 0; i < d; ++i) {
            LinearForm e;
            e.coeffs.assign(d, 0);
            e.coeffs[i] = 1;
            forms.push_back(e);
        }
        for (int i = 0; i < 4; ++i) {
            LinearForm f;
            f.coeffs.resize(d);
            for (auto& c : f.coeffs) c = static_cast<long long>(rng() % 9) - 4;
            forms.push_back(f);
        }
        std::vector<std::vector<long long>> rays;
        try {
            rays = dd_rays(forms, d);
        } catch (const std::invalid_argument&) {
            continue;  // not pointed / degenerate system
        }
        if (linalg::rank_rows(rays, d) < d) continue;
        auto v = cone_from_rays(rays, d);
        if (std::any_of(v.degrees.begin(), v.degrees.end(),
                        [](long long g) { return g <= 0; }))
            continue;
        auto tri = stanley_mark(lex_triangulate(v));
        auto vol = normalized_volume(tri).value;

        // exactly-once cover of integer points in a small box
        std::vector<long long> x(d, 0);
        std::function<void(int)> rec = [&](int i) {
            if (i == d) {
                bool in_closed = false;
                for (std::size_t s = 0; s < tri.size() && !in_closed; ++s)
                    in_closed = cone_contains(v, tri.cone_at(s), x, false);
                int hits = 0;
                for (std::size_t s = 0; s < tri.size(); ++s)
                    if (cone_contains(v, tri.cone_at(s), x, true)) ++hits;
                CHECK(hits == (in_closed ? 1 : 0));
                return;
            }
            for (x[i] = 0; x[i] <= 3; ++x[i]) rec(i + 1);
        };
        rec(0);

        // volume must not depend on the insertion order
        for (int shuffle = 0; shuffle < 2; ++shuffle) {
            auto perm = v;
            std::vector<std::size_t> idx(v.generators.size());
            std::iota(idx.begin(), idx.end(), 0);
            std::shuffle(idx.begin(), idx.end(), rng);
            for (std::size_t i = 0; i < idx.size(); ++i) {
                perm.generators[i] = v.generators[idx[i]];
                perm.degrees[i] = v.degrees[idx[i]];
            }
            auto tri2 = lex_triangulate(perm);
            CHECK(normalized_volume(tri2).value == vol);
        }
    }
}

TEST_CASE("unit simplex has volume one and trivial decomposition") {
    auto res = extreme_rays(build_polytope(Event::U, 4));
    auto tri = stanley_mark(lex_triangulate(res.cone));
    CHECK(tri.size() == 1);
    auto vol = normalized_volume(tri);
    CHECK(vol.value == 1);
    CHECK(vol.cone_count == 1);
}

TEST_CASE("three-candidate volumes reproduce the known probabilities") {
    std::map<Event, BigRational> vols;
    for (Event id : {Event::C, Event::T, Event::BSt, Event::BSg, Event::BSgRev}) {
        auto tri = lex_triangulate(extreme_rays(build_polytope(id, 3)).cone);
        vols[id] = normalized_volume(tri, 2).value;
    }
    CHECK(vols[Event::C] == make_rational(5, 16));
    CHECK(vols[Event::T] == make_rational(5, 32));
    CHECK(vols[Event::BSt] == make_rational(1, 576));
    CHECK(vols[Event::BSg] == make_rational(1, 108));
    CHECK(vols[Event::BSgRev] == make_rational(17, 1728));
    // probabilities quoted for 3 candidates: p_CW, strict Borda conditional,
    // strong Borda, reverse strong Borda
    CHECK(3 * vols[Event::C] == make_rational(15, 16));
    CHECK(vols[Event::BSt] / vols[Event::T] == make_rational(1, 90));
    CHECK(3 * vols[Event::BSg] / (3 * vols[Event::C]) == make_rational(4, 135));
    CHECK(3 * vols[Event::BSgRev] / (3 * vols[Event::C]) == make_rational(17, 540));
}
