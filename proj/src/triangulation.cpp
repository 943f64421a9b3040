#include "votopes/triangulation.hpp"

#include <algorithm>
#include <stdexcept>

#include "votopes/matrix.hpp"

namespace votopes {

namespace {

using u64 = std::uint64_t;
using u32 = std::uint32_t;
using i128 = __int128;

void set_bit(std::vector<u64>& bits, u32 i) { bits[i >> 6] |= u64(1) << (i & 63); }
bool get_bit(const std::vector<u64>& bits, u32 i) {
    return (bits[i >> 6] >> (i & 63)) & 1;
}

// support hyperplane of the partial cone, with its incidence over the
// processed generators and the triangulation facets lying on it; a facet is
// referenced as (cone index << 5 | dropped generator position) to keep the
// pools small
struct Hyp {
    std::vector<long long> form;
    std::vector<u64> inc;
    std::vector<u64> facets;
};

long long eval_ll(const std::vector<long long>& form,
                  const std::vector<long long>& x) {
    i128 s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += (i128)form[i] * x[i];
    if (s > 0x7fffffffffffffffLL || s < -0x7fffffffffffffffLL)
        throw std::overflow_error("triangulation: form value overflow");
    return static_cast<long long>(s);
}

void primitivize(std::vector<long long>& v) {
    long long g = content_ll(v);
    if (g > 1)
        for (auto& x : v) x /= g;
}

long long simplex_det_abs(const ConeVRep& v, const u32* gens, int d) {
    std::vector<long long> a(static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a[i * d + j] = v.generators[gens[i]][j];
    if (auto det = linalg::det_i64(a, d)) {
        long long r = *det < 0 ? -*det : *det;
        if (r == 0) throw std::logic_error("triangulation: degenerate simplex");
        return r;
    }
    std::vector<BigInteger> az(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) az[i] = to_mpz(a[i]);
    BigInteger det = abs(linalg::det_mpz(az, d));
    if (det == 0) throw std::logic_error("triangulation: degenerate simplex");
    if (!det.fits_slong_p())
        throw std::overflow_error("triangulation: determinant exceeds 64 bits");
    return det.get_si();
}

}  // namespace

void Triangulation::append(const u32* gens, long long det_abs) {
    gens_.insert(gens_.end(), gens, gens + dim_);
    det_.push_back(det_abs);
}

Triangulation lex_triangulate(ConeVRep vin) {
    const int d = vin.dim;
    if (d != vin.ambient_dim || d == 0 || d > 31)
        throw std::invalid_argument("lex_triangulate: cone must be full-dimensional");
    const u32 ng = static_cast<u32>(vin.generators.size());
    const std::size_t words = (ng + 63) / 64;

    Triangulation tri(std::move(vin), d);
    const ConeVRep& v = tri.rays();

    // initial simplicial cone: first d linearly independent generators
    std::vector<u32> chosen;
    {
        std::vector<std::vector<long long>> rows;
        for (u32 i = 0; i < ng && static_cast<int>(chosen.size()) < d; ++i) {
            rows.push_back(v.generators[i]);
            if (linalg::rank_rows(rows, d) == static_cast<int>(rows.size()))
                chosen.push_back(i);
            else
                rows.pop_back();
        }
    }
    if (static_cast<int>(chosen.size()) < d)
        throw std::invalid_argument("lex_triangulate: generators are rank-deficient");

    tri.append(chosen.data(), simplex_det_abs(v, chosen.data(), d));

    // support hyperplanes of the initial cone: rows of sign(det) * adjugate
    // of the generator matrix (generators as columns)
    std::vector<Hyp> hyps;
    {
        std::vector<BigInteger> g(static_cast<std::size_t>(d) * d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) g[i * d + j] = to_mpz(v.generators[chosen[j]][i]);
        auto aj = linalg::adjugate_mpz(g, d);
        int dsign = sgn(aj.det);
        for (int i = 0; i < d; ++i) {
            Hyp h;
            h.form.resize(d);
            for (int j = 0; j < d; ++j) {
                BigInteger e = dsign > 0 ? aj.adj[i * d + j] : -aj.adj[i * d + j];
                if (!e.fits_slong_p())
                    throw std::overflow_error("lex_triangulate: hyperplane overflow");
                h.form[j] = e.get_si();
            }
            primitivize(h.form);
            h.inc.assign(words, 0);
            for (int k = 0; k < d; ++k)
                if (k != i) set_bit(h.inc, chosen[k]);
            // facet of the initial simplex opposite generator i
            h.facets.push_back(u64(0) << 5 | static_cast<u64>(i));
            hyps.push_back(std::move(h));
        }
    }

    std::vector<long long> vals;
    std::vector<u64> tmp(words);
    std::vector<u32> simplex(d);
    for (u32 x = 0; x < ng; ++x) {
        if (std::find(chosen.begin(), chosen.end(), x) != chosen.end()) continue;
        const auto& xv = v.generators[x];
        vals.resize(hyps.size());
        std::vector<int> pos, zero, neg;
        for (std::size_t h = 0; h < hyps.size(); ++h) {
            vals[h] = eval_ll(hyps[h].form, xv);
            (vals[h] > 0 ? pos : vals[h] < 0 ? neg : zero).push_back(static_cast<int>(h));
        }
        if (neg.empty()) {
            for (int h : zero) set_bit(hyps[h].inc, x);
            continue;
        }

        // new simplices: every boundary facet on a visible hyperplane, coned
        // over x
        std::size_t first_new_cone = tri.size();
        for (int h : neg) {
            for (u64 ref : hyps[h].facets) {
                SimplicialCone base = tri.cone_at(ref >> 5);
                int drop = static_cast<int>(ref & 31);
                int fi = 0;
                for (int k = 0; k < d; ++k)
                    if (k != drop) simplex[fi++] = base.generators[k];
                simplex[d - 1] = x;
                tri.append(simplex.data(), simplex_det_abs(v, simplex.data(), d));
            }
        }

        // new hyperplanes from adjacent (positive, negative) pairs
        std::vector<Hyp> created;
        for (int p : pos) {
            for (int n : neg) {
                int common = 0;
                for (std::size_t w = 0; w < words; ++w) {
                    tmp[w] = hyps[p].inc[w] & hyps[n].inc[w];
                    common += __builtin_popcountll(tmp[w]);
                }
                if (common < d - 2) continue;
                bool adjacent = true;
                for (std::size_t h = 0; h < hyps.size(); ++h) {
                    if (static_cast<int>(h) == p || static_cast<int>(h) == n) continue;
                    bool contains = true;
                    for (std::size_t w = 0; w < words; ++w)
                        if (tmp[w] & ~hyps[h].inc[w]) {
                            contains = false;
                            break;
                        }
                    if (contains) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent) continue;
                Hyp nh;
                nh.form.resize(d);
                for (int j = 0; j < d; ++j) {
                    i128 c = (i128)vals[p] * hyps[n].form[j] -
                             (i128)vals[n] * hyps[p].form[j];
                    if (c > 0x7fffffffffffffffLL || c < -0x7fffffffffffffffLL)
                        throw std::overflow_error("lex_triangulate: combination overflow");
                    nh.form[j] = static_cast<long long>(c);
                }
                primitivize(nh.form);
                nh.inc.resize(words);
                for (std::size_t w = 0; w < words; ++w)
                    nh.inc[w] = hyps[p].inc[w] & hyps[n].inc[w];
                set_bit(nh.inc, x);
                created.push_back(std::move(nh));
            }
        }
        for (int h : zero) set_bit(hyps[h].inc, x);

        // distribute the boundary facets of the new simplices: a facet
        // through x lies on at most one hyperplane, necessarily one
        // containing x (a zero survivor or a newly created one)
        std::vector<Hyp*> candidates;
        for (int h : zero) candidates.push_back(&hyps[h]);
        for (auto& h : created) candidates.push_back(&h);
        for (std::size_t s = first_new_cone; s < tri.size(); ++s) {
            SimplicialCone sc = tri.cone_at(s);
            for (int drop = 0; drop < d; ++drop) {
                if (sc.generators[drop] == x) continue;  // the base facet is interior now
                for (Hyp* h : candidates) {
                    bool on = true;
                    for (int k = 0; k < d; ++k)
                        if (k != drop && sc.generators[k] != x &&
                            !get_bit(h->inc, sc.generators[k])) {
                            on = false;
                            break;
                        }
                    if (on) {
                        h->facets.push_back(s << 5 | static_cast<u64>(drop));
                        break;
                    }
                }
            }
        }

        // replace the hyperplane list: positives and zeros survive
        std::vector<Hyp> next;
        next.reserve(pos.size() + zero.size() + created.size());
        for (std::size_t h = 0; h < hyps.size(); ++h)
            if (vals[h] >= 0) next.push_back(std::move(hyps[h]));
        for (auto& h : created) next.push_back(std::move(h));
        hyps = std::move(next);
    }
    return tri;
}

Triangulation stanley_mark(Triangulation t) {
    const int d = t.dim();
    const ConeVRep& v = t.rays();
    if (t.size() == 0) return t;

    // generic interior point: generator sum of the first cone, tie-broken by
    // a lexicographic perturbation +eps*e_1+eps^2*e_2+...
    std::vector<long long> p(d, 0);
    {
        SimplicialCone first = t.cone_at(0);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) p[j] += v.generators[first.generators[i]][j];
    }

    t.excluded_.assign(t.size(), 0);
    std::vector<long long> a(static_cast<std::size_t>(d) * d);
    std::vector<BigInteger> az(a.size());
    for (std::size_t s = 0; s < t.size(); ++s) {
        SimplicialCone sc = t.cone_at(s);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) a[i * d + j] = v.generators[sc.generators[j]][i];
        int dsign;
        u32 mask = 0;
        auto classify = [&](int i, auto&& row_entry, auto&& dot_p) {
            int sign = dot_p(i);
            for (int j = 0; sign == 0 && j < d; ++j) sign = row_entry(i, j);
            if (sign * dsign < 0) mask |= u32(1) << i;
        };
        if (auto adj = linalg::adjugate_i64(a, d)) {
            dsign = adj->det < 0 ? -1 : 1;
            for (int i = 0; i < d; ++i)
                classify(
                    i,
                    [&](int r, int c) {
                        long long e = adj->adj[r * d + c];
                        return e < 0 ? -1 : e > 0 ? 1 : 0;
                    },
                    [&](int r) {
                        i128 s = 0;
                        for (int j = 0; j < d; ++j) s += (i128)adj->adj[r * d + j] * p[j];
                        return s < 0 ? -1 : s > 0 ? 1 : 0;
                    });
        } else {
            for (std::size_t i = 0; i < a.size(); ++i) az[i] = to_mpz(a[i]);
            auto adjz = linalg::adjugate_mpz(az, d);
            dsign = sgn(adjz.det);
            for (int i = 0; i < d; ++i)
                classify(
                    i, [&](int r, int c) { return sgn(adjz.adj[r * d + c]); },
                    [&](int r) {
                        BigInteger s = 0;
                        for (int j = 0; j < d; ++j) s += adjz.adj[r * d + j] * to_mpz(p[j]);
                        return sgn(s);
                    });
        }
        t.excluded_[s] = mask;
    }
    t.marked_ = true;
    return t;
}

bool cone_contains(const ConeVRep& v, const SimplicialCone& c,
                   const std::vector<long long>& x, bool half_open) {
    const int d = c.dim;
    std::vector<BigInteger> a(static_cast<std::size_t>(d) * d), b(d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) a[i * d + j] = to_mpz(v.generators[c.generators[j]][i]);
        b[i] = to_mpz(x[i]);
    }
    auto sol = linalg::adj_solve_mpz(a, d, b);
    int dsign = sgn(sol.det);
    for (int i = 0; i < d; ++i) {
        int s = sgn(sol.x[i]) * dsign;  // sign of barycentric coordinate i
        bool excl = half_open && ((c.excluded_facets >> i) & 1);
        if (s < 0 || (excl && s == 0)) return false;
    }
    return true;
}

}  // namespace votopes
