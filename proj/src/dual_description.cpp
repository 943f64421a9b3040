#include "votopes/dual_description.hpp"

#include <algorithm>
#include <stdexcept>

#include "votopes/matrix.hpp"

namespace votopes {

namespace {

using u64 = std::uint64_t;
using i128 = __int128;

struct Ray {
    std::vector<long long> v;
    std::vector<u64> inc;  // incidence bits over input forms
};

bool subset_of(const std::vector<u64>& a, const std::vector<u64>& b) {
    for (std::size_t w = 0; w < a.size(); ++w)
        if ((a[w] & ~b[w]) != 0) return false;
    return true;
}

int popcount_and(const std::vector<u64>& a, const std::vector<u64>& b,
                 std::vector<u64>& tmp) {
    int c = 0;
    for (std::size_t w = 0; w < a.size(); ++w) {
        tmp[w] = a[w] & b[w];
        c += __builtin_popcountll(tmp[w]);
    }
    return c;
}

long long gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return static_cast<long long>(a);
}

std::vector<long long> combine(const std::vector<long long>& rp,
                               const std::vector<long long>& rn, long long vp,
                               long long vn) {
    // vp > 0, vn < 0; result = vp * rn - vn * rp, primitivized
    std::size_t d = rp.size();
    std::vector<i128> t(d);
    i128 g = 0;
    for (std::size_t i = 0; i < d; ++i) {
        t[i] = (i128)vp * rn[i] - (i128)vn * rp[i];
        g = gcd128(g, t[i]);
    }
    if (g == 0) throw std::logic_error("dd: zero combination ray");
    std::vector<long long> out(d);
    for (std::size_t i = 0; i < d; ++i) {
        i128 q = t[i] / g;
        if (q > 0x7fffffffffffffffLL || q < -0x7fffffffffffffffLL)
            throw std::overflow_error("dd: ray coordinate overflow");
        out[i] = static_cast<long long>(q);
    }
    return out;
}

void primitivize(std::vector<long long>& v) {
    long long g = content_ll(v);
    if (g > 1)
        for (auto& x : v) x /= g;
}

i128 eval_form(const LinearForm& f, const std::vector<long long>& x) {
    i128 s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += (i128)f.coeffs[i] * x[i];
    return s;
}

}  // namespace

std::vector<std::vector<long long>> dd_rays(const std::vector<LinearForm>& forms,
                                            int dim) {
    const int d = dim;
    const int nf = static_cast<int>(forms.size());
    const std::size_t words = (nf + 63) / 64;

    // initial simplicial cone from the first d linearly independent forms
    std::vector<int> chosen;
    {
        std::vector<std::vector<long long>> rows;
        for (int i = 0; i < nf && static_cast<int>(chosen.size()) < d; ++i) {
            rows.push_back(forms[i].coeffs);
            if (linalg::rank_rows(rows, d) == static_cast<int>(rows.size()))
                chosen.push_back(i);
            else
                rows.pop_back();
        }
    }
    if (static_cast<int>(chosen.size()) < d)
        throw std::invalid_argument("dd_rays: cone is not pointed (rank-deficient forms)");

    std::vector<BigInteger> m(static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m[i * d + j] = to_mpz(forms[chosen[i]].coeffs[j]);
    auto aj = linalg::adjugate_mpz(m, d);
    int dsign = sgn(aj.det);

    std::vector<Ray> rays(d);
    for (int j = 0; j < d; ++j) {
        Ray r;
        r.v.resize(d);
        for (int i = 0; i < d; ++i) {
            BigInteger e = dsign > 0 ? aj.adj[i * d + j] : -aj.adj[i * d + j];
            if (!e.fits_slong_p()) throw std::overflow_error("dd_rays: init overflow");
            r.v[i] = e.get_si();
        }
        primitivize(r.v);
        r.inc.assign(words, 0);
        for (int i = 0; i < d; ++i)
            if (i != j) r.inc[chosen[i] >> 6] |= u64(1) << (chosen[i] & 63);
        rays[j] = std::move(r);
    }

    std::vector<u64> tmp(words);
    for (int fi = 0; fi < nf; ++fi) {
        if (std::find(chosen.begin(), chosen.end(), fi) != chosen.end()) continue;
        const LinearForm& f = forms[fi];
        std::vector<long long> vals(rays.size());
        std::vector<int> pos, neg;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            i128 v = eval_form(f, rays[r].v);
            if (v > 0x7fffffffffffffffLL || v < -0x7fffffffffffffffLL)
                throw std::overflow_error("dd_rays: form value overflow");
            vals[r] = static_cast<long long>(v);
            if (vals[r] > 0)
                pos.push_back(static_cast<int>(r));
            else if (vals[r] < 0)
                neg.push_back(static_cast<int>(r));
            else
                rays[r].inc[fi >> 6] |= u64(1) << (fi & 63);
        }
        if (neg.empty()) continue;

        std::vector<Ray> created;
        for (int p : pos) {
            for (int n : neg) {
                int common = popcount_and(rays[p].inc, rays[n].inc, tmp);
                if (common < d - 2) continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size(); ++r) {
                    if (static_cast<int>(r) == p || static_cast<int>(r) == n) continue;
                    if (subset_of(tmp, rays[r].inc)) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent) continue;
                Ray nr;
                nr.v = combine(rays[p].v, rays[n].v, vals[p], vals[n]);
                nr.inc.resize(words);
                for (std::size_t w = 0; w < words; ++w)
                    nr.inc[w] = rays[p].inc[w] & rays[n].inc[w];
                nr.inc[fi >> 6] |= u64(1) << (fi & 63);
                created.push_back(std::move(nr));
            }
        }

        std::vector<Ray> next;
        next.reserve(rays.size() - neg.size() + created.size());
        for (std::size_t r = 0; r < rays.size(); ++r)
            if (vals[r] >= 0) next.push_back(std::move(rays[r]));
        for (auto& r : created) next.push_back(std::move(r));
        rays = std::move(next);
    }

    std::vector<std::vector<long long>> out;
    out.reserve(rays.size());
    for (auto& r : rays) out.push_back(std::move(r.v));
    return out;
}

DualDescriptionResult extreme_rays(const HPolytope& p) {
    p.validate();
    const int d = p.ambient_dim;

    std::vector<LinearForm> forms;
    if (p.sign_conditions) {
        for (int i = 0; i < d; ++i) {
            LinearForm e;
            e.coeffs.assign(d, 0);
            e.coeffs[i] = 1;
            forms.push_back(std::move(e));
        }
    }
    int strict_base = static_cast<int>(forms.size());
    for (const auto& f : p.strict_inequalities) forms.push_back(f);
    for (const auto& f : p.closed_inequalities) forms.push_back(f);

    auto rays = dd_rays(forms, d);

    DualDescriptionResult res;
    res.cone.ambient_dim = d;
    res.cone.generators = std::move(rays);
    res.cone.dim = linalg::rank_rows(res.cone.generators, d);

    for (const auto& g : res.cone.generators) {
        long long deg = 0;
        for (int i = 0; i < d; ++i) deg += p.grading.coeffs[i] * g[i];
        if (deg <= 0)
            throw std::logic_error("extreme_rays: generator of nonpositive degree");
        res.cone.degrees.push_back(deg);
    }

    // irredundant support hyperplanes: input forms whose incident rays span
    // a facet (rank dim-1), deduplicated by primitive representative
    std::vector<LinearForm> supports;
    for (const auto& f : forms) {
        LinearForm prim = f;
        primitivize(prim.coeffs);
        bool dup = false;
        for (const auto& s : supports)
            if (s.coeffs == prim.coeffs) {
                dup = true;
                break;
            }
        if (dup) continue;
        std::vector<std::vector<long long>> incident;
        for (const auto& g : res.cone.generators)
            if (eval_form(prim, g) == 0) incident.push_back(g);
        if (linalg::rank_rows(incident, d) == res.cone.dim - 1)
            supports.push_back(std::move(prim));
    }
    res.cone.support_hyperplanes = std::move(supports);

    const std::size_t words = (res.cone.support_hyperplanes.size() + 63) / 64;
    res.cone.incidence.assign(res.cone.generators.size(),
                              std::vector<u64>(std::max<std::size_t>(words, 1), 0));
    for (std::size_t r = 0; r < res.cone.generators.size(); ++r)
        for (std::size_t h = 0; h < res.cone.support_hyperplanes.size(); ++h)
            if (eval_form(res.cone.support_hyperplanes[h], res.cone.generators[r]) == 0)
                res.cone.incidence[r][h >> 6] |= u64(1) << (h & 63);

    res.marking.hyperplane_index.assign(p.strict_inequalities.size(), -1);
    for (std::size_t s = 0; s < p.strict_inequalities.size(); ++s) {
        LinearForm prim = forms[strict_base + s];
        primitivize(prim.coeffs);
        for (std::size_t h = 0; h < res.cone.support_hyperplanes.size(); ++h)
            if (res.cone.support_hyperplanes[h].coeffs == prim.coeffs) {
                res.marking.hyperplane_index[s] = static_cast<int>(h);
                break;
            }
    }
    return res;
}

bool reciprocity_applicable(const HPolytope& p) {
    if (!p.closed_inequalities.empty()) return false;
    for (const auto& f : p.strict_inequalities)
        if (f.coeff_sum() != 0) return false;
    return extreme_rays(p).cone.dim == p.ambient_dim;
}

}  // namespace votopes
