#include "votopes/symmetry.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "votopes/dual_description.hpp"
#include "votopes/triangulation.hpp"

namespace votopes {

SymmetryProjection detect_symmetry(const HPolytope& p) {
    p.validate();
    const int N = p.ambient_dim;

    // column signature of each coordinate over all non-sign forms
    std::vector<std::vector<long long>> sig(N);
    for (const auto* forms : {&p.strict_inequalities, &p.closed_inequalities})
        for (const auto& f : *forms)
            for (int i = 0; i < N; ++i) sig[i].push_back(f.coeffs[i]);

    std::vector<std::vector<int>> groups;
    std::map<std::vector<long long>, int> index;
    for (int i = 0; i < N; ++i) {
        auto [it, fresh] = index.try_emplace(sig[i], static_cast<int>(groups.size()));
        if (fresh) groups.emplace_back();
        groups[it->second].push_back(i);
    }
    const int m = static_cast<int>(groups.size());

    SymmetryProjection sp{std::move(groups), make_polytope(m),
                          SparsePolynomial::constant(m, BigRational(1))};
    auto project = [&](const LinearForm& f) {
        LinearForm g;
        g.coeffs.resize(m);
        for (int j = 0; j < m; ++j) g.coeffs[j] = f.coeffs[sp.groups[j][0]];
        return g;
    };
    for (const auto& f : p.strict_inequalities)
        sp.projected.strict_inequalities.push_back(project(f));
    for (const auto& f : p.closed_inequalities)
        sp.projected.closed_inequalities.push_back(project(f));
    for (int j = 0; j < m; ++j)
        sp.weight = sp.weight *
                    binomial_poly(m, j, static_cast<unsigned>(sp.groups[j].size()));
    return sp;
}

bool symmetrization_worthwhile(const SymmetryProjection& sp) {
    int n = 0;
    for (const auto& g : sp.groups) n += static_cast<int>(g.size());
    return 3 * sp.group_count() <= 2 * n;
}

BigRational weighted_volume(const SymmetryProjection& sp, int threads) {
    const int m = sp.projected.ambient_dim;
    auto dd = extreme_rays(closure(sp.projected));
    if (dd.cone.dim != m)
        throw std::invalid_argument("weighted_volume: projected cone not full-dimensional");
    auto tri = lex_triangulate(std::move(dd.cone));
    const ConeVRep& v = tri.rays();

    std::vector<unsigned> e(m);
    for (int j = 0; j < m; ++j)
        e[j] = static_cast<unsigned>(sp.groups[j].size()) - 1;

    // The barycentric sum of f_top over a simplicial cone reduces to a
    // complete homogeneous symmetric function: with vertices p_i = w_i/g_i
    // and q_i(s) = sum_j s_j p_{ij}, the cone contributes
    // V * [s^e] h_D(q_1,...,q_m), h_D read off from prod_i 1/(1 - t q_i)
    // truncated to t^D and to s_j powers <= e_j.
    unsigned D = 0;
    for (int j = 0; j < m; ++j) D += e[j];
    std::vector<int> active;
    for (int j = 0; j < m; ++j)
        if (e[j] > 0) active.push_back(j);
    std::vector<std::size_t> stride(active.size());
    std::size_t slots = 1;
    for (std::size_t t = 0; t < active.size(); ++t) {
        stride[t] = slots;
        slots *= e[active[t]] + 1;
    }

    auto cone_term = [&](const SimplicialCone& c) -> BigRational {
        // H[d] holds the s-truncated coefficient of t^d
        std::vector<std::vector<BigRational>> H(D + 1,
                                                std::vector<BigRational>(slots));
        H[0][0] = 1;
        std::vector<std::size_t> digits(active.size());
        for (int i = 0; i < m; ++i) {
            const auto& w = v.generators[c.generators[i]];
            const long long g = v.degrees[c.generators[i]];
            std::vector<BigRational> q(active.size());
            for (std::size_t t = 0; t < active.size(); ++t)
                q[t] = make_rational(w[active[t]], g);
            // 1/(1 - t q_i): ascending d so H[d-1] is already updated
            for (unsigned d = 1; d <= D; ++d) {
                std::fill(digits.begin(), digits.end(), 0);
                for (std::size_t slot = 0; slot < slots; ++slot) {
                    for (std::size_t t = 0; t < active.size(); ++t)
                        if (digits[t] < static_cast<std::size_t>(e[active[t]]) &&
                            q[t] != 0 && H[d - 1][slot] != 0)
                            H[d][slot + stride[t]] += q[t] * H[d - 1][slot];
                    for (std::size_t t = 0; t < active.size(); ++t) {
                        if (++digits[t] <= static_cast<std::size_t>(e[active[t]]))
                            break;
                        digits[t] = 0;
                    }
                }
            }
        }
        BigInteger gprod = 1;
        for (int i = 0; i < m; ++i) gprod *= to_mpz(v.degrees[c.generators[i]]);
        return make_rational(to_mpz(c.det_abs), gprod) * H[D][slots - 1];
    };

    if (threads < 1) threads = 1;
    const std::size_t n = tri.size();
    std::vector<BigRational> partial(threads, BigRational(0));
    if (threads == 1) {
        for (std::size_t s = 0; s < n; ++s) partial[0] += cone_term(tri.cone_at(s));
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w) {
            std::size_t lo = n * w / threads, hi = n * (w + 1) / threads;
            pool.emplace_back([&, lo, hi, w] {
                for (std::size_t s = lo; s < hi; ++s) partial[w] += cone_term(tri.cone_at(s));
            });
        }
        for (auto& th : pool) th.join();
    }
    BigRational total(0);
    for (const auto& p : partial) total += p;
    return total;
}

BigInteger weighted_count(const SymmetryProjection& sp, long long k, long long budget) {
    if (k < 0) throw std::invalid_argument("weighted_count: negative dilation");
    const HPolytope& p = sp.projected;
    const int m = p.ambient_dim;
    if (binomial(to_mpz(k + m - 1), m - 1) > to_mpz(budget))
        throw budget_exceeded("weighted_count: lattice point enumeration over budget");

    std::vector<unsigned long> u(m);
    for (int j = 0; j < m; ++j) u[j] = sp.groups[j].size();

    BigInteger total = 0;
    std::vector<long long> y(m, 0);
    auto fiber = [&] {
        BigInteger f = 1;
        for (int j = 0; j < m; ++j) f *= binomial(to_mpz(y[j] + u[j] - 1), u[j] - 1);
        return f;
    };
    std::function<void(int, long long)> rec = [&](int j, long long rest) {
        if (j == m - 1) {
            y[j] = rest;
            for (const auto& f : p.closed_inequalities)
                if (f.eval(y) < 0) return;
            for (const auto& f : p.strict_inequalities)
                if (f.eval(y) <= 0) return;
            total += fiber();
            return;
        }
        for (long long c = 0; c <= rest; ++c) {
            y[j] = c;
            rec(j + 1, rest - c);
        }
    };
    rec(0, k);
    return total;
}

}  // namespace votopes
