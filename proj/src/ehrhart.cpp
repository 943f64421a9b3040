#include "votopes/ehrhart.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>

#include "votopes/matrix.hpp"

namespace votopes {

long long EhrhartSeries::denominator_sum() const {
    return std::accumulate(denominator.begin(), denominator.end(), 0LL);
}

long long EhrhartSeries::period() const {
    long long l = 1;
    for (long long g : denominator) l = std::lcm(l, g);
    return l;
}

int EhrhartSeries::degree() const {
    for (int i = static_cast<int>(numerator.size()) - 1; i >= 0; --i)
        if (numerator[i] != 0) return i;
    return -1;
}

long long EhrhartSeries::rational_degree() const { return degree() - denominator_sum(); }

std::vector<BigInteger> expand_series(const EhrhartSeries& s, std::size_t nterms) {
    std::vector<BigInteger> c(nterms);
    for (std::size_t i = 0; i < std::min(nterms, s.numerator.size()); ++i)
        c[i] = s.numerator[i];
    for (long long g : s.denominator)
        for (std::size_t i = static_cast<std::size_t>(g); i < nterms; ++i)
            c[i] += c[i - g];
    return c;
}

namespace {

// per degree-multiset class, the counts of parallelepiped points by degree
using ClassCounts = std::map<std::vector<long long>, std::vector<BigInteger>>;

void bump(std::vector<BigInteger>& counts, std::size_t deg) {
    if (counts.size() <= deg) counts.resize(deg + 1);
    counts[deg] += 1;
}

// degrees of the lattice points of the half-open fundamental parallelepiped
// of one simplicial cone
void parallelepiped_degrees(const ConeVRep& v, const SimplicialCone& c,
                            ClassCounts& acc) {
    const int d = c.dim;
    std::vector<long long> degs(d);
    for (int i = 0; i < d; ++i) degs[i] = v.degrees[c.generators[i]];
    std::vector<long long> key = degs;
    std::sort(key.begin(), key.end());
    auto& counts = acc[key];

    if (c.det_abs == 1) {
        long long deg = 0;
        for (int i = 0; i < d; ++i)
            if ((c.excluded_facets >> i) & 1) deg += degs[i];
        bump(counts, static_cast<std::size_t>(deg));
        return;
    }

    // residues adj(A)x mod |det| enumerate Z^d / A Z^d; sign-adjust the
    // adjugate so that residue r means barycentric coordinate q_i = r_i/|det|
    const long long D = c.det_abs;
    std::vector<long long> a(static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a[i * d + j] = v.generators[c.generators[j]][i];
    std::vector<long long> cols(static_cast<std::size_t>(d) * d);  // cols[j*d+i]
    if (auto adj = linalg::adjugate_i64(a, d)) {
        int s = adj->det < 0 ? -1 : 1;
        for (int j = 0; j < d; ++j)
            for (int i = 0; i < d; ++i) {
                long long e = (s * adj->adj[i * d + j]) % D;
                cols[j * d + i] = e < 0 ? e + D : e;
            }
    } else {
        std::vector<BigInteger> az(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) az[i] = to_mpz(a[i]);
        auto adjz = linalg::adjugate_mpz(az, d);
        int s = sgn(adjz.det);
        BigInteger Dz = to_mpz(D);
        for (int j = 0; j < d; ++j)
            for (int i = 0; i < d; ++i) {
                BigInteger e = (s > 0 ? adjz.adj[i * d + j] : -adjz.adj[i * d + j]) % Dz;
                if (e < 0) e += Dz;
                cols[j * d + i] = e.get_si();
            }
    }

    std::set<std::vector<long long>> residues;
    std::vector<std::vector<long long>> frontier;
    residues.insert(std::vector<long long>(d, 0));
    frontier.push_back(std::vector<long long>(d, 0));
    std::vector<long long> next(d);
    while (!frontier.empty()) {
        auto cur = std::move(frontier.back());
        frontier.pop_back();
        for (int j = 0; j < d; ++j) {
            for (int i = 0; i < d; ++i) {
                next[i] = cur[i] + cols[j * d + i];
                if (next[i] >= D) next[i] -= D;
            }
            if (residues.insert(next).second) frontier.push_back(next);
        }
    }
    if (static_cast<long long>(residues.size()) != D)
        throw std::logic_error("ehrhart: residue group has wrong order");

    for (const auto& r : residues) {
        long long num = 0;
        for (int i = 0; i < d; ++i) {
            long long ri = r[i];
            if (ri == 0 && ((c.excluded_facets >> i) & 1)) ri = D;
            num += ri * degs[i];
        }
        if (num % D != 0) throw std::logic_error("ehrhart: non-integral point degree");
        bump(counts, static_cast<std::size_t>(num / D));
    }
}

void merge(ClassCounts& into, const ClassCounts& from) {
    for (const auto& [key, counts] : from) {
        auto& dst = into[key];
        if (dst.size() < counts.size()) dst.resize(counts.size());
        for (std::size_t i = 0; i < counts.size(); ++i) dst[i] += counts[i];
    }
}

// quotient of n by 1 + t^g + t^{2g} + ... + t^{e-g}, or nullopt if the
// division is not exact
std::optional<std::vector<BigInteger>> divide_step_poly(
    const std::vector<BigInteger>& n, long long e, long long g) {
    int deg_n = -1;
    for (int i = static_cast<int>(n.size()) - 1; i >= 0; --i)
        if (n[i] != 0) {
            deg_n = i;
            break;
        }
    if (deg_n < 0) return std::vector<BigInteger>{};  // zero stays zero
    long long deg_p = e - g;
    if (deg_n < deg_p) return std::nullopt;
    std::vector<BigInteger> q(deg_n - deg_p + 1);
    for (long long i = 0; i <= deg_n - deg_p; ++i) {
        BigInteger s = n[i];
        for (long long j = g; j <= deg_p && j <= i; j += g) s -= q[i - j];
        q[i] = std::move(s);
    }
    // verify q * p == n
    std::vector<BigInteger> back(deg_n + 1);
    for (std::size_t i = 0; i < q.size(); ++i)
        for (long long j = 0; j <= deg_p; j += g) back[i + j] += q[i];
    for (int i = 0; i <= deg_n; ++i)
        if (back[i] != n[i]) return std::nullopt;
    for (std::size_t i = deg_n + 1; i < n.size(); ++i)
        if (n[i] != 0) return std::nullopt;
    return q;
}

std::vector<long long> divisors_of(long long e) {
    std::vector<long long> ds;
    for (long long g = 1; g < e; ++g)
        if (e % g == 0) ds.push_back(g);
    return ds;
}

}  // namespace

EhrhartSeries ehrhart_series_closed(const Triangulation& t, int threads) {
    if (!t.marked())
        throw std::invalid_argument("ehrhart_series_closed: triangulation not Stanley-marked");
    const ConeVRep& v = t.rays();
    const int d = t.dim();

    long long l = 1;
    for (long long g : v.degrees) {
        if (g < 1) throw std::invalid_argument("ehrhart_series_closed: degree < 1");
        l = std::lcm(l, g);
    }

    if (threads < 1) threads = 1;
    std::vector<ClassCounts> partial(threads);
    std::size_t n = t.size();
    if (threads == 1) {
        for (std::size_t s = 0; s < n; ++s)
            parallelepiped_degrees(v, t.cone_at(s), partial[0]);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w) {
            std::size_t lo = n * w / threads, hi = n * (w + 1) / threads;
            pool.emplace_back([&, lo, hi, w] {
                for (std::size_t s = lo; s < hi; ++s)
                    parallelepiped_degrees(v, t.cone_at(s), partial[w]);
            });
        }
        for (auto& th : pool) th.join();
    }
    ClassCounts classes;
    for (const auto& p : partial) merge(classes, p);

    // assemble over the universal denominator (1-t^l)^d: expand each class
    // over its own degrees, multiply by the cofactor (1-t^l)/(1-t^{g_i})
    // implicitly by expanding to a power series and multiplying by
    // (1-t^l)^d at the end; the numerator degree is bounded by d*l
    const std::size_t L = static_cast<std::size_t>(d) * l + 1;
    std::vector<BigInteger> series(L);
    std::vector<BigInteger> buf;
    for (const auto& [key, counts] : classes) {
        buf.assign(L, 0);
        for (std::size_t i = 0; i < counts.size() && i < L; ++i) buf[i] = counts[i];
        for (long long g : key)
            for (std::size_t i = static_cast<std::size_t>(g); i < L; ++i)
                buf[i] += buf[i - g];
        for (std::size_t i = 0; i < L; ++i) series[i] += buf[i];
    }
    for (int f = 0; f < d; ++f)
        for (std::size_t i = L; i-- > static_cast<std::size_t>(l);)
            series[i] -= series[i - l];

    EhrhartSeries s;
    s.dim = d;
    s.numerator = std::move(series);
    while (!s.numerator.empty() && s.numerator.back() == 0) s.numerator.pop_back();
    s.denominator.assign(d, l);
    return reduce_representation(std::move(s));
}

EhrhartSeries reciprocity_transform(const EhrhartSeries& s) {
    int deg = s.degree();
    if (deg < 0) throw std::invalid_argument("reciprocity_transform: zero series");
    long long w = s.denominator_sum() - s.dim - deg;
    if (w < 0)
        throw std::invalid_argument("reciprocity_transform: negative shift");
    EhrhartSeries r;
    r.dim = s.dim;
    r.denominator = s.denominator;
    r.numerator.assign(static_cast<std::size_t>(w) + deg + 1, 0);
    for (int i = 0; i <= deg; ++i) r.numerator[w + deg - i] = s.numerator[i];
    while (!r.numerator.empty() && r.numerator.back() == 0) r.numerator.pop_back();
    return r;
}

EhrhartSeries reduce_representation(EhrhartSeries s) {
    std::sort(s.denominator.begin(), s.denominator.end(), std::greater<>());
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& e : s.denominator) {
            for (long long g : divisors_of(e)) {
                if (auto q = divide_step_poly(s.numerator, e, g)) {
                    s.numerator = std::move(*q);
                    e = g;
                    changed = true;
                    break;
                }
            }
        }
    }
    std::sort(s.denominator.begin(), s.denominator.end());
    return s;
}

BigRational QuasiPolynomial::eval(long long k) const {
    long long r = k % period;
    if (r < 0) r += period;
    BigRational acc(0);
    BigRational kq(to_mpz(k));
    for (int j = degree; j >= 0; --j) acc = acc * kq + coeffs[r][j];
    return acc;
}

QuasiPolynomial quasipolynomial(const EhrhartSeries& s) {
    const long long p = s.period();
    const int d = s.dim;
    if (s.degree() < 0) throw std::invalid_argument("quasipolynomial: zero series");
    const long long k0 = std::max<long long>(0, s.rational_degree() + 1);
    const std::size_t L = static_cast<std::size_t>(k0 + p + 2 * d * p + 1);
    auto coeffs = expand_series(s, L);

    QuasiPolynomial q;
    q.period = p;
    q.degree = d - 1;
    q.coeffs.resize(p);
    for (long long r = 0; r < p; ++r) {
        long long start = k0 + ((r - k0) % p + p) % p;
        // Newton interpolation through d points (start + j*p, coeff)
        std::vector<BigRational> xs(d), dd(d);
        for (int j = 0; j < d; ++j) {
            xs[j] = BigRational(to_mpz(start + j * p));
            dd[j] = BigRational(coeffs[start + j * p]);
        }
        for (int lvl = 1; lvl < d; ++lvl)
            for (int j = d - 1; j >= lvl; --j)
                dd[j] = (dd[j] - dd[j - 1]) / (xs[j] - xs[j - lvl]);
        std::vector<BigRational> poly(d, BigRational(0));
        poly[0] = dd[d - 1];
        int deg = 0;
        for (int j = d - 2; j >= 0; --j) {
            // poly = poly * (x - xs[j]) + dd[j]
            for (int i = deg + 1; i > 0; --i)
                poly[i] = (i <= deg ? poly[i] * (-xs[j]) : BigRational(0)) + poly[i - 1];
            poly[0] = poly[0] * (-xs[j]) + dd[j];
            ++deg;
        }
        q.coeffs[r] = std::move(poly);
        // validation on the next disjoint window
        for (int j = d; j < 2 * d; ++j) {
            long long k = start + j * p;
            if (q.eval(k) != BigRational(coeffs[k]))
                throw std::logic_error("quasipolynomial: validation window mismatch");
        }
    }
    return q;
}

long long min_voters(const EhrhartSeries& s) {
    for (std::size_t i = 0; i < s.numerator.size(); ++i)
        if (s.numerator[i] != 0) return static_cast<long long>(i);
    throw std::invalid_argument("min_voters: identically zero series");
}

namespace {

BigInteger horner(const std::vector<BigInteger>& coeffs, const BigInteger& k) {
    BigInteger acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * k + *it;
    return acc;
}

const std::vector<BigInteger> kR13 = {
    BigInteger("261812975764725"), BigInteger("308449567353120"),
    BigInteger("165347938576012"), BigInteger("50600971266720"),
    BigInteger("9607752151310"),   BigInteger("1183838427360"),
    BigInteger("96296973756"),     BigInteger("5130593760"),
    BigInteger("172122725"),       BigInteger("3296640"),
    BigInteger("27472")};

const std::vector<BigInteger> kR0 = {
    BigInteger("4981367114669230129152000"), BigInteger("11069309139290261311979520"),
    BigInteger("11286725167650172468985856"), BigInteger("6970525765323041332002816"),
    BigInteger("2896901556002851225731072"),  BigInteger("857336679021412589010944"),
    BigInteger("187293111169997407690752"),   BigInteger("30935327102400429176832"),
    BigInteger("3923664152075008433664"),     BigInteger("385511913998009006208"),
    BigInteger("29422431828810359328"),       BigInteger("1738486466127164288"),
    BigInteger("78715287099505056"),          BigInteger("2678620940814672"),
    BigInteger("66260942646564"),             BigInteger("1124326347564"),
    BigInteger("11698573833"),                BigInteger("56262656")};

const std::vector<BigInteger> kR2 = {
    BigInteger("9794451243189989376000"),    BigInteger("921057250987916963020800"),
    BigInteger("1705900639387417842032640"), BigInteger("1489106767895973053595648"),
    BigInteger("792353026020511342854144"),  BigInteger("284373446368099671547904"),
    BigInteger("72772788665361422238720"),   BigInteger("13747699097527641501696"),
    BigInteger("1960073323091557035648"),    BigInteger("213683286033339310848"),
    BigInteger("17913763440866689440"),      BigInteger("1153396601212907264"),
    BigInteger("56538334354261872"),         BigInteger("2071748534241792"),
    BigInteger("54936786331200"),            BigInteger("995421043392"),
    BigInteger("11023421961"),               BigInteger("56262656")};

}  // namespace

BigRational pcw_eval(long long k) {
    if (k <= 0) throw std::invalid_argument("pcw_eval: k must be positive");
    BigInteger kz = to_mpz(k);
    switch (k % 4) {
        case 1:
        case 3: {
            BigInteger num = horner(kR13, kz) * (kz + 12);
            BigInteger den = 32768;
            for (long long i = 2; i <= 22; i += 2) den *= kz + to_mpz(i);
            return make_rational(num, den);
        }
        case 0: {
            BigInteger num = horner(kR0, kz) * kz;
            BigInteger den = BigInteger("67108864");
            for (long long i = 0; i <= 5; ++i)
                den *= (kz + to_mpz(1 + 4 * i)) * (kz + to_mpz(2 + 4 * i)) *
                       (kz + to_mpz(3 + 4 * i));
            return make_rational(num, den);
        }
        default: {  // k % 4 == 2
            BigInteger num = horner(kR2, kz) * kz;
            BigInteger den = BigInteger("67108864");
            for (long long i = 0; i <= 5; ++i)
                den *= (kz + to_mpz(4 * i)) * (kz + to_mpz(1 + 4 * i)) *
                       (kz + to_mpz(3 + 4 * i));
            return make_rational(num, den);
        }
    }
}

}  // namespace votopes
