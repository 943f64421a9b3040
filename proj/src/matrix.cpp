#include "votopes/matrix.hpp"

#include <algorithm>
#include <cstdlib>

namespace votopes {

long long content_ll(const std::vector<long long>& v) {
    long long g = 0;
    for (long long x : v) {
        g = gcd_ll(g, x);
        if (g == 1) break;
    }
    return g;
}

std::string to_decimal_string(const BigRational& q, int digits) {
    if (q == 0) return "0";
    BigRational a = abs(q);
    // find e with 10^(e-1) <= a < 10^e
    int e = 0;
    BigRational t = a;
    while (t >= 1) {
        t /= 10;
        ++e;
    }
    while (t < BigRational(1, 10)) {
        t *= 10;
        --e;
    }
    // round a * 10^(digits - e) to nearest integer
    BigInteger scale = pow_int(10, static_cast<unsigned long>(std::abs(digits - e)));
    BigRational scaled = (digits - e >= 0) ? BigRational(a * scale) : BigRational(a / scale);
    BigInteger n = scaled.get_num(), d = scaled.get_den();
    BigInteger rounded = (2 * n + d) / (2 * d);
    std::string mant = rounded.get_str();
    if (static_cast<int>(mant.size()) > digits) {  // rounding carried, e.g. 999.96
        mant = mant.substr(0, digits);
        ++e;
    }
    std::string s;
    if (q < 0) s += "-";
    if (e <= 0) {
        s += "0.";
        s += std::string(-e, '0');
        s += mant;
    } else if (e >= digits) {
        s += mant;
        s += std::string(e - digits, '0');
    } else {
        s += mant.substr(0, e) + "." + mant.substr(e);
    }
    return s;
}

namespace linalg {
namespace {

using i128 = __int128;

const long long I64MAX = 0x7fffffffffffffffLL;

inline bool fits64(i128 v) { return v <= (i128)I64MAX && v >= -(i128)I64MAX; }

// Fraction-free forward elimination on the first n columns of a row-major
// n x m matrix. Returns false on fast-path overflow. On success `sign`
// holds the row-swap sign and `singular` is set if some pivot vanished.
bool bareiss_forward_i64(std::vector<long long>& a, int n, int m, int& sign,
                         bool& singular) {
    sign = 1;
    singular = false;
    long long prev = 1;
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (a[i * m + k] != 0) {
                p = i;
                break;
            }
        if (p < 0) {
            singular = true;
            return true;
        }
        if (p != k) {
            for (int j = 0; j < m; ++j) std::swap(a[p * m + j], a[k * m + j]);
            sign = -sign;
        }
        long long akk = a[k * m + k];
        for (int i = k + 1; i < n; ++i) {
            long long aik = a[i * m + k];
            for (int j = k + 1; j < m; ++j) {
                i128 t = (i128)a[i * m + j] * akk - (i128)aik * a[k * m + j];
                t /= prev;  // exact by Bareiss
                if (!fits64(t)) return false;
                a[i * m + j] = (long long)t;
            }
            a[i * m + k] = 0;
        }
        prev = akk;
    }
    return true;
}

void bareiss_forward_mpz(std::vector<BigInteger>& a, int n, int m, int& sign,
                         bool& singular) {
    sign = 1;
    singular = false;
    BigInteger prev = 1, t;
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (a[i * m + k] != 0) {
                p = i;
                break;
            }
        if (p < 0) {
            singular = true;
            return;
        }
        if (p != k) {
            for (int j = 0; j < m; ++j) std::swap(a[p * m + j], a[k * m + j]);
            sign = -sign;
        }
        const BigInteger akk = a[k * m + k];
        for (int i = k + 1; i < n; ++i) {
            const BigInteger aik = a[i * m + k];
            for (int j = k + 1; j < m; ++j) {
                t = a[i * m + j] * akk - aik * a[k * m + j];
                mpz_divexact(a[i * m + j].get_mpz_t(), t.get_mpz_t(),
                             prev.get_mpz_t());
            }
            a[i * m + k] = 0;
        }
        prev = akk;
    }
}

}  // namespace

std::optional<long long> det_i64(std::vector<long long> a, int n) {
    int sign;
    bool singular;
    if (!bareiss_forward_i64(a, n, n, sign, singular)) return std::nullopt;
    if (singular) return 0;
    return sign > 0 ? a[(n - 1) * n + (n - 1)] : -a[(n - 1) * n + (n - 1)];
}

BigInteger det_mpz(std::vector<BigInteger> a, int n) {
    int sign;
    bool singular;
    bareiss_forward_mpz(a, n, n, sign, singular);
    if (singular) return 0;
    return sign > 0 ? a[(n - 1) * n + (n - 1)] : -a[(n - 1) * n + (n - 1)];
}

int rank_rows(const std::vector<std::vector<long long>>& rows, int ncols) {
    int n = static_cast<int>(rows.size());
    if (n == 0) return 0;
    // fraction-free elimination, falling back to GMP on overflow
    std::vector<long long> a;
    a.reserve(static_cast<std::size_t>(n) * ncols);
    for (const auto& r : rows) {
        for (int j = 0; j < ncols; ++j) a.push_back(r[j]);
    }
    long long prev = 1;
    int rank = 0;
    bool overflow = false;
    for (int col = 0; col < ncols && rank < n && !overflow; ++col) {
        int p = -1;
        for (int i = rank; i < n; ++i)
            if (a[i * ncols + col] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != rank)
            for (int j = 0; j < ncols; ++j)
                std::swap(a[p * ncols + j], a[rank * ncols + j]);
        long long piv = a[rank * ncols + col];
        for (int i = rank + 1; i < n; ++i) {
            long long aic = a[i * ncols + col];
            if (aic == 0 && piv == prev) continue;
            for (int j = col; j < ncols; ++j) {
                i128 t = (i128)a[i * ncols + j] * piv - (i128)aic * a[rank * ncols + j];
                i128 q = t / prev;
                if (q * prev != t || !fits64(q)) {
                    overflow = true;
                    break;
                }
                a[i * ncols + j] = (long long)q;
            }
            if (overflow) break;
        }
        prev = piv;
        ++rank;
    }
    if (!overflow) return rank;

    // GMP path
    std::vector<BigInteger> b;
    b.reserve(static_cast<std::size_t>(n) * ncols);
    for (const auto& r : rows)
        for (int j = 0; j < ncols; ++j) b.push_back(to_mpz(r[j]));
    BigInteger prevz = 1, t;
    rank = 0;
    for (int col = 0; col < ncols && rank < n; ++col) {
        int p = -1;
        for (int i = rank; i < n; ++i)
            if (b[i * ncols + col] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != rank)
            for (int j = 0; j < ncols; ++j)
                std::swap(b[p * ncols + j], b[rank * ncols + j]);
        BigInteger piv = b[rank * ncols + col];
        for (int i = rank + 1; i < n; ++i) {
            BigInteger aic = b[i * ncols + col];
            for (int j = col; j < ncols; ++j) {
                t = b[i * ncols + j] * piv - aic * b[rank * ncols + j];
                mpz_divexact(b[i * ncols + j].get_mpz_t(), t.get_mpz_t(),
                             prevz.get_mpz_t());
            }
        }
        prevz = piv;
        ++rank;
    }
    return rank;
}

std::optional<AdjSolve64> adj_solve_i64(const std::vector<long long>& a0, int n,
                                        const std::vector<long long>& b) {
    int m = n + 1;
    std::vector<long long> a(static_cast<std::size_t>(n) * m);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i * m + j] = a0[i * n + j];
        a[i * m + n] = b[i];
    }
    int sign;
    bool singular;
    if (!bareiss_forward_i64(a, n, m, sign, singular)) return std::nullopt;
    if (singular) return std::nullopt;
    long long det = sign > 0 ? a[(n - 1) * m + (n - 1)] : -a[(n - 1) * m + (n - 1)];
    AdjSolve64 out;
    out.det = det;
    out.x.assign(n, 0);
    for (int i = n - 1; i >= 0; --i) {
        i128 num = (i128)det * a[i * m + n];
        for (int j = i + 1; j < n; ++j) {
            i128 p = (i128)a[i * m + j] * out.x[j];
            num -= p;
        }
        i128 x = num / a[i * m + i];
        if (x * a[i * m + i] != num) return std::nullopt;  // overflow corrupted it
        if (!fits64(x)) return std::nullopt;
        out.x[i] = (long long)x;
    }
    return out;
}

AdjSolveZ adj_solve_mpz(const std::vector<BigInteger>& a0, int n,
                        const std::vector<BigInteger>& b) {
    int m = n + 1;
    std::vector<BigInteger> a(static_cast<std::size_t>(n) * m);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i * m + j] = a0[i * n + j];
        a[i * m + n] = b[i];
    }
    int sign;
    bool singular;
    bareiss_forward_mpz(a, n, m, sign, singular);
    if (singular) throw std::invalid_argument("adj_solve_mpz: singular matrix");
    BigInteger det = sign > 0 ? a[(n - 1) * m + (n - 1)] : -a[(n - 1) * m + (n - 1)];
    AdjSolveZ out;
    out.det = det;
    out.x.assign(n, 0);
    BigInteger num;
    for (int i = n - 1; i >= 0; --i) {
        num = det * a[i * m + n];
        for (int j = i + 1; j < n; ++j) num -= a[i * m + j] * out.x[j];
        mpz_divexact(out.x[i].get_mpz_t(), num.get_mpz_t(), a[i * m + i].get_mpz_t());
    }
    return out;
}

AdjugateZ adjugate_mpz(const std::vector<BigInteger>& a0, int n) {
    int m = 2 * n;
    std::vector<BigInteger> a(static_cast<std::size_t>(n) * m);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i * m + j] = a0[i * n + j];
        a[i * m + n + i] = 1;
    }
    int sign;
    bool singular;
    bareiss_forward_mpz(a, n, m, sign, singular);
    if (singular) throw std::invalid_argument("adjugate_mpz: singular matrix");
    BigInteger det = sign > 0 ? a[(n - 1) * m + (n - 1)] : -a[(n - 1) * m + (n - 1)];
    AdjugateZ out;
    out.det = det;
    out.adj.assign(static_cast<std::size_t>(n) * n, 0);
    BigInteger num;
    for (int col = 0; col < n; ++col) {
        for (int i = n - 1; i >= 0; --i) {
            num = det * a[i * m + n + col];
            for (int j = i + 1; j < n; ++j) num -= a[i * m + j] * out.adj[j * n + col];
            mpz_divexact(out.adj[i * n + col].get_mpz_t(), num.get_mpz_t(),
                         a[i * m + i].get_mpz_t());
        }
    }
    return out;
}

std::optional<Adjugate64> adjugate_i64(const std::vector<long long>& a0, int n) {
    int m = 2 * n;
    std::vector<long long> a(static_cast<std::size_t>(n) * m, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i * m + j] = a0[i * n + j];
        a[i * m + n + i] = 1;
    }
    int sign;
    bool singular;
    if (!bareiss_forward_i64(a, n, m, sign, singular)) return std::nullopt;
    if (singular) return std::nullopt;
    long long det = sign > 0 ? a[(n - 1) * m + (n - 1)] : -a[(n - 1) * m + (n - 1)];
    Adjugate64 out;
    out.det = det;
    out.adj.assign(static_cast<std::size_t>(n) * n, 0);
    for (int col = 0; col < n; ++col) {
        for (int i = n - 1; i >= 0; --i) {
            i128 num = (i128)det * a[i * m + n + col];
            for (int j = i + 1; j < n; ++j)
                num -= (i128)a[i * m + j] * out.adj[j * n + col];
            i128 x = num / a[i * m + i];
            if (x * a[i * m + i] != num) return std::nullopt;
            if (!fits64(x)) return std::nullopt;
            out.adj[i * n + col] = (long long)x;
        }
    }
    return out;
}

}  // namespace linalg

BigInteger det(const IntMatrix& mat) {
    if (mat.rows() != mat.cols())
        throw std::invalid_argument("det: matrix is not square");
    int n = static_cast<int>(mat.rows());
    if (n == 0) return 1;
    bool small = true;
    std::vector<long long> a;
    a.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n && small; ++i)
        for (int j = 0; j < n; ++j) {
            const BigInteger& e = mat.at(i, j);
            if (!e.fits_slong_p()) {
                small = false;
                break;
            }
            a.push_back(e.get_si());
        }
    if (small) {
        if (auto d = linalg::det_i64(std::move(a), n)) return to_mpz(*d);
    }
    std::vector<BigInteger> b;
    b.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b.push_back(mat.at(i, j));
    return linalg::det_mpz(std::move(b), n);
}

}  // namespace votopes
