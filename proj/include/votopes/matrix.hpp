#ifndef VOTOPES_MATRIX_HPP
#define VOTOPES_MATRIX_HPP

#include <optional>
#include <vector>

#include "votopes/arith.hpp"

namespace votopes {

// Dense integer matrix with bounds-checked access.
class IntMatrix {
  public:
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInteger& at(std::size_t r, std::size_t c) {
        check(r, c);
        return entries_[r * cols_ + c];
    }
    const BigInteger& at(std::size_t r, std::size_t c) const {
        check(r, c);
        return entries_[r * cols_ + c];
    }

  private:
    void check(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) throw std::out_of_range("IntMatrix::at");
    }
    std::size_t rows_, cols_;
    std::vector<BigInteger> entries_;
};

// Exact determinant, fraction-free (Bareiss). 64-bit fast path with
// overflow detection, GMP fallback. Throws on non-square input.
BigInteger det(const IntMatrix& m);

namespace linalg {

// All matrices below are row-major n x m.

// Determinant of an n x n int64 matrix; nullopt if an intermediate
// overflows the fast path.
std::optional<long long> det_i64(std::vector<long long> a, int n);

BigInteger det_mpz(std::vector<BigInteger> a, int n);

// Rank over Q of a list of integer row vectors.
int rank_rows(const std::vector<std::vector<long long>>& rows, int ncols);

// Solves A * x = det(A) * b exactly (x = adjugate(A) * b) for a
// nonsingular n x n system. Fast path; nullopt on overflow.
struct AdjSolve64 {
    long long det;
    std::vector<long long> x;
};
std::optional<AdjSolve64> adj_solve_i64(const std::vector<long long>& a, int n,
                                        const std::vector<long long>& b);

struct AdjSolveZ {
    BigInteger det;
    std::vector<BigInteger> x;
};
AdjSolveZ adj_solve_mpz(const std::vector<BigInteger>& a, int n,
                        const std::vector<BigInteger>& b);

// Full adjugate: A * adj = det(A) * I. Row-major result.
struct AdjugateZ {
    BigInteger det;
    std::vector<BigInteger> adj;
};
AdjugateZ adjugate_mpz(const std::vector<BigInteger>& a, int n);

struct Adjugate64 {
    long long det;
    std::vector<long long> adj;
};
std::optional<Adjugate64> adjugate_i64(const std::vector<long long>& a, int n);

}  // namespace linalg

}  // namespace votopes

#endif
