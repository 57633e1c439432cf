#ifndef ATV_INT_MATRIX_HPP
#define ATV_INT_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace atv {

/// Dense matrix of arbitrary-precision integers, row-major.
/// Zero-dimensional shapes (0 rows and/or 0 columns) are valid and
/// stand for maps to or from the trivial group.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}

    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    IntMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries);

    /// Row-major brace construction, e.g. IntMatrix({{2, 0}, {0, 3}}).
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const mpz_class& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    mpz_class& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const = default;

    bool is_zero() const;

    /// Determinant of a square matrix by fraction-free (Bareiss) elimination.
    mpz_class determinant() const;

    std::string to_string() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<mpz_class> entries_;
};

/// Decomposition u * m * v = d with u, v unimodular and d diagonal,
/// diagonal entries nonnegative with d_i | d_{i+1}.
struct SnfResult {
    IntMatrix d;
    IntMatrix u;
    IntMatrix v;

    /// Nonzero diagonal entries of d, in order.
    std::vector<mpz_class> elementary_divisors() const;
};

SnfResult smith_normal_form(const IntMatrix& m);

/// Number of nonzero elementary divisors.
std::size_t rank(const IntMatrix& m);

/// |{x in (Z/kZ)^cols : m x = 0 mod k}|, exactly.
/// Equals prod_i gcd(d_i, k) * k^(cols - r) over the r nonzero divisors d_i.
mpz_class count_kernel_mod_k(const IntMatrix& m, const mpz_class& k);

} // namespace atv

#endif
