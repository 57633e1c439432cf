#include "atv/int_matrix.hpp"

#include <sstream>

#include "atv/error.hpp"

namespace atv {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw Error(ErrorCode::invalid_parameters, "entry count does not match matrix shape");
    }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw Error(ErrorCode::invalid_parameters, "ragged initializer for IntMatrix");
        }
        for (long v : row) entries_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) {
        throw Error(ErrorCode::invalid_parameters, "matrix product shape mismatch");
    }
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t l = 0; l < cols_; ++l) {
            const mpz_class& a = at(i, l);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                out.at(i, j) += a * rhs.at(l, j);
            }
        }
    }
    return out;
}

bool IntMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (e != 0) return false;
    return true;
}

mpz_class IntMatrix::determinant() const {
    if (rows_ != cols_) {
        throw Error(ErrorCode::invalid_parameters, "determinant of non-square matrix");
    }
    const std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t t = 0; t + 1 < n; ++t) {
        if (a.at(t, t) == 0) {
            std::size_t piv = t + 1;
            while (piv < n && a.at(piv, t) == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(t, j), a.at(piv, j));
            sign = -sign;
        }
        for (std::size_t i = t + 1; i < n; ++i) {
            for (std::size_t j = t + 1; j < n; ++j) {
                mpz_class num = a.at(t, t) * a.at(i, j) - a.at(i, t) * a.at(t, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a.at(i, t) = 0;
        }
        prev = a.at(t, t);
    }
    return sign * a.at(n - 1, n - 1);
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << at(i, j);
        }
        os << '\n';
    }
    return os.str();
}

std::vector<mpz_class> SnfResult::elementary_divisors() const {
    std::vector<mpz_class> out;
    std::size_t n = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i < n; ++i)
        if (d.at(i, i) != 0) out.push_back(d.at(i, i));
    return out;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row a -= q * row b
void submul_row(IntMatrix& m, std::size_t a, std::size_t b, const mpz_class& q) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) -= q * m.at(b, j);
}

void submul_col(IntMatrix& m, std::size_t a, std::size_t b, const mpz_class& q) {
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, a) -= q * m.at(i, b);
}

void add_row(IntMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) += m.at(b, j);
}

void negate_row(IntMatrix& m, std::size_t a) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
}

} // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
    SnfResult res{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    IntMatrix& d = res.d;
    IntMatrix& u = res.u;
    IntMatrix& v = res.v;
    const std::size_t nmin = std::min(d.rows(), d.cols());

    for (std::size_t t = 0; t < nmin; ++t) {
    restart:
        // Pivot of minimal nonzero absolute value in the trailing block.
        std::size_t pi = t, pj = t;
        bool found = false;
        mpz_class best;
        for (std::size_t i = t; i < d.rows(); ++i) {
            for (std::size_t j = t; j < d.cols(); ++j) {
                if (d.at(i, j) == 0) continue;
                mpz_class a = abs(d.at(i, j));
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        }
        if (!found) break; // trailing block is zero

        if (pi != t) { swap_rows(d, t, pi); swap_rows(u, t, pi); }
        if (pj != t) { swap_cols(d, t, pj); swap_cols(v, t, pj); }

        // Clear row and column t. A nonzero remainder becomes the new,
        // strictly smaller pivot on the next pass.
        bool dirty = false;
        for (std::size_t i = t + 1; i < d.rows(); ++i) {
            if (d.at(i, t) == 0) continue;
            mpz_class q = d.at(i, t) / d.at(t, t);
            submul_row(d, i, t, q);
            submul_row(u, i, t, q);
            if (d.at(i, t) != 0) dirty = true;
        }
        for (std::size_t j = t + 1; j < d.cols(); ++j) {
            if (d.at(t, j) == 0) continue;
            mpz_class q = d.at(t, j) / d.at(t, t);
            submul_col(d, j, t, q);
            submul_col(v, j, t, q);
            if (d.at(t, j) != 0) dirty = true;
        }
        if (dirty) goto restart;

        // Pivot must divide every entry of the remaining block.
        for (std::size_t i = t + 1; i < d.rows(); ++i) {
            for (std::size_t j = t + 1; j < d.cols(); ++j) {
                if (d.at(i, j) % d.at(t, t) != 0) {
                    add_row(d, t, i);
                    add_row(u, t, i);
                    goto restart;
                }
            }
        }

        if (d.at(t, t) < 0) {
            negate_row(d, t);
            negate_row(u, t);
        }
    }
    return res;
}

std::size_t rank(const IntMatrix& m) {
    return smith_normal_form(m).elementary_divisors().size();
}

mpz_class count_kernel_mod_k(const IntMatrix& m, const mpz_class& k) {
    if (k < 1) throw Error(ErrorCode::invalid_parameters, "modulus k must be >= 1");
    auto divisors = smith_normal_form(m).elementary_divisors();
    mpz_class count = 1;
    for (const auto& di : divisors) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), di.get_mpz_t(), k.get_mpz_t());
        count *= g;
    }
    mpz_class kp;
    mpz_pow_ui(kp.get_mpz_t(), k.get_mpz_t(),
               static_cast<unsigned long>(m.cols() - divisors.size()));
    return count * kp;
}

} // namespace atv
