#pragma once

// Exact linear algebra over arbitrary-precision rationals and integers.
// Everything downstream (spectral pages, homology of dual complexes,
// nilpotency indices) routes through the operations in this header, so
// all arithmetic here is exact: there is no floating point anywhere.
//
// Conventions:
//   * Matrices act on column vectors; a map V -> W is a (dim W) x (dim V)
//     matrix.
//   * smith_normal_form returns U, D, V with U*m*V = D, U and V unimodular,
//     D diagonal with nonnegative entries d1 | d2 | ... Pivoting picks the
//     entry of smallest absolute value, ties broken by lowest row index,
//     then lowest column index, so the output is deterministic.
//   * ChainComplex stores homological differentials d_n : C_n -> C_{n-1}.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace degen {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

template <typename T>
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        entries_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw std::invalid_argument("Matrix: ragged initializer");
            entries_.insert(entries_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (e != 0) return false;
        return true;
    }

    bool is_square() const { return rows_ == cols_; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Matrix sum: shape mismatch");
        Matrix c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.entries_.size(); ++i) c.entries_[i] = a.entries_[i] + b.entries_[i];
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Matrix difference: shape mismatch");
        Matrix c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.entries_.size(); ++i) c.entries_[i] = a.entries_[i] - b.entries_[i];
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> entries_;
};

using ZMatrix = Matrix<Int>;
using QMatrix = Matrix<Rat>;

inline QMatrix to_rational(const ZMatrix& m) {
    QMatrix q(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rat(m(i, j));
    return q;
}

// Row echelon rank by exact Gaussian elimination.
inline std::size_t rank(QMatrix m) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != r)
            for (std::size_t j = col; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, col) == 0) continue;
            Rat f = m(i, col) / m(r, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

inline std::size_t rank(const ZMatrix& m) { return rank(to_rational(m)); }

// Columns of the result form a basis of the kernel of m.
inline QMatrix kernel_basis(const QMatrix& m) {
    QMatrix a = m;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
        std::size_t pivot = r;
        while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(r, j));
        Rat inv = Rat(1) / a(r, col);
        for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, col) == 0) continue;
            Rat f = a(i, col);
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        pivot_col.push_back(col);
        ++r;
    }
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::size_t nullity = m.cols() - pivot_col.size();
    QMatrix k(m.cols(), nullity);
    std::size_t out = 0;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        k(free_col, out) = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) k(pivot_col[i], out) = -a(i, free_col);
        ++out;
    }
    return k;
}

inline bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace detail {

inline Int mod_norm(Int a, const Int& p) {
    a %= p;
    if (a < 0) a += p;
    return a;
}

inline Int mod_inverse(const Int& a, const Int& p) {
    Int old_r = mod_norm(a, p), r = p;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) throw std::invalid_argument("mod_inverse: not invertible");
    return mod_norm(old_s, p);
}

} // namespace detail

// Rank over F_p. Rational entries are reduced via num * den^{-1}; a
// denominator divisible by p is a structural error.
inline std::size_t rank_mod_p(const QMatrix& m, unsigned p) {
    if (!is_prime(p)) throw std::invalid_argument("rank_mod_p: characteristic must be prime");
    Int ip(p);
    ZMatrix a(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Int num = boost::multiprecision::numerator(m(i, j));
            Int den = boost::multiprecision::denominator(m(i, j));
            if (detail::mod_norm(den, ip) == 0)
                throw std::invalid_argument("rank_mod_p: denominator divisible by p");
            a(i, j) = detail::mod_norm(num * detail::mod_inverse(den, ip), ip);
        }
    std::size_t r = 0;
    for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
        std::size_t pivot = r;
        while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != r)
            for (std::size_t j = col; j < a.cols(); ++j) std::swap(a(pivot, j), a(r, j));
        Int inv = detail::mod_inverse(a(r, col), ip);
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (a(i, col) == 0) continue;
            Int f = detail::mod_norm(a(i, col) * inv, ip);
            for (std::size_t j = col; j < a.cols(); ++j)
                a(i, j) = detail::mod_norm(a(i, j) - f * a(r, j), ip);
        }
        ++r;
    }
    return r;
}

inline std::size_t rank_mod_p(const ZMatrix& m, unsigned p) { return rank_mod_p(to_rational(m), p); }

// Fraction-free determinant (Bareiss).
inline Int determinant(ZMatrix m) {
    if (!m.is_square()) throw std::invalid_argument("determinant: matrix not square");
    std::size_t n = m.rows();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m(pivot, k) == 0) ++pivot;
            if (pivot == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

struct SmithResult {
    ZMatrix u; // rows x rows, unimodular
    ZMatrix d; // diagonal, d1 | d2 | ..., entries nonnegative
    ZMatrix v; // cols x cols, unimodular

    std::vector<Int> invariant_factors() const {
        std::vector<Int> f;
        std::size_t n = std::min(d.rows(), d.cols());
        for (std::size_t i = 0; i < n; ++i)
            if (d(i, i) != 0) f.push_back(d(i, i));
        return f;
    }
};

inline SmithResult smith_normal_form(ZMatrix a) {
    using boost::multiprecision::abs;
    const std::size_t rows = a.rows(), cols = a.cols();
    ZMatrix u = ZMatrix::identity(rows);
    ZMatrix v = ZMatrix::identity(cols);

    auto swap_rows = [&](std::size_t x, std::size_t y) {
        if (x == y) return;
        for (std::size_t j = 0; j < cols; ++j) std::swap(a(x, j), a(y, j));
        for (std::size_t j = 0; j < rows; ++j) std::swap(u(x, j), u(y, j));
    };
    auto swap_cols = [&](std::size_t x, std::size_t y) {
        if (x == y) return;
        for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, x), a(i, y));
        for (std::size_t i = 0; i < cols; ++i) std::swap(v(i, x), v(i, y));
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t j = 0; j < cols; ++j) a(dst, j) += f * a(src, j);
        for (std::size_t j = 0; j < rows; ++j) u(dst, j) += f * u(src, j);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t i = 0; i < rows; ++i) a(i, dst) += f * a(i, src);
        for (std::size_t i = 0; i < cols; ++i) v(i, dst) += f * v(i, src);
    };

    std::size_t n = std::min(rows, cols);
    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // smallest |entry|, ties by lowest row then lowest column
            bool found = false;
            std::size_t pi = t, pj = t;
            Int best;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    if (a(i, j) == 0) continue;
                    Int m = abs(a(i, j));
                    if (!found || m < best) {
                        found = true;
                        best = m;
                        pi = i;
                        pj = j;
                    }
                }
            if (!found) { t = n; break; }
            swap_rows(t, pi);
            swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) continue;
                add_row(i, t, -(a(i, t) / a(t, t)));
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) continue;
                add_col(j, t, -(a(t, j) / a(t, t)));
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // pivot must divide everything below-right for the factor chain
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols && divides; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        add_row(t, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (t >= n) break;
    }

    for (std::size_t t = 0; t < n; ++t) {
        if (a(t, t) < 0) {
            for (std::size_t j = 0; j < cols; ++j) a(t, j) = -a(t, j);
            for (std::size_t j = 0; j < rows; ++j) u(t, j) = -u(t, j);
        }
    }
    return SmithResult{std::move(u), std::move(a), std::move(v)};
}

// Graded complex with d_n : C_n -> C_{n-1}. dims[k] is the dimension in
// degree lowest + k, differentials[k] maps degree lowest + k down; the
// k = 0 differential maps to the zero space and has zero rows.
template <typename T>
struct ChainComplex {
    int lowest = 0;
    std::vector<std::size_t> dims;
    std::vector<Matrix<T>> differentials;

    int highest() const { return lowest + static_cast<int>(dims.size()) - 1; }

    void validate() const {
        if (dims.size() != differentials.size())
            throw std::invalid_argument("ChainComplex: dims/differentials length mismatch");
        for (std::size_t k = 0; k < dims.size(); ++k) {
            std::size_t target = k == 0 ? 0 : dims[k - 1];
            if (differentials[k].rows() != target || differentials[k].cols() != dims[k])
                throw std::invalid_argument("ChainComplex: differential shape mismatch at degree " +
                                            std::to_string(lowest + static_cast<int>(k)));
        }
        for (std::size_t k = 1; k + 1 < dims.size(); ++k) {
            if (!(differentials[k] * differentials[k + 1]).is_zero())
                throw std::invalid_argument("ChainComplex: d∘d != 0 at degree " +
                                            std::to_string(lowest + static_cast<int>(k) + 1));
        }
    }
};

using ZChainComplex = ChainComplex<Int>;
using QChainComplex = ChainComplex<Rat>;

inline QChainComplex to_rational(const ZChainComplex& c) {
    QChainComplex q;
    q.lowest = c.lowest;
    q.dims = c.dims;
    q.differentials.reserve(c.differentials.size());
    for (const auto& d : c.differentials) q.differentials.push_back(to_rational(d));
    return q;
}

// dim H_n = dim ker d_n - rank d_{n+1}, over Q (char 0) or F_p (char p).
inline std::map<int, std::size_t> homology_dims(const QChainComplex& c, unsigned field_char) {
    if (field_char != 0 && !is_prime(field_char))
        throw std::invalid_argument("homology_dims: field characteristic must be 0 or prime");
    c.validate();
    auto rk = [&](const QMatrix& m) {
        return field_char == 0 ? rank(m) : rank_mod_p(m, field_char);
    };
    std::map<int, std::size_t> h;
    for (std::size_t k = 0; k < c.dims.size(); ++k) {
        std::size_t rank_out = rk(c.differentials[k]);
        std::size_t rank_in = k + 1 < c.dims.size() ? rk(c.differentials[k + 1]) : 0;
        h[c.lowest + static_cast<int>(k)] = c.dims[k] - rank_out - rank_in;
    }
    return h;
}

inline std::map<int, std::size_t> homology_dims(const ZChainComplex& c, unsigned field_char) {
    return homology_dims(to_rational(c), field_char);
}

// H_n(Z) = Z^free_rank + sum of Z/f for the listed invariant factors (> 1).
struct IntegerHomology {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;
};

inline std::map<int, IntegerHomology> integer_homology(const ZChainComplex& c) {
    c.validate();
    std::vector<SmithResult> smith;
    smith.reserve(c.differentials.size());
    for (const auto& d : c.differentials) smith.push_back(smith_normal_form(d));
    std::map<int, IntegerHomology> h;
    for (std::size_t k = 0; k < c.dims.size(); ++k) {
        std::size_t rank_out = smith[k].invariant_factors().size();
        IntegerHomology deg;
        if (k + 1 < c.dims.size()) {
            auto factors = smith[k + 1].invariant_factors();
            deg.free_rank = c.dims[k] - rank_out - factors.size();
            for (const auto& f : factors)
                if (f > 1) deg.torsion.push_back(f);
        } else {
            deg.free_rank = c.dims[k] - rank_out;
        }
        h[c.lowest + static_cast<int>(k)] = std::move(deg);
    }
    return h;
}

// Operator with matrix^k = 0 for some k <= dim.
struct NilpotentOperator {
    std::size_t dim = 0;
    QMatrix matrix;

    void validate() const {
        if (!matrix.is_square() || matrix.rows() != dim)
            throw std::invalid_argument("NilpotentOperator: matrix must be dim x dim");
    }
};

// Smallest k >= 1 with matrix^k = 0; the zero operator has index 1.
inline std::size_t nilpotency_index(const NilpotentOperator& n) {
    n.validate();
    if (n.dim == 0) return 1;
    QMatrix power = n.matrix;
    for (std::size_t k = 1; k <= n.dim; ++k) {
        if (power.is_zero()) return k;
        power = power * n.matrix;
    }
    throw std::invalid_argument("nilpotency_index: operator is not nilpotent");
}

// Induced operator N∧1 + 1∧N on the exterior square, in the basis
// e_i ∧ e_j (i < j) ordered lexicographically.
inline NilpotentOperator wedge_square(const NilpotentOperator& n) {
    n.validate();
    const std::size_t d = n.dim;
    std::vector<std::vector<std::size_t>> pair_index(d, std::vector<std::size_t>(d, 0));
    std::size_t count = 0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) pair_index[i][j] = count++;

    QMatrix w(count, count);
    auto accumulate = [&](std::size_t col, std::size_t a, std::size_t b, const Rat& coeff) {
        if (a == b || coeff == 0) return;
        if (a < b)
            w(pair_index[a][b], col) += coeff;
        else
            w(pair_index[b][a], col) -= coeff;
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            std::size_t col = pair_index[i][j];
            for (std::size_t k = 0; k < d; ++k) {
                accumulate(col, k, j, n.matrix(k, i)); // (N e_i) ∧ e_j
                accumulate(col, i, k, n.matrix(k, j)); // e_i ∧ (N e_j)
            }
        }
    return NilpotentOperator{count, std::move(w)};
}

} // namespace degen
