#pragma once

#include <string>
#include <vector>

#include "twistlab/error.hpp"
#include "twistlab/scalar.hpp"

namespace twistlab {

/// Dense matrix over the exact scalar field. Dimensions in this project stay
/// small (at most 27x27 on the default path), so dense storage wins over any
/// sparsity bookkeeping.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
        return m;
    }
    static Matrix zero(int n) { return Matrix(n, n); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Scalar& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool is_zero() const {
        for (const auto& s : a_)
            if (!s.is_zero()) return false;
        return true;
    }
    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!((*this)(i, j) == (i == j ? Scalar(1) : Scalar(0)))) return false;
        return true;
    }

    Matrix operator+(const Matrix& o) const {
        require_same_shape(o);
        Matrix m(rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] + o.a_[k];
        return m;
    }
    Matrix operator-(const Matrix& o) const {
        require_same_shape(o);
        Matrix m(rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] - o.a_[k];
        return m;
    }
    Matrix operator-() const {
        Matrix m(rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = -a_[k];
        return m;
    }
    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw dimension_error("matrix product shape mismatch");
        Matrix m(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Scalar& aik = (*this)(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    const Scalar& bkj = o(k, j);
                    if (bkj.is_zero()) continue;
                    m(i, j) += aik * bkj;
                }
            }
        return m;
    }
    Matrix operator*(const Scalar& c) const {
        Matrix m(rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] * c;
        return m;
    }
    Matrix& operator+=(const Matrix& o) { return *this = *this + o; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const {
        Matrix m(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    Matrix pow(unsigned n) const {
        Matrix m = identity(rows_);
        for (unsigned i = 0; i < n; ++i) m = m * (*this);
        return m;
    }

    Matrix substitute(const std::map<Param, Scalar>& bindings) const {
        Matrix m(rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k].substitute(bindings);
        return m;
    }

    /// First nonzero entry in row-major order, as (i, j); (-1, -1) if none.
    /// Used to produce deterministic witnesses.
    std::pair<int, int> first_nonzero() const {
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero()) return {i, j};
        return {-1, -1};
    }

  private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_error("matrix shape mismatch");
    }

    int rows_, cols_;
    std::vector<Scalar> a_;
};

inline Matrix operator*(const Scalar& c, const Matrix& m) { return m * c; }

inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l) {
                    if (b(k, l).is_zero()) continue;
                    m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
                }
        }
    return m;
}

/// Conjugation by the flip of the two tensor legs of a d^2 x d^2 matrix.
inline Matrix swap_legs(const Matrix& a, int d) {
    if (a.rows() != d * d || a.cols() != d * d) throw dimension_error("swap_legs needs a d^2 matrix");
    Matrix m(d * d, d * d);
    for (int i1 = 0; i1 < d; ++i1)
        for (int i2 = 0; i2 < d; ++i2)
            for (int j1 = 0; j1 < d; ++j1)
                for (int j2 = 0; j2 < d; ++j2)
                    m(i2 * d + i1, j2 * d + j1) = a(i1 * d + i2, j1 * d + j2);
    return m;
}

enum class LegPair { L12, L13, L23 };

inline const char* leg_pair_name(LegPair p) {
    switch (p) {
        case LegPair::L12: return "12";
        case LegPair::L13: return "13";
        case LegPair::L23: return "23";
    }
    return "?";
}

/// Place a two-leg operator on the named pair of three tensor legs, acting as
/// the identity on the remaining leg. Legs may carry different dimensions.
inline Matrix embed_pair(const Matrix& a, LegPair legs, int d1, int d2, int d3) {
    int da = 0, db = 0;
    switch (legs) {
        case LegPair::L12: da = d1; db = d2; break;
        case LegPair::L13: da = d1; db = d3; break;
        case LegPair::L23: da = d2; db = d3; break;
    }
    if (a.rows() != da * db || a.cols() != da * db)
        throw dimension_error("embed_pair dimension mismatch for legs " + std::string(leg_pair_name(legs)));
    int n = d1 * d2 * d3;
    Matrix m(n, n);
    auto idx = [&](int i1, int i2, int i3) { return (i1 * d2 + i2) * d3 + i3; };
    for (int i1 = 0; i1 < d1; ++i1)
        for (int i2 = 0; i2 < d2; ++i2)
            for (int i3 = 0; i3 < d3; ++i3)
                for (int j1 = 0; j1 < d1; ++j1)
                    for (int j2 = 0; j2 < d2; ++j2)
                        for (int j3 = 0; j3 < d3; ++j3) {
                            Scalar val;
                            switch (legs) {
                                case LegPair::L12:
                                    if (i3 != j3) continue;
                                    val = a(i1 * d2 + i2, j1 * d2 + j2);
                                    break;
                                case LegPair::L13:
                                    if (i2 != j2) continue;
                                    val = a(i1 * d3 + i3, j1 * d3 + j3);
                                    break;
                                case LegPair::L23:
                                    if (i1 != j1) continue;
                                    val = a(i2 * d3 + i3, j2 * d3 + j3);
                                    break;
                            }
                            if (!val.is_zero()) m(idx(i1, i2, i3), idx(j1, j2, j3)) = val;
                        }
    return m;
}

inline Matrix embed_pair(const Matrix& a, LegPair legs, int d) { return embed_pair(a, legs, d, d, d); }

/// Terminating exponential of a nilpotent matrix. Throws nilpotency_error
/// (with the first surviving power) when M^k fails to vanish for k <= dim.
inline Matrix mat_exp_nilpotent(const Matrix& m) {
    if (m.rows() != m.cols()) throw dimension_error("exp of a non-square matrix");
    int n = m.rows();
    Matrix sum = Matrix::identity(n);
    Matrix term = m;  // M^k / k!
    for (int k = 1; !term.is_zero(); ++k) {
        if (k > n) throw nilpotency_error("matrix exponential of a non-nilpotent matrix", k);
        sum += term;
        term = term * m * Scalar(make_rational(1, k + 1));
    }
    return sum;
}

/// Terminating logarithm of a unipotent matrix (M = 1 + N with N nilpotent);
/// exact inverse of mat_exp_nilpotent.
inline Matrix mat_log_unipotent(const Matrix& m) {
    if (m.rows() != m.cols()) throw dimension_error("log of a non-square matrix");
    int n = m.rows();
    Matrix nil = m - Matrix::identity(n);
    Matrix sum(n, n);
    Matrix power = nil;
    for (int k = 1; !power.is_zero(); ++k) {
        if (k > n) throw nilpotency_error("matrix logarithm of a non-unipotent matrix", k);
        Scalar coeff = Scalar(make_rational(k % 2 == 1 ? 1 : -1, k));
        sum += power * coeff;
        power = power * nil;
    }
    return sum;
}

/// Exact Gauss-Jordan inverse. Throws arith_error on a singular input.
inline Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw dimension_error("inverse of a non-square matrix");
    int n = m.rows();
    Matrix a = m, inv = Matrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!a(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw arith_error("matrix is singular");
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        Scalar p = a(col, col);
        for (int j = 0; j < n; ++j) {
            a(col, j) = a(col, j) / p;
            inv(col, j) = inv(col, j) / p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            Scalar f = a(r, col);
            for (int j = 0; j < n; ++j) {
                a(r, j) = a(r, j) - f * a(col, j);
                inv(r, j) = inv(r, j) - f * inv(col, j);
            }
        }
    }
    return inv;
}

/// Exact pairwise commutativity test of a family.
inline bool all_commute(const std::vector<Matrix>& ms) {
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            if (ms[i] * ms[j] != ms[j] * ms[i]) return false;
    return true;
}

}  // namespace twistlab
