#pragma once

#include "pfcohom/cyclotomic.hpp"
#include "pfcohom/rational.hpp"

#include <cstddef>
#include <vector>

namespace pfc {

template <class F>
struct FieldOps;

template <>
struct FieldOps<Rat> {
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static bool is_zero(const Rat& x) { return x == 0; }
    static Rat conj(const Rat& x) { return x; }
    static Rat from_rat(const Rat& x) { return x; }
};

template <>
struct FieldOps<Cyclo> {
    static Cyclo zero() { return Cyclo(); }
    static Cyclo one() { return Cyclo(Rat(1)); }
    static bool is_zero(const Cyclo& x) { return x.is_zero(); }
    static Cyclo conj(const Cyclo& x) { return x.conj(); }
    static Cyclo from_rat(const Rat& x) { return Cyclo(x); }
};

// Dense row-major matrix over an exact field.
template <class F>
class Mat {
  public:
    Mat() : r_(0), c_(0) {}
    Mat(std::size_t rows, std::size_t cols)
        : r_(rows), c_(cols), d_(rows * cols, FieldOps<F>::zero()) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FieldOps<F>::one();
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    F& at(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
    const F& at(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }

    bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && d_ == o.d_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator+(const Mat& o) const {
        Mat m = *this;
        for (std::size_t k = 0; k < d_.size(); ++k) m.d_[k] = m.d_[k] + o.d_[k];
        return m;
    }
    Mat operator-(const Mat& o) const {
        Mat m = *this;
        for (std::size_t k = 0; k < d_.size(); ++k) m.d_[k] = m.d_[k] - o.d_[k];
        return m;
    }
    Mat operator*(const Mat& o) const {
        Mat m(r_, o.c_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t k = 0; k < c_; ++k) {
                const F& a = at(i, k);
                if (FieldOps<F>::is_zero(a)) continue;
                for (std::size_t j = 0; j < o.c_; ++j) m.at(i, j) += a * o.at(k, j);
            }
        return m;
    }
    Mat scaled(const F& s) const {
        Mat m = *this;
        for (auto& x : m.d_) x = x * s;
        return m;
    }

    Mat transpose() const {
        Mat m(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
        return m;
    }
    Mat conj_transpose() const {
        Mat m(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) m.at(j, i) = FieldOps<F>::conj(at(i, j));
        return m;
    }

    bool is_zero() const {
        for (const auto& x : d_)
            if (!FieldOps<F>::is_zero(x)) return false;
        return true;
    }
    bool is_symmetric() const { return r_ == c_ && *this == transpose(); }
    bool is_alternating() const {
        if (r_ != c_) return false;
        for (std::size_t i = 0; i < r_; ++i)
            if (!FieldOps<F>::is_zero(at(i, i))) return false;
        return *this == transpose().scaled(F(FieldOps<F>::from_rat(Rat(-1))));
    }
    bool is_hermitian() const { return r_ == c_ && *this == conj_transpose(); }

    Mat col(std::size_t j) const {
        Mat m(r_, 1);
        for (std::size_t i = 0; i < r_; ++i) m.at(i, 0) = at(i, j);
        return m;
    }
    Mat cols_subset(const std::vector<std::size_t>& idx) const {
        Mat m(r_, idx.size());
        for (std::size_t j = 0; j < idx.size(); ++j)
            for (std::size_t i = 0; i < r_; ++i) m.at(i, j) = at(i, idx[j]);
        return m;
    }
    static Mat hstack(const Mat& a, const Mat& b) {
        if (a.cols() == 0) return b;
        if (b.cols() == 0) return a;
        Mat m(a.rows(), a.cols() + b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i) {
            for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
            for (std::size_t j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
        }
        return m;
    }
    static Mat block_diag(const Mat& a, const Mat& b) {
        Mat m(a.rows() + b.rows(), a.cols() + b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
        return m;
    }
    static Mat kronecker(const Mat& a, const Mat& b) {
        Mat m(a.rows() * b.rows(), a.cols() * b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) {
                if (FieldOps<F>::is_zero(a.at(i, j))) continue;
                for (std::size_t k = 0; k < b.rows(); ++k)
                    for (std::size_t l = 0; l < b.cols(); ++l)
                        m.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
            }
        return m;
    }

  private:
    std::size_t r_, c_;
    std::vector<F> d_;
};

// Row-reduction to RREF in place; returns pivot column indices.
template <class F>
std::vector<std::size_t> rref(Mat<F>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && FieldOps<F>::is_zero(m.at(p, col))) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        F inv = FieldOps<F>::one() / m.at(row, col);
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || FieldOps<F>::is_zero(m.at(i, col))) continue;
            F f = m.at(i, col);
            for (std::size_t j = 0; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class F>
std::size_t rank(Mat<F> m) {
    return rref(m).size();
}

template <class F>
F det(Mat<F> m) {
    if (m.rows() != m.cols()) throw precondition_error("det of non-square matrix");
    F d = FieldOps<F>::one();
    std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && FieldOps<F>::is_zero(m.at(p, col))) ++p;
        if (p == n) return FieldOps<F>::zero();
        if (p != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(col, j));
            d = d * FieldOps<F>::from_rat(Rat(-1));
        }
        d = d * m.at(col, col);
        F inv = FieldOps<F>::one() / m.at(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (FieldOps<F>::is_zero(m.at(i, col))) continue;
            F f = m.at(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) m.at(i, j) = m.at(i, j) - f * m.at(col, j);
        }
    }
    return d;
}

// Columns form a basis of ker(m).
template <class F>
Mat<F> kernel_basis(const Mat<F>& m) {
    Mat<F> r = m;
    auto pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    Mat<F> k(m.cols(), free_cols.size());
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        std::size_t fc = free_cols[f];
        k.at(fc, f) = FieldOps<F>::one();
        for (std::size_t i = 0; i < pivots.size(); ++i)
            k.at(pivots[i], f) = FieldOps<F>::zero() - r.at(i, fc);
    }
    return k;
}

// Solves m*x = rhs (all columns); throws if inconsistent.
template <class F>
Mat<F> solve(const Mat<F>& m, const Mat<F>& rhs) {
    Mat<F> aug = Mat<F>::hstack(m, rhs);
    auto pivots = rref(aug);
    for (auto p : pivots)
        if (p >= m.cols()) throw precondition_error("solve: inconsistent linear system");
    Mat<F> x(m.cols(), rhs.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < rhs.cols(); ++j) x.at(pivots[i], j) = aug.at(i, m.cols() + j);
    return x;
}

template <class F>
Mat<F> inverse(const Mat<F>& m) {
    if (m.rows() != m.cols()) throw precondition_error("inverse of non-square matrix");
    Mat<F> aug = Mat<F>::hstack(m, Mat<F>::identity(m.rows()));
    auto pivots = rref(aug);
    if (pivots.size() != m.rows() || (pivots.size() && pivots.back() >= m.rows()))
        throw precondition_error("inverse of singular matrix");
    Mat<F> inv(m.rows(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) inv.at(i, j) = aug.at(i, m.rows() + j);
    return inv;
}

inline Mat<Cyclo> to_cyclo(const Mat<Rat>& m) {
    Mat<Cyclo> c(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) c.at(i, j) = Cyclo(m.at(i, j));
    return c;
}

inline Mat<Rat> to_rat(const Mat<Cyclo>& m) {
    Mat<Rat> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).to_rational();
    return r;
}

using RatMat = Mat<Rat>;
using CycMat = Mat<Cyclo>;

}  // namespace pfc
