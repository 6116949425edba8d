#ifndef DISCSOS_MATRIX_HPP
#define DISCSOS_MATRIX_HPP

#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "discsos/rational.hpp"
#include "discsos/upoly.hpp"

namespace discsos {

// Dense row-major matrix over an exact scalar ring S.
template <class S>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("Mat: negative dimension");
    }
    Mat(int rows, int cols, std::vector<S> entries) : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != static_cast<size_t>(rows) * cols)
            throw std::invalid_argument("Mat: entry count does not match dimensions");
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    S& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const S& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    friend Mat operator+(const Mat& a, const Mat& b) {
        check_same(a, b);
        Mat out(a.rows_, a.cols_);
        for (size_t i = 0; i < a.e_.size(); ++i) out.e_[i] = a.e_[i] + b.e_[i];
        return out;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        check_same(a, b);
        Mat out(a.rows_, a.cols_);
        for (size_t i = 0; i < a.e_.size(); ++i) out.e_[i] = a.e_[i] - b.e_[i];
        return out;
    }
    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Mat: inner dimensions differ");
        Mat out(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const S& aik = a(i, k);
                if (aik == S()) continue;
                for (int j = 0; j < b.cols_; ++j)
                    out(i, j) += aik * b(k, j);
            }
        return out;
    }
    friend Mat operator*(const S& s, const Mat& m) {
        Mat out(m.rows_, m.cols_);
        for (size_t i = 0; i < m.e_.size(); ++i) out.e_[i] = s * m.e_[i];
        return out;
    }
    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    Mat transpose() const {
        Mat out(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                out(j, i) = (*this)(i, j);
        return out;
    }

    S trace() const {
        if (!is_square()) throw std::invalid_argument("Mat: trace of non-square matrix");
        S t{};
        for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    bool is_zero() const {
        for (const S& v : e_)
            if (!(v == S())) return false;
        return true;
    }

    Mat submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
        Mat out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols.size(); ++j)
                out(static_cast<int>(i), static_cast<int>(j)) = (*this)(rows[i], cols[j]);
        return out;
    }

private:
    static void check_same(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Mat: dimension mismatch");
    }

    int rows_, cols_;
    std::vector<S> e_;
};

// Fraction-free (Bareiss) determinant. Works over any integral domain whose
// div_exact is exact on the Bareiss recurrence (fields, MPoly), and bounds
// intermediate expression swell compared to naive fraction arithmetic.
template <class S>
S det_bareiss(Mat<S> a) {
    if (!a.is_square()) throw std::invalid_argument("det: non-square matrix");
    int n = a.rows();
    if (n == 0) return S(1);
    bool negate = false;
    S prev{};
    for (int k = 0; k + 1 < n; ++k) {
        if (a(k, k) == S()) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!(a(i, k) == S())) { piv = i; break; }
            if (piv < 0) return S();
            for (int j = k; j < n; ++j) std::swap(a(k, j), a(piv, j));
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                S num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = (k == 0) ? std::move(num) : div_exact(num, prev);
            }
        prev = a(k, k);
    }
    return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

// Rank via exact Gaussian elimination; S must be a field.
template <class S>
int rank_gauss(Mat<S> a) {
    int rank = 0;
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < a.rows(); ++i)
            if (!(a(i, col) == S())) { piv = i; break; }
        if (piv < 0) continue;
        for (int j = col; j < a.cols(); ++j) std::swap(a(row, j), a(piv, j));
        for (int i = row + 1; i < a.rows(); ++i) {
            if (a(i, col) == S()) continue;
            S f = a(i, col) / a(row, col);
            for (int j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
        }
        ++row;
        ++rank;
    }
    return rank;
}

// Monic characteristic polynomial det(tI - m) by Faddeev-LeVerrier.
// Division-light: the only divisions are by the integers 1..n.
template <class S>
UPoly<S> charpoly(const Mat<S>& m) {
    if (!m.is_square()) throw std::invalid_argument("charpoly: non-square matrix");
    int n = m.rows();
    std::vector<S> c(static_cast<size_t>(n) + 1);
    c[static_cast<size_t>(n)] = S(1);
    // M_k = m*M_{k-1} + c_{n-k+1} I and c_{n-k} = -tr(m*M_k)/k; one matrix
    // product per step by carrying m*M_k forward.
    Mat<S> mM(n, n);
    for (int k = 1; k <= n; ++k) {
        Mat<S> M = mM;
        for (int i = 0; i < n; ++i) M(i, i) += c[static_cast<size_t>(n - k + 1)];
        mM = m * M;
        c[static_cast<size_t>(n - k)] = -(mM.trace() / S(static_cast<long>(k)));
    }
    return UPoly<S>(std::move(c));
}

// Tr(m^0), Tr(m^1), ..., Tr(m^upto).
template <class S>
std::vector<S> power_traces(const Mat<S>& m, int upto) {
    if (!m.is_square()) throw std::invalid_argument("power_traces: non-square matrix");
    std::vector<S> out;
    out.reserve(static_cast<size_t>(upto) + 1);
    out.push_back(S(static_cast<long>(m.rows())));
    Mat<S> p = Mat<S>::identity(m.rows());
    for (int k = 1; k <= upto; ++k) {
        p = p * m;
        out.push_back(p.trace());
    }
    return out;
}

// det H with H_{ij} = Tr(m^{i+j}), 0 <= i,j <= n-1. For real symmetric m
// this Hankel determinant equals the discriminant of charpoly(m): H is the
// Gram matrix of I, m, ..., m^{n-1}, i.e. V^T V for the eigenvalue
// Vandermonde V.
template <class S>
S hankel_power_trace_det(const Mat<S>& m) {
    if (!m.is_square()) throw std::invalid_argument("hankel_power_trace_det: non-square matrix");
    int n = m.rows();
    std::vector<S> tr = power_traces(m, 2 * n - 2);
    Mat<S> h(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            h(i, j) = tr[static_cast<size_t>(i + j)];
    return det_bareiss(std::move(h));
}

template <class S>
std::ostream& operator<<(std::ostream& os, const Mat<S>& m) {
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    }
    return os << "]";
}

} // namespace discsos

#endif
