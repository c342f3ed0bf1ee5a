#pragma once

// Small dense matrices with quaternion entries. Real and complex matrix
// groups embed as quaternion matrices with vanishing (j,k) or (i,j,k)
// parts, so one storage type covers S^3, O(n), U(m), Sp(m) and Sp(2).
// Multiplication respects entry order: (AB)_ik = sum_j A_ij * B_jk.

#include <cassert>
#include <vector>

#include "cheegerlab/quaternion.hpp"

namespace cheegerlab {

class QMat {
public:
    QMat() = default;
    QMat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows * cols)) {}

    static QMat identity(int n) {
        QMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = Quat::one();
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }

    Quat& operator()(int i, int j) { return a_[static_cast<size_t>(i * c_ + j)]; }
    const Quat& operator()(int i, int j) const { return a_[static_cast<size_t>(i * c_ + j)]; }

    QMat operator+(const QMat& o) const {
        QMat m(r_, c_);
        for (size_t t = 0; t < a_.size(); ++t) m.a_[t] = a_[t] + o.a_[t];
        return m;
    }
    QMat operator-(const QMat& o) const {
        QMat m(r_, c_);
        for (size_t t = 0; t < a_.size(); ++t) m.a_[t] = a_[t] - o.a_[t];
        return m;
    }
    QMat operator*(double s) const {
        QMat m(r_, c_);
        for (size_t t = 0; t < a_.size(); ++t) m.a_[t] = a_[t] * s;
        return m;
    }
    QMat operator-() const { return *this * -1.0; }

    QMat operator*(const QMat& o) const {
        assert(c_ == o.r_);
        QMat m(r_, o.c_);
        for (int i = 0; i < r_; ++i)
            for (int k = 0; k < c_; ++k) {
                const Quat& aik = (*this)(i, k);
                if (aik.norm_sq() == 0.0) continue;
                for (int j = 0; j < o.c_; ++j) m(i, j) += aik * o(k, j);
            }
        return m;
    }

    // Conjugate transpose.
    QMat adjoint() const {
        QMat m(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j).conj();
        return m;
    }

    double norm_sq() const {
        double s = 0;
        for (const Quat& q : a_) s += q.norm_sq();
        return s;
    }
    double norm() const { return std::sqrt(norm_sq()); }

    double re_trace() const {
        double s = 0;
        for (int i = 0; i < r_ && i < c_; ++i) s += (*this)(i, i).w;
        return s;
    }

private:
    int r_ = 0, c_ = 0;
    std::vector<Quat> a_;
};

inline QMat operator*(double s, const QMat& m) { return m * s; }

inline QMat commutator(const QMat& x, const QMat& y) { return x * y - y * x; }

// Re trace(X* Y): the Ad-invariant pairing used throughout.
inline double re_trace_pairing(const QMat& x, const QMat& y) {
    double s = 0;
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) s += qdot(x(i, j), y(i, j));
    return s;
}

inline double unitarity_residual(const QMat& m) {
    return (m.adjoint() * m - QMat::identity(m.cols())).norm();
}

// Matrix exponential by scaling and squaring with a plain power series.
// Arguments here are skew-hermitian with modest norm, so the series is
// short and well conditioned after scaling.
inline QMat qmat_exp(const QMat& x) {
    const int n = x.rows();
    double nrm = x.norm();
    int squarings = 0;
    QMat xs = x;
    while (nrm > 0.25) {
        xs = xs * 0.5;
        nrm *= 0.5;
        ++squarings;
    }
    QMat term = QMat::identity(n);
    QMat sum = term;
    for (int k = 1; k <= 16; ++k) {
        term = term * xs * (1.0 / k);
        sum = sum + term;
        if (term.norm() < 1e-18) break;
    }
    for (int s = 0; s < squarings; ++s) sum = sum * sum;
    return sum;
}

// Modified Gram-Schmidt on columns (right-module convention: coefficient
// multiplies on the right). Run twice for stability. Normalization keeps
// the "R diagonal" real and positive, which is the sign convention that
// makes gaussian + orthonormalization exactly Haar.
inline QMat gram_schmidt_columns(QMat m) {
    const int r = m.rows(), c = m.cols();
    for (int pass = 0; pass < 2; ++pass) {
        for (int j = 0; j < c; ++j) {
            for (int p = 0; p < j; ++p) {
                Quat coef = Quat::zero();
                for (int i = 0; i < r; ++i) coef += m(i, p).conj() * m(i, j);
                for (int i = 0; i < r; ++i) m(i, j) -= m(i, p) * coef;
            }
            double nrm = 0;
            for (int i = 0; i < r; ++i) nrm += m(i, j).norm_sq();
            nrm = std::sqrt(nrm);
            for (int i = 0; i < r; ++i) m(i, j) = m(i, j) / nrm;
        }
    }
    return m;
}

}  // namespace cheegerlab
