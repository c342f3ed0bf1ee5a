#pragma once

// Compact matrix groups and their Lie algebras. Five scalar families
// (S^3, O(n), U(m), Sp(m), Sp(2)) plus the product S^3 x S^3, stored as
// block-diagonal 2x2 quaternion matrices. Elements carry a tag; algebra
// vectors are skew-hermitian matrices of the same tag. The inner product
// Q(X, Y) = Re trace(X* Y) is Ad-invariant on each algebra.

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cheegerlab/qmatrix.hpp"
#include "cheegerlab/rng.hpp"

namespace cheegerlab {

enum class GroupId { S3, On, Um, Spm, Sp2, S3xS3 };

inline std::string group_name(GroupId id, int n) {
    switch (id) {
        case GroupId::S3: return "S3";
        case GroupId::On: return "O(" + std::to_string(n) + ")";
        case GroupId::Um: return "U(" + std::to_string(n) + ")";
        case GroupId::Spm: return "Sp(" + std::to_string(n) + ")";
        case GroupId::Sp2: return "Sp(2)";
        case GroupId::S3xS3: return "S3xS3";
    }
    return "?";
}

// Matrix size of the defining representation.
inline int group_matrix_size(GroupId id, int n) {
    switch (id) {
        case GroupId::S3: return 1;
        case GroupId::On: return n;
        case GroupId::Um: return n;
        case GroupId::Spm: return n;
        case GroupId::Sp2: return 2;
        case GroupId::S3xS3: return 2;
    }
    return 0;
}

inline int algebra_dim(GroupId id, int n) {
    switch (id) {
        case GroupId::S3: return 3;
        case GroupId::On: return n * (n - 1) / 2;
        case GroupId::Um: return n * n;
        case GroupId::Spm: return n * (2 * n + 1);
        case GroupId::Sp2: return 10;
        case GroupId::S3xS3: return 6;
    }
    return 0;
}

struct GroupElement {
    GroupId id = GroupId::S3;
    int n = 1;  // family parameter (ignored for S3, Sp2, S3xS3)
    QMat m;

    static GroupElement identity(GroupId id, int n) {
        return {id, n, QMat::identity(group_matrix_size(id, n))};
    }

    GroupElement operator*(const GroupElement& o) const { return {id, n, m * o.m}; }
    GroupElement inverse() const { return {id, n, m.adjoint()}; }

    // As a quaternion, for the S3 tag.
    Quat quat() const { return m(0, 0); }
    static GroupElement from_quat(const Quat& q) {
        QMat m(1, 1);
        m(0, 0) = q;
        return {GroupId::S3, 1, m};
    }
};

struct AlgebraVector {
    GroupId id = GroupId::S3;
    int n = 1;
    QMat m;

    AlgebraVector operator+(const AlgebraVector& o) const { return {id, n, m + o.m}; }
    AlgebraVector operator-(const AlgebraVector& o) const { return {id, n, m - o.m}; }
    AlgebraVector operator*(double s) const { return {id, n, m * s}; }
    Quat quat() const { return m(0, 0); }
};

inline void require_same_group(const AlgebraVector& x, const AlgebraVector& y) {
    if (x.id != y.id || x.n != y.n)
        throw std::invalid_argument("algebra vectors from different groups");
}

inline AlgebraVector bracket(const AlgebraVector& x, const AlgebraVector& y) {
    require_same_group(x, y);
    return {x.id, x.n, commutator(x.m, y.m)};
}

inline double inner_q(const AlgebraVector& x, const AlgebraVector& y) {
    require_same_group(x, y);
    return re_trace_pairing(x.m, y.m);
}

inline double norm_q(const AlgebraVector& x) { return std::sqrt(inner_q(x, x)); }

inline GroupElement group_exp(const AlgebraVector& x) { return {x.id, x.n, qmat_exp(x.m)}; }

// Ad_g X = g X g^{-1}.
inline AlgebraVector ad_action(const GroupElement& g, const AlgebraVector& x) {
    return {x.id, x.n, g.m * x.m * g.m.adjoint()};
}

namespace detail {

inline void push_basis(std::vector<AlgebraVector>& out, GroupId id, int n, const QMat& m) {
    out.push_back({id, n, m});
}

}  // namespace detail

// Q-orthonormal basis of the Lie algebra, in a fixed deterministic order.
inline std::vector<AlgebraVector> algebra_basis(GroupId id, int n) {
    std::vector<AlgebraVector> out;
    const double inv_sqrt2 = 0.7071067811865475244;
    switch (id) {
        case GroupId::S3: {
            for (Quat u : {Quat::i(), Quat::j(), Quat::k()}) {
                QMat m(1, 1);
                m(0, 0) = u;
                detail::push_basis(out, id, n, m);
            }
            break;
        }
        case GroupId::On: {
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) {
                    QMat m(n, n);
                    m(a, b) = Quat(inv_sqrt2);
                    m(b, a) = Quat(-inv_sqrt2);
                    detail::push_basis(out, id, n, m);
                }
            break;
        }
        case GroupId::Um: {
            for (int a = 0; a < n; ++a) {
                QMat m(n, n);
                m(a, a) = Quat::i();
                detail::push_basis(out, id, n, m);
            }
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) {
                    QMat re(n, n);
                    re(a, b) = Quat(inv_sqrt2);
                    re(b, a) = Quat(-inv_sqrt2);
                    detail::push_basis(out, id, n, re);
                    QMat im(n, n);
                    im(a, b) = Quat::i() * inv_sqrt2;
                    im(b, a) = Quat::i() * inv_sqrt2;
                    detail::push_basis(out, id, n, im);
                }
            break;
        }
        case GroupId::Sp2:
        case GroupId::Spm: {
            const int m_ = group_matrix_size(id, n);
            for (int a = 0; a < m_; ++a)
                for (Quat u : {Quat::i(), Quat::j(), Quat::k()}) {
                    QMat m(m_, m_);
                    m(a, a) = u;
                    detail::push_basis(out, id, n, m);
                }
            for (int a = 0; a < m_; ++a)
                for (int b = a + 1; b < m_; ++b) {
                    QMat re(m_, m_);
                    re(a, b) = Quat(inv_sqrt2);
                    re(b, a) = Quat(-inv_sqrt2);
                    detail::push_basis(out, id, n, re);
                    for (Quat u : {Quat::i(), Quat::j(), Quat::k()}) {
                        QMat im(m_, m_);
                        im(a, b) = u * inv_sqrt2;
                        im(b, a) = u * inv_sqrt2;
                        detail::push_basis(out, id, n, im);
                    }
                }
            break;
        }
        case GroupId::S3xS3: {
            for (int slot = 0; slot < 2; ++slot)
                for (Quat u : {Quat::i(), Quat::j(), Quat::k()}) {
                    QMat m(2, 2);
                    m(slot, slot) = u;
                    detail::push_basis(out, id, n, m);
                }
            break;
        }
    }
    return out;
}

inline AlgebraVector algebra_from_coords(GroupId id, int n, const Eigen::VectorXd& c) {
    const auto basis = algebra_basis(id, n);
    AlgebraVector v{id, n, QMat(group_matrix_size(id, n), group_matrix_size(id, n))};
    for (size_t a = 0; a < basis.size(); ++a) v.m = v.m + basis[a].m * c[static_cast<int>(a)];
    return v;
}

inline Eigen::VectorXd algebra_coords(const AlgebraVector& v) {
    const auto basis = algebra_basis(v.id, v.n);
    Eigen::VectorXd c(static_cast<int>(basis.size()));
    for (size_t a = 0; a < basis.size(); ++a) c[static_cast<int>(a)] = inner_q(basis[a], v);
    return c;
}

namespace detail {

// Gaussian matrix with entries confined to the scalar subfield of the tag.
inline QMat gaussian_matrix(GroupId id, int n, Rng& rng) {
    const int m = group_matrix_size(id, n);
    QMat g(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            switch (id) {
                case GroupId::On:
                    g(i, j) = Quat(rng.gaussian());
                    break;
                case GroupId::Um:
                    g(i, j) = Quat(rng.gaussian(), rng.gaussian(), 0, 0);
                    break;
                default:
                    g(i, j) = random_quat(rng);
                    break;
            }
        }
    return g;
}

}  // namespace detail

// Deterministic Haar sample. S^3 normalizes a gaussian 4-vector; matrix
// groups orthonormalize a gaussian matrix (the positive-diagonal
// normalization in gram_schmidt_columns fixes the sign convention).
inline GroupElement haar_sample(GroupId id, int n, Rng& rng) {
    switch (id) {
        case GroupId::S3:
            return GroupElement::from_quat(random_unit_quat(rng));
        case GroupId::S3xS3: {
            QMat m(2, 2);
            m(0, 0) = random_unit_quat(rng);
            m(1, 1) = random_unit_quat(rng);
            return {id, n, m};
        }
        default:
            return {id, n, gram_schmidt_columns(detail::gaussian_matrix(id, n, rng))};
    }
}

inline GroupElement haar_sample(GroupId id, int n, std::uint64_t seed) {
    Rng rng(seed);
    return haar_sample(id, n, rng);
}

inline AlgebraVector random_algebra_vector(GroupId id, int n, Rng& rng, bool unit = false) {
    const int d = algebra_dim(id, n);
    Eigen::VectorXd c(d);
    for (int a = 0; a < d; ++a) c[a] = rng.gaussian();
    if (unit) c.normalize();
    return algebra_from_coords(id, n, c);
}

// Residual of the defining relations of Sp(2): unit columns plus
// \bar c a + \bar d b = 0, i.e. A* A = I over the quaternions.
inline double sp2_column_residual(const QMat& a) {
    double r = 0;
    for (int j = 0; j < 2; ++j) {
        Quat diag = Quat::zero();
        for (int i = 0; i < 2; ++i) diag += a(i, j).conj() * a(i, j);
        r = std::max(r, (diag - Quat::one()).norm());
    }
    Quat off = a(0, 0).conj() * a(0, 1) + a(1, 0).conj() * a(1, 1);
    return std::max(r, off.norm());
}

// Real n x n matrix from a quaternion matrix with real entries.
inline Eigen::MatrixXd real_matrix(const QMat& m) {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).w;
    return out;
}

}  // namespace cheegerlab
