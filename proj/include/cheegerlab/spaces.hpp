#pragma once

// Embedded model spaces. Points live in ambient coordinates as
// Eigen::VectorXd; every space carries its defining-equation residual, a
// uniform sampler, a projection back onto the manifold, and an
// orthonormal tangent basis. Charts are always centered: stereographic
// from the antipode for spheres, exponential coordinates for matrix
// groups, products componentwise.

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "cheegerlab/group.hpp"

namespace cheegerlab {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// --- quaternion views into packed ambient vectors ---------------------------

inline Quat get_quat(const Vec& v, int off) {
    return Quat(v[off], v[off + 1], v[off + 2], v[off + 3]);
}
inline void set_quat(Vec& v, int off, const Quat& q) {
    v[off] = q.w;
    v[off + 1] = q.x;
    v[off + 2] = q.y;
    v[off + 3] = q.z;
}
inline Quat get_imquat(const Vec& v, int off) { return Quat(0, v[off], v[off + 1], v[off + 2]); }
inline void set_imquat(Vec& v, int off, const Quat& q) {
    v[off] = q.x;
    v[off + 1] = q.y;
    v[off + 2] = q.z;
}

// Orthonormal basis of the complement of a single vector, deterministic.
inline Mat orthonormal_complement(const Vec& p) {
    const int n = static_cast<int>(p.size());
    Mat col = p;
    Eigen::HouseholderQR<Mat> qr(col);
    Mat q = qr.householderQ();
    return q.rightCols(n - 1);
}

// --- sphere exponential/log map ---------------------------------------------

inline Vec sphere_exp(const Vec& p, const Vec& v) {
    const double t = v.norm();
    if (t < 1e-300) return p;
    return std::cos(t) * p + (std::sin(t) / t) * v;
}

inline Vec sphere_log(const Vec& p, const Vec& q) {
    const double c = std::min(1.0, std::max(-1.0, p.dot(q)));
    Vec w = q - c * p;
    const double wn = w.norm();
    const double theta = std::acos(c);
    if (wn < 1e-14) return Vec::Zero(p.size());
    return (theta / wn) * w;
}

// --- charts ------------------------------------------------------------------

struct Chart {
    int dim = 0;
    std::function<Vec(const Vec&)> point;     // u in R^dim -> ambient
    std::function<Mat(const Vec&)> jacobian;  // ambient x dim
};

// Stereographic coordinates centered at p (projection from -p).
inline Chart sphere_chart_at(const Vec& p) {
    const int n = static_cast<int>(p.size()) - 1;
    auto frame = std::make_shared<Mat>(orthonormal_complement(p));
    Chart c;
    c.dim = n;
    c.point = [p, frame](const Vec& u) {
        const double nn = 1.0 + u.squaredNorm();
        return (((1.0 - u.squaredNorm()) * p + 2.0 * (*frame) * u) / nn).eval();
    };
    c.jacobian = [p, frame, n](const Vec& u) {
        const double nn = 1.0 + u.squaredNorm();
        const Vec pt = ((1.0 - u.squaredNorm()) * p + 2.0 * (*frame) * u) / nn;
        Mat jac(p.size(), n);
        for (int a = 0; a < n; ++a)
            jac.col(a) = (-2.0 * u[a] * p + 2.0 * frame->col(a) - 2.0 * u[a] * pt) / nn;
        return jac;
    };
    return c;
}

// --- space -------------------------------------------------------------------

struct Space {
    std::string id;
    int ambient = 0;
    int dim = 0;
    std::function<double(const Vec&)> residual;
    std::function<Vec(Rng&)> sample;
    std::function<Vec(const Vec&)> project;
    std::function<double(const Vec&, const Vec&)> tangency;  // residual of v in T_p
    std::function<Mat(const Vec&)> tangent_basis;            // ambient x dim, orthonormal
    std::function<Chart(const Vec&)> chart_at;
};

inline void require_on_space(const Space& s, const Vec& p, double tol = 1e-8) {
    if (static_cast<int>(p.size()) != s.ambient || s.residual(p) > tol)
        throw std::invalid_argument("point not on space " + s.id);
}

inline Space sphere_space(int n, std::string id = "") {
    Space s;
    s.id = id.empty() ? "s" + std::to_string(n) : std::move(id);
    s.ambient = n + 1;
    s.dim = n;
    s.residual = [](const Vec& p) { return std::abs(p.squaredNorm() - 1.0); };
    s.sample = [n](Rng& rng) {
        Vec p(n + 1);
        for (int i = 0; i <= n; ++i) p[i] = rng.gaussian();
        return (p / p.norm()).eval();
    };
    s.project = [](const Vec& p) { return (p / p.norm()).eval(); };
    s.tangency = [](const Vec& p, const Vec& v) { return std::abs(p.dot(v)); };
    s.tangent_basis = [](const Vec& p) { return orthonormal_complement(p); };
    s.chart_at = [](const Vec& p) { return sphere_chart_at(p); };
    return s;
}

// --- matrix group as an embedded space ---------------------------------------

// Doubles used per matrix entry for the scalar field of the tag.
inline int scalar_width(GroupId id) {
    switch (id) {
        case GroupId::On: return 1;
        case GroupId::Um: return 2;
        default: return 4;
    }
}

inline Vec pack_group(GroupId id, int n, const QMat& m) {
    const int sz = group_matrix_size(id, n), w = scalar_width(id);
    Vec v(sz * sz * w);
    int t = 0;
    for (int i = 0; i < sz; ++i)
        for (int j = 0; j < sz; ++j)
            for (int c = 0; c < w; ++c) v[t++] = m(i, j)[c];
    return v;
}

inline QMat unpack_group(GroupId id, int n, const Vec& v) {
    const int sz = group_matrix_size(id, n), w = scalar_width(id);
    QMat m(sz, sz);
    int t = 0;
    for (int i = 0; i < sz; ++i)
        for (int j = 0; j < sz; ++j)
            for (int c = 0; c < w; ++c) m(i, j)[c] = v[t++];
    return m;
}

inline Space group_as_space(GroupId id, int n, std::string space_id) {
    Space s;
    s.id = std::move(space_id);
    s.ambient = group_matrix_size(id, n) * group_matrix_size(id, n) * scalar_width(id);
    s.dim = algebra_dim(id, n);
    s.residual = [id, n](const Vec& p) { return unitarity_residual(unpack_group(id, n, p)); };
    s.sample = [id, n](Rng& rng) { return pack_group(id, n, haar_sample(id, n, rng).m); };
    s.project = [id, n](const Vec& p) {
        return pack_group(id, n, gram_schmidt_columns(unpack_group(id, n, p)));
    };
    s.tangency = [id, n](const Vec& p, const Vec& v) {
        QMat a = unpack_group(id, n, p), x = unpack_group(id, n, v);
        QMat sym = a.adjoint() * x + x.adjoint() * a;
        return sym.norm();
    };
    s.tangent_basis = [id, n](const Vec& p) {
        QMat a = unpack_group(id, n, p);
        auto basis = algebra_basis(id, n);
        Mat out(group_matrix_size(id, n) * group_matrix_size(id, n) * scalar_width(id),
                static_cast<int>(basis.size()));
        for (size_t k = 0; k < basis.size(); ++k)
            out.col(static_cast<int>(k)) = pack_group(id, n, a * basis[k].m);
        return out;
    };
    s.chart_at = [id, n](const Vec& p) {
        QMat g0 = unpack_group(id, n, p);
        auto basis = std::make_shared<std::vector<AlgebraVector>>(algebra_basis(id, n));
        const int d = static_cast<int>(basis->size());
        Chart c;
        c.dim = d;
        auto body = [id, n, g0, basis, d](const Vec& u) {
            QMat arg(group_matrix_size(id, n), group_matrix_size(id, n));
            for (int a = 0; a < d; ++a) arg = arg + (*basis)[a].m * u[a];
            return g0 * qmat_exp(arg);
        };
        c.point = [id, n, body](const Vec& u) { return pack_group(id, n, body(u)); };
        c.jacobian = [id, n, g0, basis, d](const Vec& u) {
            QMat arg(group_matrix_size(id, n), group_matrix_size(id, n));
            for (int a = 0; a < d; ++a) arg = arg + (*basis)[a].m * u[a];
            QMat head = g0 * qmat_exp(arg);
            Mat jac(group_matrix_size(id, n) * group_matrix_size(id, n) * scalar_width(id), d);
            for (int a = 0; a < d; ++a) {
                // d/du_a exp(U) = exp(U) T(ad_U) X_a with T(z) = (1 - e^{-z})/z
                QMat term = (*basis)[a].m;
                QMat acc = term;
                double fact = 1.0;
                for (int k = 1; k <= 10; ++k) {
                    term = commutator(arg, term) * -1.0;
                    fact /= (k + 1.0);
                    acc = acc + term * fact;
                    if (term.norm() * fact < 1e-17) break;
                }
                jac.col(a) = pack_group(id, n, head * acc);
            }
            return jac;
        };
        return c;
    };
    return s;
}

// --- products ---------------------------------------------------------------

inline Space product_space(const Space& a, const Space& b, std::string id = "") {
    Space s;
    s.id = id.empty() ? a.id + "x" + b.id : std::move(id);
    s.ambient = a.ambient + b.ambient;
    s.dim = a.dim + b.dim;
    const int na = a.ambient;
    s.residual = [a, b, na](const Vec& p) {
        return std::max(a.residual(p.head(na)), b.residual(p.tail(p.size() - na)));
    };
    s.sample = [a, b](Rng& rng) {
        Vec pa = a.sample(rng), pb = b.sample(rng);
        Vec p(pa.size() + pb.size());
        p << pa, pb;
        return p;
    };
    s.project = [a, b, na](const Vec& p) {
        Vec out(p.size());
        out << a.project(p.head(na)), b.project(p.tail(p.size() - na));
        return out;
    };
    s.tangency = [a, b, na](const Vec& p, const Vec& v) {
        return std::max(a.tangency(p.head(na), v.head(na)),
                        b.tangency(p.tail(p.size() - na), v.tail(v.size() - na)));
    };
    s.tangent_basis = [a, b, na](const Vec& p) {
        Mat ba = a.tangent_basis(p.head(na));
        Mat bb = b.tangent_basis(p.tail(p.size() - na));
        Mat out = Mat::Zero(ba.rows() + bb.rows(), ba.cols() + bb.cols());
        out.topLeftCorner(ba.rows(), ba.cols()) = ba;
        out.bottomRightCorner(bb.rows(), bb.cols()) = bb;
        return out;
    };
    s.chart_at = [a, b, na](const Vec& p) {
        Chart ca = a.chart_at(p.head(na));
        Chart cb = b.chart_at(p.tail(p.size() - na));
        Chart c;
        c.dim = ca.dim + cb.dim;
        c.point = [ca, cb](const Vec& u) {
            Vec pa = ca.point(u.head(ca.dim)), pb = cb.point(u.tail(cb.dim));
            Vec p(pa.size() + pb.size());
            p << pa, pb;
            return p;
        };
        c.jacobian = [ca, cb](const Vec& u) {
            Mat ja = ca.jacobian(u.head(ca.dim));
            Mat jb = cb.jacobian(u.tail(cb.dim));
            Mat out = Mat::Zero(ja.rows() + jb.rows(), ja.cols() + jb.cols());
            out.topLeftCorner(ja.rows(), ja.cols()) = ja;
            out.bottomRightCorner(jb.rows(), jb.cols()) = jb;
            return out;
        };
        return c;
    };
    return s;
}

// Clifford torus in R^4; intrinsically flat.
inline Space torus_space() {
    Space s = product_space(sphere_space(1), sphere_space(1), "t2-flat");
    return s;
}

}  // namespace cheegerlab
