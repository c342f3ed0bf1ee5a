#pragma once

// Catalog of smooth isometric group actions on the embedded model
// spaces, each with a closed-form action map and its closed-form
// infinitesimal action (Killing field). Every cataloged action is
// ambient-linear, so tangent vectors transport by the same formula as
// points.

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cheegerlab/spaces.hpp"

namespace cheegerlab {

struct ActionSpec {
    std::string id;
    GroupId gid = GroupId::S3;
    int gn = 1;
    Space space;
    bool orbits_finite_pi1 = true;
    std::string description;
    std::function<Vec(const GroupElement&, const Vec&)> act_raw;
    std::function<Vec(const AlgebraVector&, const Vec&)> infinitesimal;

    GroupElement sample_group(Rng& rng) const { return haar_sample(gid, gn, rng); }
};

inline Vec act(const ActionSpec& spec, const GroupElement& g, const Vec& x) {
    if (g.id != spec.gid || g.n != spec.gn) throw std::invalid_argument("wrong group for action");
    if (spec.space.residual(x) > 1e-8)
        throw std::invalid_argument("off-manifold input to action " + spec.id);
    return spec.act_raw(g, x);
}

// Tangent transport; all cataloged actions are linear in the point.
inline Vec act_tangent(const ActionSpec& spec, const GroupElement& g, const Vec& v) {
    return spec.act_raw(g, v);
}

struct TangentVector {
    Vec base;
    Vec vector;
};

// Closed-form Killing (action) field U*_p.
inline Vec killing_field(const ActionSpec& spec, const AlgebraVector& u, const Vec& p) {
    return spec.infinitesimal(u, p);
}

// Central-difference cross check of the closed form.
inline Vec killing_field_fd(const ActionSpec& spec, const AlgebraVector& u, const Vec& p,
                            double h = 1e-5) {
    GroupElement gp = group_exp(u * h);
    GroupElement gm = group_exp(u * -h);
    return (spec.act_raw(gp, p) - spec.act_raw(gm, p)) / (2.0 * h);
}

struct IsotropyData {
    std::vector<AlgebraVector> isotropy;   // Q-orthonormal basis of g_p
    std::vector<AlgebraVector> m_basis;    // Q-orthonormal basis of the complement m_p
    Mat killing;                           // ambient x dim(g), columns = basis Killing fields
};

// Kernel/complement split of U -> U*_p by singular value thresholding.
inline IsotropyData isotropy_algebra(const ActionSpec& spec, const Vec& p,
                                     double rel_tol = 1e-8) {
    const auto basis = algebra_basis(spec.gid, spec.gn);
    const int d = static_cast<int>(basis.size());
    Mat k(spec.space.ambient, d);
    for (int a = 0; a < d; ++a) k.col(a) = spec.infinitesimal(basis[a], p);
    Eigen::JacobiSVD<Mat> svd(k, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double cutoff = sv.size() > 0 ? sv[0] * rel_tol : 0.0;
    IsotropyData out;
    out.killing = k;
    for (int a = 0; a < d; ++a) {
        const double sigma = a < sv.size() ? sv[a] : 0.0;
        AlgebraVector v = algebra_from_coords(spec.gid, spec.gn, svd.matrixV().col(a));
        if (sigma > cutoff && sigma > 0.0)
            out.m_basis.push_back(v);
        else
            out.isotropy.push_back(v);
    }
    return out;
}

// Orthonormal (euclidean) frame of the vertical space V_p.
inline Mat vertical_frame(const ActionSpec& spec, const Vec& p) {
    IsotropyData iso = isotropy_algebra(spec, p);
    Mat v(spec.space.ambient, static_cast<int>(iso.m_basis.size()));
    for (size_t a = 0; a < iso.m_basis.size(); ++a)
        v.col(static_cast<int>(a)) = spec.infinitesimal(iso.m_basis[a], p);
    Eigen::HouseholderQR<Mat> qr(v);
    Mat q = qr.householderQ();
    return q.leftCols(v.cols());
}

// Max over samples of |f(g x) - g f(x)|.
inline double check_equivariance(const std::function<Vec(const Vec&)>& f,
                                 const ActionSpec& dom, const ActionSpec& cod, int n_samples,
                                 std::uint64_t seed) {
    Rng rng(seed);
    double worst = 0;
    for (int t = 0; t < n_samples; ++t) {
        Vec x = dom.space.sample(rng);
        GroupElement g = haar_sample(dom.gid, dom.gn, rng);
        Vec lhs = f(dom.act_raw(g, x));
        Vec rhs = cod.act_raw(g, f(x));
        worst = std::max(worst, (lhs - rhs).norm());
    }
    return worst;
}

// --- helpers for matrix groups acting on packed real/complex vectors ---------

inline Vec apply_real_matrix(const QMat& m, const Vec& x) {
    Vec out = Vec::Zero(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out[i] += m(i, j).w * x[j];
    return out;
}

// Complex matrix entries (w + i x) acting on interleaved (re, im) pairs.
inline Vec apply_complex_matrix(const QMat& m, const Vec& x) {
    Vec out = Vec::Zero(2 * m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const double a = m(i, j).w, b = m(i, j).x;
            const double p = x[2 * j], q = x[2 * j + 1];
            out[2 * i] += a * p - b * q;
            out[2 * i + 1] += a * q + b * p;
        }
    return out;
}

// so(n) -> so(n+1), upper-left 1 fixed (derivative of the suspension s_n).
inline QMat suspend_algebra(const QMat& u) {
    QMat out(u.rows() + 1, u.cols() + 1);
    for (int i = 0; i < u.rows(); ++i)
        for (int j = 0; j < u.cols(); ++j) out(i + 1, j + 1) = u(i, j);
    return out;
}

inline QMat suspend_group(const QMat& g) {
    QMat out = suspend_algebra(g);
    out(0, 0) = Quat::one();
    return out;
}

// --- the catalog --------------------------------------------------------------

// S^7 in H x H: x at offset 0, y at offset 4.
inline ActionSpec action_hopf_principal_s7() {
    ActionSpec a;
    a.id = "hopf-principal-s7";
    a.gid = GroupId::S3;
    a.space = sphere_space(7);
    a.description = "s . (x, y) = (x s~, y s~), the principal circle of quaternions of the Hopf bundle";
    a.act_raw = [](const GroupElement& g, const Vec& p) {
        const Quat s = g.quat().conj();
        Vec out(8);
        set_quat(out, 0, get_quat(p, 0) * s);
        set_quat(out, 4, get_quat(p, 4) * s);
        return out;
    };
    a.infinitesimal = [](const AlgebraVector& u, const Vec& p) {
        const Quat q = u.quat();
        Vec out(8);
        set_quat(out, 0, -(get_quat(p, 0) * q));
        set_quat(out, 4, -(get_quat(p, 4) * q));
        return out;
    };
    return a;
}

inline ActionSpec action_hopf_star_s7() {
    ActionSpec a;
    a.id = "hopf-star-s7";
    a.gid = GroupId::S3;
    a.space = sphere_space(7);
    a.description = "r . (x, y) = (r x, r y), the star action over the Hopf bundle";
    a.act_raw = [](const GroupElement& g, const Vec& p) {
        const Quat r = g.quat();
        Vec out(8);
        set_quat(out, 0, r * get_quat(p, 0));
        set_quat(out, 4, r * get_quat(p, 4));
        return out;
    };
    a.infinitesimal = [](const AlgebraVector& u, const Vec& p) {
        const Quat q = u.quat();
        Vec out(8);
        set_quat(out, 0, q * get_quat(p, 0));
        set_quat(out, 4, q * get_quat(p, 4));
        return out;
    };
    return a;
}

inline ActionSpec action_gm_s7() {
    ActionSpec a;
    a.id = "gm-s7";
    a.gid = GroupId::S3;
    a.space = sphere_space(7);
    a.description = "q . (x, y) = (q x q~, q y q~), the sphere action under the Gromoll-Meyer bundle";
    a.act_raw = [](const GroupElement& g, const Vec& p) {
        const Quat q = g.quat();
        Vec out(8);
        set_quat(out, 0, q * get_quat(p, 0) * q.conj());
        set_quat(out, 4, q * get_quat(p, 4) * q.conj());
        return out;
    };
    a.infinitesimal = [](const AlgebraVector& u, const Vec& p) {
        const Quat q = u.quat();
        Quat x = get_quat(p, 0), y = get_quat(p, 4);
        Vec out(8);
        set_quat(out, 0, q * x - x * q);
        set_quat(out, 4, q * y - y * q);
        return out;
    };
    return a;
}

// S^6 as the equator Re x = 0 of the above, in Im H x H.
inline ActionSpec action_gm_s6() {
    ActionSpec a;
    a.id = "gm-s6";
    a.gid = GroupId::S3;
    a.space = sphere_space(6);
    a.description = "q . (p, w) = (q p q~, q w q~) on the equator 6-sphere";
    a.act_raw = [](const GroupElement& g, const Vec& v) {
        const Quat q = g.quat();
        Vec out(7);
        set_imquat(out, 0, q * get_imquat(v, 0) * q.conj());
        set_quat(out, 3, q * get_quat(v, 3) * q.conj());
        return out;
    };
    a.infinitesimal = [](const AlgebraVector& u, const Vec& v) {
        const Quat q = u.quat();
        Quat p = get_imquat(v, 0), w = get_quat(v, 3);
        Vec out(7);
        set_imquat(out, 0, q * p - p * q);
        set_quat(out, 3, q * w - w * q);
        return out;
    };
    return a;
}

inline ActionSpec action_conj_s3() {
    ActionSpec a;
    a.id = "conj-s3";
    a.gid = GroupId::S3;
    a.space = sphere_space(3);
    a.description = "q . x = q x q~ on the unit quaternions";
    a.act_raw = [](const GroupElement& g, const Vec& p) {
        const Quat q = g.quat();
        Vec out(4);
        set_quat(out, 0, q * get_quat(p, 0) * q.conj());
        return out;
    };
    a.infinitesimal = [](const AlgebraVector& u, const Vec& p) {
        const Quat q = u.quat();
        Quat x = get_quat(p, 0);
        Vec out(4);
        set_quat(out, 0, q * x - x * q);
        return out;
    };
    return a;
}

inline ActionSpec action_left_s3() {
    ActionSpec a;
    a.id = "left-s3";
    a.gid = GroupId::S3;
    a.space = sphere_space(3);
    a.description = "q . x = q x, left translations of the unit quaternions";
    a.act_raw = [](const GroupElement& g, const Vec& p) {
        Vec out(4);
        set_quat(out, 0, g.quat() * get_quat(p, 0));
        return out;
    };
    a.infinitesimal = [](const AlgebraVector& u, const Vec& p) {
        Vec out(4);
        set_quat(out, 0, u.quat() * get_quat(p, 0));
        return out;
    };
    return a;
}

// S^4 in R x H: lambda at 0, u at 1.
inline ActionSpec action_s4_rot() {
    ActionSpec a;
    a.id = "s4-rot";
    a.gid = GroupId::S3;
    a.space = sphere_space(4);
    a.description = "q . (l, u) = (l, q u q~), the base action of the Hopf cross diagram";
    a.act_raw = [](const GroupElement& g, const Vec& p) {
        const Quat q = g.quat();
        Vec out(5);
        out[0] = p[0];
        set_quat(out, 1, q * get_quat(p, 1) * q.conj());
        return out;
    };
    a.infinitesimal = [](const AlgebraVector& u, const Vec& p) {
        const Quat q = u.quat();
        Quat v = get_quat(p, 1);
        Vec out(5);
        out[0] = 0;
        set_quat(out, 1, q * v - v * q);
        return out;
    };
    return a;
}

// S^4 in R x H with q acting by left multiplication on the H part.
inline ActionSpec action_s4_half() {
    ActionSpec a;
    a.id = "s4-half";
    a.gid = GroupId::S3;
    a.space = sphere_space(4);
    a.description = "q . (l, x) = (l, q x) on the 4-sphere in R x H";
    a.act_raw = [](const GroupElement& g, const Vec& p) {
        Vec out(5);
        out[0] = p[0];
        set_quat(out, 1, g.quat() * get_quat(p, 1));
        return out;
    };
    a.infinitesimal = [](const AlgebraVector& u, const Vec& p) {
        Vec out(5);
        out[0] = 0;
        set_quat(out, 1, u.quat() * get_quat(p, 1));
        return out;
    };
    return a;
}

// S^8 in R x H x H: lambda at 0, x at 1, y at 5.
inline ActionSpec action_s8_rho8() {
    ActionSpec a;
    a.id = "s8-rho8";
    a.gid = GroupId::S3;
    a.space = sphere_space(8);
    a.description = "q . (l, x, y) = (l, q x, q y q~)";
    a.act_raw = [](const GroupElement& g, const Vec& p) {
        const Quat q = g.quat();
        Vec out(9);
        out[0] = p[0];
        set_quat(out, 1, q * get_quat(p, 1));
        set_quat(out, 5, q * get_quat(p, 5) * q.conj());
        return out;
    };
    a.infinitesimal = [](const AlgebraVector& u, const Vec& p) {
        const Quat q = u.quat();
        Quat y = get_quat(p, 5);
        Vec out(9);
        out[0] = 0;
        set_quat(out, 1, q * get_quat(p, 1));
        set_quat(out, 5, q * y - y * q);
        return out;
    };
    return a;
}

// S^10 in Im H x H x H: p at 0 (3 reals), w at 3, x at 7.
inline ActionSpec action_s10(bool variant_two) {
    ActionSpec a;
    a.id = variant_two ? "s10-ii" : "s10-i";
    a.gid = GroupId::S3;
    a.space = sphere_space(10);
    a.description = variant_two ? "q . (p, w, x) = (q p q~, q w q~, q x q~)"
                                : "q . (p, w, x) = (p, q w, q x q~)";
    a.act_raw = [variant_two](const GroupElement& g, const Vec& v) {
        const Quat q = g.quat();
        Quat p = get_imquat(v, 0), w = get_quat(v, 3), x = get_quat(v, 7);
        Vec out(11);
        if (variant_two) {
            set_imquat(out, 0, q * p * q.conj());
            set_quat(out, 3, q * w * q.conj());
        } else {
            set_imquat(out, 0, p);
            set_quat(out, 3, q * w);
        }
        set_quat(out, 7, q * x * q.conj());
        return out;
    };
    a.infinitesimal = [variant_two](const AlgebraVector& u, const Vec& v) {
        const Quat q = u.quat();
        Quat p = get_imquat(v, 0), w = get_quat(v, 3), x = get_quat(v, 7);
        Vec out(11);
        if (variant_two) {
            set_imquat(out, 0, q * p - p * q);
            set_quat(out, 3, q * w - w * q);
        } else {
            set_imquat(out, 0, Quat::zero());
            set_quat(out, 3, q * w);
        }
        set_quat(out, 7, q * x - x * q);
        return out;
    };
    return a;
}

// The effective SO(4) = S3 x S3 extension of the first S^10 action.
inline ActionSpec action_s10_so4() {
    ActionSpec a;
    a.id = "s10-so4";
    a.gid = GroupId::S3xS3;
    a.gn = 2;
    a.space = sphere_space(10);
    a.description = "(q, r) . (p, w, x) = (r p r~, q w r~, q x q~)";
    a.act_raw = [](const GroupElement& g, const Vec& v) {
        const Quat q = g.m(0, 0), r = g.m(1, 1);
        Quat p = get_imquat(v, 0), w = get_quat(v, 3), x = get_quat(v, 7);
        Vec out(11);
        set_imquat(out, 0, r * p * r.conj());
        set_quat(out, 3, q * w * r.conj());
        set_quat(out, 7, q * x * q.conj());
        return out;
    };
    a.infinitesimal = [](const AlgebraVector& u, const Vec& v) {
        const Quat u1 = u.m(0, 0), u2 = u.m(1, 1);
        Quat p = get_imquat(v, 0), w = get_quat(v, 3), x = get_quat(v, 7);
        Vec out(11);
        set_imquat(out, 0, u2 * p - p * u2);
        set_quat(out, 3, u1 * w - w * u2);
        set_quat(out, 7, u1 * x - x * u1);
        return out;
    };
    return a;
}

// Biaxial pairs action of S3 x S3 on S^7: (q, r) . (x, y) = (q x r~, q y r~).
inline ActionSpec action_biaxial_s3s3_s7() {
    ActionSpec a;
    a.id = "biaxial-s3s3-s7";
    a.gid = GroupId::S3xS3;
    a.gn = 2;
    a.space = sphere_space(7);
    a.description = "(q, r) . (x, y) = (q x r~, q y r~); star and principal Hopf actions together";
    a.act_raw = [](const GroupElement& g, const Vec& p) {
        const Quat q = g.m(0, 0), rc = g.m(1, 1).conj();
        Vec out(8);
        set_quat(out, 0, q * get_quat(p, 0) * rc);
        set_quat(out, 4, q * get_quat(p, 4) * rc);
        return out;
    };
    a.infinitesimal = [](const AlgebraVector& u, const Vec& p) {
        const Quat u1 = u.m(0, 0), u2 = u.m(1, 1);
        Quat x = get_quat(p, 0), y = get_quat(p, 4);
        Vec out(8);
        set_quat(out, 0, u1 * x - x * u2);
        set_quat(out, 4, u1 * y - y * u2);
        return out;
    };
    return a;
}

// Biaxial O(n) on S^{2n-1} in R^n + R^n.
inline ActionSpec action_biaxial_on(int n) {
    ActionSpec a;
    a.id = "biaxial-o(" + std::to_string(n) + ")-s(" + std::to_string(2 * n - 1) + ")";
    a.gid = GroupId::On;
    a.gn = n;
    a.space = sphere_space(2 * n - 1);
    a.description = "r . (x, y) = (r x, r y)";
    a.act_raw = [n](const GroupElement& g, const Vec& p) {
        Vec out(2 * n);
        out.head(n) = apply_real_matrix(g.m, p.head(n));
        out.tail(n) = apply_real_matrix(g.m, p.tail(n));
        return out;
    };
    a.infinitesimal = [n](const AlgebraVector& u, const Vec& p) {
        Vec out(2 * n);
        out.head(n) = apply_real_matrix(u.m, p.head(n));
        out.tail(n) = apply_real_matrix(u.m, p.tail(n));
        return out;
    };
    return a;
}

// O(n) on S^n fixing the pole axis e_0 (the suspension of the standard action).
inline ActionSpec action_suspension_on(int n) {
    ActionSpec a;
    a.id = "suspension-o(" + std::to_string(n) + ")-s" + std::to_string(n);
    a.gid = GroupId::On;
    a.gn = n;
    a.space = sphere_space(n);
    a.description = "r . (l, v) = (l, r v)";
    a.act_raw = [n](const GroupElement& g, const Vec& p) {
        Vec out(n + 1);
        out[0] = p[0];
        out.tail(n) = apply_real_matrix(g.m, p.tail(n));
        return out;
    };
    a.infinitesimal = [n](const AlgebraVector& u, const Vec& p) {
        Vec out(n + 1);
        out[0] = 0;
        out.tail(n) = apply_real_matrix(u.m, p.tail(n));
        return out;
    };
    return a;
}

// U(m) on S^{2m} in iR x C^m: g . (t, z) = (t, g z).
inline ActionSpec action_um_s2m(int m) {
    ActionSpec a;
    a.id = "u(" + std::to_string(m) + ")-s" + std::to_string(2 * m);
    a.gid = GroupId::Um;
    a.gn = m;
    a.space = sphere_space(2 * m);
    a.description = "g . (t, z) = (t, g z) on the sphere in iR x C^m";
    a.act_raw = [m](const GroupElement& g, const Vec& p) {
        Vec out(2 * m + 1);
        out[0] = p[0];
        out.tail(2 * m) = apply_complex_matrix(g.m, p.tail(2 * m));
        return out;
    };
    a.infinitesimal = [m](const AlgebraVector& u, const Vec& p) {
        Vec out(2 * m + 1);
        out[0] = 0;
        out.tail(2 * m) = apply_complex_matrix(u.m, p.tail(2 * m));
        return out;
    };
    return a;
}

// Biaxial U(m) on S^{4m+1} in (iR x C^m)^2.
inline ActionSpec action_biaxial_um(int m) {
    ActionSpec a;
    a.id = "biaxial-u(" + std::to_string(m) + ")-s" + std::to_string(4 * m + 1);
    a.gid = GroupId::Um;
    a.gn = m;
    a.space = sphere_space(4 * m + 1);
    a.description = "g . (t1, z1, t2, z2) = (t1, g z1, t2, g z2)";
    const int w = 2 * m + 1;
    a.act_raw = [m, w](const GroupElement& g, const Vec& p) {
        Vec out(2 * w);
        out[0] = p[0];
        out.segment(1, 2 * m) = apply_complex_matrix(g.m, p.segment(1, 2 * m));
        out[w] = p[w];
        out.segment(w + 1, 2 * m) = apply_complex_matrix(g.m, p.segment(w + 1, 2 * m));
        return out;
    };
    a.infinitesimal = [m, w](const AlgebraVector& u, const Vec& p) {
        Vec out(2 * w);
        out[0] = 0;
        out.segment(1, 2 * m) = apply_complex_matrix(u.m, p.segment(1, 2 * m));
        out[w] = 0;
        out.segment(w + 1, 2 * m) = apply_complex_matrix(u.m, p.segment(w + 1, 2 * m));
        return out;
    };
    return a;
}

// Gromoll-Meyer star action on Sp(2).
inline ActionSpec action_gm_star_sp2() {
    ActionSpec a;
    a.id = "gm-star-sp2";
    a.gid = GroupId::S3;
    a.space = group_as_space(GroupId::Sp2, 2, "sp2");
    a.description = "q . [a c; b d] = [q a q~  q c; q b q~  q d]";
    a.act_raw = [](const GroupElement& g, const Vec& p) {
        const Quat q = g.quat();
        QMat m = unpack_group(GroupId::Sp2, 2, p);
        QMat out(2, 2);
        out(0, 0) = q * m(0, 0) * q.conj();
        out(1, 0) = q * m(1, 0) * q.conj();
        out(0, 1) = q * m(0, 1);
        out(1, 1) = q * m(1, 1);
        return pack_group(GroupId::Sp2, 2, out);
    };
    a.infinitesimal = [](const AlgebraVector& u, const Vec& p) {
        const Quat q = u.quat();
        QMat m = unpack_group(GroupId::Sp2, 2, p);
        QMat out(2, 2);
        out(0, 0) = q * m(0, 0) - m(0, 0) * q;
        out(1, 0) = q * m(1, 0) - m(1, 0) * q;
        out(0, 1) = q * m(0, 1);
        out(1, 1) = q * m(1, 1);
        return pack_group(GroupId::Sp2, 2, out);
    };
    return a;
}

// Principal action of the first-column projection Sp(2) -> S^7.
inline ActionSpec action_sp2_principal() {
    ActionSpec a;
    a.id = "sp2-principal";
    a.gid = GroupId::S3;
    a.space = group_as_space(GroupId::Sp2, 2, "sp2");
    a.description = "s . [a c; b d] = [a  c s~; b  d s~]";
    a.act_raw = [](const GroupElement& g, const Vec& p) {
        const Quat sc = g.quat().conj();
        QMat m = unpack_group(GroupId::Sp2, 2, p);
        m(0, 1) = m(0, 1) * sc;
        m(1, 1) = m(1, 1) * sc;
        return pack_group(GroupId::Sp2, 2, m);
    };
    a.infinitesimal = [](const AlgebraVector& u, const Vec& p) {
        const Quat q = u.quat();
        QMat m = unpack_group(GroupId::Sp2, 2, p);
        QMat out(2, 2);
        out(0, 1) = -(m(0, 1) * q);
        out(1, 1) = -(m(1, 1) * q);
        return pack_group(GroupId::Sp2, 2, out);
    };
    return a;
}

// Frame bundle star action: r . A = s_n(r) A on O(n+1).
inline ActionSpec action_kervaire_star(int n) {
    ActionSpec a;
    a.id = "kervaire-star-o(" + std::to_string(n + 1) + ")";
    a.gid = GroupId::On;
    a.gn = n;
    a.space = group_as_space(GroupId::On, n + 1, "o(" + std::to_string(n + 1) + ")");
    a.description = "r . A = s(r) A, left multiplication through the suspension";
    a.act_raw = [n](const GroupElement& g, const Vec& p) {
        QMat m = unpack_group(GroupId::On, n + 1, p);
        return pack_group(GroupId::On, n + 1, suspend_group(g.m) * m);
    };
    a.infinitesimal = [n](const AlgebraVector& u, const Vec& p) {
        QMat m = unpack_group(GroupId::On, n + 1, p);
        return pack_group(GroupId::On, n + 1, suspend_algebra(u.m) * m);
    };
    return a;
}

// Principal action of the frame projection O(n+1) -> S^n.
inline ActionSpec action_framebundle_principal(int n) {
    ActionSpec a;
    a.id = "frame-principal-o(" + std::to_string(n + 1) + ")";
    a.gid = GroupId::On;
    a.gn = n;
    a.space = group_as_space(GroupId::On, n + 1, "o(" + std::to_string(n + 1) + ")");
    a.description = "s . A = A s(s)^{-1}";
    a.act_raw = [n](const GroupElement& g, const Vec& p) {
        QMat m = unpack_group(GroupId::On, n + 1, p);
        return pack_group(GroupId::On, n + 1, m * suspend_group(g.m).adjoint());
    };
    a.infinitesimal = [n](const AlgebraVector& u, const Vec& p) {
        QMat m = unpack_group(GroupId::On, n + 1, p);
        return pack_group(GroupId::On, n + 1, -(m * suspend_algebra(u.m)));
    };
    return a;
}

// S^2 x S^3 with left translations on the group factor.
inline ActionSpec action_left_s3_factor() {
    ActionSpec a;
    a.id = "left-s3-factor";
    a.gid = GroupId::S3;
    a.space = product_space(sphere_space(2), sphere_space(3), "s2xs3");
    a.description = "q . (z, x) = (z, q x)";
    a.act_raw = [](const GroupElement& g, const Vec& p) {
        Vec out = p;
        Quat x = get_quat(p, 3);
        set_quat(out, 3, g.quat() * x);
        return out;
    };
    a.infinitesimal = [](const AlgebraVector& u, const Vec& p) {
        Vec out = Vec::Zero(7);
        set_quat(out, 3, u.quat() * get_quat(p, 3));
        return out;
    };
    return a;
}

// Circle factor rotation of the flat torus; orbits are circles with
// infinite fundamental group (negative control for the Ricci theorem).
inline ActionSpec action_torus_circle() {
    ActionSpec a;
    a.id = "torus-circle";
    a.gid = GroupId::Um;
    a.gn = 1;
    a.space = torus_space();
    a.orbits_finite_pi1 = false;
    a.description = "e^{it} . (z1, z2) = (e^{it} z1, z2) on the flat torus";
    a.act_raw = [](const GroupElement& g, const Vec& p) {
        Vec out = p;
        out.head(2) = apply_complex_matrix(g.m, p.head(2));
        return out;
    };
    a.infinitesimal = [](const AlgebraVector& u, const Vec& p) {
        Vec out = Vec::Zero(4);
        out.head(2) = apply_complex_matrix(u.m, p.head(2));
        return out;
    };
    return a;
}

// Quaternion matrix acting on a packed H^m column by left multiplication.
inline Vec apply_quat_matrix(const QMat& m, const Vec& x) {
    Vec out = Vec::Zero(4 * m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        Quat acc = Quat::zero();
        for (int j = 0; j < m.cols(); ++j) acc += m(i, j) * get_quat(x, 4 * j);
        set_quat(out, 4 * i, acc);
    }
    return out;
}

// Standard O(n) action on S^{n-1}.
inline ActionSpec action_standard_on(int n) {
    ActionSpec a;
    a.id = "standard-o(" + std::to_string(n) + ")-s" + std::to_string(n - 1);
    a.gid = GroupId::On;
    a.gn = n;
    a.space = sphere_space(n - 1);
    a.description = "r . x = r x";
    a.act_raw = [](const GroupElement& g, const Vec& p) { return apply_real_matrix(g.m, p); };
    a.infinitesimal = [](const AlgebraVector& u, const Vec& p) {
        return apply_real_matrix(u.m, p);
    };
    return a;
}

// U(m) on S^{2m+1} in R x (iR x C^m), fixing the first two coordinates.
inline ActionSpec action_suspension_um(int m) {
    ActionSpec a;
    a.id = "suspension-u(" + std::to_string(m) + ")-s" + std::to_string(2 * m + 1);
    a.gid = GroupId::Um;
    a.gn = m;
    a.space = sphere_space(2 * m + 1);
    a.description = "g . (x0, t, z) = (x0, t, g z)";
    a.act_raw = [m](const GroupElement& g, const Vec& p) {
        Vec out = p;
        out.tail(2 * m) = apply_complex_matrix(g.m, p.tail(2 * m));
        return out;
    };
    a.infinitesimal = [m](const AlgebraVector& u, const Vec& p) {
        Vec out = Vec::Zero(p.size());
        out.tail(2 * m) = apply_complex_matrix(u.m, p.tail(2 * m));
        return out;
    };
    return a;
}

// Sp(m) on S^{4m+2} in Im H x H^m: g . (y, z) = (y, g z).
inline ActionSpec action_spm_s4m2(int m) {
    ActionSpec a;
    a.id = "sp(" + std::to_string(m) + ")-s" + std::to_string(4 * m + 2);
    a.gid = GroupId::Spm;
    a.gn = m;
    a.space = sphere_space(4 * m + 2);
    a.description = "g . (y, z) = (y, g z) on the sphere in Im H x H^m";
    a.act_raw = [m](const GroupElement& g, const Vec& p) {
        Vec out = p;
        out.tail(4 * m) = apply_quat_matrix(g.m, p.tail(4 * m));
        return out;
    };
    a.infinitesimal = [m](const AlgebraVector& u, const Vec& p) {
        Vec out = Vec::Zero(p.size());
        out.tail(4 * m) = apply_quat_matrix(u.m, p.tail(4 * m));
        return out;
    };
    return a;
}

inline ActionSpec action_trivial(const Space& space, GroupId gid, int gn) {
    ActionSpec a;
    a.id = "trivial-" + space.id;
    a.gid = gid;
    a.gn = gn;
    a.space = space;
    a.description = "g . x = x";
    a.act_raw = [](const GroupElement&, const Vec& p) { return p; };
    a.infinitesimal = [](const AlgebraVector&, const Vec& p) {
        return Vec::Zero(p.size()).eval();
    };
    return a;
}

// Conjugation on a matrix-group space through a representation of the
// acting group: g . A = rep(g) A rep(g)^{-1}.
inline ActionSpec action_group_conj(std::string id, GroupId acting, int acting_n,
                                    GroupId target, int target_n,
                                    std::function<QMat(const GroupElement&)> rep,
                                    std::function<QMat(const AlgebraVector&)> rep_inf) {
    ActionSpec a;
    a.id = std::move(id);
    a.gid = acting;
    a.gn = acting_n;
    a.space = group_as_space(target, target_n, "o-target");
    a.space.id = a.id + "-space";
    a.description = "g . A = rep(g) A rep(g)^{-1}";
    a.act_raw = [target, target_n, rep](const GroupElement& g, const Vec& p) {
        QMat r = rep(g);
        return pack_group(target, target_n, r * unpack_group(target, target_n, p) * r.adjoint());
    };
    a.infinitesimal = [target, target_n, rep_inf](const AlgebraVector& u, const Vec& p) {
        QMat r = rep_inf(u);
        QMat m = unpack_group(target, target_n, p);
        return pack_group(target, target_n, r * m - m * r);
    };
    return a;
}

// Matrix of v -> q v q~ on R^4 = H.
inline QMat rho1_matrix(const Quat& q) {
    QMat m(4, 4);
    for (int b = 0; b < 4; ++b) {
        Quat col = q * Quat(b == 0, b == 1, b == 2, b == 3) * q.conj();
        for (int a = 0; a < 4; ++a) m(a, b) = Quat(col[a]);
    }
    return m;
}

// Matrix of v -> q v on R^4 = H (the left regular representation).
inline QMat rho_left_matrix(const Quat& q) {
    QMat m(4, 4);
    for (int b = 0; b < 4; ++b) {
        Quat col = q * Quat(b == 0, b == 1, b == 2, b == 3);
        for (int a = 0; a < 4; ++a) m(a, b) = Quat(col[a]);
    }
    return m;
}

// Matrix of v -> v q~ on R^4 = H (the right regular representation).
inline QMat rho_right_matrix(const Quat& q) {
    QMat m(4, 4);
    for (int b = 0; b < 4; ++b) {
        Quat col = Quat(b == 0, b == 1, b == 2, b == 3) * q.conj();
        for (int a = 0; a < 4; ++a) m(a, b) = Quat(col[a]);
    }
    return m;
}

// Matrix of (u, a, b) -> (q u q~, a, b) on R^5 = Im H + R^2.
inline QMat i5_matrix(const Quat& q) {
    QMat m(5, 5);
    for (int b = 0; b < 3; ++b) {
        Quat col = q * Quat(0, b == 0, b == 1, b == 2) * q.conj();
        for (int a = 0; a < 3; ++a) m(a, b) = Quat(col[a + 1]);
    }
    m(3, 3) = Quat::one();
    m(4, 4) = Quat::one();
    return m;
}

inline QMat rho1_matrix_inf(const Quat& u) {
    QMat m(4, 4);
    for (int b = 0; b < 4; ++b) {
        Quat e(b == 0, b == 1, b == 2, b == 3);
        Quat col = u * e - e * u;
        for (int a = 0; a < 4; ++a) m(a, b) = Quat(col[a]);
    }
    return m;
}

inline QMat rho_left_matrix_inf(const Quat& u) {
    QMat m(4, 4);
    for (int b = 0; b < 4; ++b) {
        Quat col = u * Quat(b == 0, b == 1, b == 2, b == 3);
        for (int a = 0; a < 4; ++a) m(a, b) = Quat(col[a]);
    }
    return m;
}

inline QMat rho_right_matrix_inf(const Quat& u) {
    QMat m(4, 4);
    for (int b = 0; b < 4; ++b) {
        Quat col = Quat(b == 0, b == 1, b == 2, b == 3) * (-u);
        for (int a = 0; a < 4; ++a) m(a, b) = Quat(col[a]);
    }
    return m;
}

inline QMat i5_matrix_inf(const Quat& u) {
    QMat m(5, 5);
    for (int b = 0; b < 3; ++b) {
        Quat e(0, b == 0, b == 1, b == 2);
        Quat col = u * e - e * u;
        for (int a = 0; a < 3; ++a) m(a, b) = Quat(col[a + 1]);
    }
    return m;
}

// Pair actions used to state the SO(4) symmetry of the Blakers-Massey
// element and the two-sided symmetry of the Hopf map.
inline ActionSpec action_b_so4_domain() {
    ActionSpec a;
    a.id = "so4-s6";
    a.gid = GroupId::S3xS3;
    a.gn = 2;
    a.space = sphere_space(6);
    a.description = "(q, r) . (p, w) = (r p r~, q w r~)";
    a.act_raw = [](const GroupElement& g, const Vec& v) {
        const Quat q = g.m(0, 0), r = g.m(1, 1);
        Vec out(7);
        set_imquat(out, 0, r * get_imquat(v, 0) * r.conj());
        set_quat(out, 3, q * get_quat(v, 3) * r.conj());
        return out;
    };
    a.infinitesimal = [](const AlgebraVector& u, const Vec& v) {
        const Quat u1 = u.m(0, 0), u2 = u.m(1, 1);
        Quat p = get_imquat(v, 0), w = get_quat(v, 3);
        Vec out(7);
        set_imquat(out, 0, u2 * p - p * u2);
        set_quat(out, 3, u1 * w - w * u2);
        return out;
    };
    return a;
}

inline ActionSpec action_conj_q_of_pair_s3() {
    ActionSpec a;
    a.id = "so4-conj-s3";
    a.gid = GroupId::S3xS3;
    a.gn = 2;
    a.space = sphere_space(3);
    a.description = "(q, r) . v = q v q~";
    a.act_raw = [](const GroupElement& g, const Vec& p) {
        const Quat q = g.m(0, 0);
        Vec out(4);
        set_quat(out, 0, q * get_quat(p, 0) * q.conj());
        return out;
    };
    a.infinitesimal = [](const AlgebraVector& u, const Vec& p) {
        const Quat q = u.m(0, 0);
        Quat x = get_quat(p, 0);
        Vec out(4);
        set_quat(out, 0, q * x - x * q);
        return out;
    };
    return a;
}

inline ActionSpec action_s4_rot_pair() {
    ActionSpec a;
    a.id = "so4-s4-rot";
    a.gid = GroupId::S3xS3;
    a.gn = 2;
    a.space = sphere_space(4);
    a.description = "(q, r) . (l, u) = (l, q u q~)";
    a.act_raw = [](const GroupElement& g, const Vec& p) {
        const Quat q = g.m(0, 0);
        Vec out(5);
        out[0] = p[0];
        set_quat(out, 1, q * get_quat(p, 1) * q.conj());
        return out;
    };
    a.infinitesimal = [](const AlgebraVector& u, const Vec& p) {
        const Quat q = u.m(0, 0);
        Quat v = get_quat(p, 1);
        Vec out(5);
        out[0] = 0;
        set_quat(out, 1, q * v - v * q);
        return out;
    };
    return a;
}

// --- registry -----------------------------------------------------------------

inline const std::vector<ActionSpec>& action_catalog() {
    static const std::vector<ActionSpec> catalog = [] {
        std::vector<ActionSpec> v;
        v.push_back(action_hopf_principal_s7());
        v.push_back(action_hopf_star_s7());
        v.push_back(action_gm_s7());
        v.push_back(action_gm_s6());
        v.push_back(action_conj_s3());
        v.push_back(action_left_s3());
        v.push_back(action_s4_rot());
        v.push_back(action_s4_half());
        v.push_back(action_s8_rho8());
        v.push_back(action_s10(false));
        v.push_back(action_s10(true));
        v.push_back(action_s10_so4());
        v.push_back(action_biaxial_s3s3_s7());
        v.push_back(action_biaxial_on(4));
        v.push_back(action_biaxial_on(5));
        v.push_back(action_biaxial_on(6));
        v.push_back(action_suspension_on(4));
        v.push_back(action_suspension_on(5));
        v.push_back(action_suspension_on(6));
        v.push_back(action_um_s2m(2));
        v.push_back(action_um_s2m(3));
        v.push_back(action_biaxial_um(2));
        v.push_back(action_biaxial_um(3));
        v.push_back(action_gm_star_sp2());
        v.push_back(action_sp2_principal());
        v.push_back(action_kervaire_star(4));
        v.push_back(action_framebundle_principal(4));
        v.push_back(action_left_s3_factor());
        v.push_back(action_torus_circle());
        for (int n : {4, 5, 6}) v.push_back(action_standard_on(n));
        for (int m : {2, 3}) v.push_back(action_suspension_um(m));
        for (int m : {1, 2}) v.push_back(action_spm_s4m2(m));
        v.push_back(action_trivial(sphere_space(4), GroupId::S3, 1));
        v.push_back(action_b_so4_domain());
        v.push_back(action_conj_q_of_pair_s3());
        v.push_back(action_s4_rot_pair());
        v.push_back(action_group_conj("conj-rho1-o4", GroupId::S3, 1, GroupId::On, 4,
                                      [](const GroupElement& g) { return rho1_matrix(g.quat()); },
                                      [](const AlgebraVector& u) {
                                          return rho1_matrix_inf(u.quat());
                                      }));
        v.push_back(action_group_conj("conj-rhoL-o4", GroupId::S3, 1, GroupId::On, 4,
                                      [](const GroupElement& g) {
                                          return rho_left_matrix(g.quat());
                                      },
                                      [](const AlgebraVector& u) {
                                          return rho_left_matrix_inf(u.quat());
                                      }));
        v.push_back(action_group_conj("conj-rhoR-o4", GroupId::S3, 1, GroupId::On, 4,
                                      [](const GroupElement& g) {
                                          return rho_right_matrix(g.quat());
                                      },
                                      [](const AlgebraVector& u) {
                                          return rho_right_matrix_inf(u.quat());
                                      }));
        v.push_back(action_group_conj("conj-i5-o5", GroupId::S3, 1, GroupId::On, 5,
                                      [](const GroupElement& g) { return i5_matrix(g.quat()); },
                                      [](const AlgebraVector& u) {
                                          return i5_matrix_inf(u.quat());
                                      }));
        for (int n : {4, 5, 6})
            v.push_back(action_group_conj("conj-o(" + std::to_string(n) + ")", GroupId::On, n,
                                          GroupId::On, n,
                                          [](const GroupElement& g) { return g.m; },
                                          [](const AlgebraVector& u) { return u.m; }));
        for (int m : {2, 3})
            v.push_back(action_group_conj("conj-u(" + std::to_string(m) + ")", GroupId::Um, m,
                                          GroupId::Um, m,
                                          [](const GroupElement& g) { return g.m; },
                                          [](const AlgebraVector& u) { return u.m; }));
        for (int m : {1, 2})
            v.push_back(action_group_conj("conj-sp(" + std::to_string(m) + ")", GroupId::Spm, m,
                                          GroupId::Spm, m,
                                          [](const GroupElement& g) { return g.m; },
                                          [](const AlgebraVector& u) { return u.m; }));
        for (int k : {4, 5})
            v.push_back(action_group_conj("conj-s-o(" + std::to_string(k + 1) + ")", GroupId::On,
                                          k, GroupId::On, k + 1,
                                          [](const GroupElement& g) {
                                              return suspend_group(g.m);
                                          },
                                          [](const AlgebraVector& u) {
                                              return suspend_algebra(u.m);
                                          }));
        return v;
    }();
    return catalog;
}

inline const ActionSpec& find_action(const std::string& id) {
    for (const auto& a : action_catalog())
        if (a.id == id) return a;
    throw std::out_of_range("no cataloged action: " + id);
}

}  // namespace cheegerlab
