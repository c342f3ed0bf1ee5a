#pragma once

// The atlas of explicit equivariant maps: the Hopf map, the
// Blakers-Massey element, the sphere maps f8 / f10, transition functions
// tau_n / tau^C_m / tau^H_m and their J-constructions, the eta family,
// I_5, suspensions and the Milnor transitions t_{m,n}. Each entry knows
// its domain/codomain space and the action pair its equivariance is
// checked against.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cheegerlab/actions.hpp"

namespace cheegerlab {

// --- scalar bump --------------------------------------------------------------

namespace detail {
inline double mollifier(double s) { return s > 0 ? std::exp(-1.0 / s) : 0.0; }
// Smooth 0 -> 1 step: exactly 0 for u <= 0 and exactly 1 for u >= 1.
inline double smooth_step(double u) {
    const double a = mollifier(u), b = mollifier(1.0 - u);
    return a / (a + b);
}
}  // namespace detail

// Smooth non-decreasing reparametrization of [0,1]: identically 0 near 0,
// the identity on [1/4, 3/4], identically 1 near 1.
inline double bump(double s, bool* clamped = nullptr) {
    if (clamped) *clamped = s < 0.0 || s > 1.0;
    s = std::min(1.0, std::max(0.0, s));
    if (s <= 0.25) return s * detail::smooth_step((s - 0.05) / 0.20);
    if (s >= 0.75) return 1.0 - (1.0 - s) * detail::smooth_step((0.95 - s) / 0.20);
    return s;
}

// --- closed-form evaluators ----------------------------------------------------

// Hopf map S^7 -> S^4: (x, y) -> (|x|^2 - |y|^2, 2 x y~).
inline Vec hopf_map(const Vec& p) {
    Quat x = get_quat(p, 0), y = get_quat(p, 4);
    Vec out(5);
    out[0] = x.norm_sq() - y.norm_sq();
    set_quat(out, 1, 2.0 * (x * y.conj()));
    return out;
}

// Blakers-Massey element S^6 -> S^3:
// (p, w) -> (w/|w|) exp(pi p) (w~/|w|), with value -1 on w = 0.
inline Quat blakers_massey(const Quat& p, const Quat& w) {
    const double pi = 3.14159265358979323846;
    const double wn = w.norm();
    if (wn < 1e-150) return -Quat::one();
    Quat u = w / wn;
    return u * qexp_imaginary(p * pi) * u.conj();
}

inline Vec blakers_massey_map(const Vec& v) {
    Quat b = blakers_massey(get_imquat(v, 0), get_quat(v, 3));
    Vec out(4);
    set_quat(out, 0, b);
    return out;
}

// f8 : S^8 -> S^7, (l, x, w) -> (l + x i x~, w) normalized.
inline Vec f8_map(const Vec& v) {
    const double l = v[0];
    Quat x = get_quat(v, 1), w = get_quat(v, 5);
    Quat head = Quat(l) + x * Quat::i() * x.conj();
    const double n = std::sqrt(head.norm_sq() + w.norm_sq());
    Vec out(8);
    set_quat(out, 0, head / n);
    set_quat(out, 4, w / n);
    return out;
}

// f10 : S^10 -> S^7 built from the Blakers-Massey element and the bump.
inline Vec f10_map(const Vec& v) {
    Quat xi = get_imquat(v, 0), w = get_quat(v, 3), x = get_quat(v, 7);
    const double xn = x.norm();
    const double phi = bump(xn);
    Vec out(8);
    if (phi >= 1.0 - 1e-15) {
        set_quat(out, 0, Quat::zero());
        set_quat(out, 4, x / xn);
        return out;
    }
    const double rho = std::sqrt(xi.norm_sq() + w.norm_sq());
    Quat b = blakers_massey(xi / rho, w / rho);
    set_quat(out, 0, std::sqrt(1.0 - phi * phi) * b);
    set_quat(out, 4, phi <= 0.0 ? Quat::zero() : (phi / xn) * x);
    return out;
}

// tau_n : S^{n-1} -> O(n), the reflection v -> 2 <x, v> x - v that fixes
// x and reverses its complement. (Writing the image without the second
// factor of x is dimensionally inconsistent; the reflection is the only
// reading that makes tau_n(x) a matrix.)
inline QMat tau_n(const Vec& x) {
    const int n = static_cast<int>(x.size());
    QMat m(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) m(a, b) = Quat(2.0 * x[a] * x[b] - (a == b ? 1.0 : 0.0));
    return m;
}

// tau^C_m : S^{2m} -> U(m), (t, z) -> Id - (1 + e^{i pi t}) zhat zhat*.
// The z = 0 poles have e^{i pi t} = -1, so the identity is the continuous
// branch value there.
inline QMat tau_c(int m, const Vec& v) {
    const double t = v[0];
    QMat out = QMat::identity(m);
    Vec z = v.tail(2 * m);
    const double zn = z.norm();
    if (zn < 1e-14) return out;
    const double pi = 3.14159265358979323846;
    const Quat c = Quat(1.0 + std::cos(pi * t), std::sin(pi * t), 0, 0);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            const Quat za(z[2 * a] / zn, z[2 * a + 1] / zn, 0, 0);
            const Quat zb(z[2 * b] / zn, z[2 * b + 1] / zn, 0, 0);
            out(a, b) -= za * c * zb.conj();
        }
    return out;
}

// tau^H_m : S^{4m+2} -> Sp(m): the same formula with y in Im H, z in H^m.
inline QMat tau_h(int m, const Vec& v) {
    Quat y = get_imquat(v, 0);
    QMat out = QMat::identity(m);
    Vec z = v.tail(4 * m);
    const double zn = z.norm();
    if (zn < 1e-14) return out;
    const double pi = 3.14159265358979323846;
    const Quat cpi = Quat::one() + qexp_imaginary(y * pi);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            const Quat za = get_quat(z, 4 * a) / zn;
            const Quat zb = get_quat(z, 4 * b) / zn;
            out(a, b) -= za * cpi * zb.conj();
        }
    return out;
}

// J tau_n : S^{2n-1} -> S^n, exp at the pole of pi tau_n(x2/|x2|) x1.
// At x2 = 0 the reflection axis is taken along e_1; |x1| = 1 there, so
// the image is the antipode regardless of the choice.
inline Vec j_tau_n(int n, const Vec& v) {
    Vec x1 = v.head(n), x2 = v.tail(n);
    Vec axis;
    if (x2.norm() < 1e-8) {
        axis = Vec::Zero(n);
        axis[0] = 1.0;
    } else {
        axis = x2 / x2.norm();
    }
    const double pi = 3.14159265358979323846;
    Vec w = apply_real_matrix(tau_n(axis), x1) * pi;
    Vec e0 = Vec::Zero(n + 1);
    e0[0] = 1.0;
    Vec tangent(n + 1);
    tangent[0] = 0.0;
    tangent.tail(n) = w;
    return sphere_exp(e0, tangent);
}

// J tau^C_m : S^{4m+1} -> S^{2m+1}; tau^C acts on the C^m part of x1 and
// fixes its iR part, embedded in the tangent space at the pole.
inline Vec j_tau_c(int m, const Vec& v) {
    const int w = 2 * m + 1;
    Vec x1 = v.head(w), x2 = v.tail(w);
    QMat u;
    if (x2.norm() < 1e-8) {
        Vec axis = Vec::Zero(w);
        axis[0] = 1.0;
        u = tau_c(m, axis);
    } else {
        u = tau_c(m, (x2 / x2.norm()).eval());
    }
    const double pi = 3.14159265358979323846;
    Vec t(w);
    t[0] = x1[0];
    t.tail(2 * m) = apply_complex_matrix(u, x1.tail(2 * m));
    Vec e0 = Vec::Zero(w + 1);
    e0[0] = 1.0;
    Vec tangent(w + 1);
    tangent[0] = 0.0;
    tangent.tail(w) = t * pi;
    return sphere_exp(e0, tangent);
}

// J tau^H_m : S^{8m+5} -> S^{4m+3}, the quaternionic analogue.
inline Vec j_tau_h(int m, const Vec& v) {
    const int w = 4 * m + 3;
    Vec x1 = v.head(w), x2 = v.tail(w);
    QMat u;
    if (x2.norm() < 1e-8) {
        Vec axis = Vec::Zero(w);
        axis[0] = 1.0;
        u = tau_h(m, axis);
    } else {
        u = tau_h(m, (x2 / x2.norm()).eval());
    }
    const double pi = 3.14159265358979323846;
    Vec t(w);
    t.head(3) = x1.head(3);
    t.tail(4 * m) = apply_quat_matrix(u, x1.tail(4 * m));
    Vec e0 = Vec::Zero(w + 1);
    e0[0] = 1.0;
    Vec tangent(w + 1);
    tangent[0] = 0.0;
    tangent.tail(w) = t * pi;
    return sphere_exp(e0, tangent);
}

// eta : S^4 -> S^3, (l, x) -> (l + x i x~) normalized. The denominator
// l^2 + |x|^4 is bounded below by 3/4 on the sphere, so there is no
// singular locus.
inline Quat eta_quat(const Vec& v) {
    Quat h = Quat(v[0]) + get_quat(v, 1) * Quat::i() * get_quat(v, 1).conj();
    const double n = h.norm();
    if (n < 1e-12) throw std::domain_error("eta: vanishing denominator");
    return h / n;
}

inline Vec eta_map(const Vec& v) {
    Vec out(4);
    set_quat(out, 0, eta_quat(v));
    return out;
}

// Milnor transition t_{m,n}(x) : v -> x^m v x^n as an O(4) element.
inline QMat milnor_transition(int m, int n, const Quat& x) {
    const Quat xm = qpow(x, m), xn = qpow(x, n);
    QMat out(4, 4);
    for (int b = 0; b < 4; ++b) {
        Quat col = xm * Quat(b == 0, b == 1, b == 2, b == 3) * xn;
        for (int a = 0; a < 4; ++a) out(a, b) = Quat(col[a]);
    }
    return out;
}

// --- named map registry ---------------------------------------------------------

struct NamedMap {
    std::string id;
    Space domain;
    Space codomain;
    // Registered equivariance data: pairs of cataloged action ids.
    std::vector<std::pair<std::string, std::string>> equivariances;
    std::function<Vec(const Vec&)> eval;
    std::string singular_locus;  // empty when globally defined
};

inline double landing_residual(const NamedMap& m, int n_samples, std::uint64_t seed) {
    Rng rng(seed);
    double worst = 0;
    for (int t = 0; t < n_samples; ++t)
        worst = std::max(worst, m.codomain.residual(m.eval(m.domain.sample(rng))));
    return worst;
}

inline double registered_equivariance_residual(const NamedMap& m, int n_samples,
                                               std::uint64_t seed) {
    double worst = 0;
    for (const auto& [dom, cod] : m.equivariances)
        worst = std::max(worst, check_equivariance(m.eval, find_action(dom), find_action(cod),
                                                   n_samples, seed));
    return worst;
}

inline const std::vector<NamedMap>& map_catalog() {
    static const std::vector<NamedMap> catalog = [] {
        std::vector<NamedMap> v;

        {
            NamedMap m;
            m.id = "hopf";
            m.domain = sphere_space(7);
            m.codomain = sphere_space(4);
            m.equivariances = {{"gm-s7", "s4-rot"},
                               {"biaxial-s3s3-s7", "so4-s4-rot"},
                               {"hopf-principal-s7", "trivial-s4"}};
            m.eval = hopf_map;
            v.push_back(m);
        }
        {
            NamedMap m;
            m.id = "b";
            m.domain = sphere_space(6);
            m.codomain = sphere_space(3);
            m.equivariances = {{"gm-s6", "conj-s3"}, {"so4-s6", "so4-conj-s3"}};
            m.eval = blakers_massey_map;
            m.singular_locus = "w = 0 (branch value -1)";
            v.push_back(m);
        }
        {
            NamedMap m;
            m.id = "f8";
            m.domain = sphere_space(8);
            m.codomain = sphere_space(7);
            m.equivariances = {{"s8-rho8", "gm-s7"}};
            m.eval = f8_map;
            v.push_back(m);
        }
        {
            NamedMap m;
            m.id = "f10";
            m.domain = sphere_space(10);
            m.codomain = sphere_space(7);
            m.equivariances = {{"s10-i", "gm-s7"}, {"s10-ii", "gm-s7"}};
            m.eval = f10_map;
            v.push_back(m);
        }
        for (int n : {4, 5, 6}) {
            NamedMap m;
            m.id = "tau" + std::to_string(n);
            m.domain = sphere_space(n - 1);
            m.codomain = group_as_space(GroupId::On, n, "o(" + std::to_string(n) + ")");
            m.equivariances = {{"standard-o(" + std::to_string(n) + ")-s" +
                                    std::to_string(n - 1),
                                "conj-o(" + std::to_string(n) + ")"}};
            m.eval = [n](const Vec& x) { return pack_group(GroupId::On, n, tau_n(x)); };
            v.push_back(m);
        }
        for (int mm : {2, 3}) {
            NamedMap m;
            m.id = "tauC" + std::to_string(mm);
            m.domain = sphere_space(2 * mm);
            m.codomain = group_as_space(GroupId::Um, mm, "u(" + std::to_string(mm) + ")");
            m.equivariances = {{"u(" + std::to_string(mm) + ")-s" + std::to_string(2 * mm),
                                "conj-u(" + std::to_string(mm) + ")"}};
            m.eval = [mm](const Vec& x) { return pack_group(GroupId::Um, mm, tau_c(mm, x)); };
            m.singular_locus = "z = 0 (branch value Id)";
            v.push_back(m);
        }
        for (int mm : {1, 2}) {
            NamedMap m;
            m.id = "tauH" + std::to_string(mm);
            m.domain = sphere_space(4 * mm + 2);
            m.codomain = group_as_space(GroupId::Spm, mm, "sp(" + std::to_string(mm) + ")");
            m.equivariances = {{"sp(" + std::to_string(mm) + ")-s" + std::to_string(4 * mm + 2),
                                "conj-sp(" + std::to_string(mm) + ")"}};
            m.eval = [mm](const Vec& x) { return pack_group(GroupId::Spm, mm, tau_h(mm, x)); };
            m.singular_locus = "z = 0 (branch value Id)";
            v.push_back(m);
        }
        for (int n : {4, 5, 6}) {
            NamedMap m;
            m.id = "Jtau" + std::to_string(n);
            m.domain = sphere_space(2 * n - 1);
            m.codomain = sphere_space(n);
            m.equivariances = {{"biaxial-o(" + std::to_string(n) + ")-s(" +
                                    std::to_string(2 * n - 1) + ")",
                                "suspension-o(" + std::to_string(n) + ")-s" +
                                    std::to_string(n)}};
            m.eval = [n](const Vec& x) { return j_tau_n(n, x); };
            m.singular_locus = "x2 = 0 (axis convention e_1)";
            v.push_back(m);
        }
        for (int mm : {2, 3}) {
            NamedMap m;
            m.id = "JtauC" + std::to_string(mm);
            m.domain = sphere_space(4 * mm + 1);
            m.codomain = sphere_space(2 * mm + 1);
            m.equivariances = {{"biaxial-u(" + std::to_string(mm) + ")-s" +
                                    std::to_string(4 * mm + 1),
                                "suspension-u(" + std::to_string(mm) + ")-s" +
                                    std::to_string(2 * mm + 1)}};
            m.eval = [mm](const Vec& x) { return j_tau_c(mm, x); };
            m.singular_locus = "x2 = 0 (axis convention e_1)";
            v.push_back(m);
        }
        {
            NamedMap m;
            m.id = "eta";
            m.domain = sphere_space(4);
            m.codomain = sphere_space(3);
            m.equivariances = {{"s4-half", "conj-s3"}};
            m.eval = eta_map;
            v.push_back(m);
        }
        {
            NamedMap m;
            m.id = "etaL";
            m.domain = sphere_space(4);
            m.codomain = group_as_space(GroupId::On, 4, "o(4)");
            m.equivariances = {{"s4-half", "conj-rhoL-o4"}};
            m.eval = [](const Vec& x) {
                return pack_group(GroupId::On, 4, rho_left_matrix(eta_quat(x)));
            };
            v.push_back(m);
        }
        {
            NamedMap m;
            m.id = "etaR";
            m.domain = sphere_space(4);
            m.codomain = group_as_space(GroupId::On, 4, "o(4)");
            m.equivariances = {{"s4-half", "conj-rhoR-o4"}};
            m.eval = [](const Vec& x) {
                return pack_group(GroupId::On, 4, rho_right_matrix(eta_quat(x)));
            };
            v.push_back(m);
        }
        {
            NamedMap m;
            m.id = "i5";
            m.domain = sphere_space(3);
            m.codomain = group_as_space(GroupId::On, 5, "o(5)");
            m.equivariances = {{"conj-s3", "conj-i5-o5"}};
            m.eval = [](const Vec& x) {
                return pack_group(GroupId::On, 5, i5_matrix(get_quat(x, 0)));
            };
            v.push_back(m);
        }
        for (int k : {4, 5}) {
            NamedMap m;
            m.id = "s" + std::to_string(k);
            m.domain = group_as_space(GroupId::On, k, "o(" + std::to_string(k) + ")");
            m.codomain = group_as_space(GroupId::On, k + 1, "o(" + std::to_string(k + 1) + ")");
            m.equivariances = {{"conj-o(" + std::to_string(k) + ")",
                                "conj-s-o(" + std::to_string(k + 1) + ")"}};
            m.eval = [k](const Vec& x) {
                return pack_group(GroupId::On, k + 1, suspend_group(unpack_group(GroupId::On, k,
                                                                                 x)));
            };
            v.push_back(m);
        }
        {
            NamedMap m;
            m.id = "frame-projection-o(5)";
            m.domain = group_as_space(GroupId::On, 5, "o(5)");
            m.codomain = sphere_space(4);
            m.equivariances = {{"kervaire-star-o(5)", "suspension-o(4)-s4"}};
            m.eval = [](const Vec& x) {
                QMat a = unpack_group(GroupId::On, 5, x);
                Vec out(5);
                for (int i = 0; i < 5; ++i) out[i] = a(i, 0).w;
                return out;
            };
            v.push_back(m);
        }
        for (int mm = -3; mm <= 3; ++mm)
            for (int nn = -3; nn <= 3; ++nn) {
                NamedMap m;
                m.id = "milnor-t(" + std::to_string(mm) + "," + std::to_string(nn) + ")";
                m.domain = sphere_space(3);
                m.codomain = group_as_space(GroupId::On, 4, "o(4)");
                m.equivariances = {{"conj-s3", "conj-rho1-o4"}};
                m.eval = [mm, nn](const Vec& x) {
                    return pack_group(GroupId::On, 4, milnor_transition(mm, nn, get_quat(x, 0)));
                };
                v.push_back(m);
            }
        return v;
    }();
    return catalog;
}

inline const NamedMap& find_map(const std::string& id) {
    for (const auto& m : map_catalog())
        if (m.id == id) return m;
    throw std::out_of_range("no cataloged map: " + id);
}

}  // namespace cheegerlab
