#include <catch2/catch_amalgamated.hpp>

#include "cheegerlab/maps.hpp"

using namespace cheegerlab;

namespace {

Vec s7_point(const Quat& x, const Quat& y) {
    Vec v(8);
    set_quat(v, 0, x);
    set_quat(v, 4, y);
    return v;
}

}  // namespace

TEST_CASE("hopf map pinned values") {
    const double r = 1.0 / std::sqrt(2.0);
    Vec a = hopf_map(s7_point(Quat::one(), Quat::zero()));
    CHECK(a[0] == 1.0);
    CHECK(a.tail(4).norm() == 0.0);
    Vec b = hopf_map(s7_point(Quat::zero(), Quat::one()));
    CHECK(b[0] == -1.0);
    Vec c = hopf_map(s7_point(Quat(r), Quat(r)));
    CHECK(std::abs(c[0]) <= 1e-15);
    CHECK(std::abs(c[1] - 1.0) <= 1e-15);
}

TEST_CASE("hopf map composed with conjugation is principal-invariant and conjugates") {
    // pi'(x, y) := hopf(x~, y~) has invariant first coordinate under the
    // principal action and conjugated quaternion part.
    Rng rng(3);
    double worst = 0;
    for (int t = 0; t < 500; ++t) {
        Quat x = random_quat(rng), y = random_quat(rng);
        const double n = std::sqrt(x.norm_sq() + y.norm_sq());
        x = x / n;
        y = y / n;
        Quat s = random_unit_quat(rng);
        Vec base = hopf_map(s7_point(x.conj(), y.conj()));
        Vec moved = hopf_map(s7_point((x * s.conj()).conj(), (y * s.conj()).conj()));
        worst = std::max(worst, std::abs(moved[0] - base[0]));
        Quat want = s * get_quat(base, 1) * s.conj();
        worst = std::max(worst, qdist(get_quat(moved, 1), want));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("blakers-massey branch values") {
    Rng rng(5);
    Quat w = random_unit_quat(rng);
    CHECK(qdist(blakers_massey(Quat::zero(), w), Quat::one()) <= 1e-14);
    Quat p = random_imaginary_unit(rng);
    CHECK(qdist(blakers_massey(p, Quat::zero()), -Quat::one()) == 0.0);
}

TEST_CASE("blakers-massey is continuous across w = 0") {
    Rng rng(6);
    for (int k = 3; k <= 7; ++k) {
        const double eps = std::pow(10.0, -k);
        double worst = 0;
        for (int t = 0; t < 50; ++t) {
            Quat w = random_unit_quat(rng) * eps;
            Quat p = random_imaginary_unit(rng) * std::sqrt(1.0 - eps * eps);
            worst = std::max(worst, qdist(blakers_massey(p, w), -Quat::one()));
        }
        CHECK(worst <= 10.0 * eps);
    }
}

TEST_CASE("f8 pinned values") {
    Vec p = Vec::Zero(9);
    p[0] = 1.0;
    Vec img = f8_map(p);
    CHECK(qdist(get_quat(img, 0), Quat::one()) <= 1e-15);
    CHECK(get_quat(img, 4).norm() == 0.0);

    Rng rng(7);
    Quat w = random_unit_quat(rng);
    Vec q = Vec::Zero(9);
    set_quat(q, 5, w);
    Vec img2 = f8_map(q);
    CHECK(get_quat(img2, 0).norm() <= 1e-15);
    CHECK(qdist(get_quat(img2, 4), w) <= 1e-15);
}

TEST_CASE("bump endpoints, identity region, monotonicity") {
    CHECK(bump(0.0) == 0.0);
    CHECK(bump(1.0) == 1.0);
    CHECK(bump(0.5) == 0.5);
    CHECK(bump(0.3) == 0.3);
    CHECK(bump(0.02) == 0.0);  // constant near 0
    CHECK(bump(0.99) == 1.0);  // constant near 1

    Rng rng(8);
    std::vector<double> xs;
    for (int t = 0; t < 10000; ++t) xs.push_back(rng.uniform());
    std::sort(xs.begin(), xs.end());
    double prev_v = 0;
    bool monotone = true;
    for (double s : xs) {
        double v = bump(s);
        if (v < prev_v) monotone = false;
        prev_v = v;
    }
    CHECK(monotone);

    bool clamped = false;
    CHECK(bump(1.5, &clamped) == 1.0);
    CHECK(clamped);
}

TEST_CASE("f10 pinned branches") {
    Rng rng(9);
    // |x| large enough that bump saturates: image is (0, x/|x|)
    Quat x = random_unit_quat(rng) * 0.97;
    double rest = std::sqrt(1.0 - 0.97 * 0.97);
    Quat xi = random_imaginary_unit(rng) * (rest * 0.6);
    Quat w = random_unit_quat(rng) * std::sqrt(rest * rest - xi.norm_sq());
    Vec v(11);
    set_imquat(v, 0, xi);
    set_quat(v, 3, w);
    set_quat(v, 7, x);
    Vec img = f10_map(v);
    CHECK(get_quat(img, 0).norm() <= 1e-14);
    CHECK(qdist(get_quat(img, 4), x.normalized()) <= 1e-14);

    // x = 0: image is (b of the normalized pair, 0)
    Quat xi2 = random_imaginary_unit(rng) * 0.5;
    Quat w2 = random_unit_quat(rng) * std::sqrt(1.0 - 0.25);
    Vec v2 = Vec::Zero(11);
    set_imquat(v2, 0, xi2);
    set_quat(v2, 3, w2);
    Vec img2 = f10_map(v2);
    CHECK(get_quat(img2, 4).norm() == 0.0);
    CHECK(qdist(get_quat(img2, 0), blakers_massey(xi2, w2)) <= 1e-14);
}

TEST_CASE("tau_n is the reflection fixing x") {
    Rng rng(10);
    for (int n : {4, 5, 6}) {
        Space s = sphere_space(n - 1);
        Vec x = s.sample(rng);
        QMat t = tau_n(x);
        CHECK((apply_real_matrix(t, x) - x).norm() <= 1e-14);
        // any v orthogonal to x reverses
        Vec v = s.sample(rng);
        v -= v.dot(x) * x;
        CHECK((apply_real_matrix(t, v) + v).norm() <= 1e-14);
        CHECK(unitarity_residual(t) <= 1e-14);
    }
}

TEST_CASE("tauC and tauH are unitary at random points") {
    Rng rng(11);
    double worst = 0;
    for (int t = 0; t < 200; ++t) {
        Vec p = sphere_space(4).sample(rng);
        worst = std::max(worst, unitarity_residual(tau_c(2, p)));
        Vec q = sphere_space(6).sample(rng);
        worst = std::max(worst, unitarity_residual(tau_h(1, q)));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("j_tau pinned values") {
    const int n = 4;
    // x1 = 0 -> pole
    Vec v = Vec::Zero(2 * n);
    v[n] = 1.0;  // x2 = e1
    Vec img = j_tau_n(n, v);
    CHECK(std::abs(img[0] - 1.0) <= 1e-15);

    // |x1| = 1, x2 = 0 -> antipode under the axis convention
    Vec u = Vec::Zero(2 * n);
    u[1] = 1.0;
    Vec img2 = j_tau_n(n, u);
    CHECK(std::abs(img2[0] + 1.0) <= 1e-12);
}

TEST_CASE("eta pinned value and no singular locus on the sphere") {
    Vec p = Vec::Zero(5);
    p[0] = 1.0;
    CHECK(qdist(eta_quat(p), Quat::one()) == 0.0);
    // the denominator l^2 + |x|^4 is bounded below on the sphere
    Rng rng(12);
    for (int t = 0; t < 500; ++t) {
        Vec v = sphere_space(4).sample(rng);
        const double l = v[0];
        Quat x = get_quat(v, 1);
        double d2 = l * l + x.norm_sq() * x.norm_sq();
        CHECK(d2 >= 0.74);
    }
}

TEST_CASE("suspension fixes the identity") {
    Vec id4 = pack_group(GroupId::On, 4, QMat::identity(4));
    Vec img = find_map("s4").eval(id4);
    CHECK((img - pack_group(GroupId::On, 5, QMat::identity(5))).norm() == 0.0);
}

TEST_CASE("milnor transitions pinned values") {
    Rng rng(13);
    for (int t = 0; t < 50; ++t) {
        Quat x = random_unit_quat(rng);
        CHECK((milnor_transition(0, 0, x) - QMat::identity(4)).norm() == 0.0);
    }
    CHECK((milnor_transition(2, -1, Quat::one()) - QMat::identity(4)).norm() == 0.0);
    CHECK((milnor_transition(-3, 3, Quat::one()) - QMat::identity(4)).norm() == 0.0);
    for (int t = 0; t < 50; ++t) {
        Quat x = random_unit_quat(rng);
        double det = real_matrix(milnor_transition(2, -1, x)).determinant();
        CHECK(std::abs(det - 1.0) <= 1e-12);
    }
}

TEST_CASE("every cataloged map lands on its codomain") {
    for (const auto& m : map_catalog()) {
        INFO(m.id);
        CHECK(landing_residual(m, 100, 17) <= 1e-10);
    }
}

TEST_CASE("every cataloged map passes its registered equivariance") {
    for (const auto& m : map_catalog()) {
        INFO(m.id);
        CHECK(registered_equivariance_residual(m, 150, 19) <= 1e-9);
    }
}

TEST_CASE("negative control: hopf after a fixed rotation loses equivariance") {
    auto broken = [](const Vec& x) {
        Vec y = x;
        std::swap(y[0], y[3]);
        return hopf_map(y);
    };
    CHECK(check_equivariance(broken, find_action("gm-s7"), find_action("s4-rot"), 300, 23) >
          0.1);
}
