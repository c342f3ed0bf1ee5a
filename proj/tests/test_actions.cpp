#include <catch2/catch_amalgamated.hpp>

#include "cheegerlab/actions.hpp"

using namespace cheegerlab;

namespace {

double action_axioms_residual(const ActionSpec& a, int n_samples, std::uint64_t seed) {
    Rng rng(seed);
    double worst = 0;
    GroupElement e = GroupElement::identity(a.gid, a.gn);
    for (int t = 0; t < n_samples; ++t) {
        Vec x = a.space.sample(rng);
        GroupElement g = haar_sample(a.gid, a.gn, rng);
        GroupElement h = haar_sample(a.gid, a.gn, rng);
        worst = std::max(worst, (a.act_raw(e, x) - x).norm());
        worst = std::max(worst, (a.act_raw(g * h, x) - a.act_raw(g, a.act_raw(h, x))).norm());
        worst = std::max(worst, a.space.residual(a.act_raw(g, x)));
        // every cataloged action is an ambient isometry of the embedding
        Vec y = a.space.sample(rng);
        worst = std::max(worst,
                         std::abs((a.act_raw(g, x) - a.act_raw(g, y)).norm() - (x - y).norm()));
    }
    return worst;
}

}  // namespace

TEST_CASE("action axioms hold on the whole catalog") {
    for (const auto& a : action_catalog()) {
        INFO(a.id);
        CHECK(action_axioms_residual(a, 60, 1234) <= 1e-12);
    }
}

TEST_CASE("closed-form killing fields match central differences") {
    Rng rng(55);
    for (const auto& a : action_catalog()) {
        INFO(a.id);
        double worst = 0;
        for (int t = 0; t < 25; ++t) {
            Vec p = a.space.sample(rng);
            AlgebraVector u = random_algebra_vector(a.gid, a.gn, rng, true);
            worst = std::max(worst,
                             (killing_field(a, u, p) - killing_field_fd(a, u, p)).norm());
        }
        CHECK(worst <= 1e-7);
    }
}

TEST_CASE("killing fields are tangent") {
    Rng rng(56);
    for (const auto& a : action_catalog()) {
        INFO(a.id);
        double worst = 0;
        for (int t = 0; t < 20; ++t) {
            Vec p = a.space.sample(rng);
            AlgebraVector u = random_algebra_vector(a.gid, a.gn, rng, true);
            worst = std::max(worst, a.space.tangency(p, killing_field(a, u, p)));
        }
        CHECK(worst <= 1e-10);
    }
}

TEST_CASE("gromoll-meyer star action with q = 1 is the identity on Sp(2)") {
    const ActionSpec& a = find_action("gm-star-sp2");
    Rng rng(77);
    Vec p = a.space.sample(rng);
    CHECK((act(a, GroupElement::identity(GroupId::S3, 1), p) - p).norm() == 0.0);
}

TEST_CASE("biaxial action preserves the sphere equation") {
    const ActionSpec& a = find_action("biaxial-o(5)-s(9)");
    Rng rng(78);
    for (int t = 0; t < 50; ++t) {
        Vec p = a.space.sample(rng);
        GroupElement g = haar_sample(GroupId::On, 5, rng);
        CHECK(a.space.residual(act(a, g, p)) <= 1e-12);
    }
}

TEST_CASE("the rho8 action fixes the poles of S^8") {
    const ActionSpec& a = find_action("s8-rho8");
    Rng rng(79);
    for (double sign : {1.0, -1.0}) {
        Vec pole = Vec::Zero(9);
        pole[0] = sign;
        GroupElement g = haar_sample(GroupId::S3, 1, rng);
        CHECK((act(a, g, pole) - pole).norm() == 0.0);
    }
}

TEST_CASE("off-manifold input is rejected") {
    const ActionSpec& a = find_action("gm-s7");
    Vec bad = Vec::Ones(8);
    CHECK_THROWS_AS(act(a, GroupElement::identity(GroupId::S3, 1), bad),
                    std::invalid_argument);
}

TEST_CASE("isotropy: free actions have empty isotropy basis") {
    Rng rng(80);
    for (const char* id : {"hopf-principal-s7", "hopf-star-s7", "sp2-principal",
                           "left-s3-factor"}) {
        const ActionSpec& a = find_action(id);
        INFO(id);
        Vec p = a.space.sample(rng);
        IsotropyData iso = isotropy_algebra(a, p);
        CHECK(iso.isotropy.empty());
        CHECK(static_cast<int>(iso.m_basis.size()) == algebra_dim(a.gid, a.gn));
    }
}

TEST_CASE("isotropy of the biaxial action at (e1, e2)/sqrt(2)") {
    for (int n : {4, 5, 6}) {
        const ActionSpec& a =
            find_action("biaxial-o(" + std::to_string(n) + ")-s(" + std::to_string(2 * n - 1) +
                        ")");
        Vec p = Vec::Zero(2 * n);
        p[0] = 1.0 / std::sqrt(2.0);
        p[n + 1] = 1.0 / std::sqrt(2.0);
        IsotropyData iso = isotropy_algebra(a, p);
        CHECK(static_cast<int>(iso.isotropy.size()) == (n - 2) * (n - 3) / 2);
    }
}

TEST_CASE("isotropy at a fixed point is the full algebra") {
    const ActionSpec& a = find_action("s8-rho8");
    Vec pole = Vec::Zero(9);
    pole[0] = 1.0;
    IsotropyData iso = isotropy_algebra(a, pole);
    CHECK(iso.isotropy.size() == 3);
    CHECK(iso.m_basis.empty());
}

TEST_CASE("hopf principal killing fields have unit gram matrix") {
    const ActionSpec& a = find_action("hopf-principal-s7");
    Rng rng(81);
    double worst = 0;
    for (int t = 0; t < 30; ++t) {
        Vec p = a.space.sample(rng);
        auto basis = algebra_basis(GroupId::S3, 1);
        for (size_t i = 0; i < basis.size(); ++i)
            for (size_t j = 0; j < basis.size(); ++j) {
                double got = killing_field(a, basis[i], p).dot(killing_field(a, basis[j], p));
                worst = std::max(worst, std::abs(got - (i == j ? 1.0 : 0.0)));
            }
    }
    CHECK(worst <= 1e-13);
}

TEST_CASE("vertical and horizontal dimensions add up") {
    Rng rng(82);
    for (const char* id : {"hopf-principal-s7", "gm-s7", "biaxial-s3s3-s7", "left-s3-factor",
                           "s8-rho8"}) {
        const ActionSpec& a = find_action(id);
        INFO(id);
        Vec p = a.space.sample(rng);
        IsotropyData iso = isotropy_algebra(a, p);
        const int dim_v = static_cast<int>(iso.m_basis.size());
        CHECK(dim_v == algebra_dim(a.gid, a.gn) - static_cast<int>(iso.isotropy.size()));
        CHECK(dim_v <= a.space.dim);
    }
}

TEST_CASE("equivariance checker: identity map and broken map") {
    const ActionSpec& a = find_action("gm-s7");
    auto ident = [](const Vec& x) { return x; };
    CHECK(check_equivariance(ident, a, a, 200, 5) == 0.0);

    // a fixed rotation that does not commute with the action
    auto broken = [](const Vec& x) {
        Vec y = x;
        std::swap(y[1], y[5]);
        return y;
    };
    CHECK(check_equivariance(broken, a, a, 200, 5) > 0.1);
}

TEST_CASE("isotropy killing matrix spans the orbit tangent") {
    const ActionSpec& a = find_action("gm-s7");
    Rng rng(83);
    Vec p = a.space.sample(rng);
    IsotropyData iso = isotropy_algebra(a, p);
    for (const auto& u : iso.m_basis)
        CHECK(killing_field(a, u, p).norm() > 1e-8);
    for (const auto& u : iso.isotropy)
        CHECK(killing_field(a, u, p).norm() <= 1e-10);
}
