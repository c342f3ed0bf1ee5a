#include <catch2/catch_amalgamated.hpp>

#include "cheegerlab/group.hpp"
#include "cheegerlab/quaternion.hpp"

using namespace cheegerlab;

TEST_CASE("hamilton product defining relations") {
    CHECK(qdist(Quat::i() * Quat::j(), Quat::k()) == 0.0);
    CHECK(qdist(Quat::j() * Quat::k(), Quat::i()) == 0.0);
    CHECK(qdist(Quat::k() * Quat::i(), Quat::j()) == 0.0);
    CHECK(qdist(Quat::i() * Quat::i(), -Quat::one()) == 0.0);

    Rng rng(11);
    Quat q = random_quat(rng);
    CHECK(qdist(Quat::one() * q, q) == 0.0);
    CHECK(qdist(q * Quat::one(), q) == 0.0);
}

TEST_CASE("associativity and multiplicativity of the norm at random triples") {
    Rng rng(101);
    double worst_assoc = 0, worst_norm = 0, worst_conj = 0;
    for (int t = 0; t < 1000; ++t) {
        Quat a = random_quat(rng), b = random_quat(rng), c = random_quat(rng);
        worst_assoc = std::max(worst_assoc, qdist((a * b) * c, a * (b * c)));
        worst_norm = std::max(worst_norm, std::abs((a * b).norm() - a.norm() * b.norm()));
        worst_conj = std::max(worst_conj, qdist((a * b).conj(), b.conj() * a.conj()));
    }
    CHECK(worst_assoc <= 1e-14 * 8);  // scaled by typical |a||b||c|
    CHECK(worst_norm <= 1e-13);
    CHECK(worst_conj <= 1e-13);
}

TEST_CASE("qexp on imaginary arguments") {
    CHECK(qdist(qexp_imaginary(Quat::zero()), Quat::one()) == 0.0);
    const double pi = 3.14159265358979323846;
    CHECK(qdist(qexp_imaginary(Quat::i() * pi), -Quat::one()) <= 1e-15);

    Rng rng(7);
    double worst = 0;
    for (int t = 0; t < 1000; ++t) {
        Quat p = random_quat(rng).im() * rng.uniform(0.0, 5.0);
        worst = std::max(worst, std::abs(qexp_imaginary(p).norm() - 1.0));
    }
    CHECK(worst <= 1e-13);
}

TEST_CASE("conjugation by unit quaternions is isometric") {
    Rng rng(21);
    double worst = 0;
    for (int t = 0; t < 1000; ++t) {
        Quat q = random_unit_quat(rng);
        Quat v = random_quat(rng);
        worst = std::max(worst, std::abs((q * v * q.conj()).norm() - v.norm()));
    }
    CHECK(worst <= 1e-13);
}

TEST_CASE("haar sampling is deterministic per seed") {
    for (GroupId id : {GroupId::S3, GroupId::On, GroupId::Um, GroupId::Spm, GroupId::Sp2}) {
        const int n = id == GroupId::On ? 4 : id == GroupId::Um ? 3 : 2;
        GroupElement a = haar_sample(id, n, std::uint64_t{99});
        GroupElement b = haar_sample(id, n, std::uint64_t{99});
        CHECK((a.m - b.m).norm() == 0.0);
        CHECK(unitarity_residual(a.m) <= 1e-12);
    }
}

TEST_CASE("haar entry means vanish, also after left translation") {
    const int n = 3;
    const int N = 10000;
    Rng rng(5);
    GroupElement g = haar_sample(GroupId::On, n, rng);
    double sum = 0, sum_translated = 0, sumsq = 0;
    for (int t = 0; t < N; ++t) {
        GroupElement h = haar_sample(GroupId::On, n, rng);
        GroupElement gh = g * h;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                sum += h.m(i, j).w;
                sum_translated += gh.m(i, j).w;
                sumsq += h.m(i, j).w * h.m(i, j).w;
            }
    }
    const int entries = N * n * n;
    const double sd = std::sqrt(sumsq / entries);
    const double band = 3.0 * sd / std::sqrt(double(entries));
    CHECK(std::abs(sum / entries) <= band);
    CHECK(std::abs(sum_translated / entries) <= band);
}

TEST_CASE("sp2 elements from a haar pair satisfy the column relations") {
    Rng rng(31);
    double worst = 0;
    for (int t = 0; t < 200; ++t) {
        GroupElement a = haar_sample(GroupId::Sp2, 2, rng);
        worst = std::max(worst, sp2_column_residual(a.m));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("bracket and Q on each algebra") {
    Rng rng(41);
    for (GroupId id : {GroupId::S3, GroupId::On, GroupId::Um, GroupId::Spm, GroupId::Sp2,
                       GroupId::S3xS3}) {
        const int n = id == GroupId::On ? 4 : id == GroupId::Um ? 3 : 2;
        auto basis = algebra_basis(id, n);
        REQUIRE(static_cast<int>(basis.size()) == algebra_dim(id, n));

        // basis orthonormality under Q
        for (size_t a = 0; a < basis.size(); ++a)
            for (size_t b = 0; b < basis.size(); ++b) {
                const double want = a == b ? 1.0 : 0.0;
                CHECK(std::abs(inner_q(basis[a], basis[b]) - want) <= 1e-14);
            }

        double worst_jacobi = 0, worst_ad = 0, worst_skew = 0;
        for (int t = 0; t < 50; ++t) {
            AlgebraVector x = random_algebra_vector(id, n, rng);
            AlgebraVector y = random_algebra_vector(id, n, rng);
            AlgebraVector z = random_algebra_vector(id, n, rng);
            CHECK(norm_q(bracket(x, x)) == 0.0);
            // bracket stays in the algebra: skew-hermitian
            QMat b = bracket(x, y).m;
            worst_skew = std::max(worst_skew, (b + b.adjoint()).norm());
            AlgebraVector jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) +
                                bracket(z, bracket(x, y));
            worst_jacobi = std::max(worst_jacobi, norm_q(jac));
            worst_ad = std::max(worst_ad, std::abs(inner_q(bracket(x, y), z) +
                                                   inner_q(y, bracket(x, z))));
        }
        CHECK(worst_skew <= 1e-12);
        CHECK(worst_jacobi <= 1e-12 * 100);
        CHECK(worst_ad <= 1e-10);

        // Q positive definite on sampled nonzero vectors
        for (int t = 0; t < 20; ++t) {
            AlgebraVector x = random_algebra_vector(id, n, rng);
            if (norm_q(x) > 1e-12) CHECK(inner_q(x, x) > 0.0);
        }
    }
}

TEST_CASE("group exp against the closed quaternion exponential") {
    Rng rng(51);
    for (int t = 0; t < 100; ++t) {
        Quat p = random_quat(rng).im();
        AlgebraVector v{GroupId::S3, 1, QMat(1, 1)};
        v.m(0, 0) = p;
        CHECK(qdist(group_exp(v).quat(), qexp_imaginary(p)) <= 1e-13);
    }
}

TEST_CASE("algebra coordinate round trip") {
    Rng rng(61);
    for (GroupId id : {GroupId::On, GroupId::Spm, GroupId::S3xS3}) {
        const int n = id == GroupId::On ? 5 : 2;
        AlgebraVector x = random_algebra_vector(id, n, rng);
        AlgebraVector y = algebra_from_coords(id, n, algebra_coords(x));
        CHECK((x.m - y.m).norm() <= 1e-13);
    }
}

TEST_CASE("tag mismatch is rejected") {
    auto b3 = algebra_basis(GroupId::S3, 1);
    auto bo = algebra_basis(GroupId::On, 3);
    CHECK_THROWS_AS(bracket(b3[0], bo[0]), std::invalid_argument);
}

TEST_CASE("integer quaternion powers") {
    Rng rng(71);
    Quat x = random_unit_quat(rng);
    CHECK(qdist(qpow(x, 0), Quat::one()) == 0.0);
    CHECK(qdist(qpow(x, 3), x * x * x) <= 1e-14);
    CHECK(qdist(qpow(x, -2) * qpow(x, 2), Quat::one()) <= 1e-13);
}
