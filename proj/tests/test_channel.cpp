#include <cmath>
#include <random>

#include <doctest.h>

#include "octabound/channel.hpp"

using namespace octabound;

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);

AffineChannel rotation_channel(double angle, int axis) {
    AffineChannel ch;
    ch.M = Eigen::AngleAxisd(angle, Eigen::Vector3d::Unit(axis)).toRotationMatrix();
    return ch;
}

AffineChannel random_channel(std::mt19937& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    AffineChannel ch = rotation_channel(unit(rng) * 3.0, static_cast<int>(unit(rng) * 3) % 3);
    ch = compose(mix_with(pauli_channel(Pauli::Z), unit(rng)), ch);
    Eigen::Vector3d sigma(gauss(rng), gauss(rng), gauss(rng));
    sigma.normalize();
    ch = compose(opposite_noise(BlochVector::from(sigma), 0.5 * unit(rng)), ch);
    return ch;
}

}  // namespace

TEST_SUITE_BEGIN("channel");

TEST_CASE("pauli channels flip the right axes") {
    const BlochVector after_z = apply(pauli_channel(Pauli::Z), {1 / kSqrt2, 1 / kSqrt2, 0});
    CHECK(after_z.x == doctest::Approx(-1 / kSqrt2));
    CHECK(after_z.y == doctest::Approx(-1 / kSqrt2));
    CHECK(after_z.z == 0.0);

    const BlochVector after_x = apply(pauli_channel(Pauli::X), {0, 0, 1});
    CHECK(after_x.z == doctest::Approx(-1.0));

    const BlochVector after_y = apply(pauli_channel(Pauli::Y), {1 / kSqrt3, 1 / kSqrt3, 1 / kSqrt3});
    CHECK(after_y.x == doctest::Approx(-1 / kSqrt3));
    CHECK(after_y.y == doctest::Approx(1 / kSqrt3));
    CHECK(after_y.z == doctest::Approx(-1 / kSqrt3));
}

TEST_CASE("pauli composition table") {
    CHECK(pauli_compose(Pauli::X, Pauli::Z) == Pauli::Y);
    CHECK(pauli_compose(Pauli::Z, Pauli::X) == Pauli::Y);
    CHECK(pauli_compose(Pauli::X, Pauli::Y) == Pauli::Z);
    CHECK(pauli_compose(Pauli::Y, Pauli::Z) == Pauli::X);
    for (int a = 0; a < 4; ++a) {
        CHECK(pauli_compose(static_cast<Pauli>(a), static_cast<Pauli>(a)) == Pauli::I);
        CHECK(pauli_compose(Pauli::I, static_cast<Pauli>(a)) == static_cast<Pauli>(a));
        // channel-level consistency
        const AffineChannel lhs = compose(pauli_channel(static_cast<Pauli>(a)),
                                          pauli_channel(Pauli::X));
        const AffineChannel rhs = pauli_channel(pauli_compose(static_cast<Pauli>(a), Pauli::X));
        CHECK((lhs.M - rhs.M).norm() < 1e-15);
    }
}

TEST_CASE("mix_with scales the right entries") {
    const double p = 0.13;
    const AffineChannel nz = mix_with(pauli_channel(Pauli::Z), p);
    CHECK(nz.M(0, 0) == doctest::Approx(1 - 2 * p));
    CHECK(nz.M(1, 1) == doctest::Approx(1 - 2 * p));
    CHECK(nz.M(2, 2) == doctest::Approx(1.0));
    CHECK(nz.c.norm() == 0.0);

    std::mt19937 rng(3);
    const AffineChannel neutral = mix_with(random_channel(rng), 0.0);
    CHECK((neutral.M - Eigen::Matrix3d::Identity()).norm() < 1e-15);

    const AffineChannel dep = mix_with(depolarizing(), 0.4);
    CHECK((dep.M - 0.6 * Eigen::Matrix3d::Identity()).norm() < 1e-15);

    CHECK_THROWS_AS(mix_with(pauli_channel(Pauli::Z), -0.1), std::invalid_argument);
    CHECK_THROWS_AS(mix_with(pauli_channel(Pauli::Z), 1.1), std::invalid_argument);
}

TEST_CASE("mix_with is affine in t") {
    std::mt19937 rng(11);
    const AffineChannel q = random_channel(rng);
    const AffineChannel lo = mix_with(q, 0.2);
    const AffineChannel hi = mix_with(q, 0.8);
    const AffineChannel mid = mix_with(q, 0.5);
    CHECK((mid.M - 0.5 * (lo.M + hi.M)).norm() < 1e-14);
    CHECK((mid.c - 0.5 * (lo.c + hi.c)).norm() < 1e-14);
}

TEST_CASE("opposite noise") {
    const BlochVector sigma{1, 0, 0};
    const double t = 0.5;
    const BlochVector out = apply(opposite_noise(sigma, t), sigma);
    CHECK(out.x == doctest::Approx(0.0));

    const double t2 = 0.2;
    const BlochVector one = apply(opposite_noise(sigma, t2), sigma);
    CHECK(one.x == doctest::Approx(1 - 2 * t2));

    const AffineChannel o = opposite_noise(sigma, t2);
    const BlochVector twice = apply(o, apply(o, sigma));
    CHECK(twice.x == doctest::Approx((1 - t2) * (1 - 2 * t2) - t2));

    CHECK_THROWS_AS(opposite_noise({0.5, 0, 0}, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(opposite_noise(sigma, 1.5), std::invalid_argument);
}

TEST_CASE("depolarizing annihilates and absorbs") {
    const BlochVector out = apply(depolarizing(), {1, 0, 0});
    CHECK(out.norm() == 0.0);

    const AffineChannel dd = compose(depolarizing(), depolarizing());
    CHECK((dd.M - depolarizing().M).norm() == 0.0);

    const AffineChannel u = rotation_channel(1.1, 2);
    const AffineChannel du = compose(depolarizing(), u);
    const AffineChannel ud = compose(u, depolarizing());
    CHECK((du.M - depolarizing().M).norm() < 1e-15);
    CHECK((ud.M - depolarizing().M).norm() < 1e-15);
}

TEST_CASE("compose order and identities") {
    const double p = 0.2;
    const AffineChannel nz = mix_with(pauli_channel(Pauli::Z), p);
    const AffineChannel twice = compose(nz, nz);
    CHECK(twice.M(0, 0) == doctest::Approx((1 - 2 * p) * (1 - 2 * p)));

    std::mt19937 rng(5);
    const AffineChannel a = random_channel(rng);
    const AffineChannel with_id = compose(AffineChannel::identity(), a);
    CHECK((with_id.M - a.M).norm() < 1e-15);
    CHECK((with_id.c - a.c).norm() < 1e-15);

    const AffineChannel xz = compose(pauli_channel(Pauli::X), pauli_channel(Pauli::Z));
    const AffineChannel zx = compose(pauli_channel(Pauli::Z), pauli_channel(Pauli::X));
    CHECK((xz.M - pauli_channel(Pauli::Y).M).norm() < 1e-15);
    CHECK((zx.M - pauli_channel(Pauli::Y).M).norm() < 1e-15);
}

TEST_CASE("compose is associative") {
    std::mt19937 rng(17);
    for (int i = 0; i < 20; ++i) {
        const AffineChannel a = random_channel(rng);
        const AffineChannel b = random_channel(rng);
        const AffineChannel c = random_channel(rng);
        const AffineChannel left = compose(compose(a, b), c);
        const AffineChannel right = compose(a, compose(b, c));
        CHECK((left.M - right.M).lpNorm<Eigen::Infinity>() < 1e-14);
        CHECK((left.c - right.c).lpNorm<Eigen::Infinity>() < 1e-14);
    }
}

TEST_CASE("diagonal pauli mixtures commute") {
    const AffineChannel a = mix_with(pauli_channel(Pauli::Z), 0.3);
    const AffineChannel b = mix_with(pauli_channel(Pauli::X), 0.15);
    const AffineChannel ab = compose(a, b);
    const AffineChannel ba = compose(b, a);
    CHECK((ab.M - ba.M).norm() < 1e-15);
}

TEST_CASE("apply basics") {
    const BlochVector b{0.1, 0.2, 0.3};
    const BlochVector same = apply(AffineChannel::identity(), b);
    CHECK(same.x == b.x);
    CHECK(same.y == b.y);
    CHECK(same.z == b.z);

    const BlochVector halved = apply(mix_with(pauli_channel(Pauli::Z), 0.25), {1, 0, 0});
    CHECK(halved.x == doctest::Approx(0.5));
}

TEST_CASE("choi check accepts physical channels") {
    for (double p : {0.0, 0.1, 0.5, 0.9, 1.0}) {
        CHECK(choi_psd_check(mix_with(pauli_channel(Pauli::Z), p)));
    }
    for (double t : {0.0, 0.3, 0.7, 1.0}) {
        CHECK(choi_psd_check(opposite_noise({0, 1, 0}, t)));
        CHECK(choi_psd_check(mix_with(depolarizing(), t)));
    }
}

TEST_CASE("choi check rejects the sign-flipped map") {
    AffineChannel transpose_like;
    transpose_like.M = Eigen::Vector3d(1, 1, -1).asDiagonal();
    CHECK_FALSE(choi_psd_check(transpose_like));

    // independent route: the Choi spectrum has an exact -1/2 eigenvalue
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(choi_matrix(transpose_like));
    CHECK(es.eigenvalues().minCoeff() == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("constructed channels keep the ball inside the ball") {
    std::mt19937 rng(23);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const std::array<AffineChannel, 5> channels = {
        mix_with(pauli_channel(Pauli::Z), 0.37),
        opposite_noise({0, 0, 1}, 0.62),
        depolarizing(),
        compose(mix_with(pauli_channel(Pauli::X), 0.2), opposite_noise({1, 0, 0}, 0.3)),
        rotation_channel(0.77, 1),
    };
    for (const auto& ch : channels) {
        for (int i = 0; i < 1000; ++i) {
            Eigen::Vector3d v(gauss(rng), gauss(rng), gauss(rng));
            v.normalize();
            CHECK(apply(ch, BlochVector::from(v)).norm() <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("kraus operators reconstruct the channel") {
    const AffineChannel id = AffineChannel::identity();
    const auto id_kraus = kraus_operators(id);
    int nonzero = 0;
    for (const auto& k : id_kraus) {
        if (!k.isZero(0.0)) ++nonzero;
    }
    CHECK(nonzero == 1);

    for (const AffineChannel& ch :
         {mix_with(pauli_channel(Pauli::Y), 0.21), opposite_noise({1, 0, 0}, 0.4)}) {
        const auto kraus = kraus_operators(ch);
        Eigen::Matrix2cd completeness = Eigen::Matrix2cd::Zero();
        for (const auto& k : kraus) {
            completeness += k.adjoint() * k;
        }
        CHECK((completeness - Eigen::Matrix2cd::Identity()).norm() < 1e-12);
    }
}

TEST_CASE("pauli mixture decomposition") {
    const double p = 0.17;
    const auto probs = pauli_mixture_probabilities(mix_with(pauli_channel(Pauli::Z), p));
    CHECK(probs[0] == doctest::Approx(1 - p));
    CHECK(probs[1] == doctest::Approx(0.0));
    CHECK(probs[2] == doctest::Approx(0.0));
    CHECK(probs[3] == doctest::Approx(p));

    CHECK_THROWS_AS(pauli_mixture_probabilities(opposite_noise({1, 0, 0}, 0.2)),
                    std::invalid_argument);

    const AffineChannel rebuilt = pauli_mixture(probs);
    CHECK((rebuilt.M - mix_with(pauli_channel(Pauli::Z), p).M).norm() < 1e-15);
}

TEST_SUITE_END();
