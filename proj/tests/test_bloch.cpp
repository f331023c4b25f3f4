#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "octabound/bloch.hpp"

using namespace octabound;

namespace {
constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);
}  // namespace

TEST_SUITE_BEGIN("bloch");

TEST_CASE("phase states lie on the equatorial circle") {
    const BlochVector plus = phase_state(PhaseAngle(0.0));
    CHECK(plus.x == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(plus.y == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(plus.z == 0.0);

    const BlochVector quarter = phase_state(PhaseAngle(kPi / 4.0));
    CHECK(quarter.x == doctest::Approx(1.0 / kSqrt2));
    CHECK(quarter.y == doctest::Approx(1.0 / kSqrt2));

    const BlochVector y_plus = phase_state(PhaseAngle(kPi / 2.0));
    CHECK(std::abs(y_plus.x) < 1e-15);
    CHECK(y_plus.y == doctest::Approx(1.0));

    for (double t : {0.1, 1.3, 4.0, 6.2}) {
        CHECK(phase_state(PhaseAngle(t)).is_pure(1e-12));
    }
}

TEST_CASE("phase angle canonicalization") {
    CHECK(PhaseAngle(2.0 * kPi + 0.3).radians() == doctest::Approx(0.3));
    CHECK(PhaseAngle(-kPi / 2.0).radians() == doctest::Approx(1.5 * kPi));
    CHECK(PhaseAngle(2.0 * kPi).radians() == doctest::Approx(0.0));
    CHECK(PhaseAngle(0.0).radians() == 0.0);
}

TEST_CASE("octahedron norm on reference points") {
    CHECK(octahedron_norm({1, 0, 0}) == doctest::Approx(1.0));
    CHECK(octahedron_norm({1 / kSqrt2, 1 / kSqrt2, 0}) == doctest::Approx(kSqrt2));
    CHECK(octahedron_norm({1 / kSqrt3, 1 / kSqrt3, 1 / kSqrt3}) == doctest::Approx(kSqrt3));
}

TEST_CASE("octahedron membership") {
    CHECK(in_octahedron({0.3, 0.3, 0.3}, 0.0));
    CHECK_FALSE(in_octahedron({1 / kSqrt2, 1 / kSqrt2, 0}, 0.0));
    CHECK(in_octahedron({0.5, 0.5, 0.0}, 1e-9));  // exactly on a face
    CHECK_THROWS_AS(in_octahedron({0, 0, 0}, -1.0), std::invalid_argument);
}

TEST_CASE("phase states leave the octahedron except at Pauli axes") {
    for (int k = 0; k < 4; ++k) {
        CHECK(in_octahedron(phase_state(PhaseAngle(k * kPi / 2.0)), 1e-9));
    }
    for (double t : {0.1, 0.7, kPi / 4.0, 2.0, 5.5}) {
        const BlochVector b = phase_state(PhaseAngle(t));
        const double n = octahedron_norm(b);
        CHECK(n >= 1.0 - 1e-12);
        CHECK(n <= kSqrt2 + 1e-12);
        CHECK(n == doctest::Approx(std::abs(std::cos(t)) + std::abs(std::sin(t))));
        CHECK_FALSE(in_octahedron(b, 1e-9));
    }
}

TEST_CASE("antipode") {
    const BlochVector b{0.6, 0.8, 0.0};
    const BlochVector a = antipode(b);
    CHECK(a.x == doctest::Approx(-0.6));
    CHECK(a.y == doctest::Approx(-0.8));
    const BlochVector back = antipode(a);
    CHECK(back.x == doctest::Approx(b.x));
    CHECK(back.y == doctest::Approx(b.y));
    CHECK(back.z == doctest::Approx(b.z));

    CHECK_THROWS_AS(antipode({0.5, 0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("octahedron norm has full octahedral symmetry") {
    std::mt19937 rng(7);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (int trial = 0; trial < 1000; ++trial) {
        Eigen::Vector3d v(gauss(rng), gauss(rng), gauss(rng));
        v.normalize();
        const double reference = octahedron_norm(BlochVector::from(v));
        for (const auto& perm : perms) {
            for (int signs = 0; signs < 8; ++signs) {
                Eigen::Vector3d w;
                for (int i = 0; i < 3; ++i) {
                    w(i) = ((signs >> i) & 1 ? -1.0 : 1.0) * v(perm[i]);
                }
                REQUIRE(octahedron_norm(BlochVector::from(w)) ==
                        doctest::Approx(reference).epsilon(1e-14));
            }
        }
        REQUIRE(octahedron_norm(antipode(BlochVector::from(v))) ==
                doctest::Approx(reference).epsilon(1e-14));
    }
}

TEST_CASE("density matrix bridge") {
    const DensityMatrix zero = bloch_to_density({0, 0, 1});
    CHECK(std::abs(zero(0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(zero(1, 1)) < 1e-15);

    const DensityMatrix mixed = bloch_to_density({0, 0, 0});
    CHECK(std::abs(mixed(0, 0) - 0.5) < 1e-15);
    CHECK(std::abs(mixed(0, 1)) < 1e-15);

    const BlochVector b{0.2, -0.5, 0.1};
    const BlochVector round = density_to_bloch(bloch_to_density(b));
    CHECK(round.x == doctest::Approx(b.x).epsilon(1e-13));
    CHECK(round.y == doctest::Approx(b.y).epsilon(1e-13));
    CHECK(round.z == doctest::Approx(b.z).epsilon(1e-13));
}

TEST_CASE("density matrix validation") {
    Eigen::Matrix2cd bad;
    bad << 1.0, 0.5, -0.5, 0.0;  // not hermitian
    CHECK_THROWS_AS(density_to_bloch(bad), std::invalid_argument);

    bad << 0.9, 0.0, 0.0, 0.0;  // trace != 1
    CHECK_THROWS_AS(density_to_bloch(bad), std::invalid_argument);

    bad << 1.5, 0.0, 0.0, -0.5;  // negative eigenvalue
    CHECK_THROWS_AS(density_to_bloch(bad), std::invalid_argument);

    CHECK_THROWS_AS(bloch_to_density({1.2, 0, 0}), std::invalid_argument);
}

TEST_SUITE_END();
