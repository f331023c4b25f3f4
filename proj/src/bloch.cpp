#include "octabound/bloch.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace octabound {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

const Eigen::Matrix2cd& sigma_x() {
    static const Eigen::Matrix2cd m = (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
    return m;
}
const Eigen::Matrix2cd& sigma_y() {
    using namespace std::complex_literals;
    static const Eigen::Matrix2cd m = (Eigen::Matrix2cd() << 0, -1i, 1i, 0).finished();
    return m;
}
const Eigen::Matrix2cd& sigma_z() {
    static const Eigen::Matrix2cd m = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
    return m;
}
}  // namespace

double BlochVector::norm() const {
    return std::sqrt(x * x + y * y + z * z);
}

bool BlochVector::is_pure(double tol) const {
    return std::abs(norm() - 1.0) <= tol;
}

bool BlochVector::is_physical(double tol) const {
    return x * x + y * y + z * z <= 1.0 + tol;
}

PhaseAngle::PhaseAngle(double radians) {
    double r = std::fmod(radians, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    // fmod of a value a hair under 2*pi can round back up to 2*pi.
    if (r >= kTwoPi) {
        r = 0.0;
    }
    radians_ = r;
}

BlochVector phase_state(PhaseAngle theta) {
    const double t = theta.radians();
    return {std::cos(t), std::sin(t), 0.0};
}

double octahedron_norm(const BlochVector& b) {
    return std::abs(b.x) + std::abs(b.y) + std::abs(b.z);
}

bool in_octahedron(const BlochVector& b, double tol) {
    if (tol < 0.0) {
        throw std::invalid_argument("in_octahedron: tolerance must be nonnegative");
    }
    return octahedron_norm(b) <= 1.0 + tol;
}

BlochVector antipode(const BlochVector& b) {
    if (!b.is_pure()) {
        throw std::invalid_argument("antipode: defined only for pure states");
    }
    return {-b.x, -b.y, -b.z};
}

DensityMatrix bloch_to_density(const BlochVector& b) {
    if (!b.is_physical()) {
        throw std::invalid_argument("bloch_to_density: vector outside the unit ball");
    }
    return 0.5 * (Eigen::Matrix2cd::Identity() + b.x * sigma_x() + b.y * sigma_y() +
                  b.z * sigma_z());
}

BlochVector density_to_bloch(const DensityMatrix& rho) {
    constexpr double tol = 1e-12;
    if ((rho - rho.adjoint()).norm() > tol) {
        throw std::invalid_argument("density_to_bloch: matrix is not hermitian");
    }
    if (std::abs(rho.trace().real() - 1.0) > tol || std::abs(rho.trace().imag()) > tol) {
        throw std::invalid_argument("density_to_bloch: trace is not 1");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(rho);
    if (es.eigenvalues().minCoeff() < -tol) {
        throw std::invalid_argument("density_to_bloch: matrix is not positive semidefinite");
    }
    return {(rho * sigma_x()).trace().real(), (rho * sigma_y()).trace().real(),
            (rho * sigma_z()).trace().real()};
}

}  // namespace octabound
