#pragma once

#include <Eigen/Dense>

namespace octabound {

/// A qubit state as a real 3-vector on (or inside) the Bloch sphere,
/// with the convention rho = (I + x*X + y*Y + z*Z) / 2.
struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Eigen::Vector3d vec() const { return {x, y, z}; }
    static BlochVector from(const Eigen::Vector3d& v) { return {v.x(), v.y(), v.z()}; }

    double norm() const;
    bool is_pure(double tol = 1e-9) const;
    /// Physical states fit in the unit ball (norm <= 1 + 1e-12).
    bool is_physical(double tol = 1e-12) const;
};

/// Angle in radians, kept canonical in [0, 2*pi).
class PhaseAngle {
  public:
    explicit PhaseAngle(double radians);
    double radians() const { return radians_; }

  private:
    double radians_;
};

using DensityMatrix = Eigen::Matrix2cd;

/// The state (|0> + e^{i*theta}|1>)/sqrt(2): the X-Y plane circle (cos t, sin t, 0).
BlochVector phase_state(PhaseAngle theta);

/// l1 norm |x|+|y|+|z|; <= 1 exactly on the convex hull of the six Pauli eigenstates.
double octahedron_norm(const BlochVector& b);

bool in_octahedron(const BlochVector& b, double tol = 1e-9);

/// The pure state diametrically opposite a pure b. Rejects mixed input.
BlochVector antipode(const BlochVector& b);

DensityMatrix bloch_to_density(const BlochVector& b);

/// Inverse of bloch_to_density. Validates hermiticity, unit trace and positivity.
BlochVector density_to_bloch(const DensityMatrix& rho);

}  // namespace octabound
