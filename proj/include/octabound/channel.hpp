#pragma once

#include <array>

#include <Eigen/Dense>

#include "octabound/bloch.hpp"

namespace octabound {

/// Pauli operations viewed as qubit channels (conjugation; signs drop out).
enum class Pauli { I = 0, X = 1, Y = 2, Z = 3 };

/// Channel composition of two Pauli conjugations: X*Z = Z*X = Y and so on.
Pauli pauli_compose(Pauli a, Pauli b);

const char* pauli_name(Pauli p);

/// A qubit channel as an affine map on Bloch vectors: b -> M*b + c.
/// Every single-qubit channel in this library lives in this representation;
/// the dense oracle carries the general multi-qubit one.
struct AffineChannel {
    Eigen::Matrix3d M = Eigen::Matrix3d::Identity();
    Eigen::Vector3d c = Eigen::Vector3d::Zero();

    static AffineChannel identity() { return {}; }
    bool is_diagonal(double tol = 1e-12) const;
};

/// Bloch action of conjugation by a Pauli: I -> diag(1,1,1), X -> diag(1,-1,-1),
/// Y -> diag(-1,1,-1), Z -> diag(-1,-1,1).
AffineChannel pauli_channel(Pauli p);

/// (1-t)*identity + t*Q, the "apply Q with probability t" channel.
AffineChannel mix_with(const AffineChannel& q, double t);

/// With probability t, replace the state by the pure state opposite sigma:
/// M = (1-t)*I, c = -t*sigma. sigma must be pure.
AffineChannel opposite_noise(const BlochVector& sigma, double t);

/// Totally depolarising map: everything to the maximally mixed state.
AffineChannel depolarizing();

/// Circuit-order composition: (a ∘ b)(x) = a(b(x)).
AffineChannel compose(const AffineChannel& a, const AffineChannel& b);

BlochVector apply(const AffineChannel& ch, const BlochVector& b);

/// Choi matrix of the unique hermiticity-preserving extension of (M, c),
/// normalised to unit trace.
Eigen::Matrix4cd choi_matrix(const AffineChannel& ch);

/// True iff the Choi matrix is PSD within tol (complete positivity) and the
/// map is trace preserving.
bool choi_psd_check(const AffineChannel& ch, double tol = 1e-10);

/// Kraus operators recovered from the Choi spectrum; eigenvalues below the
/// haircut are dropped. Input must be CP up to roundoff.
std::array<Eigen::Matrix2cd, 4> kraus_operators(const AffineChannel& ch, double haircut = 1e-12);

/// Probabilities (p_I, p_X, p_Y, p_Z) of a Pauli-mixture channel.
/// Rejects channels that are not convex mixtures of Pauli conjugations.
std::array<double, 4> pauli_mixture_probabilities(const AffineChannel& ch, double tol = 1e-9);

/// Convex mixture of the four Pauli conjugations.
AffineChannel pauli_mixture(const std::array<double, 4>& probs);

}  // namespace octabound
