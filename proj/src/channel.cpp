#include "octabound/channel.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace octabound {

using namespace std::complex_literals;

Pauli pauli_compose(Pauli a, Pauli b) {
    if (a == Pauli::I) return b;
    if (b == Pauli::I) return a;
    if (a == b) return Pauli::I;
    // the remaining third Pauli; sign is irrelevant for conjugation
    const int s = static_cast<int>(a) + static_cast<int>(b);
    return static_cast<Pauli>(6 - s);
}

const char* pauli_name(Pauli p) {
    switch (p) {
        case Pauli::I: return "I";
        case Pauli::X: return "X";
        case Pauli::Y: return "Y";
        case Pauli::Z: return "Z";
    }
    return "?";
}

bool AffineChannel::is_diagonal(double tol) const {
    if (c.lpNorm<Eigen::Infinity>() > tol) return false;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (i != j && std::abs(M(i, j)) > tol) return false;
        }
    }
    return true;
}

AffineChannel pauli_channel(Pauli p) {
    AffineChannel ch;
    switch (p) {
        case Pauli::I: break;
        case Pauli::X: ch.M = Eigen::Vector3d(1, -1, -1).asDiagonal(); break;
        case Pauli::Y: ch.M = Eigen::Vector3d(-1, 1, -1).asDiagonal(); break;
        case Pauli::Z: ch.M = Eigen::Vector3d(-1, -1, 1).asDiagonal(); break;
    }
    return ch;
}

AffineChannel mix_with(const AffineChannel& q, double t) {
    if (t < 0.0 || t > 1.0) {
        throw std::invalid_argument("mix_with: probability outside [0, 1]");
    }
    AffineChannel ch;
    ch.M = (1.0 - t) * Eigen::Matrix3d::Identity() + t * q.M;
    ch.c = t * q.c;
    return ch;
}

AffineChannel opposite_noise(const BlochVector& sigma, double t) {
    if (!sigma.is_pure()) {
        throw std::invalid_argument("opposite_noise: sigma must be pure");
    }
    if (t < 0.0 || t > 1.0) {
        throw std::invalid_argument("opposite_noise: probability outside [0, 1]");
    }
    AffineChannel ch;
    ch.M = (1.0 - t) * Eigen::Matrix3d::Identity();
    ch.c = -t * sigma.vec();
    return ch;
}

AffineChannel depolarizing() {
    AffineChannel ch;
    ch.M.setZero();
    return ch;
}

AffineChannel compose(const AffineChannel& a, const AffineChannel& b) {
    AffineChannel ch;
    ch.M = a.M * b.M;
    ch.c = a.M * b.c + a.c;
    return ch;
}

BlochVector apply(const AffineChannel& ch, const BlochVector& b) {
    return BlochVector::from(ch.M * b.vec() + ch.c);
}

namespace {
Eigen::Matrix4cd kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    Eigen::Matrix4cd out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
        }
    }
    return out;
}
}  // namespace

Eigen::Matrix4cd choi_matrix(const AffineChannel& ch) {
    // J = (1/4) [ L(I) ⊗ I + Σ_j L(σ_j) ⊗ σ_j^T ] with L(I) = I + c·σ and
    // L(σ_j) = Σ_i M_ij σ_i: the image of the maximally entangled state.
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    std::array<Eigen::Matrix2cd, 4> sigma;
    sigma[0] = id;
    sigma[1] = (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
    sigma[2] = (Eigen::Matrix2cd() << 0, -1i, 1i, 0).finished();
    sigma[3] = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();

    Eigen::Matrix4cd j = Eigen::Matrix4cd::Zero();
    Eigen::Matrix2cd l_id = id;
    for (int i = 0; i < 3; ++i) {
        l_id += ch.c(i) * sigma[i + 1];
    }
    j += kron2(l_id, id);
    for (int col = 0; col < 3; ++col) {
        Eigen::Matrix2cd l = Eigen::Matrix2cd::Zero();
        for (int row = 0; row < 3; ++row) {
            l += ch.M(row, col) * sigma[row + 1];
        }
        j += kron2(l, sigma[col + 1].transpose());
    }
    return 0.25 * j;
}

bool choi_psd_check(const AffineChannel& ch, double tol) {
    const Eigen::Matrix4cd j = choi_matrix(ch);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(j);
    if (es.eigenvalues().minCoeff() < -tol) {
        return false;
    }
    // Trace preservation: tracing out the output subsystem must give I/2.
    Eigen::Matrix2cd reduced = Eigen::Matrix2cd::Zero();
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            std::complex<double> s = 0.0;
            for (int k = 0; k < 2; ++k) {
                s += j(2 * k + a, 2 * k + b);
            }
            reduced(a, b) = s;
        }
    }
    return (reduced - 0.5 * Eigen::Matrix2cd::Identity()).norm() <= tol;
}

std::array<Eigen::Matrix2cd, 4> kraus_operators(const AffineChannel& ch, double haircut) {
    const Eigen::Matrix4cd j = choi_matrix(ch);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(j);
    std::array<Eigen::Matrix2cd, 4> kraus;
    kraus.fill(Eigen::Matrix2cd::Zero());
    for (int k = 0; k < 4; ++k) {
        double lambda = es.eigenvalues()(k);
        if (lambda < -1e-9) {
            throw std::invalid_argument("kraus_operators: channel is not completely positive");
        }
        if (lambda <= haircut) continue;
        const Eigen::Vector4cd v = es.eigenvectors().col(k);
        // J = (1/2) Σ_ij L(|i><j|) ⊗ |i><j|, so vectors unstack as K[a,b] = v[2a+b].
        Eigen::Matrix2cd op;
        op << v(0), v(1), v(2), v(3);
        kraus[k] = std::sqrt(2.0 * lambda) * op;
    }
    return kraus;
}

std::array<double, 4> pauli_mixture_probabilities(const AffineChannel& ch, double tol) {
    if (!ch.is_diagonal(tol)) {
        throw std::invalid_argument("pauli_mixture_probabilities: channel is not diagonal");
    }
    const double fx = ch.M(0, 0), fy = ch.M(1, 1), fz = ch.M(2, 2);
    std::array<double, 4> p{};
    p[0] = 0.25 * (1.0 + fx + fy + fz);
    p[1] = 0.25 * (1.0 + fx - fy - fz);
    p[2] = 0.25 * (1.0 - fx + fy - fz);
    p[3] = 0.25 * (1.0 - fx - fy + fz);
    for (double& v : p) {
        if (v < -tol) {
            throw std::invalid_argument(
                "pauli_mixture_probabilities: channel is not a Pauli mixture");
        }
        if (v < 0.0) v = 0.0;
    }
    return p;
}

AffineChannel pauli_mixture(const std::array<double, 4>& probs) {
    AffineChannel ch;
    ch.M.setZero();
    for (int k = 0; k < 4; ++k) {
        if (probs[k] < -1e-12) {
            throw std::invalid_argument("pauli_mixture: negative probability");
        }
        ch.M += probs[k] * pauli_channel(static_cast<Pauli>(k)).M;
    }
    return ch;
}

}  // namespace octabound
