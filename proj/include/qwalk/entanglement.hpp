#pragma once

// Hybrid entanglement measures for the walker-coin state.
//
// The coin's reduced density matrix is expanded in the Pauli basis,
//     rho = a0*I + a1*sigma1 + a2*sigma2 + a3*sigma3,  a_j = Tr(rho sigma_j)/2,
// with the standard Pauli matrices (sigma2 = [[0,-i],[i,0]]). For a pure
// joint state the Schmidt coefficients of the walker-coin split are
// sqrt(1/2 +- |a|) with |a| = sqrt(a1^2+a2^2+a3^2), and the Schmidt norm
//     S = sqrt(1/2 + |a|) + sqrt(1/2 - |a|)
// ranges from 1 (product state) to sqrt(2) (maximally entangled).

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>

#include "qwalk/walk.hpp"

namespace qwalk {

inline CoinMatrix pauli_matrix(int j) {
    CoinMatrix m;
    switch (j) {
        case 0: m << 1, 0, 0, 1; break;
        case 1: m << 0, 1, 1, 0; break;
        case 2: m << cplx(0, 0), cplx(0, -1), cplx(0, 1), cplx(0, 0); break;
        case 3: m << 1, 0, 0, -1; break;
        default: throw std::out_of_range("pauli_matrix: index must be 0..3");
    }
    return m;
}

// Bloch expansion coefficients of a coin density matrix. a0 is 1/2 for any
// unit-trace state; it is kept explicit because the asymptotic superoperators
// act on the full 4-vector (a0, a1, a2, a3).
struct BlochState {
    double a0 = 0.5;
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;

    // Length of the traceless part; at most 1/2 for a physical state.
    double vector_norm() const { return std::sqrt(a1 * a1 + a2 * a2 + a3 * a3); }

    Eigen::Vector4d to_vector() const { return {a0, a1, a2, a3}; }
    static BlochState from_vector(const Eigen::Vector4d& v) {
        return {v[0], v[1], v[2], v[3]};
    }
};

// rho(c, c') = sum_x psi(x, c) conj(psi(x, c')).
inline Eigen::Matrix2cd reduced_coin_density(const WalkerCoinState& state) {
    const auto& amps = state.amplitudes();
    return (amps.transpose() * amps.conjugate()).eval();
}

inline BlochState bloch_vector(const Eigen::Matrix2cd& rho) {
    BlochState b;
    b.a0 = 0.5 * (rho * pauli_matrix(0)).trace().real();
    b.a1 = 0.5 * (rho * pauli_matrix(1)).trace().real();
    b.a2 = 0.5 * (rho * pauli_matrix(2)).trace().real();
    b.a3 = 0.5 * (rho * pauli_matrix(3)).trace().real();
    return b;
}

inline Eigen::Matrix2cd density_from_bloch(const BlochState& b) {
    return b.a0 * pauli_matrix(0) + b.a1 * pauli_matrix(1) +
           b.a2 * pauli_matrix(2) + b.a3 * pauli_matrix(3);
}

inline double schmidt_norm_from_bloch_length(double vector_norm) {
    // Round-off can push the length a hair past 1/2 for nearly pure coins.
    const double a = std::min(vector_norm, 0.5);
    return std::sqrt(0.5 + a) + std::sqrt(0.5 - a);
}

inline double schmidt_norm(const WalkerCoinState& state) {
    return schmidt_norm_from_bloch_length(
        bloch_vector(reduced_coin_density(state)).vector_norm());
}

// Schmidt coefficients (descending). For a 2-level coin the reduced density
// eigenvalues are 1/2 +- |a|, so the coefficients follow in closed form.
inline std::array<double, 2> schmidt_coefficients(const WalkerCoinState& state) {
    const double a =
        std::min(bloch_vector(reduced_coin_density(state)).vector_norm(), 0.5);
    return {std::sqrt(0.5 + a), std::sqrt(0.5 - a)};
}

}  // namespace qwalk
