#pragma once

// Momentum-space Bloch dynamics and the long-time limit of the alternating
// H/F walk.
//
// In the momentum representation one walk step maps the coin density matrix
// at momentum k linearly; expanding rho in the Pauli basis turns that map
// into a real 4x4 superoperator acting on (a0, a1, a2, a3). The reduced coin
// state of the position walk is the uniform average of the momentum-space
// Bloch vectors over k in [-pi, pi].
//
// For the alternating pair (H then F) the superoperator is block diagonal
// 1 (+) R with R in SO(3); R has eigenvalue 1 with axis
// u = (1 + sin 2k, cos 2k, 1 - sin 2k) and a conjugate pair on the unit
// circle. Under repeated application the rotating part dephases, leaving the
// projector onto the axis, and the walk's t -> infinity coin state follows
// by averaging F * projector over momentum.

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qwalk/entanglement.hpp"
#include "qwalk/sequences.hpp"

namespace qwalk {

struct Superoperator4 {
    Eigen::Matrix4d matrix;
    double momentum = 0.0;
};

// One Hadamard step at momentum k, in the (a0, a1, a2, a3) basis.
inline Superoperator4 superoperator_H(double k) {
    const double s = std::sin(2.0 * k);
    const double c = std::cos(2.0 * k);
    Eigen::Matrix4d m;
    m << 1, 0, 0, 0,
         0, 0, s, c,
         0, 0, c, -s,
         0, -1, 0, 0;
    return {m, k};
}

// One Fourier step at momentum k.
inline Superoperator4 superoperator_F(double k) {
    const double s = std::sin(2.0 * k);
    const double c = std::cos(2.0 * k);
    Eigen::Matrix4d m;
    m << 1, 0, 0, 0,
         0, c, 0, -s,
         0, -s, 0, -c,
         0, 0, 1, 0;
    return {m, k};
}

// Composite step for the pair H then F.
inline Superoperator4 superoperator_HF(double k) {
    return {superoperator_F(k).matrix * superoperator_H(k).matrix, k};
}

// Limit of (L_HF)^m as m -> infinity: the a0 block stays, the vector block
// collapses onto the rotation axis of the SO(3) part,
//     u = (1 + sin 2k, cos 2k, 1 - sin 2k),   |u|^2 = 3 + sin^2 2k.
// u u^T / |u|^2 is the spectral projector for every k; at sin^2 2k = 1 the
// formula remains the correct continuous extension (the eigenvalue pair
// collides at -1 but the axis is still well defined).
inline Superoperator4 hf_limit_projector(double k) {
    const double s = std::sin(2.0 * k);
    const double c = std::cos(2.0 * k);
    Eigen::Vector3d u(1.0 + s, c, 1.0 - s);
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m(0, 0) = 1.0;
    m.block<3, 3>(1, 1) = (u * u.transpose()) / (3.0 + s * s);
    return {m, k};
}

namespace detail {

// Equally weighted nodes k_j = -pi + 2*pi*j/n. For 2*pi-periodic integrands
// this is the composite trapezoidal rule (the endpoint values coincide), and
// it integrates trigonometric polynomials of degree < n exactly.
inline std::vector<double> periodic_trapezoid_nodes(int n) {
    if (n < 1) throw std::invalid_argument("periodic_trapezoid_nodes: need at least one node");
    std::vector<double> nodes(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        nodes[static_cast<std::size_t>(j)] =
            -std::numbers::pi + 2.0 * std::numbers::pi * j / static_cast<double>(n);
    }
    return nodes;
}

}  // namespace detail

// Momentum average of L_F * limit projector: the map sending the initial
// Bloch 4-vector to the t -> infinity reduced coin state of the alternating
// H/F walk.
inline Eigen::Matrix4d asymptotic_superoperator(int n_quadrature = 512) {
    if (n_quadrature < 64)
        throw std::invalid_argument("asymptotic_superoperator: need at least 64 quadrature nodes");
    Eigen::Matrix4d sum = Eigen::Matrix4d::Zero();
    for (double k : detail::periodic_trapezoid_nodes(n_quadrature)) {
        sum += superoperator_F(k).matrix * hf_limit_projector(k).matrix;
    }
    return sum / static_cast<double>(n_quadrature);
}

// Closed form of the asymptotic superoperator, entrywise:
//     [ 1        0            0            0      ]
//     [ 0        0        -1 + 2/sqrt3  2 - sqrt3 ]
//     [ 0   -2 + sqrt3     1 - 2/sqrt3      0     ]
//     [ 0        0        -1 + 2/sqrt3      0     ]
inline Eigen::Matrix4d asymptotic_superoperator_closed_form() {
    const double r3 = std::numbers::sqrt3;
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m(0, 0) = 1.0;
    m(1, 2) = -1.0 + 2.0 / r3;
    m(1, 3) = 2.0 - r3;
    m(2, 1) = -2.0 + r3;
    m(2, 2) = 1.0 - 2.0 / r3;
    m(3, 2) = -1.0 + 2.0 / r3;
    return m;
}

inline BlochState initial_bloch(const InitialStateParams& params) {
    return bloch_vector(reduced_coin_density(WalkerCoinState(params, 0)));
}

struct AsymptoticResult {
    BlochState bloch;
    double schmidt = 0.0;
    double closed_form_schmidt = 0.0;
};

// Schmidt norm that sqrt(1/2 + (2 - sqrt3)/2) + sqrt(1/2 - (2 - sqrt3)/2)
// evaluates to: the t -> infinity value for every phi = 0 initial coin.
inline double asymptotic_schmidt_closed_form() {
    const double a = 0.5 * (2.0 - std::numbers::sqrt3);
    return std::sqrt(0.5 + a) + std::sqrt(0.5 - a);
}

// t -> infinity reduced coin state of the alternating H/F walk for the given
// initial coin. For phi = 0 the limiting Bloch vector is
// ((2-sqrt3)/2 cos(theta), (sqrt3-2)/2 sin(theta), 0), whose length is
// theta-independent, so the Schmidt norm equals the closed form.
inline AsymptoticResult asymptotic_reduced_state(const InitialStateParams& params,
                                                 int n_quadrature = 512) {
    const Eigen::Matrix4d m = asymptotic_superoperator(n_quadrature);
    const Eigen::Vector4d v = m * initial_bloch(params).to_vector();
    AsymptoticResult result;
    result.bloch = BlochState::from_vector(v);
    result.schmidt = schmidt_norm_from_bloch_length(result.bloch.vector_norm());
    result.closed_form_schmidt = asymptotic_schmidt_closed_form();
    return result;
}

// Exact reduced coin state after finitely many steps, computed in momentum
// space: per node the step superoperators are applied in sequence order to
// the initial Bloch 4-vector, then the nodes are averaged. Only H and F
// coins have momentum-space superoperators here.
inline BlochState momentum_space_evolution(const CoinSequence& seq,
                                           const InitialStateParams& params,
                                           int n_quadrature = 512) {
    if (seq.empty())
        throw std::invalid_argument("momentum_space_evolution: empty sequence");
    if (n_quadrature < 64)
        throw std::invalid_argument("momentum_space_evolution: need at least 64 quadrature nodes");
    const Eigen::Vector4d v0 = initial_bloch(params).to_vector();
    Eigen::Vector4d sum = Eigen::Vector4d::Zero();
    for (double k : detail::periodic_trapezoid_nodes(n_quadrature)) {
        Eigen::Vector4d v = v0;
        for (const CoinLabel& label : seq) {
            switch (label.kind()) {
                case CoinLabel::Kind::hadamard: v = superoperator_H(k).matrix * v; break;
                case CoinLabel::Kind::fourier: v = superoperator_F(k).matrix * v; break;
                default:
                    throw std::invalid_argument(
                        "momentum_space_evolution: sequence must contain only H and F coins");
            }
        }
        sum += v;
    }
    return BlochState::from_vector(sum / static_cast<double>(n_quadrature));
}

}  // namespace qwalk
