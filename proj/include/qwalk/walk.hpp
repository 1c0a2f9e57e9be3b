#pragma once

// Core simulator for a discrete-time quantum walk on the 1D line.
//
// The joint walker-coin state lives on positions x in [-L, L] with a 2-level
// coin. One step applies the coin unitary to the coin register and then the
// conditional shift
//     |x, down> -> |x-1, up>,      |x, up> -> |x+1, down>
// which flips the coin as it moves the walker.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace qwalk {

using cplx = std::complex<double>;
using CoinMatrix = Eigen::Matrix2cd;

// Coin basis indices: row/column 0 is |up>, 1 is |down>.
inline constexpr int kUp = 0;
inline constexpr int kDown = 1;

// General 2x2 unitary parameterized by four angles:
//   e^{i beta} [ e^{i xi} cos(alpha)    e^{i zeta} sin(alpha) ]
//              [ -e^{-i zeta} sin(alpha)  e^{-i xi} cos(alpha) ]
// Every parameter enters through 2*pi-periodic functions, so values outside
// canonical ranges are accepted as-is.
inline CoinMatrix make_general_coin(double alpha, double beta, double xi, double zeta) {
    const cplx phase = std::exp(cplx(0.0, beta));
    const double ca = std::cos(alpha);
    const double sa = std::sin(alpha);
    CoinMatrix c;
    c(0, 0) = phase * std::exp(cplx(0.0, xi)) * ca;
    c(0, 1) = phase * std::exp(cplx(0.0, zeta)) * sa;
    c(1, 0) = -phase * std::exp(cplx(0.0, -zeta)) * sa;
    c(1, 1) = phase * std::exp(cplx(0.0, -xi)) * ca;
    return c;
}

inline CoinMatrix hadamard_coin() {
    const double r = 1.0 / std::numbers::sqrt2;
    CoinMatrix c;
    c << r, r, r, -r;
    return c;
}

inline CoinMatrix fourier_coin() {
    const double r = 1.0 / std::numbers::sqrt2;
    CoinMatrix c;
    c << cplx(r, 0.0), cplx(0.0, r), cplx(0.0, r), cplx(r, 0.0);
    return c;
}

// Real one-parameter Hadamard family: [[cos w, sin w], [sin w, -cos w]].
// Reduces to the Hadamard coin at w = pi/4.
inline CoinMatrix make_generalized_hadamard(double omega) {
    const double c = std::cos(omega);
    const double s = std::sin(omega);
    CoinMatrix m;
    m << c, s, s, -c;
    return m;
}

// Relative phase gate diag(1, e^{-i phi}).
inline CoinMatrix make_phase_operator(double phi) {
    CoinMatrix m = CoinMatrix::Zero();
    m(0, 0) = 1.0;
    m(1, 1) = std::exp(cplx(0.0, -phi));
    return m;
}

inline bool is_unitary(const CoinMatrix& m, double tol = 1e-12) {
    return (m.adjoint() * m - CoinMatrix::Identity()).cwiseAbs().maxCoeff() <= tol;
}

// Coin preparation angles: |chi> = cos(theta/2)|up> + e^{i phi} sin(theta/2)|down>.
struct InitialStateParams {
    double theta = 0.0;
    double phi = 0.0;

    InitialStateParams() = default;
    InitialStateParams(double theta_, double phi_) : theta(theta_), phi(phi_) {
        if (!(theta >= 0.0 && theta <= std::numbers::pi))
            throw std::invalid_argument("InitialStateParams: theta must lie in [0, pi]");
        if (!(phi >= 0.0 && phi <= 2.0 * std::numbers::pi))
            throw std::invalid_argument("InitialStateParams: phi must lie in [0, 2*pi]");
    }
};

// Joint walker-coin wavefunction on the truncated line [-L, L].
//
// Amplitudes are stored as a (2L+1) x 2 matrix; row i holds position
// x = i - L, columns follow kUp/kDown. The lattice is allocated once and the
// step counter guards against amplitude reaching the boundary, so evolution
// on the truncated lattice is exactly the infinite-line evolution.
class WalkerCoinState {
public:
    WalkerCoinState(const InitialStateParams& params, int half_width)
        : half_width_(half_width) {
        if (half_width < 0)
            throw std::invalid_argument("WalkerCoinState: half_width must be >= 0");
        amps_.setZero(2 * half_width + 1, 2);
        scratch_.resizeLike(amps_);
        amps_(half_width, kUp) = std::cos(0.5 * params.theta);
        amps_(half_width, kDown) =
            std::exp(cplx(0.0, params.phi)) * std::sin(0.5 * params.theta);
    }

    int half_width() const { return half_width_; }
    int step_count() const { return step_count_; }
    Eigen::Index site_count() const { return amps_.rows(); }

    // Amplitude at position x (in [-L, L]) and coin index c.
    cplx amplitude(int x, int c) const {
        if (x < -half_width_ || x > half_width_)
            throw std::out_of_range("WalkerCoinState::amplitude: position outside lattice");
        if (c != kUp && c != kDown)
            throw std::out_of_range("WalkerCoinState::amplitude: coin index must be 0 or 1");
        return amps_(x + half_width_, c);
    }

    const Eigen::MatrixX2cd& amplitudes() const { return amps_; }

    double norm() const { return amps_.norm(); }

    // Probability of finding the walker at position x (coin traced out).
    double position_probability(int x) const {
        if (x < -half_width_ || x > half_width_)
            throw std::out_of_range("WalkerCoinState::position_probability: position outside lattice");
        return amps_.row(x + half_width_).squaredNorm();
    }

    // Applies one walk step with the given coin. Throws if another step could
    // push amplitude past the lattice boundary.
    void step(const CoinMatrix& coin) {
        if (step_count_ >= half_width_)
            throw std::domain_error("WalkerCoinState::step: lattice capacity exhausted");
        // Coin acts on the internal index: psi'(x, c) = sum_d coin(c, d) psi(x, d).
        scratch_.noalias() = amps_ * coin.transpose();
        const Eigen::Index n = amps_.rows();
        amps_.setZero();
        // Shift with coin flip: up moves right and lands down, down moves left
        // and lands up.
        amps_.col(kDown).tail(n - 1) = scratch_.col(kUp).head(n - 1);
        amps_.col(kUp).head(n - 1) = scratch_.col(kDown).tail(n - 1);
        ++step_count_;
    }

    // Restores the state to a fresh initial preparation without reallocating.
    void reset(const InitialStateParams& params) {
        amps_.setZero();
        amps_(half_width_, kUp) = std::cos(0.5 * params.theta);
        amps_(half_width_, kDown) =
            std::exp(cplx(0.0, params.phi)) * std::sin(0.5 * params.theta);
        step_count_ = 0;
    }

private:
    int half_width_ = 0;
    int step_count_ = 0;
    Eigen::MatrixX2cd amps_;
    Eigen::MatrixX2cd scratch_;
};

inline WalkerCoinState initial_state(const InitialStateParams& params, int half_width) {
    return WalkerCoinState(params, half_width);
}

inline WalkerCoinState step(const WalkerCoinState& state, const CoinMatrix& coin) {
    WalkerCoinState next = state;
    next.step(coin);
    return next;
}

}  // namespace qwalk
