#pragma once

// Symbolic coin sequences: construction, parsing, formatting, evaluation.
//
// A sequence is applied left to right: element 0 is the coin of the first
// step. The text grammar accepts tokens H, F and GH(<float>), each with an
// optional ^<count> repetition suffix, separated by optional commas or
// whitespace, e.g. "HFHFF", "F,H^7,F,H^6", "GH(0.52)^3 F".

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "qwalk/entanglement.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

class CoinLabel {
public:
    enum class Kind {
        hadamard,
        fourier,
        generalized_hadamard,  // parameter: omega
        hadamard_phase,        // H * Z(phi), parameter: phi
        fourier_phase,         // F * Z(phi), parameter: phi
        custom,
    };

    static CoinLabel H() { return CoinLabel(Kind::hadamard, 0.0); }
    static CoinLabel F() { return CoinLabel(Kind::fourier, 0.0); }
    static CoinLabel GH(double omega) { return CoinLabel(Kind::generalized_hadamard, omega); }
    static CoinLabel HZ(double phi) { return CoinLabel(Kind::hadamard_phase, phi); }
    static CoinLabel FZ(double phi) { return CoinLabel(Kind::fourier_phase, phi); }
    static CoinLabel Custom(const CoinMatrix& m) {
        if (!is_unitary(m))
            throw std::invalid_argument("CoinLabel::Custom: matrix must be unitary");
        CoinLabel label(Kind::custom, 0.0);
        label.matrix_ = m;
        return label;
    }

    Kind kind() const { return kind_; }
    double parameter() const { return parameter_; }

    CoinMatrix resolve() const {
        switch (kind_) {
            case Kind::hadamard: return hadamard_coin();
            case Kind::fourier: return fourier_coin();
            case Kind::generalized_hadamard: return make_generalized_hadamard(parameter_);
            case Kind::hadamard_phase: return hadamard_coin() * make_phase_operator(parameter_);
            case Kind::fourier_phase: return fourier_coin() * make_phase_operator(parameter_);
            case Kind::custom: return matrix_;
        }
        throw std::logic_error("CoinLabel::resolve: invalid kind");
    }

    friend bool operator==(const CoinLabel& a, const CoinLabel& b) {
        if (a.kind_ != b.kind_) return false;
        if (a.kind_ == Kind::custom)
            return (a.matrix_ - b.matrix_).cwiseAbs().maxCoeff() == 0.0;
        return a.parameter_ == b.parameter_;
    }

private:
    CoinLabel(Kind kind, double parameter) : kind_(kind), parameter_(parameter) {}

    Kind kind_;
    double parameter_;
    CoinMatrix matrix_ = CoinMatrix::Identity();
};

using CoinSequence = std::vector<CoinLabel>;

// [(H, F) repeated m times, then F]: the (2m+1)-step sequence whose final
// Schmidt norm is independent of the initial coin angle theta.
inline CoinSequence universal_sequence(int m) {
    if (m < 1) throw std::invalid_argument("universal_sequence: m must be >= 1");
    CoinSequence seq;
    seq.reserve(2 * m + 1);
    for (int i = 0; i < m; ++i) {
        seq.push_back(CoinLabel::H());
        seq.push_back(CoinLabel::F());
    }
    seq.push_back(CoinLabel::F());
    return seq;
}

// Universal pattern with the Hadamard replaced by its one-parameter family.
inline CoinSequence generalized_universal_sequence(int m, double omega) {
    if (m < 1) throw std::invalid_argument("generalized_universal_sequence: m must be >= 1");
    CoinSequence seq;
    seq.reserve(2 * m + 1);
    for (int i = 0; i < m; ++i) {
        seq.push_back(CoinLabel::GH(omega));
        seq.push_back(CoinLabel::F());
    }
    seq.push_back(CoinLabel::F());
    return seq;
}

// Composes every H/F coin with the phase gate Z(phi), the compensation that
// restores a phi = 0 evolution for an initial coin with relative phase phi.
inline CoinSequence phase_compensated_sequence(const CoinSequence& seq, double phi) {
    CoinSequence out;
    out.reserve(seq.size());
    for (const CoinLabel& label : seq) {
        switch (label.kind()) {
            case CoinLabel::Kind::hadamard: out.push_back(CoinLabel::HZ(phi)); break;
            case CoinLabel::Kind::fourier: out.push_back(CoinLabel::FZ(phi)); break;
            default:
                throw std::invalid_argument(
                    "phase_compensated_sequence: sequence must contain only H and F coins");
        }
    }
    return out;
}

struct SequenceParseError : std::runtime_error {
    SequenceParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " at offset " + std::to_string(position)),
          offset(position) {}
    std::size_t offset;
};

namespace detail {

inline void skip_separators(std::string_view text, std::size_t& pos) {
    while (pos < text.size() &&
           (text[pos] == ',' || text[pos] == ' ' || text[pos] == '\t')) {
        ++pos;
    }
}

}  // namespace detail

inline CoinSequence parse_sequence(std::string_view text) {
    CoinSequence seq;
    std::size_t pos = 0;
    detail::skip_separators(text, pos);
    if (pos == text.size())
        throw SequenceParseError("parse_sequence: empty sequence", pos);
    while (pos < text.size()) {
        CoinLabel label = CoinLabel::H();
        const char c = text[pos];
        if (c == 'H') {
            label = CoinLabel::H();
            ++pos;
        } else if (c == 'F') {
            label = CoinLabel::F();
            ++pos;
        } else if (c == 'G') {
            if (text.compare(pos, 3, "GH(") != 0)
                throw SequenceParseError("parse_sequence: expected GH(", pos);
            pos += 3;
            double omega = 0.0;
            const char* begin = text.data() + pos;
            const char* end = text.data() + text.size();
            auto [next, ec] = std::from_chars(begin, end, omega);
            if (ec != std::errc())
                throw SequenceParseError("parse_sequence: invalid GH parameter", pos);
            pos = static_cast<std::size_t>(next - text.data());
            if (pos >= text.size() || text[pos] != ')')
                throw SequenceParseError("parse_sequence: expected )", pos);
            ++pos;
            label = CoinLabel::GH(omega);
        } else {
            throw SequenceParseError(
                std::string("parse_sequence: unexpected character '") + c + "'", pos);
        }
        std::size_t count = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            const char* begin = text.data() + pos;
            const char* end = text.data() + text.size();
            auto [next, ec] = std::from_chars(begin, end, count);
            if (ec != std::errc() || next == begin)
                throw SequenceParseError("parse_sequence: invalid repetition count", pos);
            if (count == 0)
                throw SequenceParseError("parse_sequence: repetition count must be positive", pos);
            pos = static_cast<std::size_t>(next - text.data());
        }
        seq.insert(seq.end(), count, label);
        detail::skip_separators(text, pos);
    }
    return seq;
}

// Canonical text form: maximal runs of an identical label are compressed with
// ^, tokens joined by commas. Only H/F/GH labels are printable.
inline std::string format_sequence(const CoinSequence& seq) {
    if (seq.empty()) throw std::invalid_argument("format_sequence: empty sequence");
    std::string out;
    std::size_t i = 0;
    while (i < seq.size()) {
        std::size_t run = 1;
        while (i + run < seq.size() && seq[i + run] == seq[i]) ++run;
        std::string token;
        switch (seq[i].kind()) {
            case CoinLabel::Kind::hadamard: token = "H"; break;
            case CoinLabel::Kind::fourier: token = "F"; break;
            case CoinLabel::Kind::generalized_hadamard: {
                char buf[40];
                std::snprintf(buf, sizeof buf, "GH(%.17g)", seq[i].parameter());
                token = buf;
                break;
            }
            default:
                throw std::invalid_argument(
                    "format_sequence: only H, F and GH labels have a text form");
        }
        if (!out.empty()) out += ',';
        out += token;
        if (run > 1) out += '^' + std::to_string(run);
        i += run;
    }
    return out;
}

// Plain letter string like "HFHFF"; requires an H/F-only sequence.
inline std::string format_sequence_plain(const CoinSequence& seq) {
    std::string out;
    out.reserve(seq.size());
    for (const CoinLabel& label : seq) {
        switch (label.kind()) {
            case CoinLabel::Kind::hadamard: out += 'H'; break;
            case CoinLabel::Kind::fourier: out += 'F'; break;
            default:
                throw std::invalid_argument(
                    "format_sequence_plain: sequence must contain only H and F coins");
        }
    }
    return out;
}

struct SequenceEvaluation {
    std::vector<std::pair<double, double>> per_theta;  // (theta, final Schmidt norm)
    double mean = 0.0;
    double variance = 0.0;  // population variance over the theta samples
    std::size_t samples = 0;
};

// Final Schmidt norm of `seq` for each initial coin (theta, phi). The mean
// and variance are computed in two passes; a single-pass formula loses the
// ~1e-30 variances of theta-independent sequences to cancellation.
inline SequenceEvaluation evaluate_sequence(const CoinSequence& seq,
                                            const std::vector<double>& thetas,
                                            double phi = 0.0) {
    if (seq.empty()) throw std::invalid_argument("evaluate_sequence: empty sequence");
    if (thetas.empty()) throw std::invalid_argument("evaluate_sequence: no theta samples");
    SequenceEvaluation eval;
    eval.per_theta.reserve(thetas.size());
    eval.samples = thetas.size();

    std::vector<CoinMatrix> coins;
    coins.reserve(seq.size());
    for (const CoinLabel& label : seq) coins.push_back(label.resolve());

    const int half_width = static_cast<int>(seq.size());
    WalkerCoinState state(InitialStateParams(0.0, 0.0), half_width);
    for (double theta : thetas) {
        state.reset(InitialStateParams(theta, phi));
        for (const CoinMatrix& coin : coins) state.step(coin);
        eval.per_theta.emplace_back(theta, schmidt_norm(state));
    }

    double sum = 0.0;
    for (const auto& [theta, s] : eval.per_theta) sum += s;
    eval.mean = sum / static_cast<double>(eval.per_theta.size());
    double ss = 0.0;
    for (const auto& [theta, s] : eval.per_theta) {
        const double d = s - eval.mean;
        ss += d * d;
    }
    eval.variance = ss / static_cast<double>(eval.per_theta.size());
    return eval;
}

// n equally spaced values covering [lo, hi] inclusive.
inline std::vector<double> linspace(double lo, double hi, int n) {
    if (n < 1) throw std::invalid_argument("linspace: need at least one point");
    std::vector<double> v(static_cast<std::size_t>(n));
    if (n == 1) {
        v[0] = lo;
        return v;
    }
    const double h = (hi - lo) / static_cast<double>(n - 1);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = lo + h * i;
    // lo + h*(n-1) can overshoot hi by an ulp; the endpoint must be exact.
    v.back() = hi;
    return v;
}

inline WalkerCoinState evolve(WalkerCoinState state, const CoinSequence& seq) {
    for (const CoinLabel& label : seq) state.step(label.resolve());
    return state;
}

inline WalkerCoinState evolve(const InitialStateParams& params, const CoinSequence& seq) {
    return evolve(WalkerCoinState(params, static_cast<int>(seq.size())), seq);
}

}  // namespace qwalk
