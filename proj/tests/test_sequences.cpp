#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "qwalk/rng.hpp"
#include "qwalk/sequences.hpp"

using namespace qwalk;
using Catch::Matchers::WithinAbs;

namespace {

constexpr double pi = std::numbers::pi;

}  // namespace

TEST_CASE("universal sequence structure") {
    CHECK_THROWS_AS(universal_sequence(0), std::invalid_argument);
    CHECK(format_sequence_plain(universal_sequence(1)) == "HFF");
    CHECK(format_sequence_plain(universal_sequence(2)) == "HFHFF");
    CHECK(format_sequence_plain(universal_sequence(3)) == "HFHFHFF");
    for (int m = 1; m <= 10; ++m) {
        CHECK(universal_sequence(m).size() == static_cast<std::size_t>(2 * m + 1));
        CHECK(universal_sequence(m).size() % 2 == 1);
    }
}

TEST_CASE("generalized universal sequence structure") {
    CHECK_THROWS_AS(generalized_universal_sequence(0, 0.3), std::invalid_argument);
    const CoinSequence seq = generalized_universal_sequence(2, pi / 4);
    REQUIRE(seq.size() == 5);
    CHECK(seq[0].kind() == CoinLabel::Kind::generalized_hadamard);
    CHECK(seq[1].kind() == CoinLabel::Kind::fourier);
    CHECK(seq[4].kind() == CoinLabel::Kind::fourier);
    // At omega = pi/4 the resolved matrices equal the plain universal ones.
    const CoinSequence plain = universal_sequence(2);
    for (std::size_t i = 0; i < seq.size(); ++i)
        CHECK((seq[i].resolve() - plain[i].resolve()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("every sequence label resolves to a unitary") {
    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const double w = rng.uniform(-4.0, 4.0);
        CHECK(is_unitary(CoinLabel::H().resolve()));
        CHECK(is_unitary(CoinLabel::F().resolve()));
        CHECK(is_unitary(CoinLabel::GH(w).resolve()));
        CHECK(is_unitary(CoinLabel::HZ(w).resolve()));
        CHECK(is_unitary(CoinLabel::FZ(w).resolve()));
    }
    CHECK_THROWS_AS(CoinLabel::Custom(CoinMatrix::Zero()), std::invalid_argument);
    CHECK(is_unitary(CoinLabel::Custom(fourier_coin()).resolve()));
}

TEST_CASE("parser accepts the documented grammar") {
    CHECK(format_sequence_plain(parse_sequence("HFHFF")) == "HFHFF");
    CHECK(format_sequence_plain(parse_sequence("F,H^7,F,H^6")) == "FHHHHHHHFHHHHHH");
    CHECK(parse_sequence("F,H^7,F,H^6").size() == 15);

    const CoinSequence gh = parse_sequence("GH(0.5)^2,F");
    REQUIRE(gh.size() == 3);
    CHECK(gh[0].kind() == CoinLabel::Kind::generalized_hadamard);
    CHECK(gh[0].parameter() == 0.5);
    CHECK(gh[1] == gh[0]);
    CHECK(gh[2].kind() == CoinLabel::Kind::fourier);

    CHECK(parse_sequence("H F") == parse_sequence("H,F"));
    CHECK(parse_sequence(" HF ") == parse_sequence("HF"));
    CHECK(parse_sequence("H^3") == parse_sequence("HHH"));
}

TEST_CASE("parser rejects malformed input with a position") {
    CHECK_THROWS_AS(parse_sequence(""), SequenceParseError);
    CHECK_THROWS_AS(parse_sequence("X"), SequenceParseError);
    CHECK_THROWS_AS(parse_sequence("H^0"), SequenceParseError);
    CHECK_THROWS_AS(parse_sequence("H^"), SequenceParseError);
    CHECK_THROWS_AS(parse_sequence("GH("), SequenceParseError);
    CHECK_THROWS_AS(parse_sequence("GH(0.5"), SequenceParseError);
    CHECK_THROWS_AS(parse_sequence("GH0.5)"), SequenceParseError);
    bool caught = false;
    try {
        parse_sequence("HFX");
    } catch (const SequenceParseError& e) {
        caught = true;
        CHECK(e.offset == 2);
        CHECK(std::string(e.what()).find("offset 2") != std::string::npos);
    }
    CHECK(caught);
}

TEST_CASE("format round-trips through parse") {
    CHECK(format_sequence(parse_sequence("HFHFF")) == "H,F,H,F^2");
    Rng rng(17);
    const double omegas[] = {0.5, 1.25, 0.123456789012345, pi / 4};
    for (int trial = 0; trial < 500; ++trial) {
        CoinSequence seq;
        const int n = 1 + static_cast<int>(rng.index(20));
        for (int i = 0; i < n; ++i) {
            switch (rng.index(3)) {
                case 0: seq.push_back(CoinLabel::H()); break;
                case 1: seq.push_back(CoinLabel::F()); break;
                default: seq.push_back(CoinLabel::GH(omegas[rng.index(4)])); break;
            }
        }
        REQUIRE(parse_sequence(format_sequence(seq)) == seq);
    }
}

TEST_CASE("plain formatting requires H/F labels") {
    CHECK_THROWS_AS(format_sequence_plain(parse_sequence("GH(0.5)")), std::invalid_argument);
    CHECK_THROWS_AS(format_sequence(CoinSequence{}), std::invalid_argument);
    CHECK_THROWS_AS(format_sequence({CoinLabel::HZ(0.3)}), std::invalid_argument);
}

TEST_CASE("phase compensation restores the phi = 0 Schmidt norm") {
    Rng rng(19);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng.index(7));
        CoinSequence seq;
        for (int i = 0; i < n; ++i)
            seq.push_back(rng.index(2) ? CoinLabel::F() : CoinLabel::H());
        const double theta = rng.uniform(0.0, pi);
        const double phi = rng.uniform(0.0, 2 * pi);

        const double plain = schmidt_norm(evolve(InitialStateParams(theta, 0.0), seq));
        const double compensated = schmidt_norm(
            evolve(InitialStateParams(theta, phi), phase_compensated_sequence(seq, phi)));
        REQUIRE_THAT(compensated, WithinAbs(plain, 1e-12));
    }
}

TEST_CASE("phase compensation via the initial state is equivalent") {
    // Applying Z(phi) once to the initial coin and evolving plainly equals
    // the compensated-coin evolution.
    const double theta = 1.1, phi = 2.3;
    const CoinSequence seq = parse_sequence("HFFHH");
    const double via_coins = schmidt_norm(
        evolve(InitialStateParams(theta, phi), phase_compensated_sequence(seq, phi)));
    // Z(phi) maps the (theta, phi) coin to (theta, 0) exactly.
    const double via_state = schmidt_norm(evolve(InitialStateParams(theta, 0.0), seq));
    CHECK_THAT(via_coins, WithinAbs(via_state, 1e-12));
}

TEST_CASE("phase compensation rejects non-H/F labels") {
    CHECK_THROWS_AS(phase_compensated_sequence(parse_sequence("GH(0.2)"), 0.5),
                    std::invalid_argument);
    const CoinSequence unchanged = phase_compensated_sequence(parse_sequence("HF"), 0.0);
    CHECK((unchanged[0].resolve() - hadamard_coin()).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((unchanged[1].resolve() - fourier_coin()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("evaluate_sequence statistics") {
    CHECK_THROWS_AS(evaluate_sequence(CoinSequence{}, {0.5}), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_sequence(parse_sequence("H"), {}), std::invalid_argument);

    Rng rng(53);
    std::vector<double> thetas;
    for (int i = 0; i < 1000; ++i) thetas.push_back(rng.uniform(0.0, pi));
    const SequenceEvaluation eval = evaluate_sequence(universal_sequence(2), thetas, 0.0);
    CHECK(eval.samples == 1000);
    CHECK(eval.per_theta.size() == 1000);
    CHECK_THAT(eval.mean, WithinAbs((3.0 + std::sqrt(7.0)) / 4.0, 1e-12));
    CHECK(eval.variance >= 0.0);
    CHECK(eval.variance < 1e-20);
    CHECK(eval.mean >= 1.0);
    CHECK(eval.mean <= std::numbers::sqrt2);
}

TEST_CASE("universal sequence is theta independent for m up to 10") {
    Rng rng(59);
    std::vector<double> thetas;
    for (int i = 0; i < 1000; ++i) thetas.push_back(rng.uniform(0.0, pi));
    for (int m = 1; m <= 10; ++m) {
        const SequenceEvaluation eval = evaluate_sequence(universal_sequence(m), thetas, 0.0);
        REQUIRE(eval.variance < 1e-20);
    }
}

TEST_CASE("single-step hand-computed values") {
    // One Hadamard step from theta = 0: the walker splits evenly, the coin
    // ends diagonal, so the Schmidt norm is sqrt(2).
    const SequenceEvaluation h = evaluate_sequence({CoinLabel::H()}, {0.0}, 0.0);
    CHECK_THAT(h.per_theta[0].second, WithinAbs(std::numbers::sqrt2, 1e-12));
    // One Fourier step gives a maximally mixed coin for every theta.
    for (double theta : {0.0, 0.4, 1.3, pi}) {
        const SequenceEvaluation f = evaluate_sequence({CoinLabel::F()}, {theta}, 0.0);
        CHECK_THAT(f.per_theta[0].second, WithinAbs(std::numbers::sqrt2, 1e-12));
    }
    // One Hadamard step from a general theta: Bloch length sin(theta)/2.
    for (double theta : {0.3, 1.0, 2.2}) {
        const double a = std::sin(theta) / 2.0;
        const double expected = std::sqrt(0.5 + a) + std::sqrt(0.5 - a);
        const SequenceEvaluation h_theta = evaluate_sequence({CoinLabel::H()}, {theta}, 0.0);
        CHECK_THAT(h_theta.per_theta[0].second, WithinAbs(expected, 1e-12));
    }
}

TEST_CASE("linspace endpoints and spacing") {
    const std::vector<double> v = linspace(0.0, 1.0, 5);
    REQUIRE(v.size() == 5);
    CHECK_THAT(v.front(), WithinAbs(0.0, 1e-15));
    CHECK_THAT(v.back(), WithinAbs(1.0, 1e-15));
    CHECK_THAT(v[2], WithinAbs(0.5, 1e-15));
    CHECK(linspace(2.0, 3.0, 1).size() == 1);
    CHECK_THROWS_AS(linspace(0.0, 1.0, 0), std::invalid_argument);
}
