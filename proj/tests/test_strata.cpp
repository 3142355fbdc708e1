#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "tamegamma/parser.hpp"
#include "tamegamma/strata.hpp"

using namespace tamegamma;

namespace {

std::vector<std::string> names(const StratificationReport& r) {
    std::vector<std::string> out;
    for (const auto& s : r.strata) out.push_back(s.name());
    return out;
}

}  // namespace

TEST_CASE("stratification of the curve family") {
    const auto r = build_stratification(parse_family("z1^2*z2^3 + z1^3*z2^2 + t*z1^2*z2^4"));
    auto got = names(r);
    std::sort(got.begin(), got.end());
    CHECK(got == std::vector<std::string>{"A_{1,2}", "B_{1,2}", "C_{1}", "C_{2}", "C_{}"});
    const auto axis = std::find_if(r.strata.begin(), r.strata.end(), [](const StratumDescriptor& s) { return s.t_axis; });
    REQUIRE(axis != r.strata.end());
    CHECK(axis->name() == "C_{}");
    CHECK(axis->dimension == 1);
    CHECK(axis->conditions == "t in C, z1 = 0, z2 = 0");
    CHECK(std::count_if(r.strata.begin(), r.strata.end(), [](const StratumDescriptor& s) { return s.t_axis; }) == 1);
}

TEST_CASE("stratification of small and convenient cases") {
    CHECK(names(build_stratification(parse_sparse("z1^2"))) == std::vector<std::string>{"A_{1}", "B_{1}", "C_{}"});
    // Convenient: only the origin subspace vanishes.
    const auto r = build_stratification(parse_sparse("z1^3 + z2^4 + z3^5 + z1*z2*z3"));
    CHECK(r.count_c == 1);
    CHECK(r.count_a == 7);
    CHECK(r.count_b == 7);
    CHECK_THROWS_AS(build_stratification(parse_family("t^2*z1^2 - z2^2")), PreconditionError);
}

TEST_CASE("stratum counts partition the coordinate subspaces") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + trial % 4;
        SparsePolynomial p(n);
        for (int k = 0; k < 3; ++k) {
            ExponentVector e(n);
            for (auto& x : e) x = static_cast<std::uint32_t>(rng() % 3);
            if (std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; })) e[0] = 1;
            p.add_term(e, GaussianRational(1 + static_cast<long>(rng() % 3)));
        }
        const auto r = build_stratification(p);
        CHECK(r.count_a == r.count_b);
        CHECK(r.count_a + r.count_c == (std::size_t{1} << n));
        CHECK(r.strata.size() == 2 * r.count_a + r.count_c);
        for (const auto& s : r.strata) {
            if (s.kind == 'A') CHECK(s.dimension == s.index.size());
            if (s.kind != 'A') CHECK(s.dimension == s.index.size() + 1);
        }
    }
}

TEST_CASE("whitney ratio on hand-computed arcs") {
    SUBCASE("orthogonal secant") {
        const auto f = parse_family("z1 + 0*t", 2);
        for (long double s : {0.5L, 0.01L, 1e-6L}) {
            const auto r = whitney_ratio(f, {0, 0, s}, {0, 0, 0});
            REQUIRE(r.has_value());
            CHECK(*r == 0);
        }
    }
    SUBCASE("cusp family along x = -t^2") {
        // At (t, -t^2, 0): l = (0, -t^2, 0), grad f = (-2t^5, -t^4, 0), so the
        // ratio is 1 / sqrt(1 + 4t^2).
        const auto f = parse_family("z2^2 - t^2*z1^2 - z1^3");
        for (long double t : {0.5L, 0.1L, 0.001L}) {
            const auto r = whitney_ratio(f, {t, -t * t, 0}, {t, 0, 0});
            REQUIRE(r.has_value());
            CHECK(std::fabs(*r - 1 / std::sqrt(1 + 4 * t * t)) < 1e-15L);
        }
    }
    SUBCASE("undefined samples") {
        const auto f = parse_family("z1^2 + t*z2^2");
        CHECK_FALSE(whitney_ratio(f, {0, 0, 0}, {0, 0, 0}).has_value());
        CHECK_FALSE(whitney_ratio(f, {0, 1, 0}, {0, 1, 0}).has_value());
        CHECK_THROWS_AS(whitney_ratio(f, {0, 1}, {0, 0}), std::invalid_argument);
    }
}

TEST_CASE("whitney ratio is bounded and scale invariant") {
    const auto f = parse_family("z1^2*z2^3 + z1^3*z2^2 + t*z1^2*z2^4 - 3*z1^5");
    FamilyPolynomial g(2);
    for (const auto& [a, c] : f.terms()) {
        auto cs = c.coefficients();
        for (auto& x : cs) x *= GaussianRational(mpq_class(-2, 5), mpq_class(1));
        g.add_term(a, UnivariatePolynomial(cs));
    }
    std::mt19937_64 rng(32);
    auto unit = [&rng] { return static_cast<long double>(rng() % 2001) / 1000 - 1; };
    for (int trial = 0; trial < 200; ++trial) {
        const ProbePoint gamma{{unit(), unit()}, {unit(), unit()}, {unit(), unit()}};
        const ProbePoint tilde{{unit(), unit()}, {unit(), unit()}, {unit(), unit()}};
        const auto r = whitney_ratio(f, gamma, tilde);
        if (!r) continue;
        CHECK(*r >= 0);
        CHECK(*r <= 1);
        const auto r2 = whitney_ratio(g, gamma, tilde);
        REQUIRE(r2.has_value());
        CHECK(std::fabs(*r - *r2) < 1e-15L);
        // A unitary rescaling of l: move gamma_tilde along the secant line by a phase.
        const Complex phase = std::polar(1.0L, 0.7L);
        ProbePoint rotated(3);
        for (std::size_t c = 0; c < 3; ++c) rotated[c] = gamma[c] - phase * (gamma[c] - tilde[c]);
        const auto r3 = whitney_ratio(f, gamma, rotated);
        REQUIRE(r3.has_value());
        CHECK(std::fabs(*r - *r3) < 1e-15L);
    }
}

TEST_CASE("probe on an admissible family") {
    const auto report = probe_whitney(parse_family("z1^2*z2^3 + z1^3*z2^2 + t*z1^2*z2^4"));
    CHECK(report.verdict == "consistent-with-b");
    CHECK(report.defined_pairs > 0);
    for (const auto& pair : report.pairs) {
        if (pair.trend == CurvePair::Trend::Undefined) continue;
        CHECK(*pair.last < 1e-3L);
        for (const auto& s : pair.samples)
            if (s.ratio) CHECK(*s.ratio <= 1);
        // Tail half is decreasing up to rounding noise near 0.
        const std::size_t half = pair.samples.size() / 2;
        for (std::size_t k = half + 1; k < pair.samples.size(); ++k) {
            const auto& a = pair.samples[k - 1].ratio;
            const auto& b = pair.samples[k].ratio;
            if (a && b) CHECK(*b <= *a * (1 + 1e-9L) + 1e-12L);
        }
    }
}

TEST_CASE("probe flags a non-equisingular family") {
    const auto report = probe_whitney(parse_family("z2^2 - t^2*z1^2 - z1^3"));
    CHECK(report.verdict == "suspect");
    CHECK(std::any_of(report.pairs.begin(), report.pairs.end(),
                      [](const CurvePair& p) { return p.last && *p.last > 0.1L; }));
}

TEST_CASE("probe is deterministic under a fixed seed") {
    const auto f = parse_family("z2^2 - t^2*z1^2 - z1^3");
    ProbeOptions o;
    o.seed = 7;
    const auto a = probe_whitney(f, o);
    const auto b = probe_whitney(f, o);
    REQUIRE(a.pairs.size() == b.pairs.size());
    for (std::size_t k = 0; k < a.pairs.size(); ++k) {
        CHECK(a.pairs[k].exponents == b.pairs[k].exponents);
        CHECK(a.pairs[k].last == b.pairs[k].last);
    }
}

TEST_CASE("probe with no approaching arcs") {
    const auto report = probe_whitney(FamilyPolynomial::constant_family(parse_sparse("z1", 2)));
    CHECK(report.verdict == "no-pairs");
    CHECK(report.defined_pairs == 0);
}
