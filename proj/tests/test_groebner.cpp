#include <numeric>
#include <random>

#include "doctest.h"
#include "tamegamma/groebner.hpp"
#include "tamegamma/parser.hpp"
#include "oracles.hpp"

using namespace tamegamma;
using namespace tamegamma::oracles;

namespace {

Ideal ideal_of(std::size_t n, std::initializer_list<const char*> gens) {
    Ideal I{z_names(n), {}};
    for (const char* g : gens) I.generators.push_back(parse_sparse(g, n));
    return I;
}

std::vector<std::string> strings(const std::vector<SparsePolynomial>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(to_string(p));
    return out;
}

}  // namespace

TEST_CASE("monomial orders") {
    const auto g = MonomialOrder::grevlex();
    CHECK(g.compare({1, 0, 0}, {0, 1, 0}) > 0);
    CHECK(g.compare({1, 0, 1}, {0, 2, 0}) < 0);  // grevlex: smaller last exponent wins
    CHECK(g.compare({0, 0, 2}, {1, 0, 0}) > 0);
    const auto l = MonomialOrder::lex();
    CHECK(l.compare({1, 0, 0}, {0, 5, 5}) > 0);
    const auto e = MonomialOrder::elimination(0b010);
    CHECK(e.compare({0, 1, 0}, {9, 0, 9}) > 0);
    CHECK(e.compare({1, 1, 0}, {0, 1, 1}) > 0);
}

TEST_CASE("small bases") {
    {
        auto gb = buchberger(ideal_of(2, {"z1 - z2", "z1 + z2"}), MonomialOrder::lex());
        CHECK(strings(gb.elements) == std::vector<std::string>{"z2", "z1"});
    }
    {
        auto gb = buchberger(ideal_of(2, {"z1^2 - z2", "z1^3 - 1"}), MonomialOrder::lex());
        const auto target = parse_sparse("z2^3 - 1", 2);
        CHECK(std::find(gb.elements.begin(), gb.elements.end(), target) != gb.elements.end());
        CHECK(normal_form(target, gb).is_zero());
        CHECK(passes_s_polynomial_check(gb));
    }
    {
        auto gb = buchberger(ideal_of(2, {"1"}), MonomialOrder::grevlex());
        CHECK(gb.is_unit());
    }
    {
        auto gb = buchberger(ideal_of(2, {"z1 - z2"}), MonomialOrder::grevlex());
        CHECK(to_string(normal_form(parse_sparse("z1^2", 2), gb)) == "z2^2");
        CHECK(normal_form(gb.elements.front(), gb).is_zero());
    }
    CHECK_THROWS_AS(normal_form(parse_sparse("z1", 3), buchberger(ideal_of(2, {"z1"}), MonomialOrder::grevlex())),
                    std::invalid_argument);
}

TEST_CASE("resultant oracle for two-variable elimination") {
    // Res_x(x^2 - y, x^3 - 1) = y^3 - 1 generates the elimination ideal.
    auto E = eliminate(ideal_of(2, {"z1^2 - z2", "z1^3 - 1"}), {0});
    REQUIRE(E.generators.size() == 1);
    CHECK(to_string(E.generators.front(), E.ring) == "-1 + z2^3");
}

TEST_CASE("saturation") {
    {
        auto S = saturate(ideal_of(3, {"z3*(z1^2 - z2^3)"}), parse_sparse("z3", 3));
        REQUIRE(S.generators.size() == 1);
        CHECK(to_string(display_normalized(S.generators.front())) == "z1^2 - z2^3");
    }
    {
        auto S = saturate(ideal_of(2, {"z1*z2"}), parse_sparse("z1", 2));
        CHECK(strings(S.generators) == std::vector<std::string>{"z2"});
    }
    CHECK(contains_unit(saturate(ideal_of(1, {"z1"}), parse_sparse("z1"))));
    CHECK_THROWS_AS(saturate(ideal_of(1, {"z1"}), SparsePolynomial(1)), std::invalid_argument);
}

TEST_CASE("saturation properties on random ideals") {
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 2 + trial % 2;
        Ideal I{z_names(n), {random_poly(rng, n, 3, 2), random_poly(rng, n, 3, 2)}};
        const auto f = SparsePolynomial::variable(n, trial % n);
        const auto S = saturate(I, f);
        const auto gbS = buchberger(S, MonomialOrder::grevlex());
        for (const auto& g : I.generators) CHECK(normal_form(g, gbS).is_zero());
        // Idempotence.
        const auto gbSS = buchberger(saturate(S, f), MonomialOrder::grevlex());
        CHECK(gbSS.elements == gbS.elements);
        // f * g in I implies g in I : f^inf.
        const auto g = random_poly(rng, n, 2, 2);
        Ideal J{I.ring, {f * g}};
        CHECK(normal_form(g, buchberger(saturate(J, f), MonomialOrder::grevlex())).is_zero());
        // Single-pass helper agrees with the definition.
        const std::vector<std::size_t> v{static_cast<std::size_t>(trial % n)};
        const auto gbH = buchberger(saturate_and_eliminate(I, v, {}), MonomialOrder::grevlex());
        CHECK(gbH.elements == gbS.elements);
    }
}

TEST_CASE("elimination") {
    {
        // Ring (z, u1, u2).
        Ideal I{{"z", "u1", "u2"}, {}};
        I.generators.push_back(parse_sparse("z1 - z2^2", 3));
        I.generators.push_back(parse_sparse("z1 - z3^3", 3));
        auto E = eliminate(I, {0});
        REQUIRE(E.generators.size() == 1);
        CHECK(E.ring == std::vector<std::string>{"u1", "u2"});
        CHECK(to_string(display_normalized(E.generators.front()), E.ring) == "u1^2 - u2^3");
    }
    {
        Ideal I{{"x", "y"}, {parse_sparse("1 - z1*z2", 2)}};
        CHECK(eliminate(I, {1}).generators.empty());
    }
    {
        auto I = ideal_of(2, {"z1^2 - z2", "z1*z2"});
        auto E = eliminate(I, {});
        CHECK(buchberger(E, MonomialOrder::grevlex()).elements == buchberger(I, MonomialOrder::grevlex()).elements);
    }
}

TEST_CASE("elimination commutes with renaming kept variables") {
    std::mt19937_64 rng(505);
    for (int trial = 0; trial < 20; ++trial) {
        Ideal I{z_names(3), {random_poly(rng, 3, 3, 2), random_poly(rng, 3, 3, 2)}};
        // Swap z2 and z3 (both kept), eliminate z1 in each, compare after swapping back.
        Ideal swapped{I.ring, {}};
        for (const auto& g : I.generators) {
            SparsePolynomial s(3);
            for (const auto& [e, c] : g.terms()) s.add_term({e[0], e[2], e[1]}, c);
            swapped.generators.push_back(s);
        }
        auto E1 = eliminate(I, {0});
        auto E2 = eliminate(swapped, {0});
        Ideal back{E1.ring, {}};
        for (const auto& g : E2.generators) {
            SparsePolynomial s(2);
            for (const auto& [e, c] : g.terms()) s.add_term({e[1], e[0]}, c);
            back.generators.push_back(s);
        }
        CHECK(buchberger(back, MonomialOrder::grevlex()).elements == buchberger(E1, MonomialOrder::grevlex()).elements);
    }
}

TEST_CASE("torus consistency examples") {
    CHECK(torus_has_zero(ideal_of(2, {"z1 - 1", "z2 - 1"}), {0, 1}));
    CHECK_FALSE(torus_has_zero(ideal_of(1, {"z1"}), {0}));
    CHECK(torus_has_zero(ideal_of(2, {"z1^2 - z2^3"}), {0, 1}));
    CHECK_FALSE(torus_has_zero(ideal_of(2, {"z1^2 + z1*z2", "z2"}), {0, 1}));
    CHECK(torus_has_zero(ideal_of(2, {"z1*z2"}), {0}));
    CHECK_FALSE(torus_has_zero(ideal_of(2, {"z1*z2"}), {0, 1}));
}

TEST_CASE("torus consistency agrees with the lattice oracle on random binomial ideals") {
    std::mt19937_64 rng(606);
    std::uniform_int_distribution<int> exp(0, 2);
    const std::vector<mpq_class> coeffs{1, -1, 2, mpq_class(1, 2), 4};
    std::uniform_int_distribution<std::size_t> pick(0, coeffs.size() - 1);
    int consistent = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const std::size_t m = 1 + (trial / 4) % 3;
        Ideal I{z_names(n), {}};
        std::vector<std::vector<long>> v;
        std::vector<mpq_class> c;
        while (I.generators.size() < m) {
            ExponentVector a(n), b(n);
            for (auto& x : a) x = static_cast<std::uint32_t>(exp(rng));
            for (auto& x : b) x = static_cast<std::uint32_t>(exp(rng));
            if (a == b) continue;
            const mpq_class ck = coeffs[pick(rng)];
            SparsePolynomial g(n);
            g.add_term(a, 1);
            g.add_term(b, GaussianRational(-ck));
            I.generators.push_back(g);
            std::vector<long> row(n);
            for (std::size_t i = 0; i < n; ++i) row[i] = static_cast<long>(a[i]) - static_cast<long>(b[i]);
            v.push_back(row);
            c.push_back(ck);
        }
        std::vector<std::size_t> all(n);
        std::iota(all.begin(), all.end(), 0);
        const bool expected = binomial_oracle(v, c);
        consistent += expected ? 1 : 0;
        CHECK_MESSAGE(torus_has_zero(I, all) == expected, "trial " << trial);
    }
    // Both outcomes must be exercised.
    CHECK(consistent > 20);
    CHECK(consistent < 180);
}

TEST_CASE("random bases pass the S-polynomial check") {
    std::mt19937_64 rng(707);
    int finished = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + trial % 3;
        Ideal I{z_names(n), {}};
        for (int k = 0; k < 2 + trial % 2; ++k) I.generators.push_back(random_poly(rng, n, 3, 2));
        const auto order = trial % 2 == 0 ? MonomialOrder::grevlex() : MonomialOrder::lex();
        GroebnerBasis gb;
        try {
            gb = buchberger(I, order);
        } catch (const ResourceExhausted&) {
            continue;  // a budget verdict, never a wrong basis
        }
        ++finished;
        CHECK(passes_s_polynomial_check(gb));
        for (const auto& g : I.generators) CHECK(normal_form(g, gb).is_zero());
        for (const auto& g : gb.elements) CHECK(leading_coefficient(g, order) == GaussianRational(1));
        for (std::size_t a = 0; a < gb.elements.size(); ++a)
            for (std::size_t b = 0; b < gb.elements.size(); ++b) {
                if (a == b) continue;
                const auto lm = leading_monomial(gb.elements[a], order);
                for (const auto& [e, c] : gb.elements[b].terms()) CHECK_FALSE(divides(lm, e));
            }
        CHECK(buchberger(I, order).elements == gb.elements);
    }
    CHECK(finished >= 95);
}

TEST_CASE("budgets raise ResourceExhausted") {
    Budget tiny;
    tiny.max_reductions = 3;
    auto I = ideal_of(3, {"z1^3 - z2*z3 + 1", "z2^3 - z1*z3 - 2", "z3^3 - z1*z2 + z1"});
    CHECK_THROWS_AS(buchberger(I, MonomialOrder::lex(), tiny), ResourceExhausted);
    Budget low_degree;
    low_degree.max_degree = 2;
    CHECK_THROWS_AS(buchberger(I, MonomialOrder::lex(), low_degree), ResourceExhausted);
}
