#include <random>

#include "doctest.h"
#include "tamegamma/algebra.hpp"
#include "tamegamma/parser.hpp"

using namespace tamegamma;

namespace {

SparsePolynomial random_poly(std::mt19937_64& rng, std::size_t n, int terms, int max_exp) {
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::uniform_int_distribution<int> coef(-5, 5);
    SparsePolynomial p(n);
    for (int k = 0; k < terms; ++k) {
        ExponentVector e(n);
        for (auto& x : e) x = static_cast<std::uint32_t>(exp(rng));
        p.add_term(e, GaussianRational(coef(rng), coef(rng)));
    }
    return p;
}

std::vector<GaussianRational> random_point(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> v(-4, 4);
    std::vector<GaussianRational> pt;
    for (std::size_t i = 0; i < n; ++i) pt.emplace_back(mpq_class(v(rng), 3), mpq_class(v(rng), 2));
    return pt;
}

}  // namespace

TEST_CASE("gaussian rational arithmetic") {
    const GaussianRational a(mpq_class(1, 2), 3);
    const GaussianRational b(2, -1);
    CHECK(a * a.inverse() == GaussianRational(1));
    CHECK((a + b) - b == a);
    CHECK((a * b) / b == a);
    CHECK(a.norm() == mpq_class(37, 4));
    CHECK(GaussianRational::imaginary_unit() * GaussianRational::imaginary_unit() == GaussianRational(-1));
    CHECK_THROWS_AS(GaussianRational(0).inverse(), std::domain_error);
    CHECK(GaussianRational(mpq_class(-1, 2)).to_string() == "-1/2");
    CHECK(GaussianRational(0, -2).to_string() == "-2*i");
    CHECK(a.to_string() == "(1/2+3*i)");
}

TEST_CASE("parse and print") {
    CHECK(to_string(parse_sparse("z1^2*z2^3 + z1^3*z2^2 + 2*z1^2*z2^4")) == "z1^3*z2^2 + z1^2*z2^3 + 2*z1^2*z2^4");
    CHECK(to_string(parse_sparse("-(z1 - z2)^2")) == "-z1^2 + 2*z1*z2 - z2^2");
    CHECK(to_string(parse_sparse("1/2 + i*z1")) == "1/2 + i*z1");
    CHECK(to_string(parse_sparse("z1 - z1")) == "0");
    CHECK(to_string(parse_family("t^2*z1^2 - z2^2")) == "-z2^2 + z1^2*t^2");
    CHECK(parse_sparse("z3").nvars() == 3);
    CHECK(parse_sparse("z1", 4).nvars() == 4);
}

TEST_CASE("parse errors carry positions") {
    auto error_at = [](const char* text) {
        try {
            parse_polynomial(text);
        } catch (const ParseError& e) {
            return std::pair(e.line(), e.column());
        }
        return std::pair(std::size_t{0}, std::size_t{0});
    };
    CHECK(error_at("") == std::pair(std::size_t{1}, std::size_t{1}));
    CHECK(error_at("# only a comment\n") == std::pair(std::size_t{2}, std::size_t{1}));
    CHECK(error_at("z1 +\n  * z2") == std::pair(std::size_t{2}, std::size_t{3}));
    CHECK(error_at("z1^-2") == std::pair(std::size_t{1}, std::size_t{4}));
    CHECK(error_at("z1 $ z2") == std::pair(std::size_t{1}, std::size_t{4}));
    CHECK(error_at("z1 / z2").first == 1);
    CHECK_THROWS_AS(parse_polynomial("z3", 2), ParseError);
    CHECK_THROWS_AS(parse_polynomial("(z1 + 1"), ParseError);
}

TEST_CASE("printing round-trips through the parser") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const SparsePolynomial p = random_poly(rng, n, 1 + trial % 6, 3);
        if (p.is_zero()) continue;
        CHECK(parse_sparse(to_string(p), n) == p);
    }
}

TEST_CASE("ring operations agree with evaluation") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 3;
        const auto p = random_poly(rng, n, 4, 3);
        const auto q = random_poly(rng, n, 4, 3);
        const auto pt = random_point(rng, n);
        CHECK((p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt));
        CHECK((p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt));
        CHECK(p.pow(3).evaluate(pt) == p.evaluate(pt) * p.evaluate(pt) * p.evaluate(pt));
    }
}

TEST_CASE("derivatives obey Leibniz and Euler") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 3;
        const auto p = random_poly(rng, n, 4, 3);
        const auto q = random_poly(rng, n, 4, 3);
        for (std::size_t i = 0; i < n; ++i)
            CHECK(partial_derivative(p * q, i) == partial_derivative(p, i) * q + p * partial_derivative(q, i));
    }
    // Euler: for h weighted homogeneous of degree d, sum w_i z_i dh/dz_i = d h.
    const auto h = parse_sparse("z1^3*z2 + 5*z1*z2^4 + z2^5 + i*z1^2*z2^3");  // not homogeneous
    const auto g = parse_sparse("z1^3*z2^2 + 7*z1^2*z2^3 + z1^5");             // degree 5
    SparsePolynomial euler(2);
    for (std::size_t i = 0; i < 2; ++i) euler += SparsePolynomial::variable(2, i) * partial_derivative(g, i);
    CHECK(euler == g * GaussianRational(5));
    SparsePolynomial euler_h(2);
    for (std::size_t i = 0; i < 2; ++i) euler_h += SparsePolynomial::variable(2, i) * partial_derivative(h, i);
    CHECK(euler_h != h * GaussianRational(4));
    CHECK_THROWS_AS(partial_derivative(h, 2), std::out_of_range);
}

TEST_CASE("weighted degree and restriction") {
    const auto p = parse_sparse("z1^3 + z2^3 + z2*z3^2");
    const std::vector<std::int64_t> w{1, 1, 0};
    CHECK(weighted_degree(p, w) == 1);
    CHECK(restrict_to_subspace(p, SubspaceIndex(3, 0b100)).is_zero());
    CHECK(to_string(restrict_to_subspace(p, SubspaceIndex(3, 0b011))) == "z1^3 + z2^3");
    CHECK_THROWS(weighted_degree(SparsePolynomial(3), w));
}

TEST_CASE("power substitution and convenience") {
    const auto f = parse_family("z1^2*z2 + t*z1*z2^2");
    CHECK(to_string(substitute_power(f, 2)) == "z1^4*z2^2 + z1^2*z2^4*t");
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const auto p = random_poly(rng, 2, 4, 3);
        const auto pt = random_point(rng, 2);
        std::vector<GaussianRational> squared{pt[0] * pt[0], pt[1] * pt[1]};
        CHECK(substitute_power(p, 2).evaluate(pt) == p.evaluate(squared));
    }
    const std::vector<std::uint32_t> big{5, 6};
    CHECK(to_string(make_convenient(parse_sparse("z1^2*z2^2"), big)) == "z1^2*z2^2 + z1^5 + z2^6");
    const std::vector<std::uint32_t> small{2, 6};
    CHECK_THROWS_AS(make_convenient(parse_sparse("z1^2*z2^2"), small), std::invalid_argument);
}

TEST_CASE("families") {
    const auto f = parse_family("t^2*z1^2 - z2^2");
    CHECK(f.generic_support().size() == 2);
    CHECK(f.support_at_zero().size() == 1);
    CHECK(to_string(specialize_family(f, 3)) == "9*z1^2 - z2^2");
    CHECK(FamilyPolynomial::from_joint(f.to_joint()) == f);
    CHECK(to_string(partial_derivative(f, 0)) == "2*z1*t^2");
}

TEST_CASE("monomial content") {
    const auto p = parse_sparse("z1^2*z2^3*z3 + z1^3*z2^2");
    const std::vector<std::size_t> vars{0, 1};
    const auto m = monomial_content(p, vars);
    CHECK(m == ExponentVector{2, 2, 0});
    CHECK(to_string(divide_by_monomial(p, m)) == "z1 + z2*z3");
}

TEST_CASE("subspace index") {
    const std::vector<std::size_t> members{0, 2};
    const auto s = SubspaceIndex::from_members(3, members);
    CHECK(s.to_string() == "{1,3}");
    CHECK(s.complement().to_string() == "{2}");
    CHECK(SubspaceIndex::empty(3).to_string() == "{}");
    CHECK(s.size() == 2);
}
