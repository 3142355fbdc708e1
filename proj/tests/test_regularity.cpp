#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "tamegamma/parser.hpp"
#include "tamegamma/regularity.hpp"

using namespace tamegamma;

namespace {

SparsePolynomial random_poly(std::mt19937_64& rng, std::size_t n, int terms, int max_exp) {
    std::uniform_int_distribution<std::uint32_t> e(0, static_cast<std::uint32_t>(max_exp));
    std::uniform_int_distribution<long> c(-5, 5);
    SparsePolynomial p(n);
    while (p.size() < static_cast<std::size_t>(terms)) {
        ExponentVector a(n);
        for (auto& x : a) x = e(rng);
        if (std::all_of(a.begin(), a.end(), [](std::uint32_t x) { return x == 0; })) continue;
        const long v = c(rng);
        if (v != 0) p.add_term(a, GaussianRational(mpq_class(v)));
    }
    return p;
}

SparsePolynomial permute(const SparsePolynomial& p, const std::vector<std::size_t>& perm) {
    SparsePolynomial out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        ExponentVector f(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) f[perm[i]] = e[i];
        out.add_term(f, c);
    }
    return out;
}

// p(lambda_1 z_1, ..., lambda_n z_n)
SparsePolynomial rescale(const SparsePolynomial& p, const std::vector<GaussianRational>& lambda) {
    SparsePolynomial out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        GaussianRational k = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::uint32_t j = 0; j < e[i]; ++j) k *= lambda[i];
        out.add_term(e, k);
    }
    return out;
}

std::pair<NondegeneracyReport::Verdict, std::vector<int>> sorted_statuses(const NondegeneracyReport& r) {
    std::vector<int> statuses;
    for (const auto& f : r.faces) statuses.push_back(static_cast<int>(f.status));
    std::sort(statuses.begin(), statuses.end());
    return {r.verdict, statuses};
}

}  // namespace

TEST_CASE("non-degeneracy examples") {
    CHECK(check_nondegenerate(parse_sparse("(z1 + z2)^2")).verdict == NondegeneracyReport::Verdict::Degenerate);
    CHECK(check_nondegenerate(parse_sparse("z1^2 + z2^2")).verdict == NondegeneracyReport::Verdict::Nondegenerate);
    CHECK(check_nondegenerate(parse_sparse("z1^3 + z2^3 + z2*z3^2")).verdict ==
          NondegeneracyReport::Verdict::Nondegenerate);
    CHECK(check_nondegenerate(parse_sparse("z1^2*z2^3 + z1^3*z2^2 + 2*z1^2*z2^4")).verdict ==
          NondegeneracyReport::Verdict::Nondegenerate);
    const auto r = check_nondegenerate(parse_sparse("(z1 - z2)^2 + z1^5"));
    CHECK(r.verdict == NondegeneracyReport::Verdict::Degenerate);
    const auto bad = std::find_if(r.faces.begin(), r.faces.end(), [](const FaceNondegeneracy& f) {
        return f.status == FaceNondegeneracy::Status::CriticalPoint;
    });
    REQUIRE(bad != r.faces.end());
    CHECK(bad->face.id() == "[(0,2),(1,1),(2,0)]");
    CHECK_FALSE(bad->evidence.empty());
}

TEST_CASE("vertex faces never carry critical points") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const auto p = random_poly(rng, 2 + trial % 2, 4, 4);
        const auto r = check_nondegenerate(p);
        for (const auto& f : r.faces) {
            if (f.face.dimension == 0) CHECK(f.status == FaceNondegeneracy::Status::NoCriticalPoint);
        }
    }
}

TEST_CASE("face functions satisfy the weighted Euler identity") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + trial % 2;
        const auto p = random_poly(rng, n, 5, 5);
        const auto poly = newton_polyhedron(p);
        for (const auto& face : poly.faces()) {
            const auto pf = face_function(p, face);
            SparsePolynomial lhs(n);
            for (std::size_t i = 0; i < n; ++i) {
                const auto d = partial_derivative(pf, i);
                lhs += SparsePolynomial::variable(n, i) * d * GaussianRational(mpq_class(face.weight[i]));
            }
            CHECK(lhs == pf * GaussianRational(mpq_class(face.value)));
        }
    }
}

TEST_CASE("verdicts are invariant under permutation and torus scaling") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> s(1, 4);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 2 + trial % 2;
        const auto p = random_poly(rng, n, 4, 3);
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<GaussianRational> lambda;
        for (std::size_t i = 0; i < n; ++i) lambda.emplace_back(mpq_class(s(rng), s(rng)));
        const auto base = check_nondegenerate(p);
        CHECK(sorted_statuses(check_nondegenerate(permute(p, perm))) == sorted_statuses(base));
        CHECK(sorted_statuses(check_nondegenerate(rescale(p, lambda) * GaussianRational(3))) == sorted_statuses(base));
        const auto t = tameness_report(p);
        CHECK(tameness_report(permute(p, perm)).verdict == t.verdict);
        CHECK(tameness_report(p * GaussianRational(mpq_class(-2, 7))).verdict == t.verdict);
    }
}

TEST_CASE("essential face tameness: ray face radius") {
    const auto p = parse_sparse("z1^2*z2^3 + z1^3*z2^2 + 2*z1^2*z2^4");
    const auto summary = tameness_report(p);
    CHECK(summary.verdict == TamenessVerdict::Verdict::LocallyTame);
    REQUIRE(summary.r_nc.has_value());
    CHECK(summary.r_nc->kind() == Radius::Kind::ExactRational);
    CHECK(*summary.r_nc == Radius::exact(mpq_class(1, 2)));
    const auto face = std::find_if(summary.faces.begin(), summary.faces.end(),
                                   [](const TamenessVerdict& v) { return v.face.id() == "[(2,3),(2,4)]+R{2}"; });
    REQUIRE(face != summary.faces.end());
    REQUIRE(face->obstruction.generators.size() == 1);
    CHECK(to_string(display_normalized(face->obstruction.generators[0]), face->obstruction.ring) == "1 + 2*u2");
}

TEST_CASE("tameness failure along a cusp") {
    const auto p = parse_sparse("z1^2*z3^2 - z2^3*z3^2 + z3^3");
    const auto summary = tameness_report(p);
    CHECK(summary.verdict == TamenessVerdict::Verdict::NotLocallyTame);
    CHECK_FALSE(summary.r_nc.has_value());
    const auto bad = std::find_if(summary.faces.begin(), summary.faces.end(), [](const TamenessVerdict& v) {
        return v.verdict == TamenessVerdict::Verdict::NotLocallyTame;
    });
    REQUIRE(bad != summary.faces.end());
    CHECK(bad->face.direction == SubspaceIndex(3, 0b011));
    REQUIRE(bad->obstruction.generators.size() == 1);
    CHECK(to_string(display_normalized(bad->obstruction.generators[0]), bad->obstruction.ring) == "u1^2 - u2^3");
}

TEST_CASE("tame with infinite radius") {
    const auto summary = tameness_report(parse_sparse("z1^3 + z2^3 + z2*z3^2"));
    CHECK(summary.verdict == TamenessVerdict::Verdict::LocallyTame);
    REQUIRE(summary.r_nc.has_value());
    CHECK(summary.r_nc->kind() == Radius::Kind::Infinite);
    REQUIRE(summary.subspaces.size() == 1);
    CHECK(summary.subspaces[0].subspace == SubspaceIndex(3, 0b100));
}

TEST_CASE("no vanishing subspace means vacuous tameness") {
    const auto summary = tameness_report(parse_sparse("z1^2 + z2^3"));
    CHECK(summary.verdict == TamenessVerdict::Verdict::LocallyTame);
    CHECK(summary.faces.empty());
    REQUIRE(summary.r_nc.has_value());
    CHECK(summary.r_nc->kind() == Radius::Kind::Infinite);
}

TEST_CASE("local tameness rejects non-essential faces") {
    const auto p = parse_sparse("z1^3 + z2^3 + z2*z3^2");
    const auto poly = newton_polyhedron(p);
    CHECK_THROWS_AS(check_local_tameness(p, poly.faces().front()), std::invalid_argument);
}

TEST_CASE("sampled radius check") {
    // No slice critical point for |u| below the radius; one exactly on it.
    const auto p = parse_sparse("z1^2*z2^3 + z1^3*z2^2 + 2*z1^2*z2^4");
    const auto summary = tameness_report(p);
    for (const auto& v : summary.faces) {
        if (!v.radius || v.radius->kind() != Radius::Kind::ExactRational) continue;
        const mpq_class r = v.radius->lower();
        std::mt19937_64 rng(24);
        std::uniform_int_distribution<long> k(1, 99);
        for (int s = 0; s < 20; ++s) {
            const GaussianRational u(mpq_class(-k(rng), 100) * r);
            std::vector<GaussianRational> pt{GaussianRational(1), u};
            CHECK_FALSE(partial_derivative(v.face_function, 0).evaluate(pt).is_zero());
        }
        std::vector<GaussianRational> on{GaussianRational(1), GaussianRational(-r)};
        CHECK(partial_derivative(v.face_function, 0).evaluate(on).is_zero());
    }
}

TEST_CASE("budget exhaustion yields unknown") {
    Budget tiny;
    tiny.max_reductions = 1;
    const auto r = check_nondegenerate(parse_sparse("(z1 + z2)^2 + z1^3 + z2^5"), tiny);
    CHECK(r.verdict != NondegeneracyReport::Verdict::Nondegenerate);
    const auto t = tameness_report(parse_sparse("z1^2*z3^2 - z2^3*z3^2 + z3^3"), tiny);
    CHECK(t.verdict != TamenessVerdict::Verdict::LocallyTame);
}
