#pragma once

// Exact ideal computations over Q(i): reduced Groebner bases (Buchberger with
// the coprime and chain criteria), normal forms, saturation, elimination and
// consistency on the algebraic torus.

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tamegamma/algebra.hpp"

namespace tamegamma {

/// Variable 0 is the most significant in every kind.
class MonomialOrder {
public:
    enum class Kind { GradedReverseLex, Lex };

    static MonomialOrder grevlex() { return MonomialOrder(Kind::GradedReverseLex, 0); }
    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
    /// Monomials are first compared on the front variables, then on the rest,
    /// each part with `inner`. Any monomial containing a front variable
    /// exceeds every monomial free of them.
    static MonomialOrder elimination(std::uint64_t front_mask, Kind inner = Kind::GradedReverseLex) {
        return MonomialOrder(inner, front_mask);
    }

    Kind kind() const { return kind_; }
    std::uint64_t front_mask() const { return front_; }

    /// -1, 0, 1 as a <, =, > b.
    int compare(const ExponentVector& a, const ExponentVector& b) const;
    bool less(const ExponentVector& a, const ExponentVector& b) const { return compare(a, b) < 0; }

    std::string name() const;

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
    MonomialOrder(Kind kind, std::uint64_t front) : kind_(kind), front_(front) {}
    int compare_part(const ExponentVector& a, const ExponentVector& b, bool front) const;

    Kind kind_;
    std::uint64_t front_;
};

struct Ideal {
    std::vector<std::string> ring;
    std::vector<SparsePolynomial> generators;

    std::size_t nvars() const { return ring.size(); }
    /// Throws std::invalid_argument if a generator lives in another ring.
    void validate() const;
};

struct Budget {
    std::size_t max_reductions = 200000;
    std::uint64_t max_degree = 64;
    std::size_t max_basis_size = 2000;
    /// Wall-clock cap per basis computation; nullopt means none.
    std::optional<std::chrono::milliseconds> max_time;
    /// Order within each block of the elimination orders used by saturate,
    /// eliminate and saturate_and_eliminate.
    MonomialOrder::Kind inner_order = MonomialOrder::Kind::GradedReverseLex;

    /// Defaults, with max_time read from TAMEGAMMA_BUDGET_MS when set.
    static Budget from_environment();
};

/// Thrown when a basis computation hits one of its budgets. Carries which
/// limit was hit so reports can state it.
class ResourceExhausted : public std::runtime_error {
public:
    ResourceExhausted(std::string limit, std::uint64_t value);
    const std::string& limit() const { return limit_; }
    std::uint64_t value() const { return value_; }

private:
    std::string limit_;
    std::uint64_t value_;
};

struct GroebnerBasis {
    std::vector<std::string> ring;
    MonomialOrder order = MonomialOrder::grevlex();
    /// Reduced and monic, sorted by increasing leading monomial.
    std::vector<SparsePolynomial> elements;
    std::size_t reductions = 0;

    bool is_unit() const;
};

/// Leading monomial and coefficient under `order`; p must be nonzero.
ExponentVector leading_monomial(const SparsePolynomial& p, const MonomialOrder& order);
GaussianRational leading_coefficient(const SparsePolynomial& p, const MonomialOrder& order);

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const Budget& budget = Budget{});

/// Full remainder of p on division by G.
SparsePolynomial normal_form(const SparsePolynomial& p, const GroebnerBasis& g);

/// True when every S-polynomial of G reduces to zero modulo G.
bool passes_s_polynomial_check(const GroebnerBasis& g);

Ideal saturate(const Ideal& ideal, const SparsePolynomial& f, const Budget& budget = Budget{});

/// I intersected with the subring in the remaining variables; the result's
/// ring lists the kept variables in their original order.
Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& drop, const Budget& budget = Budget{});

/// (I : (prod of saturate_vars)^inf) intersected with the subring without
/// `drop`, computed with a single basis.
Ideal saturate_and_eliminate(const Ideal& ideal, const std::vector<std::size_t>& saturate_vars,
                             const std::vector<std::size_t>& drop, const Budget& budget = Budget{});

/// Does V(I) meet {x_i != 0 for i in torus_vars}?
bool torus_has_zero(const Ideal& ideal, const std::vector<std::size_t>& torus_vars, const Budget& budget = Budget{});

/// True when the ideal contains a nonzero constant (generators assumed to be a
/// Groebner basis or an elimination output from this module).
bool contains_unit(const Ideal& ideal);

}  // namespace tamegamma
