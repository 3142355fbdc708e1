#pragma once

// Exact coefficient arithmetic over the Gaussian rationals Q(i), sparse
// multivariate polynomials, one-parameter families, and the elementary
// transforms used by the analyzer.

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace tamegamma {

using Complex = std::complex<long double>;

/// An element a + b*i of Q(i). Both parts are kept in canonical form by GMP.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long value) : re_(value) {}  // NOLINT(implicit)
    GaussianRational(mpq_class re, mpq_class im = 0);

    static GaussianRational imaginary_unit() { return {0, 1}; }

    const mpq_class& real() const { return re_; }
    const mpq_class& imag() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// |a|^2, always rational.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    /// Throws std::domain_error on zero.
    GaussianRational inverse() const;

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    Complex to_complex() const;

    /// "3", "-1/2", "i", "-2*i", "(1/2+3*i)". Re-parsable by parse_polynomial.
    std::string to_string() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

/// Exponent vector alpha in N^n; its length is the ring's variable count.
using ExponentVector = std::vector<std::uint32_t>;

std::uint64_t total_degree(const ExponentVector& e);
bool divides(const ExponentVector& a, const ExponentVector& b);
ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);

/// Subset I of {0,...,n-1} (0-based coordinate indices).
class SubspaceIndex {
public:
    SubspaceIndex() = default;
    SubspaceIndex(std::size_t n, std::uint32_t mask);
    static SubspaceIndex from_members(std::size_t n, std::span<const std::size_t> members);
    static SubspaceIndex full(std::size_t n);
    static SubspaceIndex empty(std::size_t n) { return {n, 0}; }

    std::size_t ambient() const { return n_; }
    std::uint32_t mask() const { return mask_; }
    bool contains(std::size_t i) const { return (mask_ >> i) & 1U; }
    std::size_t size() const;
    bool is_empty() const { return mask_ == 0; }
    bool is_subset_of(const SubspaceIndex& o) const { return (mask_ & ~o.mask_) == 0; }
    SubspaceIndex complement() const;
    std::vector<std::size_t> members() const;

    /// 1-based label such as "{1,3}".
    std::string to_string() const;

    friend bool operator==(const SubspaceIndex&, const SubspaceIndex&) = default;
    friend auto operator<=>(const SubspaceIndex& a, const SubspaceIndex& b) {
        if (a.size() != b.size()) return a.size() <=> b.size();
        return a.mask_ <=> b.mask_;
    }

private:
    std::size_t n_ = 0;
    std::uint32_t mask_ = 0;
};

/// Sparse polynomial with exact Q(i) coefficients; no zero coefficient is
/// ever stored.
class SparsePolynomial {
public:
    using TermMap = std::map<ExponentVector, GaussianRational>;

    explicit SparsePolynomial(std::size_t nvars = 0) : nvars_(nvars) {}

    static SparsePolynomial constant(std::size_t nvars, const GaussianRational& c);
    static SparsePolynomial monomial(const ExponentVector& e, const GaussianRational& c = 1);
    static SparsePolynomial variable(std::size_t nvars, std::size_t i);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;

    GaussianRational coefficient(const ExponentVector& e) const;
    /// Adds c*z^e, dropping the term if the result cancels.
    void add_term(const ExponentVector& e, const GaussianRational& c);

    std::uint64_t total_degree() const;
    /// Largest exponent of variable i over the support (0 for the zero polynomial).
    std::uint32_t max_exponent(std::size_t i) const;

    SparsePolynomial& operator+=(const SparsePolynomial& o);
    SparsePolynomial& operator-=(const SparsePolynomial& o);
    SparsePolynomial& operator*=(const GaussianRational& c);
    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
    friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
    friend SparsePolynomial operator*(SparsePolynomial a, const GaussianRational& c) { return a *= c; }
    friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
    SparsePolynomial operator-() const { return *this * GaussianRational(-1); }
    SparsePolynomial pow(unsigned k) const;

    GaussianRational evaluate(std::span<const GaussianRational> point) const;
    Complex evaluate(std::span<const Complex> point) const;

    friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

private:
    void check_same_ring(const SparsePolynomial& o) const;

    std::size_t nvars_ = 0;
    TermMap terms_;
};

/// Dense univariate polynomial in the parameter t, coefficients low to high.
class UnivariatePolynomial {
public:
    UnivariatePolynomial() = default;
    explicit UnivariatePolynomial(std::vector<GaussianRational> coeffs);

    const std::vector<GaussianRational>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    GaussianRational coefficient(std::size_t k) const;
    GaussianRational evaluate(const GaussianRational& tau) const;
    Complex evaluate(const Complex& tau) const;

    UnivariatePolynomial& operator+=(const UnivariatePolynomial& o);
    friend UnivariatePolynomial operator+(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a += b; }
    friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b);

    friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

private:
    void trim();
    std::vector<GaussianRational> coeffs_;
};

/// f(t, z) = sum_alpha c_alpha(t) z^alpha; no identically-zero c_alpha stored.
class FamilyPolynomial {
public:
    using TermMap = std::map<ExponentVector, UnivariatePolynomial>;

    explicit FamilyPolynomial(std::size_t n = 0) : n_(n) {}
    /// Reads a polynomial in n+1 variables whose last variable is t.
    static FamilyPolynomial from_joint(const SparsePolynomial& joint);
    /// A t-independent family.
    static FamilyPolynomial constant_family(const SparsePolynomial& p);

    std::size_t nvars() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const ExponentVector& e, const UnivariatePolynomial& c);

    /// The same family as a polynomial in z1..zn, t (t is variable n).
    SparsePolynomial to_joint() const;

    /// {alpha : c_alpha not identically 0}
    std::vector<ExponentVector> generic_support() const;
    /// {alpha : c_alpha(0) != 0}
    std::vector<ExponentVector> support_at_zero() const;

    friend bool operator==(const FamilyPolynomial&, const FamilyPolynomial&) = default;

private:
    std::size_t n_ = 0;
    TermMap terms_;
};

/// Variable names z1..zn (and t when with_t) used for printing and parsing.
std::vector<std::string> z_names(std::size_t n, bool with_t = false);

/// Canonical text form: terms in ascending graded order where later ring
/// variables are more significant, "1" for the empty product.
std::string to_string(const SparsePolynomial& p, std::span<const std::string> names);
std::string to_string(const SparsePolynomial& p);
std::string to_string(const FamilyPolynomial& f);

/// p scaled so that its first printed term has coefficient 1; used to show
/// ideal generators up to a unit.
SparsePolynomial display_normalized(const SparsePolynomial& p);

/// Terms of p ordered as printed.
std::vector<std::pair<ExponentVector, GaussianRational>> print_ordered_terms(const SparsePolynomial& p);

// Elementary operations. Variable indices are 0-based.

SparsePolynomial partial_derivative(const SparsePolynomial& p, std::size_t var);
FamilyPolynomial partial_derivative(const FamilyPolynomial& f, std::size_t var);
/// Sets z_j = 0 for j outside I.
SparsePolynomial restrict_to_subspace(const SparsePolynomial& p, const SubspaceIndex& subspace);
std::int64_t weighted_degree(const ExponentVector& e, std::span<const std::int64_t> weight);
/// min over the support of <alpha, w>; throws on the zero polynomial.
std::int64_t weighted_degree(const SparsePolynomial& p, std::span<const std::int64_t> weight);
/// h(z1^p, ..., zn^p)
SparsePolynomial substitute_power(const SparsePolynomial& p, unsigned power);
FamilyPolynomial substitute_power(const FamilyPolynomial& f, unsigned power);
/// p + sum_i z_i^{N_i}; every N_i must exceed the support's i-th maximum.
SparsePolynomial make_convenient(const SparsePolynomial& p, std::span<const std::uint32_t> exponents);
FamilyPolynomial make_convenient(const FamilyPolynomial& f, std::span<const std::uint32_t> exponents);
SparsePolynomial specialize_family(const FamilyPolynomial& f, const GaussianRational& tau);

/// Largest monomial m in the given variables dividing every term of p.
ExponentVector monomial_content(const SparsePolynomial& p, std::span<const std::size_t> vars);
/// p / z^m, requires z^m to divide every term.
SparsePolynomial divide_by_monomial(const SparsePolynomial& p, const ExponentVector& m);

}  // namespace tamegamma
