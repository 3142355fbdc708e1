#include "tamegamma/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tamegamma {

// ---------------------------------------------------------------------------
// GaussianRational

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(i)");
    const mpq_class n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero in Q(i)");
    if (o.is_real()) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

Complex GaussianRational::to_complex() const {
    return {static_cast<long double>(re_.get_d()), static_cast<long double>(im_.get_d())};
}

std::string GaussianRational::to_string() const {
    if (is_real()) return re_.get_str();
    std::string im;
    if (im_ == 1) {
        im = "i";
    } else if (im_ == -1) {
        im = "-i";
    } else {
        im = im_.get_str() + "*i";
    }
    if (sgn(re_) == 0) return im;
    return "(" + re_.get_str() + (sgn(im_) > 0 ? "+" : "") + im + ")";
}

// ---------------------------------------------------------------------------
// Exponent vectors and subspaces

std::uint64_t total_degree(const ExponentVector& e) {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

bool divides(const ExponentVector& a, const ExponentVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

SubspaceIndex::SubspaceIndex(std::size_t n, std::uint32_t mask) : n_(n), mask_(mask) {
    if (n > 31) throw std::invalid_argument("at most 31 coordinates are supported");
    if (n < 32 && (mask >> n) != 0) throw std::invalid_argument("subspace index outside ambient dimension");
}

SubspaceIndex SubspaceIndex::from_members(std::size_t n, std::span<const std::size_t> members) {
    std::uint32_t mask = 0;
    for (std::size_t i : members) {
        if (i >= n) throw std::out_of_range("subspace member out of range");
        mask |= 1U << i;
    }
    return {n, mask};
}

SubspaceIndex SubspaceIndex::full(std::size_t n) {
    return {n, n == 0 ? 0U : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1)};
}

std::size_t SubspaceIndex::size() const { return static_cast<std::size_t>(__builtin_popcount(mask_)); }

SubspaceIndex SubspaceIndex::complement() const { return {n_, full(n_).mask_ & ~mask_}; }

std::vector<std::size_t> SubspaceIndex::members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n_; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

std::string SubspaceIndex::to_string() const {
    std::string s = "{";
    bool first = true;
    for (std::size_t i : members()) {
        if (!first) s += ",";
        s += std::to_string(i + 1);
        first = false;
    }
    return s + "}";
}

// ---------------------------------------------------------------------------
// SparsePolynomial

SparsePolynomial SparsePolynomial::constant(std::size_t nvars, const GaussianRational& c) {
    SparsePolynomial p(nvars);
    p.add_term(ExponentVector(nvars, 0), c);
    return p;
}

SparsePolynomial SparsePolynomial::monomial(const ExponentVector& e, const GaussianRational& c) {
    SparsePolynomial p(e.size());
    p.add_term(e, c);
    return p;
}

SparsePolynomial SparsePolynomial::variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw std::out_of_range("variable index out of range");
    ExponentVector e(nvars, 0);
    e[i] = 1;
    return monomial(e);
}

bool SparsePolynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && tamegamma::total_degree(terms_.begin()->first) == 0);
}

GaussianRational SparsePolynomial::coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussianRational{} : it->second;
}

void SparsePolynomial::add_term(const ExponentVector& e, const GaussianRational& c) {
    if (e.size() != nvars_) throw std::invalid_argument("exponent vector length does not match ring");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::uint64_t SparsePolynomial::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, tamegamma::total_degree(e));
    return d;
}

std::uint32_t SparsePolynomial::max_exponent(std::size_t i) const {
    std::uint32_t m = 0;
    for (const auto& [e, c] : terms_) m = std::max(m, e.at(i));
    return m;
}

void SparsePolynomial::check_same_ring(const SparsePolynomial& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("polynomials live in different rings");
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& o) {
    check_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& o) {
    check_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

SparsePolynomial& SparsePolynomial::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    a.check_same_ring(b);
    SparsePolynomial r(a.nvars_);
    ExponentVector e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

SparsePolynomial SparsePolynomial::pow(unsigned k) const {
    SparsePolynomial result = constant(nvars_, 1);
    SparsePolynomial base = *this;
    while (k > 0) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

GaussianRational SparsePolynomial::evaluate(std::span<const GaussianRational> point) const {
    if (point.size() != nvars_) throw std::invalid_argument("evaluation point has wrong dimension");
    GaussianRational sum;
    for (const auto& [e, c] : terms_) {
        GaussianRational term = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i];
        sum += term;
    }
    return sum;
}

Complex SparsePolynomial::evaluate(std::span<const Complex> point) const {
    if (point.size() != nvars_) throw std::invalid_argument("evaluation point has wrong dimension");
    Complex sum{0};
    for (const auto& [e, c] : terms_) {
        Complex term = c.to_complex();
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e[i] != 0) term *= std::pow(point[i], static_cast<int>(e[i]));
        sum += term;
    }
    return sum;
}

// ---------------------------------------------------------------------------
// UnivariatePolynomial

UnivariatePolynomial::UnivariatePolynomial(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

void UnivariatePolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GaussianRational UnivariatePolynomial::coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : GaussianRational{};
}

GaussianRational UnivariatePolynomial::evaluate(const GaussianRational& tau) const {
    GaussianRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * tau + *it;
    return acc;
}

Complex UnivariatePolynomial::evaluate(const Complex& tau) const {
    Complex acc{0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * tau + it->to_complex();
    return acc;
}

UnivariatePolynomial& UnivariatePolynomial::operator+=(const UnivariatePolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussianRational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UnivariatePolynomial(std::move(c));
}

// ---------------------------------------------------------------------------
// FamilyPolynomial

void FamilyPolynomial::add_term(const ExponentVector& e, const UnivariatePolynomial& c) {
    if (e.size() != n_) throw std::invalid_argument("exponent vector length does not match ring");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FamilyPolynomial FamilyPolynomial::from_joint(const SparsePolynomial& joint) {
    if (joint.nvars() == 0) throw std::invalid_argument("family ring needs the parameter t");
    const std::size_t n = joint.nvars() - 1;
    FamilyPolynomial f(n);
    for (const auto& [e, c] : joint.terms()) {
        ExponentVector z(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(n));
        std::vector<GaussianRational> coeffs(e[n] + 1);
        coeffs[e[n]] = c;
        f.add_term(z, UnivariatePolynomial(std::move(coeffs)));
    }
    return f;
}

FamilyPolynomial FamilyPolynomial::constant_family(const SparsePolynomial& p) {
    FamilyPolynomial f(p.nvars());
    for (const auto& [e, c] : p.terms()) f.add_term(e, UnivariatePolynomial({c}));
    return f;
}

SparsePolynomial FamilyPolynomial::to_joint() const {
    SparsePolynomial p(n_ + 1);
    for (const auto& [e, c] : terms_) {
        ExponentVector je = e;
        je.push_back(0);
        for (std::size_t k = 0; k < c.coefficients().size(); ++k) {
            je[n_] = static_cast<std::uint32_t>(k);
            p.add_term(je, c.coefficients()[k]);
        }
    }
    return p;
}

std::vector<ExponentVector> FamilyPolynomial::generic_support() const {
    std::vector<ExponentVector> out;
    for (const auto& [e, c] : terms_) out.push_back(e);
    return out;
}

std::vector<ExponentVector> FamilyPolynomial::support_at_zero() const {
    std::vector<ExponentVector> out;
    for (const auto& [e, c] : terms_)
        if (!c.coefficient(0).is_zero()) out.push_back(e);
    return out;
}

// ---------------------------------------------------------------------------
// Printing

std::vector<std::string> z_names(std::size_t n, bool with_t) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("z" + std::to_string(i + 1));
    if (with_t) names.emplace_back("t");
    return names;
}

namespace {

// Ascending total degree; within a degree, graded reverse lexicographic with
// the last ring variable most significant.
bool prints_before(const ExponentVector& a, const ExponentVector& b) {
    const auto da = total_degree(a);
    const auto db = total_degree(b);
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

std::string monomial_string(const ExponentVector& e, std::span<const std::string> names) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[i];
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

bool is_negative_display(const GaussianRational& c) {
    if (c.is_real()) return sgn(c.real()) < 0;
    return sgn(c.real()) == 0 && sgn(c.imag()) < 0;
}

}  // namespace

std::vector<std::pair<ExponentVector, GaussianRational>> print_ordered_terms(const SparsePolynomial& p) {
    std::vector<std::pair<ExponentVector, GaussianRational>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return prints_before(x.first, y.first); });
    return terms;
}

SparsePolynomial display_normalized(const SparsePolynomial& p) {
    if (p.is_zero()) return p;
    return p * print_ordered_terms(p).front().second.inverse();
}

std::string to_string(const SparsePolynomial& p, std::span<const std::string> names) {
    if (names.size() != p.nvars()) throw std::invalid_argument("name list does not match ring");
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : print_ordered_terms(p)) {
        const bool negative = is_negative_display(c);
        const GaussianRational mag = negative ? -c : c;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const std::string mono = monomial_string(e, names);
        if (mono.empty()) {
            out += mag.to_string();
        } else if (mag.is_one()) {
            out += mono;
        } else {
            out += mag.to_string() + "*" + mono;
        }
    }
    return out;
}

std::string to_string(const SparsePolynomial& p) {
    const auto names = z_names(p.nvars());
    return to_string(p, names);
}

std::string to_string(const FamilyPolynomial& f) {
    const auto names = z_names(f.nvars(), true);
    return to_string(f.to_joint(), names);
}

// ---------------------------------------------------------------------------
// Operations

SparsePolynomial partial_derivative(const SparsePolynomial& p, std::size_t var) {
    if (var >= p.nvars()) throw std::out_of_range("partial_derivative: variable index out of range");
    SparsePolynomial d(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (e[var] == 0) continue;
        ExponentVector de = e;
        de[var] -= 1;
        d.add_term(de, c * GaussianRational(static_cast<long>(e[var])));
    }
    return d;
}

FamilyPolynomial partial_derivative(const FamilyPolynomial& f, std::size_t var) {
    if (var >= f.nvars()) throw std::out_of_range("partial_derivative: variable index out of range");
    return FamilyPolynomial::from_joint(partial_derivative(f.to_joint(), var));
}

SparsePolynomial restrict_to_subspace(const SparsePolynomial& p, const SubspaceIndex& subspace) {
    SparsePolynomial r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        bool inside = true;
        for (std::size_t i = 0; i < e.size() && inside; ++i)
            if (e[i] != 0 && !subspace.contains(i)) inside = false;
        if (inside) r.add_term(e, c);
    }
    return r;
}

std::int64_t weighted_degree(const ExponentVector& e, std::span<const std::int64_t> weight) {
    if (weight.size() != e.size()) throw std::invalid_argument("weight length does not match ring");
    std::int64_t d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += static_cast<std::int64_t>(e[i]) * weight[i];
    return d;
}

std::int64_t weighted_degree(const SparsePolynomial& p, std::span<const std::int64_t> weight) {
    if (p.is_zero()) throw std::invalid_argument("weighted_degree of the zero polynomial");
    if (std::all_of(weight.begin(), weight.end(), [](std::int64_t w) { return w == 0; }))
        throw std::invalid_argument("weighted_degree needs a nonzero weight");
    std::int64_t best = 0;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const auto d = weighted_degree(e, weight);
        if (first || d < best) best = d;
        first = false;
    }
    return best;
}

SparsePolynomial substitute_power(const SparsePolynomial& p, unsigned power) {
    if (power == 0) throw std::invalid_argument("substitute_power needs power >= 1");
    SparsePolynomial r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        ExponentVector se = e;
        for (auto& x : se) x *= power;
        r.add_term(se, c);
    }
    return r;
}

FamilyPolynomial substitute_power(const FamilyPolynomial& f, unsigned power) {
    if (power == 0) throw std::invalid_argument("substitute_power needs power >= 1");
    FamilyPolynomial r(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        ExponentVector se = e;
        for (auto& x : se) x *= power;
        r.add_term(se, c);
    }
    return r;
}

namespace {

void check_convenience_exponents(std::size_t n, std::span<const std::uint32_t> exponents,
                                 const std::vector<ExponentVector>& support) {
    if (exponents.size() != n) throw std::invalid_argument("make_convenient needs one exponent per variable");
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t m = 0;
        for (const auto& e : support) m = std::max(m, e[i]);
        if (exponents[i] <= m || exponents[i] == 0)
            throw std::invalid_argument("make_convenient: N_" + std::to_string(i + 1) +
                                        " must exceed the largest exponent " + std::to_string(m) +
                                        " of z" + std::to_string(i + 1));
    }
}

}  // namespace

SparsePolynomial make_convenient(const SparsePolynomial& p, std::span<const std::uint32_t> exponents) {
    std::vector<ExponentVector> support;
    for (const auto& [e, c] : p.terms()) support.push_back(e);
    check_convenience_exponents(p.nvars(), exponents, support);
    SparsePolynomial r = p;
    for (std::size_t i = 0; i < p.nvars(); ++i) {
        ExponentVector e(p.nvars(), 0);
        e[i] = exponents[i];
        r.add_term(e, 1);
    }
    return r;
}

FamilyPolynomial make_convenient(const FamilyPolynomial& f, std::span<const std::uint32_t> exponents) {
    check_convenience_exponents(f.nvars(), exponents, f.generic_support());
    FamilyPolynomial r = f;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
        ExponentVector e(f.nvars(), 0);
        e[i] = exponents[i];
        r.add_term(e, UnivariatePolynomial({GaussianRational(1)}));
    }
    return r;
}

SparsePolynomial specialize_family(const FamilyPolynomial& f, const GaussianRational& tau) {
    SparsePolynomial p(f.nvars());
    for (const auto& [e, c] : f.terms()) p.add_term(e, c.evaluate(tau));
    return p;
}

ExponentVector monomial_content(const SparsePolynomial& p, std::span<const std::size_t> vars) {
    ExponentVector m(p.nvars(), 0);
    if (p.is_zero()) return m;
    for (std::size_t v : vars) {
        std::uint32_t lo = UINT32_MAX;
        for (const auto& [e, c] : p.terms()) lo = std::min(lo, e[v]);
        m[v] = lo;
    }
    return m;
}

SparsePolynomial divide_by_monomial(const SparsePolynomial& p, const ExponentVector& m) {
    SparsePolynomial r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (!divides(m, e)) throw std::invalid_argument("monomial does not divide polynomial");
        ExponentVector q = e;
        for (std::size_t i = 0; i < q.size(); ++i) q[i] -= m[i];
        r.add_term(q, c);
    }
    return r;
}

}  // namespace tamegamma
