#include "tamegamma/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace tamegamma {

namespace {

Complex horner(const std::vector<Complex>& c, const Complex& z, Complex* derivative) {
    Complex p = c.back();
    Complex dp = 0;
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[k];
    }
    if (derivative != nullptr) *derivative = dp;
    return p;
}

long double log_abs(const mpz_class& z) {
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
    return std::log(std::fabs(static_cast<long double>(mant))) + static_cast<long double>(exp) * std::numbers::ln2_v<long double>;
}

long double log_abs(const mpq_class& q) { return log_abs(q.get_num()) - log_abs(q.get_den()); }

/// log |c| for nonzero c in Q(i).
long double log_modulus(const GaussianRational& c) { return 0.5L * log_abs(c.norm()); }

/// Convergents p/q of x with q <= bound.
std::vector<mpq_class> convergents(long double x, const mpz_class& bound) {
    std::vector<mpq_class> out;
    mpz_class h_prev = 0, h = 1;
    mpz_class k_prev = 1, k = 0;
    long double rest = x;
    for (int step = 0; step < 64; ++step) {
        const long double fl = std::floor(rest);
        if (!std::isfinite(fl) || std::fabs(fl) > 1e18L) break;
        const mpz_class a(static_cast<long>(fl));
        const mpz_class h_next = a * h + h_prev;
        const mpz_class k_next = a * k + k_prev;
        if (k_next > bound) break;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
        out.emplace_back(h, k);
        out.back().canonicalize();
        const long double frac = rest - fl;
        if (frac < 1e-30L) break;
        rest = 1 / frac;
    }
    return out;
}

std::optional<mpq_class> rationalize(long double x, const mpz_class& bound, long double tol) {
    for (const auto& c : convergents(x, bound)) {
        if (std::fabs(static_cast<long double>(c.get_d()) - x) <= tol) return c;
    }
    return std::nullopt;
}

std::vector<Complex> to_complex(const UnivariatePolynomial& g) {
    // Scale by the leading coefficient's magnitude to stay inside long double range.
    const long double shift = log_modulus(g.coefficients().back());
    std::vector<Complex> c;
    for (const auto& x : g.coefficients()) {
        if (x.is_zero()) {
            c.emplace_back(0);
            continue;
        }
        const long double mag = std::exp(log_modulus(x) - shift);
        const Complex dir = x.to_complex();
        const long double dir_abs = std::abs(dir);
        c.push_back(dir_abs > 0 ? dir / dir_abs * mag : Complex(mag));
    }
    return c;
}

}  // namespace

std::vector<Complex> aberth_roots(const std::vector<Complex>& coeffs, int max_iterations) {
    if (coeffs.size() < 2 || coeffs.back() == Complex(0)) throw std::invalid_argument("aberth_roots needs degree >= 1");
    const std::size_t d = coeffs.size() - 1;
    std::vector<Complex> c(coeffs.size());
    for (std::size_t k = 0; k <= d; ++k) c[k] = coeffs[k] / coeffs.back();
    // Initial guesses on a circle of radius given by the root-size geometric mean.
    long double radius = 1;
    if (std::abs(c[0]) > 0) radius = std::pow(std::abs(c[0]), 1.0L / static_cast<long double>(d));
    std::vector<Complex> z(d);
    for (std::size_t k = 0; k < d; ++k) {
        const long double angle = 2 * std::numbers::pi_v<long double> * static_cast<long double>(k) / static_cast<long double>(d) + 0.4L;
        z[k] = std::polar(radius, angle);
    }
    for (int it = 0; it < max_iterations; ++it) {
        long double worst = 0;
        for (std::size_t k = 0; k < d; ++k) {
            Complex dp;
            const Complex p = horner(c, z[k], &dp);
            if (p == Complex(0)) continue;
            const Complex ratio = p / dp;
            Complex sum = 0;
            for (std::size_t j = 0; j < d; ++j)
                if (j != k) sum += Complex(1) / (z[k] - z[j]);
            const Complex w = ratio / (Complex(1) - ratio * sum);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
            z[k] -= w;
            worst = std::max(worst, std::abs(w) / std::max(1.0L, std::abs(z[k])));
        }
        if (worst < 1e-18L) break;
    }
    return z;
}

UnivariatePolynomial deflate(const UnivariatePolynomial& g, const GaussianRational& root) {
    const auto& c = g.coefficients();
    if (c.size() < 2) throw std::invalid_argument("cannot deflate a constant");
    std::vector<GaussianRational> q(c.size() - 1);
    GaussianRational carry = c.back();
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        q[k] = carry;
        carry = c[k] + carry * root;
    }
    if (!carry.is_zero()) throw std::invalid_argument("deflate: not a root");
    return UnivariatePolynomial(std::move(q));
}

std::vector<GaussianRational> gaussian_rational_roots(const UnivariatePolynomial& g) {
    std::vector<GaussianRational> found;
    if (g.degree() <= 0) return found;
    UnivariatePolynomial h = g;
    if (h.coefficient(0).is_zero()) {
        found.emplace_back(0);
        while (h.degree() > 0 && h.coefficient(0).is_zero()) h = deflate(h, GaussianRational(0));
    }
    // Denominators of roots in Q(i) divide the norm of the leading coefficient
    // once the coefficients are Gaussian integers.
    mpz_class den = 1;
    for (const auto& c : h.coefficients()) {
        den = lcm(den, mpz_class(c.real().get_den()));
        den = lcm(den, mpz_class(c.imag().get_den()));
    }
    const GaussianRational lead = h.coefficients().back() * GaussianRational(mpq_class(den));
    mpz_class bound = mpz_class(lead.norm());
    const mpz_class cap("1000000000000000");
    if (bound > cap) bound = cap;

    bool progress = true;
    while (progress && h.degree() > 0) {
        progress = false;
        const auto numeric = aberth_roots(to_complex(h));
        for (const auto& z : numeric) {
            const long double scale = std::max(1.0L, std::abs(z));
            std::vector<GaussianRational> candidates;
            for (long double tol : {1e-15L, 1e-11L, 1e-8L, 1e-5L}) {
                auto re = rationalize(z.real(), bound, tol * scale);
                auto im = rationalize(z.imag(), bound, tol * scale);
                if (re && im) candidates.emplace_back(*re, *im);
            }
            for (const auto& q : candidates) {
                if (!h.evaluate(q).is_zero()) continue;
                found.push_back(q);
                while (h.degree() > 0 && h.evaluate(q).is_zero()) h = deflate(h, q);
                progress = true;
                break;
            }
            if (progress) break;
        }
    }
    std::sort(found.begin(), found.end(), [](const GaussianRational& a, const GaussianRational& b) {
        if (a.norm() != b.norm()) return a.norm() < b.norm();
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

UnivariatePolynomial graeffe_step(const UnivariatePolynomial& g) {
    const auto& c = g.coefficients();
    std::vector<GaussianRational> even, odd;
    for (std::size_t k = 0; k < c.size(); ++k) (k % 2 == 0 ? even : odd).push_back(c[k]);
    const UnivariatePolynomial e(even);
    const UnivariatePolynomial o(odd);
    const UnivariatePolynomial e2 = e * e;
    const UnivariatePolynomial y_o2 = UnivariatePolynomial({GaussianRational(0), GaussianRational(-1)}) * (o * o);
    return e2 + y_o2;
}

ModulusBounds min_modulus_bounds(const UnivariatePolynomial& g, int graeffe_steps) {
    if (g.degree() < 1) throw std::invalid_argument("min_modulus_bounds needs degree >= 1");
    if (g.coefficient(0).is_zero()) throw std::invalid_argument("min_modulus_bounds needs g(0) != 0");
    // Roots of the reversal are the reciprocals; bound its largest root.
    std::vector<GaussianRational> rev(g.coefficients().rbegin(), g.coefficients().rend());
    UnivariatePolynomial r(rev);
    for (int k = 0; k < graeffe_steps; ++k) r = graeffe_step(r);
    const auto& b = r.coefficients();
    const std::size_t d = b.size() - 1;
    const long double log_lead = log_modulus(b[d]);
    long double log_lower = -INFINITY;
    long double log_upper = -INFINITY;
    long double log_binom = 0;  // log C(d, j)
    for (std::size_t j = 1; j <= d; ++j) {
        log_binom += std::log(static_cast<long double>(d - j + 1)) - std::log(static_cast<long double>(j));
        const auto& a = b[d - j];
        if (a.is_zero()) continue;
        const long double la = log_modulus(a) - log_lead;
        const long double jj = static_cast<long double>(j);
        log_lower = std::max(log_lower, (la - log_binom) / jj);
        const long double fujiwara = j == d ? (la - std::numbers::ln2_v<long double>) / jj : la / jj;
        log_upper = std::max(log_upper, fujiwara);
    }
    log_upper += std::numbers::ln2_v<long double>;
    const long double power = std::ldexp(1.0L, graeffe_steps);
    ModulusBounds out;
    out.lower = std::exp(-log_upper / power) * (1 - 1e-15L);
    out.upper = std::exp(-log_lower / power) * (1 + 1e-15L);
    return out;
}

std::optional<mpq_class> exact_rational_sqrt(const mpq_class& q) {
    if (sgn(q) < 0) return std::nullopt;
    const mpz_class num = q.get_num();
    const mpz_class den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpq_class root(sqrt(num), sqrt(den));
    root.canonicalize();
    return root;
}

}  // namespace tamegamma
