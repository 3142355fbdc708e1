#pragma once

// Univariate root tools over Q(i): simultaneous Aberth iteration, exact
// recovery of roots lying in Q(i), and certified bounds on the smallest root
// modulus through Graeffe root squaring.

#include <optional>
#include <vector>

#include "tamegamma/algebra.hpp"

namespace tamegamma {

/// All complex roots of the polynomial with the given coefficients (low to
/// high, nonzero leading coefficient), with multiplicity.
std::vector<Complex> aberth_roots(const std::vector<Complex>& coeffs, int max_iterations = 500);

/// The distinct roots of g that lie in Q(i), each verified exactly.
std::vector<GaussianRational> gaussian_rational_roots(const UnivariatePolynomial& g);

/// g / (x - root), requiring root to be a root of g.
UnivariatePolynomial deflate(const UnivariatePolynomial& g, const GaussianRational& root);

/// One Graeffe step: roots of the result are the squares of the roots of g.
UnivariatePolynomial graeffe_step(const UnivariatePolynomial& g);

/// Enclosure [lower, upper] of min |root| for g with g(0) != 0 and degree >= 1.
/// Bounds are computed exactly up to a final conversion with outward margin.
struct ModulusBounds {
    long double lower = 0;
    long double upper = 0;
};
ModulusBounds min_modulus_bounds(const UnivariatePolynomial& g, int graeffe_steps = 6);

/// sqrt(q) when q is the square of a rational.
std::optional<mpq_class> exact_rational_sqrt(const mpq_class& q);

}  // namespace tamegamma
