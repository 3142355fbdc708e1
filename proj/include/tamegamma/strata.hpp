#pragma once

// The canonical stratification {A_I, B_I, C_I} of a neighbourhood of the
// t-axis and a floating-point probe of the Whitney (b) ratio along sampled
// arcs. The probe is evidence only; it never certifies regularity.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tamegamma/family.hpp"

namespace tamegamma {

struct StratumDescriptor {
    char kind = 'C';  // 'A', 'B' or 'C'
    SubspaceIndex index;
    /// e.g. "t in C, z1 != 0, z2 != 0, f = 0"
    std::string conditions;
    std::size_t dimension = 0;
    bool t_axis = false;

    /// "A_{1,2}", "C_{}"
    std::string name() const;
};

struct StratificationReport {
    std::vector<StratumDescriptor> strata;
    std::size_t count_a = 0;
    std::size_t count_b = 0;
    std::size_t count_c = 0;
    bool hypersurface_is_union_of_strata = true;
};

/// Throws PreconditionError when the classification depends on t.
StratificationReport build_stratification(const FamilyPolynomial& f);
StratificationReport build_stratification(const SparsePolynomial& p);

/// A point (t, z1..zn).
using ProbePoint = std::vector<Complex>;

/// |<l, grad f>| / (|l| |grad f|) at gamma with l = gamma - gamma_tilde;
/// nullopt when l or the gradient vanishes.
std::optional<long double> whitney_ratio(const FamilyPolynomial& f, const ProbePoint& gamma,
                                         const ProbePoint& gamma_tilde);

struct ProbeOptions {
    std::uint64_t seed = 1;
    /// Grid s = 2^-k for k = 4..grid.
    int grid = 20;
    int pairs_per_target = 32;
    long double tolerance = 1e-3L;
    long double residual_tolerance = 1e-12L;
    /// |q_i| for base points on C_I with I non-empty.
    long double base_modulus = 0.25L;
};

struct ProbeSample {
    int k = 0;
    std::optional<long double> ratio;
    long double residual = 0;
};

/// An arc gamma on A_J approaching a point of C_I, paired with its
/// projection gamma_tilde onto C x C^I.
struct CurvePair {
    SubspaceIndex lower;  // I
    SubspaceIndex upper;  // J
    /// Leading exponents and coefficients of (t, z1..zn); zero exponent
    /// means a constant coordinate.
    std::vector<unsigned> exponents;
    std::vector<Complex> coefficients;
    /// Coordinate moved by the Newton correction (index into (t, z)).
    std::size_t corrected = 0;
    std::vector<ProbeSample> samples;
    enum class Trend { Decaying, Suspect, Undefined };
    Trend trend = Trend::Undefined;
    std::optional<long double> last;
    /// Least-squares slope of log2(ratio) against k over the tail half.
    std::optional<long double> slope;
};

struct ProbeReport {
    ProbeOptions options;
    std::vector<CurvePair> pairs;
    std::size_t defined_pairs = 0;
    /// "consistent-with-b", "suspect" or "no-pairs"
    std::string verdict;
};

/// Throws PreconditionError when the stratification cannot be built.
ProbeReport probe_whitney(const FamilyPolynomial& f, const ProbeOptions& options = ProbeOptions{});

const char* to_string(CurvePair::Trend t);

}  // namespace tamegamma
