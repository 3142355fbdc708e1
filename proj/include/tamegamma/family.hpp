#pragma once

// Admissibility of a one-parameter family f_t: a t-independent Newton
// boundary, non-degeneracy for all small t, and a uniform tameness radius.
// "For all small t" is decided by a constant-term test on elimination
// ideals that keep t, so t = 0 itself is covered.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tamegamma/regularity.hpp"

namespace tamegamma {

/// A command was applied to an input that does not satisfy its precondition.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Check { Pass, Fail, Unknown, Skipped };
const char* to_string(Check c);

struct BoundaryIndependence {
    bool independent = false;
    std::vector<ExponentVector> generic_vertices;
    std::vector<ExponentVector> zero_vertices;
    /// A vertex present in only one of the two polyhedra.
    std::optional<ExponentVector> counterexample;
};

/// Throws std::invalid_argument for the zero family.
BoundaryIndependence check_boundary_independence(const FamilyPolynomial& f);

/// Terms of f whose exponent lies on the face, as a polynomial in (t, z1..zn)
/// with t first.
SparsePolynomial family_face_function(const FamilyPolynomial& f, const Face& face);

struct FamilyFaceCheck {
    Face face;
    Check status = Check::Unknown;
    /// E(t): parameter values where the face function has a torus critical point.
    Ideal parameter_ideal;
    std::optional<Exhaustion> exhausted;
};

struct FamilyNondegeneracy {
    Check verdict = Check::Unknown;
    std::vector<FamilyFaceCheck> faces;
};

/// Throws PreconditionError unless the boundary is t-independent.
FamilyNondegeneracy check_family_nondegeneracy(const FamilyPolynomial& f, const Budget& budget = Budget{});

struct ParametricCertificate {
    Face face;
    Check status = Check::Unknown;
    /// E in ring (t, u_I).
    Ideal elimination;
    /// Element of E with nonzero constant term, when passing.
    std::optional<SparsePolynomial> witness;
    std::optional<Exhaustion> exhausted;
};

struct UniformTameness {
    Check verdict = Check::Unknown;
    std::vector<ParametricCertificate> certificates;
};

/// Throws PreconditionError unless the boundary is t-independent.
UniformTameness check_uniform_tameness(const FamilyPolynomial& f, const Budget& budget = Budget{});

struct AdmissibilityReport {
    BoundaryIndependence boundary;
    FamilyNondegeneracy nondegeneracy;
    UniformTameness tameness;
    Check admissible = Check::Unknown;
    /// The smoothness radius along non-vanishing subspaces is known to exist
    /// under the verified conditions but is not computed.
    std::string smoothness_radius = "existence-guaranteed-not-computed";
};

AdmissibilityReport check_admissible(const FamilyPolynomial& f, const Budget& budget = Budget{});

/// Vanishing-subspace classification of the generic member.
CoordinateClassification family_classification(const FamilyPolynomial& f);

}  // namespace tamegamma
