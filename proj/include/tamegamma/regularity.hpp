#pragma once

// Exact decisions of Newton non-degeneracy (no critical point of a compact
// face function on the torus) and local tameness along vanishing coordinate
// subspaces, with tameness radii r_I and r_nc.

#include <optional>
#include <string>
#include <vector>

#include "tamegamma/groebner.hpp"
#include "tamegamma/polyhedron.hpp"

namespace tamegamma {

/// The budget that stopped a computation.
struct Exhaustion {
    std::string limit;
    std::uint64_t value = 0;

    friend bool operator==(const Exhaustion&, const Exhaustion&) = default;
};

/// A tameness radius. Intervals are closed and certified; UncertifiedPositive
/// means a positive radius exists but was not bounded.
class Radius {
public:
    enum class Kind { Infinite, ExactRational, CertifiedInterval, UncertifiedPositive };

    static Radius infinite() { return Radius(Kind::Infinite, 0, 0); }
    static Radius exact(const mpq_class& r) { return Radius(Kind::ExactRational, r, r); }
    static Radius interval(const mpq_class& lo, const mpq_class& hi) { return Radius(Kind::CertifiedInterval, lo, hi); }
    static Radius uncertified() { return Radius(Kind::UncertifiedPositive, 0, 0); }

    Kind kind() const { return kind_; }
    const mpq_class& lower() const { return lower_; }
    const mpq_class& upper() const { return upper_; }
    /// "infinite", "1/2", "[0.4142,0.4143]", "positive".
    std::string to_string() const;
    static const char* kind_name(Kind k);

    friend bool operator==(const Radius&, const Radius&) = default;

private:
    Radius(Kind kind, mpq_class lo, mpq_class hi) : kind_(kind), lower_(std::move(lo)), upper_(std::move(hi)) {}
    Kind kind_;
    mpq_class lower_;
    mpq_class upper_;
};

/// inf of two radii; Infinite is the neutral element.
Radius min_radius(const Radius& a, const Radius& b);

/// Smallest modulus of a nonzero root of g (Infinite when there is none).
Radius min_root_radius(const UnivariatePolynomial& g);

struct FaceNondegeneracy {
    enum class Status { NoCriticalPoint, CriticalPoint, Unknown };
    Face face;
    SparsePolynomial face_function;
    Status status = Status::Unknown;
    /// Generators of the torus-saturated critical ideal, kept when a critical
    /// point exists.
    std::vector<SparsePolynomial> evidence;
    std::optional<Exhaustion> exhausted;
};

struct NondegeneracyReport {
    enum class Verdict { Nondegenerate, Degenerate, Unknown };
    Verdict verdict = Verdict::Unknown;
    std::vector<FaceNondegeneracy> faces;
};

NondegeneracyReport check_nondegenerate(const SparsePolynomial& p, const Budget& budget = Budget{});

struct TamenessVerdict {
    enum class Verdict { LocallyTame, NotLocallyTame, Unknown };
    Face face;
    /// Names of the ring variables: u_i for i in I, z_j otherwise.
    std::vector<std::string> names;
    SparsePolynomial face_function;
    Verdict verdict = Verdict::Unknown;
    /// Set only for LocallyTame.
    std::optional<Radius> radius;
    /// Elimination ideal E in the slice variables u_I.
    Ideal obstruction;
    std::optional<Exhaustion> exhausted;
};

/// Ring names for a face with slice directions I.
std::vector<std::string> slice_names(std::size_t n, const SubspaceIndex& slice);

/// Throws std::invalid_argument if the face is not an essential face of p.
TamenessVerdict check_local_tameness(const SparsePolynomial& p, const Face& face, const Budget& budget = Budget{});

struct SubspaceTameness {
    SubspaceIndex subspace;
    TamenessVerdict::Verdict verdict = TamenessVerdict::Verdict::LocallyTame;
    std::optional<Radius> radius;
};

struct TamenessSummary {
    TamenessVerdict::Verdict verdict = TamenessVerdict::Verdict::LocallyTame;
    std::vector<TamenessVerdict> faces;
    /// One entry per vanishing subspace with at least one essential face.
    std::vector<SubspaceTameness> subspaces;
    /// inf over subspaces; set when every face is LocallyTame.
    std::optional<Radius> r_nc;
};

TamenessSummary tameness_report(const SparsePolynomial& p, const Budget& budget = Budget{});

/// Lowercase names used in reports: "nondegenerate", "locally_tame", ...
const char* to_string(NondegeneracyReport::Verdict v);
const char* to_string(FaceNondegeneracy::Status s);
const char* to_string(TamenessVerdict::Verdict v);

}  // namespace tamegamma
