#include "tamegamma/family.hpp"

#include <algorithm>

namespace tamegamma {

namespace {

bool on_face(const ExponentVector& a, const Face& face) { return weighted_degree(a, face.weight) == face.value; }

bool has_constant_term(const SparsePolynomial& g) { return !g.coefficient(ExponentVector(g.nvars(), 0)).is_zero(); }

std::vector<std::size_t> range(std::size_t from, std::size_t to) {
    std::vector<std::size_t> out;
    for (std::size_t k = from; k < to; ++k) out.push_back(k);
    return out;
}

Check combine(Check a, Check b) {
    if (a == Check::Fail || b == Check::Fail) return Check::Fail;
    if (a == Check::Unknown || b == Check::Unknown) return Check::Unknown;
    if (a == Check::Skipped || b == Check::Skipped) return Check::Skipped;
    return Check::Pass;
}

void require_independent(const FamilyPolynomial& f) {
    const auto b = check_boundary_independence(f);
    if (!b.independent) throw PreconditionError("the Newton boundary of the family depends on t");
}

}  // namespace

const char* to_string(Check c) {
    switch (c) {
        case Check::Pass: return "pass";
        case Check::Fail: return "fail";
        case Check::Unknown: return "unknown";
        case Check::Skipped: return "skipped";
    }
    return "";
}

BoundaryIndependence check_boundary_independence(const FamilyPolynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("the family is identically zero");
    BoundaryIndependence out;
    out.generic_vertices = NewtonPolyhedron(f.generic_support()).vertices();
    const auto zero_support = f.support_at_zero();
    if (!zero_support.empty()) out.zero_vertices = NewtonPolyhedron(zero_support).vertices();
    out.independent = out.generic_vertices == out.zero_vertices;
    if (!out.independent) {
        for (const auto& v : out.generic_vertices) {
            if (std::find(out.zero_vertices.begin(), out.zero_vertices.end(), v) == out.zero_vertices.end()) {
                out.counterexample = v;
                break;
            }
        }
        if (!out.counterexample) {
            for (const auto& v : out.zero_vertices) {
                if (std::find(out.generic_vertices.begin(), out.generic_vertices.end(), v) ==
                    out.generic_vertices.end()) {
                    out.counterexample = v;
                    break;
                }
            }
        }
    }
    return out;
}

SparsePolynomial family_face_function(const FamilyPolynomial& f, const Face& face) {
    const std::size_t n = f.nvars();
    SparsePolynomial out(n + 1);
    for (const auto& [alpha, c] : f.terms()) {
        if (!on_face(alpha, face)) continue;
        for (std::size_t k = 0; k < c.coefficients().size(); ++k) {
            if (c.coefficients()[k].is_zero()) continue;
            ExponentVector e(n + 1);
            e[0] = static_cast<std::uint32_t>(k);
            std::copy(alpha.begin(), alpha.end(), e.begin() + 1);
            out.add_term(e, c.coefficients()[k]);
        }
    }
    return out;
}

CoordinateClassification family_classification(const FamilyPolynomial& f) {
    return classify_subspaces(f.nvars(), f.generic_support());
}

FamilyNondegeneracy check_family_nondegeneracy(const FamilyPolynomial& f, const Budget& budget) {
    require_independent(f);
    const std::size_t n = f.nvars();
    const NewtonPolyhedron poly(f.generic_support());
    std::vector<std::string> ring{"t"};
    for (const auto& name : z_names(n)) ring.push_back(name);
    FamilyNondegeneracy out;
    out.verdict = Check::Pass;
    for (const auto& face : compact_faces(poly)) {
        FamilyFaceCheck fc;
        fc.face = face;
        const auto ff = family_face_function(f, face);
        Ideal critical{ring, {}};
        for (std::size_t i = 1; i <= n; ++i) {
            auto d = partial_derivative(ff, i);
            if (!d.is_zero()) critical.generators.push_back(std::move(d));
        }
        try {
            fc.parameter_ideal = saturate_and_eliminate(critical, range(1, n + 1), range(1, n + 1), budget);
            const auto& g = fc.parameter_ideal.generators;
            fc.status = std::any_of(g.begin(), g.end(), has_constant_term) ? Check::Pass : Check::Fail;
        } catch (const ResourceExhausted& e) {
            fc.status = Check::Unknown;
            fc.exhausted = Exhaustion{e.limit(), e.value()};
            fc.parameter_ideal.ring = {"t"};
        }
        out.verdict = combine(out.verdict, fc.status);
        out.faces.push_back(std::move(fc));
    }
    return out;
}

UniformTameness check_uniform_tameness(const FamilyPolynomial& f, const Budget& budget) {
    require_independent(f);
    const std::size_t n = f.nvars();
    const NewtonPolyhedron poly(f.generic_support());
    const auto cls = family_classification(f);
    UniformTameness out;
    out.verdict = Check::Pass;
    for (const auto& face : essential_noncompact_faces(poly, cls)) {
        ParametricCertificate cert;
        cert.face = face;
        const auto ff = family_face_function(f, face);
        std::vector<std::string> ring{"t"};
        for (const auto& name : slice_names(n, face.direction)) ring.push_back(name);
        Ideal critical{ring, {}};
        std::vector<std::size_t> drop;
        for (std::size_t k = 0; k < n; ++k) {
            if (face.direction.contains(k)) continue;
            drop.push_back(k + 1);
            auto d = partial_derivative(ff, k + 1);
            if (!d.is_zero()) critical.generators.push_back(std::move(d));
        }
        try {
            cert.elimination = saturate_and_eliminate(critical, range(1, n + 1), drop, budget);
            const auto& g = cert.elimination.generators;
            const auto w = std::find_if(g.begin(), g.end(), has_constant_term);
            if (w != g.end()) {
                cert.status = Check::Pass;
                cert.witness = *w;
            } else {
                cert.status = Check::Fail;
            }
        } catch (const ResourceExhausted& e) {
            cert.status = Check::Unknown;
            cert.exhausted = Exhaustion{e.limit(), e.value()};
            cert.elimination.ring = {"t"};
            for (std::size_t k : face.direction.members()) cert.elimination.ring.push_back(ring[k + 1]);
        }
        out.verdict = combine(out.verdict, cert.status);
        out.certificates.push_back(std::move(cert));
    }
    return out;
}

AdmissibilityReport check_admissible(const FamilyPolynomial& f, const Budget& budget) {
    AdmissibilityReport out;
    out.boundary = check_boundary_independence(f);
    if (!out.boundary.independent) {
        out.nondegeneracy.verdict = Check::Skipped;
        out.tameness.verdict = Check::Skipped;
        out.admissible = Check::Fail;
        return out;
    }
    out.nondegeneracy = check_family_nondegeneracy(f, budget);
    out.tameness = check_uniform_tameness(f, budget);
    out.admissible = combine(out.nondegeneracy.verdict, out.tameness.verdict);
    return out;
}

}  // namespace tamegamma
