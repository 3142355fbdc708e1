#pragma once

// Newton polyhedron Gamma_+ = conv(support) + R_+^n, its face lattice, the
// compact boundary and the essential non-compact faces. Everything here is
// exact; faces are identified by (support points on the face, recession
// directions).

#include <cstdint>
#include <string>
#include <vector>

#include "tamegamma/algebra.hpp"

namespace tamegamma {

using Weight = std::vector<std::int64_t>;

/// Supporting inequality <w, x> >= value of a facet.
struct Facet {
    Weight weight;
    std::int64_t value = 0;

    friend bool operator==(const Facet&, const Facet&) = default;
};

struct Face {
    /// One defining weight; other witnesses may exist.
    Weight weight;
    std::int64_t value = 0;
    /// Support points alpha with <alpha, w> = value, sorted.
    std::vector<ExponentVector> support_points;
    /// I_Delta = {i : w_i = 0}; empty for compact faces.
    SubspaceIndex direction;
    bool compact = true;
    std::size_t dimension = 0;

    /// e.g. "[(0,1,2),(3,0,0)]+R{3}" or "[(2,3),(3,2)]".
    std::string id() const;

    /// Identity by point set and recession directions.
    bool same_face(const Face& o) const {
        return support_points == o.support_points && direction == o.direction;
    }
};

class NewtonPolyhedron {
public:
    /// Throws std::invalid_argument on an empty support.
    explicit NewtonPolyhedron(std::vector<ExponentVector> support);

    std::size_t dimension() const { return n_; }
    const std::vector<ExponentVector>& support() const { return support_; }
    const std::vector<ExponentVector>& vertices() const { return vertices_; }
    const std::vector<Facet>& facets() const { return facets_; }
    /// Every proper face of every dimension, sorted by dimension.
    const std::vector<Face>& faces() const { return faces_; }

    /// Points of the support that lie on the boundary of Gamma_+ for weight w.
    Face face_of_weight(const Weight& w) const;

    /// Same polyhedron (vertex sets agree).
    bool same_polyhedron(const NewtonPolyhedron& o) const { return vertices_ == o.vertices_; }

private:
    void compute_facets();
    void compute_faces();

    std::size_t n_ = 0;
    std::vector<ExponentVector> support_;
    std::vector<ExponentVector> minimal_;  // support points not dominated by another
    std::vector<ExponentVector> vertices_;
    std::vector<Facet> facets_;
    std::vector<Face> faces_;
};

struct CoordinateClassification {
    std::vector<SubspaceIndex> vanishing;
    std::vector<SubspaceIndex> nonvanishing;

    bool is_vanishing(const SubspaceIndex& s) const;
};

/// Throws std::invalid_argument for the zero polynomial.
NewtonPolyhedron newton_polyhedron(const SparsePolynomial& p);

Face face_of_weight(const NewtonPolyhedron& poly, const Weight& w);
std::vector<Face> compact_faces(const NewtonPolyhedron& poly);

CoordinateClassification classify_subspaces(std::size_t n, const std::vector<ExponentVector>& support);
CoordinateClassification classify_subspaces(const SparsePolynomial& p);

/// Essential non-compact faces: I_Delta non-empty and p vanishes on C^I.
/// Both defining conditions are re-checked on the output.
std::vector<Face> essential_noncompact_faces(const NewtonPolyhedron& poly, const CoordinateClassification& cls);
std::vector<Face> essential_noncompact_faces(const SparsePolynomial& p);

/// Sum of the terms of p lying on the face; throws if the face does not
/// belong to newton_polyhedron(p).
SparsePolynomial face_function(const SparsePolynomial& p, const Face& face);

}  // namespace tamegamma
