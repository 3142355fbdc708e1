#include "tamegamma/polyhedron.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

namespace tamegamma {

namespace {

using RationalMatrix = std::vector<std::vector<mpq_class>>;

// Row-reduces in place and returns the pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && sgn(m[pivot][col]) == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        const mpq_class inv = 1 / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || sgn(m[r][col]) == 0) continue;
            const mpq_class factor = m[r][col];
            for (std::size_t c = 0; c < cols; ++c) m[r][c] -= factor * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank_of(RationalMatrix m, std::size_t cols) { return row_reduce(m, cols).size(); }

// Primitive integer generator of a one-dimensional null space, or nothing.
std::optional<Weight> null_vector(RationalMatrix m, std::size_t n) {
    const auto pivots = row_reduce(m, n);
    if (pivots.size() + 1 != n) return std::nullopt;
    std::size_t free_col = 0;
    for (std::size_t c = 0, p = 0; c < n; ++c) {
        if (p < pivots.size() && pivots[p] == c) {
            ++p;
        } else {
            free_col = c;
            break;
        }
    }
    std::vector<mpq_class> x(n, 0);
    x[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][free_col];
    mpz_class denom_lcm = 1;
    for (const auto& v : x) denom_lcm = lcm(denom_lcm, mpz_class(v.get_den()));
    std::vector<mpz_class> ints(n);
    mpz_class g = 0;
    for (std::size_t i = 0; i < n; ++i) {
        ints[i] = mpz_class(x[i] * denom_lcm);
        g = gcd(g, ints[i]);
    }
    Weight w(n);
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class v = ints[i] / g;
        if (!v.fits_slong_p()) throw std::overflow_error("facet normal does not fit in 64 bits");
        w[i] = v.get_si();
    }
    return w;
}

std::int64_t dot(const ExponentVector& a, const Weight& w) { return weighted_degree(a, w); }

bool dominated(const ExponentVector& a, const ExponentVector& b) {
    // a in b + R_+^n and a != b
    return a != b && divides(b, a);
}

std::size_t face_dimension(const std::vector<ExponentVector>& points, const SubspaceIndex& dirs, std::size_t n) {
    RationalMatrix m;
    for (std::size_t k = 1; k < points.size(); ++k) {
        std::vector<mpq_class> row(n);
        for (std::size_t i = 0; i < n; ++i)
            row[i] = mpq_class(static_cast<long>(points[k][i])) - mpq_class(static_cast<long>(points[0][i]));
        m.push_back(std::move(row));
    }
    for (std::size_t i : dirs.members()) {
        std::vector<mpq_class> row(n, 0);
        row[i] = 1;
        m.push_back(std::move(row));
    }
    return rank_of(std::move(m), n);
}

// Calls fn on every k-subset of {0..size-1}.
template <typename Fn>
void for_each_subset(std::size_t size, std::size_t k, Fn&& fn) {
    if (k > size) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == size - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::string Face::id() const {
    std::string s = "[";
    for (std::size_t k = 0; k < support_points.size(); ++k) {
        if (k > 0) s += ",";
        s += "(";
        for (std::size_t i = 0; i < support_points[k].size(); ++i) {
            if (i > 0) s += ",";
            s += std::to_string(support_points[k][i]);
        }
        s += ")";
    }
    s += "]";
    if (!compact) s += "+R" + direction.to_string();
    return s;
}

NewtonPolyhedron::NewtonPolyhedron(std::vector<ExponentVector> support) : support_(std::move(support)) {
    if (support_.empty()) throw std::invalid_argument("Newton polyhedron of the zero polynomial is undefined");
    n_ = support_.front().size();
    if (n_ == 0) throw std::invalid_argument("Newton polyhedron needs at least one variable");
    for (const auto& e : support_)
        if (e.size() != n_) throw std::invalid_argument("support points of different dimensions");
    std::sort(support_.begin(), support_.end());
    support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
    for (const auto& a : support_) {
        const bool is_dominated =
            std::any_of(support_.begin(), support_.end(), [&](const ExponentVector& b) { return dominated(a, b); });
        if (!is_dominated) minimal_.push_back(a);
    }
    compute_facets();
    compute_faces();
    for (const auto& f : faces_)
        if (f.compact && f.dimension == 0) vertices_.push_back(f.support_points.front());
    std::sort(vertices_.begin(), vertices_.end());
}

void NewtonPolyhedron::compute_facets() {
    std::set<Weight> seen;
    for (std::size_t k = 1; k <= std::min(n_, minimal_.size()); ++k) {
        for_each_subset(minimal_.size(), k, [&](const std::vector<std::size_t>& pts) {
            for_each_subset(n_, n_ - k, [&](const std::vector<std::size_t>& dirs) {
                RationalMatrix m;
                for (std::size_t j = 1; j < pts.size(); ++j) {
                    std::vector<mpq_class> row(n_);
                    for (std::size_t i = 0; i < n_; ++i)
                        row[i] = mpq_class(static_cast<long>(minimal_[pts[j]][i])) -
                                 mpq_class(static_cast<long>(minimal_[pts[0]][i]));
                    m.push_back(std::move(row));
                }
                for (std::size_t d : dirs) {
                    std::vector<mpq_class> row(n_, 0);
                    row[d] = 1;
                    m.push_back(std::move(row));
                }
                auto w = null_vector(std::move(m), n_);
                if (!w) return;
                const bool nonneg = std::all_of(w->begin(), w->end(), [](std::int64_t x) { return x >= 0; });
                const bool nonpos = std::all_of(w->begin(), w->end(), [](std::int64_t x) { return x <= 0; });
                if (!nonneg && !nonpos) return;
                if (!nonneg)
                    for (auto& x : *w) x = -x;
                if (seen.count(*w)) return;
                const std::int64_t value = dot(minimal_[pts[0]], *w);
                for (const auto& a : minimal_)
                    if (dot(a, *w) < value) return;
                seen.insert(*w);
                facets_.push_back(Facet{*w, value});
            });
        });
    }
    std::sort(facets_.begin(), facets_.end(), [](const Facet& a, const Facet& b) { return a.weight < b.weight; });
}

Face NewtonPolyhedron::face_of_weight(const Weight& w) const {
    if (w.size() != n_) throw std::invalid_argument("weight length does not match dimension");
    if (std::any_of(w.begin(), w.end(), [](std::int64_t x) { return x < 0; }))
        throw std::invalid_argument("weights must be non-negative");
    if (std::all_of(w.begin(), w.end(), [](std::int64_t x) { return x == 0; }))
        throw std::invalid_argument("weight must be nonzero");
    Face face;
    face.weight = w;
    face.value = dot(support_.front(), w);
    for (const auto& a : support_) face.value = std::min(face.value, dot(a, w));
    for (const auto& a : support_)
        if (dot(a, w) == face.value) face.support_points.push_back(a);
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < n_; ++i)
        if (w[i] == 0) mask |= 1U << i;
    face.direction = SubspaceIndex(n_, mask);
    face.compact = mask == 0;
    face.dimension = face_dimension(face.support_points, face.direction, n_);
    return face;
}

void NewtonPolyhedron::compute_faces() {
    // Every proper face is an intersection of facets; the sum of the facet
    // normals involved is a defining weight for it.
    using Key = std::pair<std::vector<ExponentVector>, std::uint32_t>;
    std::map<Key, Face> found;
    std::vector<Face> frontier;
    for (const auto& facet : facets_) {
        Face f = face_of_weight(facet.weight);
        Key key{f.support_points, f.direction.mask()};
        if (found.emplace(key, f).second) frontier.push_back(f);
    }
    while (!frontier.empty()) {
        std::vector<Face> next;
        for (const auto& f : frontier) {
            for (const auto& facet : facets_) {
                Weight w = f.weight;
                for (std::size_t i = 0; i < n_; ++i) w[i] += facet.weight[i];
                Face g = face_of_weight(w);
                if (g.value != f.value + facet.value) continue;  // empty intersection
                Key key{g.support_points, g.direction.mask()};
                if (found.emplace(key, g).second) next.push_back(g);
            }
        }
        frontier = std::move(next);
    }
    for (auto& [key, f] : found) faces_.push_back(std::move(f));
    std::stable_sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
        if (a.dimension != b.dimension) return a.dimension < b.dimension;
        if (a.support_points != b.support_points) return a.support_points < b.support_points;
        return a.direction.mask() < b.direction.mask();
    });
}

bool CoordinateClassification::is_vanishing(const SubspaceIndex& s) const {
    return std::find(vanishing.begin(), vanishing.end(), s) != vanishing.end();
}

NewtonPolyhedron newton_polyhedron(const SparsePolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("Newton polyhedron of the zero polynomial is undefined");
    std::vector<ExponentVector> support;
    for (const auto& [e, c] : p.terms()) support.push_back(e);
    return NewtonPolyhedron(std::move(support));
}

Face face_of_weight(const NewtonPolyhedron& poly, const Weight& w) { return poly.face_of_weight(w); }

std::vector<Face> compact_faces(const NewtonPolyhedron& poly) {
    std::vector<Face> out;
    for (const auto& f : poly.faces())
        if (f.compact) out.push_back(f);
    return out;
}

CoordinateClassification classify_subspaces(std::size_t n, const std::vector<ExponentVector>& support) {
    if (n > 20) throw std::invalid_argument("subspace classification is limited to 20 variables");
    CoordinateClassification cls;
    std::vector<std::uint32_t> support_masks;
    for (const auto& e : support) {
        std::uint32_t m = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (e[i] != 0) m |= 1U << i;
        support_masks.push_back(m);
    }
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        const bool nonvanishing = std::any_of(support_masks.begin(), support_masks.end(),
                                              [&](std::uint32_t m) { return (m & ~mask) == 0; });
        (nonvanishing ? cls.nonvanishing : cls.vanishing).emplace_back(n, mask);
    }
    std::sort(cls.vanishing.begin(), cls.vanishing.end());
    std::sort(cls.nonvanishing.begin(), cls.nonvanishing.end());
    return cls;
}

CoordinateClassification classify_subspaces(const SparsePolynomial& p) {
    std::vector<ExponentVector> support;
    for (const auto& [e, c] : p.terms()) support.push_back(e);
    return classify_subspaces(p.nvars(), support);
}

std::vector<Face> essential_noncompact_faces(const NewtonPolyhedron& poly, const CoordinateClassification& cls) {
    std::vector<Face> out;
    for (const auto& f : poly.faces()) {
        if (f.compact || !cls.is_vanishing(f.direction)) continue;
        // Condition (i): the face is cut out by its own weight.
        const Face check = poly.face_of_weight(f.weight);
        if (!check.same_face(f)) throw std::logic_error("essential face not reproduced by its weight: " + f.id());
        // Condition (ii): alpha + e_i stays on the face for i in I.
        for (const auto& a : f.support_points) {
            for (std::size_t i : f.direction.members()) {
                ExponentVector shifted = a;
                shifted[i] += 1;
                if (weighted_degree(shifted, f.weight) != f.value)
                    throw std::logic_error("recession direction leaves the face: " + f.id());
            }
        }
        out.push_back(f);
    }
    return out;
}

std::vector<Face> essential_noncompact_faces(const SparsePolynomial& p) {
    return essential_noncompact_faces(newton_polyhedron(p), classify_subspaces(p));
}

SparsePolynomial face_function(const SparsePolynomial& p, const Face& face) {
    if (p.is_zero() || face.weight.size() != p.nvars())
        throw std::invalid_argument("face does not belong to this polynomial");
    if (weighted_degree(p, face.weight) != face.value)
        throw std::invalid_argument("face does not belong to this polynomial: " + face.id());
    SparsePolynomial r(p.nvars());
    std::vector<ExponentVector> on_face;
    for (const auto& [e, c] : p.terms()) {
        if (weighted_degree(e, face.weight) == face.value) {
            r.add_term(e, c);
            on_face.push_back(e);
        }
    }
    if (on_face != face.support_points) throw std::invalid_argument("face does not belong to this polynomial: " + face.id());
    return r;
}

}  // namespace tamegamma
