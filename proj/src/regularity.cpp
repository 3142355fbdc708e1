#include "tamegamma/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "tamegamma/roots.hpp"

namespace tamegamma {

namespace {

constexpr unsigned kRadiusDigits = 12;

mpq_class exact_value(long double x) {
    int exp = 0;
    const long double mant = std::frexp(x, &exp);
    const auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 62));
    mpq_class q{mpz_class(static_cast<long>(scaled))};
    const int shift = exp - 62;
    if (shift >= 0) {
        q *= mpq_class(mpz_class(1) << shift);
    } else {
        q /= mpq_class(mpz_class(1) << -shift);
    }
    q.canonicalize();
    return q;
}

mpz_class ten_power(unsigned digits) {
    mpz_class p = 1;
    for (unsigned k = 0; k < digits; ++k) p *= 10;
    return p;
}

/// Rounds outward onto the decimal grid 10^-digits.
mpq_class round_down(long double x) {
    const mpz_class scale = ten_power(kRadiusDigits);
    const mpq_class q = exact_value(x) * scale;
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return mpq_class(f, scale);
}

mpq_class round_up(long double x) {
    const mpz_class scale = ten_power(kRadiusDigits);
    const mpq_class q = exact_value(x) * scale;
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return mpq_class(c, scale);
}

std::string decimal(const mpq_class& q) {
    const mpz_class scale = ten_power(kRadiusDigits);
    const mpq_class s = q * scale;
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
    const mpz_class whole = f / scale;
    std::string frac = mpz_class(f % scale).get_str();
    frac.insert(0, kRadiusDigits - frac.size(), '0');
    while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
    return whole.get_str() + "." + frac;
}

std::optional<Exhaustion> exhaustion_of(const ResourceExhausted& e) { return Exhaustion{e.limit(), e.value()}; }

UnivariatePolynomial as_univariate(const SparsePolynomial& g) {
    std::vector<GaussianRational> c(g.total_degree() + 1);
    for (const auto& [e, coef] : g.terms()) c[e[0]] += coef;
    return UnivariatePolynomial(std::move(c));
}

}  // namespace

const char* Radius::kind_name(Kind k) {
    switch (k) {
        case Kind::Infinite: return "infinite";
        case Kind::ExactRational: return "exact";
        case Kind::CertifiedInterval: return "interval";
        case Kind::UncertifiedPositive: return "uncertified_positive";
    }
    return "";
}

std::string Radius::to_string() const {
    switch (kind_) {
        case Kind::Infinite: return "infinite";
        case Kind::ExactRational: return lower_.get_str();
        case Kind::CertifiedInterval: return "[" + decimal(lower_) + "," + decimal(upper_) + "]";
        case Kind::UncertifiedPositive: return "positive";
    }
    return "";
}

Radius min_radius(const Radius& a, const Radius& b) {
    using K = Radius::Kind;
    if (a.kind() == K::Infinite) return b;
    if (b.kind() == K::Infinite) return a;
    if (a.kind() == K::UncertifiedPositive || b.kind() == K::UncertifiedPositive) return Radius::uncertified();
    if (a.kind() == K::ExactRational && b.kind() == K::ExactRational) return Radius::exact(std::min(a.lower(), b.lower()));
    // At least one interval; the minimum lies in [min lower, min upper].
    const mpq_class lo = std::min(a.lower(), b.lower());
    const mpq_class hi = std::min(a.upper(), b.upper());
    if (a.kind() == K::ExactRational && a.lower() <= b.lower()) return a;
    if (b.kind() == K::ExactRational && b.lower() <= a.lower()) return b;
    return Radius::interval(lo, hi);
}

namespace {

// r^(1/k), exact when numerator and denominator are perfect k-th powers.
std::optional<mpq_class> exact_rational_root(const mpq_class& r, unsigned k) {
    mpz_class num, den;
    if (mpz_root(num.get_mpz_t(), r.get_num_mpz_t(), k) == 0) return std::nullopt;
    if (mpz_root(den.get_mpz_t(), r.get_den_mpz_t(), k) == 0) return std::nullopt;
    return mpq_class(num, den);
}

Radius kth_root(const Radius& r, unsigned k) {
    auto root = [k](const mpq_class& x) { return std::pow(static_cast<long double>(x.get_d()), 1.0L / k); };
    switch (r.kind()) {
        case Radius::Kind::ExactRational:
            if (auto e = exact_rational_root(r.lower(), k)) return Radius::exact(*e);
            return Radius::interval(round_down(root(r.lower()) * (1 - 1e-15L)), round_up(root(r.lower()) * (1 + 1e-15L)));
        case Radius::Kind::CertifiedInterval:
            return Radius::interval(round_down(root(r.lower()) * (1 - 1e-15L)), round_up(root(r.upper()) * (1 + 1e-15L)));
        default:
            return r;
    }
}

}  // namespace

Radius min_root_radius(const UnivariatePolynomial& g) {
    if (g.is_zero()) throw std::invalid_argument("min_root_radius of the zero polynomial");
    UnivariatePolynomial h = g;
    while (h.degree() > 0 && h.coefficient(0).is_zero()) h = deflate(h, GaussianRational(0));
    if (h.degree() <= 0) return Radius::infinite();
    // h(u) = q(u^k): the roots of h are the k-th roots of those of q.
    unsigned k = 0;
    for (int e = 1; e <= h.degree(); ++e)
        if (!h.coefficient(static_cast<std::size_t>(e)).is_zero()) k = std::gcd(k, static_cast<unsigned>(e));
    if (k > 1) {
        std::vector<GaussianRational> q;
        for (int e = 0; e <= h.degree(); e += static_cast<int>(k)) q.push_back(h.coefficient(static_cast<std::size_t>(e)));
        return kth_root(min_root_radius(UnivariatePolynomial(q)), k);
    }
    Radius result = Radius::infinite();
    for (const auto& q : gaussian_rational_roots(h)) {
        while (h.degree() > 0 && h.evaluate(q).is_zero()) h = deflate(h, q);
        const mpq_class n = q.norm();
        if (auto r = exact_rational_sqrt(n)) {
            result = min_radius(result, Radius::exact(*r));
        } else {
            const long double s = std::sqrt(static_cast<long double>(n.get_d()));
            result = min_radius(result, Radius::interval(round_down(s * (1 - 1e-15L)), round_up(s * (1 + 1e-15L))));
        }
    }
    if (h.degree() > 0) {
        const auto bounds = min_modulus_bounds(h);
        result = min_radius(result, Radius::interval(round_down(bounds.lower), round_up(bounds.upper)));
    }
    return result;
}

NondegeneracyReport check_nondegenerate(const SparsePolynomial& p, const Budget& budget) {
    const auto poly = newton_polyhedron(p);
    const std::size_t n = p.nvars();
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    NondegeneracyReport report;
    bool degenerate = false;
    bool unknown = false;
    for (const auto& face : compact_faces(poly)) {
        FaceNondegeneracy fn;
        fn.face = face;
        fn.face_function = face_function(p, face);
        Ideal critical{z_names(n), {}};
        for (std::size_t i = 0; i < n; ++i) {
            auto d = partial_derivative(fn.face_function, i);
            if (!d.is_zero()) critical.generators.push_back(std::move(d));
        }
        try {
            const Ideal saturated = saturate_and_eliminate(critical, all, {}, budget);
            if (contains_unit(saturated)) {
                fn.status = FaceNondegeneracy::Status::NoCriticalPoint;
            } else {
                fn.status = FaceNondegeneracy::Status::CriticalPoint;
                fn.evidence = saturated.generators;
                degenerate = true;
            }
        } catch (const ResourceExhausted& e) {
            fn.status = FaceNondegeneracy::Status::Unknown;
            fn.exhausted = exhaustion_of(e);
            unknown = true;
        }
        report.faces.push_back(std::move(fn));
    }
    if (degenerate) {
        report.verdict = NondegeneracyReport::Verdict::Degenerate;
    } else if (unknown) {
        report.verdict = NondegeneracyReport::Verdict::Unknown;
    } else {
        report.verdict = NondegeneracyReport::Verdict::Nondegenerate;
    }
    return report;
}

std::vector<std::string> slice_names(std::size_t n, const SubspaceIndex& slice) {
    std::vector<std::string> names;
    for (std::size_t k = 0; k < n; ++k) names.push_back((slice.contains(k) ? "u" : "z") + std::to_string(k + 1));
    return names;
}

TamenessVerdict check_local_tameness(const SparsePolynomial& p, const Face& face, const Budget& budget) {
    const auto essential = essential_noncompact_faces(p);
    const bool is_essential =
        std::any_of(essential.begin(), essential.end(), [&](const Face& f) { return f.same_face(face); });
    if (!is_essential) throw std::invalid_argument("not an essential non-compact face: " + face.id());
    const std::size_t n = p.nvars();
    const SubspaceIndex slice = face.direction;
    TamenessVerdict v;
    v.face = face;
    v.names = slice_names(n, slice);
    v.face_function = face_function(p, face);
    Ideal critical{v.names, {}};
    std::vector<std::size_t> drop;
    std::vector<std::size_t> all(n);
    for (std::size_t k = 0; k < n; ++k) {
        all[k] = k;
        if (slice.contains(k)) continue;
        drop.push_back(k);
        auto d = partial_derivative(v.face_function, k);
        if (!d.is_zero()) critical.generators.push_back(std::move(d));
    }
    try {
        v.obstruction = saturate_and_eliminate(critical, all, drop, budget);
    } catch (const ResourceExhausted& e) {
        v.verdict = TamenessVerdict::Verdict::Unknown;
        v.exhausted = exhaustion_of(e);
        for (std::size_t k : slice.members()) v.obstruction.ring.push_back(v.names[k]);
        return v;
    }
    const bool separated = std::any_of(v.obstruction.generators.begin(), v.obstruction.generators.end(),
                                       [](const SparsePolynomial& g) {
                                           return !g.coefficient(ExponentVector(g.nvars(), 0)).is_zero();
                                       });
    if (!separated) {
        v.verdict = TamenessVerdict::Verdict::NotLocallyTame;
        return v;
    }
    v.verdict = TamenessVerdict::Verdict::LocallyTame;
    if (contains_unit(v.obstruction)) {
        v.radius = Radius::infinite();
    } else if (slice.size() == 1 && v.obstruction.generators.size() == 1) {
        v.radius = min_root_radius(as_univariate(v.obstruction.generators.front()));
    } else {
        v.radius = Radius::uncertified();
    }
    return v;
}

TamenessSummary tameness_report(const SparsePolynomial& p, const Budget& budget) {
    using V = TamenessVerdict::Verdict;
    TamenessSummary summary;
    const auto cls = classify_subspaces(p);
    const auto essential = essential_noncompact_faces(newton_polyhedron(p), cls);
    for (const auto& face : essential) summary.faces.push_back(check_local_tameness(p, face, budget));

    auto combine = [](V a, V b) {
        if (a == V::NotLocallyTame || b == V::NotLocallyTame) return V::NotLocallyTame;
        if (a == V::Unknown || b == V::Unknown) return V::Unknown;
        return V::LocallyTame;
    };
    for (const auto& subspace : cls.vanishing) {
        SubspaceTameness st;
        st.subspace = subspace;
        st.radius = Radius::infinite();
        bool any = false;
        for (const auto& f : summary.faces) {
            if (f.face.direction != subspace) continue;
            any = true;
            st.verdict = combine(st.verdict, f.verdict);
            if (f.radius) st.radius = min_radius(*st.radius, *f.radius);
        }
        if (!any) continue;
        if (st.verdict != V::LocallyTame) st.radius.reset();
        summary.verdict = combine(summary.verdict, st.verdict);
        summary.subspaces.push_back(std::move(st));
    }
    if (summary.verdict == V::LocallyTame) {
        Radius r = Radius::infinite();
        for (const auto& st : summary.subspaces) r = min_radius(r, *st.radius);
        summary.r_nc = r;
    }
    return summary;
}

const char* to_string(NondegeneracyReport::Verdict v) {
    switch (v) {
        case NondegeneracyReport::Verdict::Nondegenerate: return "nondegenerate";
        case NondegeneracyReport::Verdict::Degenerate: return "degenerate";
        case NondegeneracyReport::Verdict::Unknown: return "unknown";
    }
    return "";
}

const char* to_string(FaceNondegeneracy::Status s) {
    switch (s) {
        case FaceNondegeneracy::Status::NoCriticalPoint: return "no_critical_point";
        case FaceNondegeneracy::Status::CriticalPoint: return "critical_point";
        case FaceNondegeneracy::Status::Unknown: return "unknown";
    }
    return "";
}

const char* to_string(TamenessVerdict::Verdict v) {
    switch (v) {
        case TamenessVerdict::Verdict::LocallyTame: return "locally_tame";
        case TamenessVerdict::Verdict::NotLocallyTame: return "not_locally_tame";
        case TamenessVerdict::Verdict::Unknown: return "unknown";
    }
    return "";
}

}  // namespace tamegamma
