#include "tamegamma/strata.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace tamegamma {

namespace {

struct Evaluator {
    /// joint is a polynomial in (z1..zn, t).
    explicit Evaluator(SparsePolynomial p) : n(p.nvars() - 1), joint(std::move(p)) {
        for (std::size_t k = 0; k <= n; ++k) partials.push_back(partial_derivative(joint, k));
    }

    // (t, z) -> (z, t)
    std::vector<Complex> reorder(const ProbePoint& x) const {
        std::vector<Complex> y(x.begin() + 1, x.end());
        y.push_back(x[0]);
        return y;
    }

    Complex value(const ProbePoint& x) const { return joint.evaluate(std::span<const Complex>(reorder(x))); }

    /// d f / d x_c with c indexing (t, z).
    Complex partial(const ProbePoint& x, std::size_t c) const {
        const auto y = reorder(x);
        return partials[c == 0 ? n : c - 1].evaluate(std::span<const Complex>(y));
    }

    std::vector<Complex> gradient(const ProbePoint& x) const {
        std::vector<Complex> g;
        for (std::size_t c = 0; c <= n; ++c) g.push_back(partial(x, c));
        return g;
    }

    /// Sum of the term magnitudes of f at x.
    long double scale(const ProbePoint& x) const {
        const auto y = reorder(x);
        long double s = 0;
        for (const auto& [e, c] : joint.terms()) {
            long double m = std::abs(c.to_complex());
            for (std::size_t i = 0; i < e.size(); ++i) m *= std::pow(std::abs(y[i]), static_cast<long double>(e[i]));
            s += m;
        }
        return s;
    }

    std::size_t n;
    SparsePolynomial joint;
    std::vector<SparsePolynomial> partials;
};

std::optional<long double> ratio_of(const Evaluator& ev, const ProbePoint& gamma, const ProbePoint& gamma_tilde) {
    const auto grad = ev.gradient(gamma);
    Complex inner = 0;
    long double l2 = 0;
    long double g2 = 0;
    for (std::size_t c = 0; c < gamma.size(); ++c) {
        const Complex l = gamma[c] - gamma_tilde[c];
        inner += l * grad[c];
        l2 += std::norm(l);
        g2 += std::norm(grad[c]);
    }
    if (l2 == 0 || g2 == 0) return std::nullopt;
    const long double r = std::abs(inner) / (std::sqrt(l2) * std::sqrt(g2));
    return std::min(r, 1.0L);
}

void require_stable_classification(const FamilyPolynomial& f) {
    if (f.is_zero()) throw PreconditionError("the family is identically zero");
    const auto zero_support = f.support_at_zero();
    if (zero_support.empty()) throw PreconditionError("the member at t = 0 is identically zero");
    const auto generic = classify_subspaces(f.nvars(), f.generic_support());
    const auto at_zero = classify_subspaces(f.nvars(), zero_support);
    if (generic.vanishing != at_zero.vanishing)
        throw PreconditionError("the vanishing coordinate subspaces depend on t");
}

// f on C x C^J with its monomial factor removed; it cuts out the same set
// on C x C*^J and keeps Newton steps away from the coordinate hyperplanes.
SparsePolynomial reduced_restriction(const FamilyPolynomial& f, const SubspaceIndex& J) {
    const std::size_t n = f.nvars();
    auto members = J.members();
    members.push_back(n);
    const auto joint = restrict_to_subspace(f.to_joint(), SubspaceIndex::from_members(n + 1, members));
    std::vector<std::size_t> zs(n);
    for (std::size_t i = 0; i < n; ++i) zs[i] = i;
    return divide_by_monomial(joint, monomial_content(joint, zs));
}

std::string conditions(std::size_t n, const SubspaceIndex& index, const char* equation) {
    std::string s = "t in C";
    for (std::size_t i = 0; i < n; ++i) s += ", z" + std::to_string(i + 1) + (index.contains(i) ? " != 0" : " = 0");
    if (equation != nullptr) s += std::string(", ") + equation;
    return s;
}

const std::vector<Complex>& unit_coefficients() {
    static const std::vector<Complex> units{Complex(1, 0), Complex(-1, 0), Complex(0, 1), Complex(0, -1)};
    return units;
}

}  // namespace

std::string StratumDescriptor::name() const { return std::string(1, kind) + "_" + index.to_string(); }

StratificationReport build_stratification(const FamilyPolynomial& f) {
    require_stable_classification(f);
    const std::size_t n = f.nvars();
    const auto cls = family_classification(f);
    StratificationReport out;
    for (const auto& I : cls.nonvanishing) out.strata.push_back({'A', I, conditions(n, I, "f = 0"), I.size(), false});
    for (const auto& I : cls.nonvanishing)
        out.strata.push_back({'B', I, conditions(n, I, "f != 0"), I.size() + 1, false});
    for (const auto& I : cls.vanishing)
        out.strata.push_back({'C', I, conditions(n, I, nullptr), I.size() + 1, I.is_empty()});
    out.count_a = cls.nonvanishing.size();
    out.count_b = cls.nonvanishing.size();
    out.count_c = cls.vanishing.size();
    return out;
}

StratificationReport build_stratification(const SparsePolynomial& p) {
    return build_stratification(FamilyPolynomial::constant_family(p));
}

std::optional<long double> whitney_ratio(const FamilyPolynomial& f, const ProbePoint& gamma,
                                         const ProbePoint& gamma_tilde) {
    if (gamma.size() != f.nvars() + 1 || gamma_tilde.size() != gamma.size())
        throw std::invalid_argument("probe points must have coordinates (t, z1..zn)");
    return ratio_of(Evaluator(f.to_joint()), gamma, gamma_tilde);
}

ProbeReport probe_whitney(const FamilyPolynomial& f, const ProbeOptions& options) {
    require_stable_classification(f);
    const std::size_t n = f.nvars();
    const auto cls = family_classification(f);
    const auto& units = unit_coefficients();
    std::mt19937_64 rng(options.seed);
    auto draw = [&rng](std::size_t m) { return static_cast<std::size_t>(rng() % m); };

    ProbeReport report;
    report.options = options;
    for (const auto& I : cls.vanishing) {
        for (const auto& J : cls.nonvanishing) {
            if (!I.is_subset_of(J) || I == J) continue;
            const auto members = J.members();
            const Evaluator ev(reduced_restriction(f, J));
            for (int p = 0; p < options.pairs_per_target; ++p) {
                CurvePair pair;
                pair.lower = I;
                pair.upper = J;
                pair.exponents.assign(n + 1, 0);
                pair.coefficients.assign(n + 1, Complex(0));
                pair.exponents[0] = 1 + static_cast<unsigned>(draw(4));
                pair.coefficients[0] = units[draw(units.size())];
                for (std::size_t j : members) {
                    if (I.contains(j)) {
                        pair.coefficients[j + 1] = options.base_modulus * units[draw(units.size())];
                    } else {
                        pair.exponents[j + 1] = 1 + static_cast<unsigned>(draw(4));
                        pair.coefficients[j + 1] = units[draw(units.size())];
                    }
                }
                pair.corrected = members[draw(members.size())] + 1;

                for (int k = 4; k <= options.grid; ++k) {
                    ProbeSample sample;
                    sample.k = k;
                    const long double s = std::ldexp(1.0L, -k);
                    ProbePoint x(n + 1);
                    for (std::size_t c = 0; c <= n; ++c)
                        x[c] = pair.coefficients[c] * std::pow(s, static_cast<long double>(pair.exponents[c]));
                    const std::size_t c = pair.corrected;
                    const Complex start = x[c];
                    bool converged = false;
                    for (int it = 0; it < 200; ++it) {
                        const Complex v = ev.value(x);
                        const long double sc = ev.scale(x);
                        if (sc == 0 || std::abs(v) <= options.residual_tolerance * sc) {
                            converged = true;
                            break;
                        }
                        const Complex d = ev.partial(x, c);
                        if (d == Complex(0)) break;
                        x[c] -= v / d;
                    }
                    const long double sc = ev.scale(x);
                    sample.residual = sc == 0 ? 0 : std::abs(ev.value(x)) / sc;
                    bool valid = converged && x[c] != Complex(0);
                    if (I.contains(c - 1)) {
                        valid = valid && std::abs(x[c] - start) <= std::abs(start) / 2;
                    } else {
                        valid = valid && std::abs(x[c] - start) <= 4 * std::max(std::abs(start), s);
                    }
                    for (std::size_t j : members) valid = valid && x[j + 1] != Complex(0);
                    if (valid) {
                        ProbePoint tilde = x;
                        for (std::size_t j : members)
                            if (!I.contains(j)) tilde[j + 1] = 0;
                        sample.ratio = ratio_of(ev, x, tilde);
                    }
                    pair.samples.push_back(sample);
                }

                std::size_t defined = 0;
                for (const auto& smp : pair.samples) defined += smp.ratio ? 1 : 0;
                if (!pair.samples.empty() && pair.samples.back().ratio && 2 * defined >= pair.samples.size()) {
                    pair.last = *pair.samples.back().ratio;
                    pair.trend = *pair.last < options.tolerance ? CurvePair::Trend::Decaying : CurvePair::Trend::Suspect;
                    long double sx = 0, sy = 0, sxx = 0, sxy = 0, m = 0;
                    for (std::size_t q = pair.samples.size() / 2; q < pair.samples.size(); ++q) {
                        const auto& smp = pair.samples[q];
                        if (!smp.ratio || *smp.ratio <= 0) continue;
                        const long double kx = smp.k;
                        const long double ly = std::log2(*smp.ratio);
                        sx += kx;
                        sy += ly;
                        sxx += kx * kx;
                        sxy += kx * ly;
                        m += 1;
                    }
                    if (m >= 2 && m * sxx - sx * sx != 0) pair.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
                    ++report.defined_pairs;
                }
                report.pairs.push_back(std::move(pair));
            }
        }
    }
    const bool suspect = std::any_of(report.pairs.begin(), report.pairs.end(),
                                     [](const CurvePair& c) { return c.trend == CurvePair::Trend::Suspect; });
    if (report.defined_pairs == 0) {
        report.verdict = "no-pairs";
    } else {
        report.verdict = suspect ? "suspect" : "consistent-with-b";
    }
    return report;
}

const char* to_string(CurvePair::Trend t) {
    switch (t) {
        case CurvePair::Trend::Decaying: return "decaying";
        case CurvePair::Trend::Suspect: return "suspect";
        case CurvePair::Trend::Undefined: return "undefined";
    }
    return "";
}

}  // namespace tamegamma
