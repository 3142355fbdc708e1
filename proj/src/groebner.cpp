#include "tamegamma/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace tamegamma {

// ---------------------------------------------------------------------------
// Orders

int MonomialOrder::compare_part(const ExponentVector& a, const ExponentVector& b, bool front) const {
    const std::size_t n = a.size();
    auto in_part = [&](std::size_t i) { return (((front_ >> i) & 1U) != 0) == front; };
    if (kind_ == Kind::Lex) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!in_part(i) || a[i] == b[i]) continue;
            return a[i] > b[i] ? 1 : -1;
        }
        return 0;
    }
    std::uint64_t da = 0;
    std::uint64_t db = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!in_part(i)) continue;
        da += a[i];
        db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = n; i-- > 0;) {
        if (!in_part(i) || a[i] == b[i]) continue;
        return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

int MonomialOrder::compare(const ExponentVector& a, const ExponentVector& b) const {
    if (front_ != 0) {
        if (int r = compare_part(a, b, true); r != 0) return r;
    }
    return compare_part(a, b, false);
}

std::string MonomialOrder::name() const {
    const std::string inner = kind_ == Kind::Lex ? "lex" : "grevlex";
    if (front_ == 0) return inner;
    return "elimination(" + inner + ")";
}

// ---------------------------------------------------------------------------
// Plumbing

void Ideal::validate() const {
    for (const auto& g : generators)
        if (g.nvars() != ring.size()) throw std::invalid_argument("generator does not live in the declared ring");
}

Budget Budget::from_environment() {
    Budget b;
    if (const char* env = std::getenv("TAMEGAMMA_BUDGET_MS"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const unsigned long long ms = std::strtoull(env, &end, 10);
        if (end == nullptr || *end != '\0') throw std::invalid_argument("TAMEGAMMA_BUDGET_MS must be a non-negative integer");
        b.max_time = std::chrono::milliseconds(ms);
    }
    return b;
}

ResourceExhausted::ResourceExhausted(std::string limit, std::uint64_t value)
    : std::runtime_error("resource exhausted: " + limit + " = " + std::to_string(value)),
      limit_(std::move(limit)),
      value_(value) {}

bool GroebnerBasis::is_unit() const { return elements.size() == 1 && elements.front().is_constant(); }

ExponentVector leading_monomial(const SparsePolynomial& p, const MonomialOrder& order) {
    if (p.is_zero()) throw std::invalid_argument("leading monomial of zero");
    const ExponentVector* best = nullptr;
    for (const auto& [e, c] : p.terms())
        if (best == nullptr || order.less(*best, e)) best = &e;
    return *best;
}

GaussianRational leading_coefficient(const SparsePolynomial& p, const MonomialOrder& order) {
    return p.coefficient(leading_monomial(p, order));
}

namespace {

using Term = std::pair<ExponentVector, GaussianRational>;
/// Terms in decreasing order.
using Poly = std::vector<Term>;

struct Descending {
    const MonomialOrder* order;
    bool operator()(const ExponentVector& a, const ExponentVector& b) const { return order->compare(a, b) > 0; }
};
using WorkMap = std::map<ExponentVector, GaussianRational, Descending>;

Poly to_poly(const SparsePolynomial& p, const MonomialOrder& order) {
    Poly out(p.terms().begin(), p.terms().end());
    std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) { return order.compare(a.first, b.first) > 0; });
    return out;
}

SparsePolynomial to_sparse(const Poly& p, std::size_t nvars) {
    SparsePolynomial out(nvars);
    for (const auto& [e, c] : p) out.add_term(e, c);
    return out;
}

void make_monic(Poly& p) {
    if (p.empty() || p.front().second.is_one()) return;
    const GaussianRational inv = p.front().second.inverse();
    for (auto& t : p) t.second *= inv;
}

std::uint64_t poly_degree(const Poly& p) {
    std::uint64_t d = 0;
    for (const auto& t : p) d = std::max(d, total_degree(t.first));
    return d;
}

class Engine {
public:
    Engine(std::size_t nvars, const MonomialOrder& order, const Budget& budget)
        : nvars_(nvars), order_(order), budget_(budget), start_(std::chrono::steady_clock::now()) {}

    /// Full reduction of p modulo the current basis.
    Poly reduce(const Poly& input) {
        WorkMap work(Descending{&order_});
        for (const auto& t : input) work.emplace(t.first, t.second);
        Poly rem;
        ExponentVector shift(nvars_);
        while (!work.empty()) {
            auto it = work.begin();
            const Poly* divisor = nullptr;
            for (std::size_t k = 0; k < basis_.size(); ++k) {
                if (divides(basis_[k].front().first, it->first)) {
                    divisor = &basis_[k];
                    break;
                }
            }
            if (divisor == nullptr) {
                rem.emplace_back(it->first, it->second);
                work.erase(it);
                continue;
            }
            const GaussianRational c = it->second / divisor->front().second;
            for (std::size_t i = 0; i < nvars_; ++i) shift[i] = it->first[i] - divisor->front().first[i];
            work.erase(it);
            for (std::size_t k = 1; k < divisor->size(); ++k) {
                const auto& [e, gc] = (*divisor)[k];
                ExponentVector key = e;
                for (std::size_t i = 0; i < nvars_; ++i) key[i] += shift[i];
                auto [slot, inserted] = work.try_emplace(std::move(key));
                slot->second -= c * gc;
                if (slot->second.is_zero()) work.erase(slot);
            }
            tick();
        }
        return rem;
    }

    void add_generator(const Poly& g) {
        Poly r = reduce(g);
        if (!r.empty()) insert(std::move(r));
    }

    void run() {
        while (!unit_ && !pending_.empty()) {
            // Normal strategy: smallest lcm in the monomial order, ties by pair index.
            auto best = pending_.begin();
            for (auto it = pending_.begin() + 1; it < pending_.end(); ++it) {
                const int c = order_.compare(it->lcm, best->lcm);
                if (c < 0 || (c == 0 && std::pair(it->i, it->j) < std::pair(best->i, best->j))) best = it;
            }
            const Pair pair = *best;
            pending_.erase(best);
            pending_keys_.erase({pair.i, pair.j});
            if (chain_criterion(pair)) continue;
            Poly r = reduce(s_polynomial(basis_[pair.i], basis_[pair.j]));
            if (!r.empty()) insert(std::move(r));
        }
    }

    std::vector<Poly> reduced_basis() {
        if (unit_) return {Poly{Term{ExponentVector(nvars_, 0), GaussianRational(1)}}};
        std::vector<std::size_t> idx(basis_.size());
        for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return order_.less(basis_[a].front().first, basis_[b].front().first);
        });
        std::vector<Poly> minimal;
        for (std::size_t k : idx) {
            const auto& lm = basis_[k].front().first;
            const bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                               [&](const Poly& m) { return divides(m.front().first, lm); });
            if (!redundant) minimal.push_back(basis_[k]);
        }
        std::vector<Poly> out;
        for (std::size_t k = 0; k < minimal.size(); ++k) {
            std::vector<Poly> others;
            for (std::size_t m = 0; m < minimal.size(); ++m)
                if (m != k) others.push_back(minimal[m]);
            set_basis(std::move(others));
            Poly tail(minimal[k].begin() + 1, minimal[k].end());
            Poly r = reduce(tail);
            Poly g{minimal[k].front()};
            g.insert(g.end(), r.begin(), r.end());
            make_monic(g);
            out.push_back(std::move(g));
        }
        set_basis(out);
        return out;
    }

    std::size_t reductions() const { return reductions_; }
    const std::vector<Poly>& basis() const { return basis_; }
    void set_basis(std::vector<Poly> b) {
        basis_ = std::move(b);
    }

    Poly s_polynomial(const Poly& f, const Poly& g) const {
        const ExponentVector l = lcm(f.front().first, g.front().first);
        WorkMap work(Descending{&order_});
        auto add_shifted = [&](const Poly& p, const GaussianRational& scale) {
            ExponentVector shift(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i) shift[i] = l[i] - p.front().first[i];
            const GaussianRational inv = p.front().second.inverse();
            for (const auto& [e, c] : p) {
                ExponentVector key = e;
                for (std::size_t i = 0; i < nvars_; ++i) key[i] += shift[i];
                auto [slot, inserted] = work.try_emplace(std::move(key));
                slot->second += scale * c * inv;
                if (slot->second.is_zero()) work.erase(slot);
            }
        };
        add_shifted(f, 1);
        add_shifted(g, -1);
        return Poly(work.begin(), work.end());
    }

private:
    struct Pair {
        std::size_t i;
        std::size_t j;
        ExponentVector lcm;
    };

    void tick() {
        ++reductions_;
        if (reductions_ > budget_.max_reductions) throw ResourceExhausted("max_reductions", budget_.max_reductions);
        if (budget_.max_time && (reductions_ & 63U) == 0) {
            const auto elapsed = std::chrono::steady_clock::now() - start_;
            if (elapsed > *budget_.max_time)
                throw ResourceExhausted("max_time_ms", static_cast<std::uint64_t>(budget_.max_time->count()));
        }
    }

    void insert(Poly r) {
        make_monic(r);
        if (total_degree(r.front().first) == 0) {
            unit_ = true;
            return;
        }
        if (const auto d = poly_degree(r); d > budget_.max_degree) throw ResourceExhausted("max_degree", budget_.max_degree);
        const std::size_t j = basis_.size();
        basis_.push_back(std::move(r));
        if (basis_.size() > budget_.max_basis_size) throw ResourceExhausted("max_basis_size", budget_.max_basis_size);
        for (std::size_t i = 0; i < j; ++i) {
            const auto& a = basis_[i].front().first;
            const auto& b = basis_[j].front().first;
            const ExponentVector l = lcm(a, b);
            if (total_degree(l) == total_degree(a) + total_degree(b)) continue;  // coprime
            pending_.push_back(Pair{i, j, l});
            pending_keys_.insert({i, j});
        }
    }

    bool is_pending(std::size_t a, std::size_t b) const {
        return pending_keys_.count({std::min(a, b), std::max(a, b)}) > 0;
    }

    bool chain_criterion(const Pair& p) const {
        const ExponentVector l = lcm(basis_[p.i].front().first, basis_[p.j].front().first);
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            if (k == p.i || k == p.j) continue;
            if (!divides(basis_[k].front().first, l)) continue;
            if (!is_pending(p.i, k) && !is_pending(p.j, k)) return true;
        }
        return false;
    }

    std::size_t nvars_;
    MonomialOrder order_;
    Budget budget_;
    std::chrono::steady_clock::time_point start_;
    std::vector<Poly> basis_;
    std::vector<Pair> pending_;
    std::set<std::pair<std::size_t, std::size_t>> pending_keys_;
    std::size_t reductions_ = 0;
    bool unit_ = false;
};

Ideal extended_with_inverse(const Ideal& ideal, const SparsePolynomial& f) {
    const std::size_t n = ideal.nvars();
    Ideal ext;
    ext.ring = ideal.ring;
    ext.ring.push_back("_y");
    auto lift = [&](const SparsePolynomial& p) {
        SparsePolynomial q(n + 1);
        for (const auto& [e, c] : p.terms()) {
            ExponentVector x = e;
            x.push_back(0);
            q.add_term(x, c);
        }
        return q;
    };
    for (const auto& g : ideal.generators) ext.generators.push_back(lift(g));
    SparsePolynomial rab = SparsePolynomial::constant(n + 1, 1) - lift(f) * SparsePolynomial::variable(n + 1, n);
    ext.generators.push_back(rab);
    return ext;
}

std::uint64_t mask_of(const std::vector<std::size_t>& vars) {
    std::uint64_t m = 0;
    for (std::size_t v : vars) m |= std::uint64_t{1} << v;
    return m;
}

/// Basis elements free of the masked variables, with those variables removed.
Ideal project(const GroebnerBasis& gb, std::uint64_t drop_mask) {
    Ideal out;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < gb.ring.size(); ++i) {
        if (((drop_mask >> i) & 1U) == 0) {
            keep.push_back(i);
            out.ring.push_back(gb.ring[i]);
        }
    }
    for (const auto& g : gb.elements) {
        bool free = true;
        for (const auto& [e, c] : g.terms())
            for (std::size_t i = 0; i < e.size(); ++i)
                if (((drop_mask >> i) & 1U) != 0 && e[i] != 0) free = false;
        if (!free) continue;
        SparsePolynomial q(keep.size());
        for (const auto& [e, c] : g.terms()) {
            ExponentVector x(keep.size());
            for (std::size_t k = 0; k < keep.size(); ++k) x[k] = e[keep[k]];
            q.add_term(x, c);
        }
        out.generators.push_back(std::move(q));
    }
    return out;
}

void check_vars(const Ideal& ideal, const std::vector<std::size_t>& vars) {
    for (std::size_t v : vars)
        if (v >= ideal.nvars()) throw std::invalid_argument("variable index outside the ring");
    if (ideal.nvars() >= 63) throw std::invalid_argument("too many ring variables");
}

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const Budget& budget) {
    ideal.validate();
    const std::size_t n = ideal.nvars();
    Engine engine(n, order, budget);
    for (const auto& g : ideal.generators) {
        if (g.is_zero()) continue;
        engine.add_generator(to_poly(g, order));
        engine.run();
    }
    GroebnerBasis gb;
    gb.ring = ideal.ring;
    gb.order = order;
    for (const auto& p : engine.reduced_basis()) gb.elements.push_back(to_sparse(p, n));
    gb.reductions = engine.reductions();
    return gb;
}

SparsePolynomial normal_form(const SparsePolynomial& p, const GroebnerBasis& g) {
    if (p.nvars() != g.ring.size()) throw std::invalid_argument("polynomial and basis live in different rings");
    Budget unlimited;
    unlimited.max_reductions = static_cast<std::size_t>(-1);
    Engine engine(g.ring.size(), g.order, unlimited);
    std::vector<Poly> basis;
    for (const auto& e : g.elements) basis.push_back(to_poly(e, g.order));
    engine.set_basis(std::move(basis));
    return to_sparse(engine.reduce(to_poly(p, g.order)), p.nvars());
}

bool passes_s_polynomial_check(const GroebnerBasis& g) {
    Budget unlimited;
    unlimited.max_reductions = static_cast<std::size_t>(-1);
    Engine engine(g.ring.size(), g.order, unlimited);
    std::vector<Poly> basis;
    for (const auto& e : g.elements) basis.push_back(to_poly(e, g.order));
    engine.set_basis(basis);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            if (!engine.reduce(engine.s_polynomial(basis[i], basis[j])).empty()) return false;
    return true;
}

Ideal saturate(const Ideal& ideal, const SparsePolynomial& f, const Budget& budget) {
    ideal.validate();
    if (f.is_zero()) throw std::invalid_argument("cannot saturate at the zero polynomial");
    if (f.nvars() != ideal.nvars()) throw std::invalid_argument("saturating polynomial lives in another ring");
    const Ideal ext = extended_with_inverse(ideal, f);
    const std::uint64_t y = std::uint64_t{1} << ideal.nvars();
    return project(buchberger(ext, MonomialOrder::elimination(y, budget.inner_order), budget), y);
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& drop, const Budget& budget) {
    ideal.validate();
    check_vars(ideal, drop);
    const std::uint64_t m = mask_of(drop);
    const MonomialOrder order = MonomialOrder::elimination(m, budget.inner_order);
    return project(buchberger(ideal, order, budget), m);
}

Ideal saturate_and_eliminate(const Ideal& ideal, const std::vector<std::size_t>& saturate_vars,
                             const std::vector<std::size_t>& drop, const Budget& budget) {
    ideal.validate();
    check_vars(ideal, saturate_vars);
    check_vars(ideal, drop);
    if (saturate_vars.empty()) return eliminate(ideal, drop, budget);
    const std::size_t n = ideal.nvars();
    // Monomial factors in the saturated variables can be cancelled up front.
    Ideal stripped{ideal.ring, {}};
    for (const auto& g : ideal.generators) {
        if (g.is_zero()) continue;
        stripped.generators.push_back(divide_by_monomial(g, monomial_content(g, saturate_vars)));
    }
    ExponentVector prod(n, 0);
    for (std::size_t v : saturate_vars) prod[v] = 1;
    const Ideal ext = extended_with_inverse(stripped, SparsePolynomial::monomial(prod));
    const std::uint64_t m = mask_of(drop) | (std::uint64_t{1} << n);
    return project(buchberger(ext, MonomialOrder::elimination(m, budget.inner_order), budget), m);
}

bool torus_has_zero(const Ideal& ideal, const std::vector<std::size_t>& torus_vars, const Budget& budget) {
    ideal.validate();
    check_vars(ideal, torus_vars);
    if (torus_vars.empty()) return !buchberger(ideal, MonomialOrder::grevlex(), budget).is_unit();
    return !contains_unit(saturate_and_eliminate(ideal, torus_vars, {}, budget));
}

bool contains_unit(const Ideal& ideal) {
    return std::any_of(ideal.generators.begin(), ideal.generators.end(),
                       [](const SparsePolynomial& g) { return !g.is_zero() && g.is_constant(); });
}

}  // namespace tamegamma
