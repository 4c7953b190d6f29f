#include "sheafres/ideal.hpp"
#include "sheafres/linalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace sheafres {

namespace {

FreeMod rank_one(const RingPtr& ring) {
    return FreeMod{ring, {Multideg(ring->gdim(), 0)}};
}

std::vector<MVec> as_cols(const std::vector<Poly>& ps) {
    std::vector<MVec> cols;
    cols.reserve(ps.size());
    for (const auto& p : ps) cols.push_back(MVec{p});
    return cols;
}

std::vector<Poly> as_polys(const RingPtr& ring, const std::vector<MVec>& cols) {
    std::vector<Poly> ps;
    for (const auto& c : cols)
        if (!c[0].is_zero()) ps.push_back(c[0]);
    if (ps.empty()) ps.push_back(Poly::zero(ring));
    return ps;
}

} // namespace

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens) : ring_(std::move(ring)) {
    for (auto& g : gens) {
        if (g.ring() == nullptr) continue;
        if (!g.ring()->same_as(*ring_))
            throw std::invalid_argument("Ideal: generator from a different ring");
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
}

const ModGB& Ideal::groebner() const {
    if (!gb_) {
        auto gb = std::make_shared<ModGB>(
            ModGB::compute(rank_one(ring_), as_cols(gens_)));
        gb_ = std::move(gb);
    }
    return *gb_;
}

std::vector<Poly> Ideal::basis() const {
    std::vector<Poly> out;
    for (const auto& v : groebner().basis()) out.push_back(v[0]);
    return out;
}

Poly Ideal::normal_form(const Poly& f) const {
    if (!f.ring()->same_as(*ring_))
        throw std::invalid_argument("normal_form: ring mismatch");
    return groebner().normal_form(MVec{f})[0];
}

bool Ideal::contains_ideal(const Ideal& other) const {
    for (const auto& g : other.gens_)
        if (!contains(g)) return false;
    return true;
}

bool Ideal::is_unit() const {
    for (const auto& v : groebner().basis()) {
        const Poly& p = v[0];
        if (!p.is_zero() && exps_is_one(p.lead_exps())) return true;
    }
    return false;
}

bool Ideal::is_zero() const {
    Ideal zero(ring_, {});
    return groebner() == zero.groebner();
}

bool operator==(const Ideal& a, const Ideal& b) {
    if (!a.ring_->same_as(*b.ring_)) return false;
    return a.groebner() == b.groebner();
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    std::vector<Poly> gens = a.gens();
    for (const auto& g : b.gens()) gens.push_back(g);
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    std::vector<Poly> gens;
    for (const auto& f : a.gens())
        for (const auto& g : b.gens()) gens.push_back(f * g);
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
    auto fm = rank_one(a.ring());
    auto cols = submodule_intersect(fm, as_cols(a.gens()), as_cols(b.gens()));
    return Ideal(a.ring(), as_polys(a.ring(), cols));
}

Ideal ideal_colon(const Ideal& a, const Ideal& b) {
    if (b.gens().empty()) throw std::invalid_argument("ideal_colon: empty divisor");
    auto fm = rank_one(a.ring());
    auto cols = submodule_colon(fm, as_cols(a.gens()), b.gens());
    return Ideal(a.ring(), as_polys(a.ring(), cols));
}

SaturationResult ideal_saturate(const Ideal& a, const Ideal& b) {
    if (b.gens().empty()) throw std::invalid_argument("ideal_saturate: empty divisor");
    auto fm = rank_one(a.ring());
    auto [cols, steps] = submodule_saturate(fm, as_cols(a.gens()), b.gens());
    return {Ideal(a.ring(), as_polys(a.ring(), cols)), steps};
}

bool is_nonzerodivisor(const Poly& a, const RingPtr& ring) {
    Ideal zero(ring, {});
    if (zero.contains(a))
        throw std::invalid_argument("is_nonzerodivisor: zero element rejected");
    Ideal ann = ideal_colon(zero, Ideal(ring, {a}));
    return ann.is_zero();
}

namespace {

bool uses_vars(const Poly& p, const std::vector<bool>& mask) {
    for (const auto& t : p.terms())
        for (std::size_t i = 0; i < t.exps.size(); ++i)
            if (t.exps[i] > 0 && mask[i]) return true;
    return false;
}

} // namespace

Ideal eliminate_in_ring(const Ideal& I, const std::vector<int>& drop_vars) {
    const RingPtr& R = I.ring();
    std::vector<bool> mask(R->nvars(), false);
    for (int v : drop_vars) {
        if (v < 0 || v >= (int)R->nvars())
            throw std::invalid_argument("eliminate: bad variable index");
        mask[v] = true;
    }
    for (const auto& q : R->quotient_terms())
        for (const auto& t : q)
            for (std::size_t i = 0; i < t.exps.size(); ++i)
                if (t.exps[i] > 0 && mask[i])
                    throw std::invalid_argument(
                        "eliminate: quotient generators involve dropped variables");
    if (drop_vars.empty()) return I;

    MonomialOrder ord;
    ord.kind = MonomialOrder::Kind::Block;
    ord.block_of.assign(R->nvars(), 1);
    for (int v : drop_vars) ord.block_of[v] = 0;
    std::vector<Multideg> degs;
    for (std::size_t i = 0; i < R->nvars(); ++i) degs.push_back(R->degree_of_var(i));
    RingPtr E = Ring::make(R->vars(), degs, ord, R->quotient_terms(), R->proj_blocks());

    std::vector<Poly> egens;
    for (const auto& g : I.gens()) egens.push_back(g.with_ring(E));
    Ideal IE(E, std::move(egens));

    std::vector<Poly> kept;
    for (const auto& v : IE.groebner().basis()) {
        const Poly& p = v[0];
        if (p.is_zero() || uses_vars(p, mask)) continue;
        kept.push_back(p.with_ring(R));
    }
    return Ideal(R, std::move(kept));
}

Elimination eliminate(const Ideal& I, const std::vector<int>& drop_vars) {
    const RingPtr& R = I.ring();
    Ideal in_ring = eliminate_in_ring(I, drop_vars);

    std::vector<bool> mask(R->nvars(), false);
    for (int v : drop_vars) mask[v] = true;
    std::vector<int> kept;
    std::vector<std::string> names;
    std::vector<Multideg> degs;
    for (std::size_t i = 0; i < R->nvars(); ++i) {
        if (mask[i]) continue;
        kept.push_back((int)i);
        names.push_back(R->vars()[i]);
        degs.push_back(R->degree_of_var(i));
    }
    auto restrict_exps = [&](const Exps& e) {
        Exps r;
        r.reserve(kept.size());
        for (int idx : kept) r.push_back(e[idx]);
        return r;
    };
    std::vector<TermList> quot;
    for (const auto& q : R->quotient_terms()) {
        TermList ts;
        for (const auto& t : q) ts.push_back({restrict_exps(t.exps), t.coeff});
        quot.push_back(std::move(ts));
    }
    std::vector<std::vector<int>> blocks;
    for (const auto& blk : R->proj_blocks()) {
        std::vector<int> nb;
        for (int v : blk) {
            auto it = std::find(kept.begin(), kept.end(), v);
            if (it != kept.end()) nb.push_back((int)(it - kept.begin()));
        }
        if (!nb.empty()) blocks.push_back(std::move(nb));
    }
    RingPtr S = Ring::make(names, degs, MonomialOrder{}, quot, blocks);

    std::vector<Poly> sgens;
    for (const auto& g : in_ring.gens()) {
        TermList ts;
        for (const auto& t : g.terms()) ts.push_back({restrict_exps(t.exps), t.coeff});
        sgens.push_back(Poly(S, std::move(ts)));
    }
    return Elimination{Ideal(S, std::move(sgens)), S, kept};
}

int lt_dimension(const Ideal& I) {
    std::vector<Exps> leads;
    for (const auto& v : I.groebner().basis())
        if (!v[0].is_zero()) leads.push_back(v[0].lead_exps());
    std::size_t n = I.ring()->nvars();
    if (n > 20) throw std::invalid_argument("lt_dimension: too many variables");
    int best = -1;
    // 1 is in LT(I): the variety is empty
    for (const auto& l : leads)
        if (exps_is_one(l)) return -1;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        bool independent = true;
        for (const auto& l : leads) {
            bool inside = true;
            for (std::size_t i = 0; i < n; ++i)
                if (l[i] > 0 && !((s >> i) & 1u)) { inside = false; break; }
            if (inside) { independent = false; break; }
        }
        if (independent) best = std::max(best, (int)__builtin_popcount(s));
    }
    return best;
}

int support_codim(const Ideal& I) {
    Ideal Q(I.ring(), {});
    return lt_dimension(Q) - lt_dimension(I);
}

std::optional<std::vector<Exps>> quotient_monomial_basis(const Ideal& I) {
    std::vector<Exps> leads;
    for (const auto& v : I.groebner().basis())
        if (!v[0].is_zero()) leads.push_back(v[0].lead_exps());
    std::size_t n = I.ring()->nvars();
    std::vector<int> bound(n, -1);
    for (const auto& l : leads) {
        int var = -1;
        bool pure = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (l[i] == 0) continue;
            if (var >= 0) { pure = false; break; }
            var = (int)i;
        }
        if (pure && var >= 0)
            bound[var] = bound[var] < 0 ? l[var] : std::min(bound[var], (int)l[var]);
        if (pure && var < 0) return std::vector<Exps>{}; // 1 in the ideal
    }
    for (std::size_t i = 0; i < n; ++i)
        if (bound[i] < 0) return std::nullopt; // not zero-dimensional

    std::vector<Exps> basis;
    Exps cur(n, 0);
    auto divisible = [&](const Exps& e) {
        for (const auto& l : leads)
            if (exps_divides(l, e)) return true;
        return false;
    };
    // enumerate the box below the pure-power bounds
    std::size_t i = 0;
    for (;;) {
        if (!divisible(cur)) basis.push_back(cur);
        for (i = 0;; ++i) {
            if (i == n) return basis;
            if (++cur[i] < bound[i]) break;
            cur[i] = 0;
        }
    }
}

QVector coords_in_basis(const Ideal& I, const std::vector<Exps>& basis, const Poly& f) {
    Poly nf = I.normal_form(f);
    std::map<Exps, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    QVector v(basis.size(), Scalar(0));
    for (const auto& t : nf.terms()) {
        auto it = index.find(t.exps);
        if (it == index.end())
            throw std::logic_error("coords_in_basis: normal form outside basis");
        v[it->second] = t.coeff;
    }
    return v;
}

QVector minimal_polynomial(const Ideal& I, const Poly& f) {
    auto basis = quotient_monomial_basis(I);
    if (!basis) throw std::invalid_argument("minimal_polynomial: quotient not finite");
    std::size_t dim = basis->size();
    if (dim == 0) return {Scalar(1)}; // unit ideal: minimal polynomial 1
    std::vector<QVector> powers;
    Poly cur = Poly::constant(I.ring(), Scalar(1));
    for (std::size_t d = 0; d <= dim; ++d) {
        powers.push_back(coords_in_basis(I, *basis, cur));
        // try to express the latest power by the previous ones
        QMatrix m(dim, QVector(powers.size() - 1, Scalar(0)));
        for (std::size_t j = 0; j + 1 < powers.size(); ++j)
            for (std::size_t i = 0; i < dim; ++i) m[i][j] = powers[j][i];
        if (powers.size() > 1) {
            QVector rhs(dim, Scalar(0));
            for (std::size_t i = 0; i < dim; ++i) rhs[i] = powers.back()[i];
            auto sol = solve(m, rhs);
            if (sol) {
                QVector c;
                for (const auto& s : *sol) c.push_back(-s);
                c.push_back(Scalar(1));
                return c;
            }
        }
        cur = cur * f;
    }
    throw std::logic_error("minimal_polynomial: no relation found");
}

QVector squarefree_part(const QVector& monic) {
    auto degree = [](const QVector& p) {
        int d = -1;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (!p[i].is_zero()) d = (int)i;
        return d;
    };
    auto normalize = [&](QVector p) {
        int d = degree(p);
        if (d < 0) return p;
        p.resize(d + 1);
        Scalar inv = p[d].inv();
        for (auto& c : p) c *= inv;
        return p;
    };
    auto rem = [&](QVector a, const QVector& b) {
        int db = degree(b);
        for (int da = degree(a); da >= db && da >= 0; da = degree(a)) {
            Scalar f = a[da] / b[db];
            for (int i = 0; i <= db; ++i) a[da - db + i] -= f * b[i];
        }
        return a;
    };
    std::function<QVector(QVector, QVector)> gcd = [&](QVector a, QVector b) -> QVector {
        a = normalize(std::move(a));
        b = normalize(std::move(b));
        while (degree(b) >= 0) {
            QVector r = normalize(rem(a, b));
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    };
    auto quo = [&](QVector a, const QVector& b) {
        int db = degree(b), da = degree(a);
        QVector q(std::max(da - db + 1, 1), Scalar(0));
        for (int d = degree(a); d >= db && d >= 0; d = degree(a)) {
            Scalar f = a[d] / b[db];
            q[d - db] = f;
            for (int i = 0; i <= db; ++i) a[d - db + i] -= f * b[i];
        }
        return q;
    };

    QVector p = normalize(monic);
    if (degree(p) <= 0) return p;
    QVector dp(p.size() - 1, Scalar(0));
    for (std::size_t i = 1; i < p.size(); ++i) dp[i - 1] = p[i] * Scalar((long)i);
    QVector g = gcd(p, dp);
    if (degree(g) <= 0) return p;
    return normalize(quo(std::move(p), g));
}

Ideal radical_zero_dimensional(const Ideal& I) {
    std::vector<Poly> gens = I.gens();
    for (std::size_t v = 0; v < I.ring()->nvars(); ++v) {
        QVector mp = minimal_polynomial(I, Poly::variable(I.ring(), (int)v));
        QVector sf = squarefree_part(mp);
        TermList ts;
        for (std::size_t i = 0; i < sf.size(); ++i) {
            if (sf[i].is_zero()) continue;
            Exps e(I.ring()->nvars(), 0);
            e[v] = (int)i;
            ts.push_back({std::move(e), sf[i]});
        }
        gens.push_back(Poly(I.ring(), std::move(ts)));
    }
    return Ideal(I.ring(), std::move(gens));
}

int geometric_point_count(const Ideal& I) {
    Ideal rad = radical_zero_dimensional(I);
    auto basis = quotient_monomial_basis(rad);
    if (!basis) throw std::invalid_argument("geometric_point_count: not zero-dimensional");
    return (int)basis->size();
}

} // namespace sheafres
