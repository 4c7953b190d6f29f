#include "sheafres/module.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sheafres {

MVec mvec_zero(const FreeMod& fm) {
    return MVec(fm.rank(), Poly::zero(fm.ring));
}

bool mvec_is_zero(const MVec& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

MVec mvec_add(const MVec& a, const MVec& b) {
    MVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

MVec mvec_sub(const MVec& a, const MVec& b) {
    MVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

MVec mvec_scaled(const MVec& a, const Scalar& c) {
    MVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i].scaled(c);
    return r;
}

MVec mvec_times_monomial(const MVec& a, const Exps& e, const Scalar& c) {
    MVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i].times_monomial(e, c);
    return r;
}

MVec mvec_times_poly(const MVec& a, const Poly& p) {
    MVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * p;
    return r;
}

bool mvec_eq(const MVec& a, const MVec& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

bool mvec_homogeneous(const FreeMod& fm, const MVec& v, Multideg* deg) {
    bool found = false;
    Multideg d;
    for (std::size_t c = 0; c < v.size(); ++c) {
        for (const auto& t : v[c].terms()) {
            Multideg td = fm.ring->exps_degree(t.exps);
            for (int r = 0; r < fm.ring->gdim(); ++r) td[r] += fm.twists[c][r];
            if (!found) { d = td; found = true; }
            else if (td != d) return false;
        }
    }
    if (found && deg) *deg = d;
    return true;
}

Multideg mvec_degree(const FreeMod& fm, const MVec& v) {
    Multideg d;
    if (!mvec_homogeneous(fm, v, &d))
        throw std::logic_error("mvec_degree: vector not homogeneous");
    if (mvec_is_zero(v)) throw std::logic_error("mvec_degree: zero vector");
    return d;
}

long mvec_total_degree(const MVec& v) {
    long d = -1;
    for (const auto& p : v) d = std::max(d, p.total_degree());
    return d;
}

Multideg column_degree(const FreeMod& fm, const MVec& col) {
    return mvec_degree(fm, col);
}

namespace {

// >0 iff term (ca, ea) > (cb, eb) in the module order.
int term_cmp(const Ring& ring, const ModOrder& ord, int ca, const Exps& ea, int cb,
             const Exps& eb) {
    if (ord.elim_split > 0) {
        bool ba = ca < ord.elim_split, bb = cb < ord.elim_split;
        if (ba != bb) return ba ? 1 : -1;
    }
    int c = ring.mono_cmp(ea, eb);
    if (c != 0) return c;
    if (ca != cb) return ca < cb ? 1 : -1; // lower component wins ties
    return 0;
}

} // namespace

ModLead mod_lead(const Ring& ring, const MVec& v, const ModOrder& ord) {
    ModLead best;
    for (std::size_t c = 0; c < v.size(); ++c) {
        if (v[c].is_zero()) continue;
        // terms are sorted within each component, so the first term suffices
        const Term& t = v[c].lead();
        if (best.comp < 0 ||
            term_cmp(ring, ord, (int)c, t.exps, best.comp, best.exps) > 0) {
            best.comp = (int)c;
            best.exps = t.exps;
            best.coeff = t.coeff;
        }
    }
    return best;
}

namespace {

struct Reducer {
    const Ring& ring;
    const ModOrder& ord;
    const std::vector<MVec>& basis;
    const std::vector<ModLead>& leads;

    // Full normal form: no term of the result is divisible by a basis lead.
    MVec reduce(MVec v) const {
        MVec out(v.size(), Poly::zero(basis.empty() ? v[0].ring() : basis[0][0].ring()));
        // worklist reduction: repeatedly pick the current lead of v, try to cancel it
        for (;;) {
            ModLead lv = mod_lead(ring, v, ord);
            if (lv.comp < 0) break;
            bool reduced = false;
            for (std::size_t i = 0; i < basis.size(); ++i) {
                const ModLead& lg = leads[i];
                if (lg.comp != lv.comp) continue;
                if (!exps_divides(lg.exps, lv.exps)) continue;
                Exps q = exps_div(lv.exps, lg.exps);
                Scalar f = lv.coeff / lg.coeff;
                v = mvec_sub(v, mvec_times_monomial(basis[i], q, f));
                reduced = true;
                break;
            }
            if (!reduced) {
                // move the irreducible lead term to the output
                Poly mono = Poly::monomial(v[lv.comp].ring(), lv.exps, lv.coeff);
                out[lv.comp] = out[lv.comp] + mono;
                v[lv.comp] = v[lv.comp] - mono;
            }
            long deg = ring.total_degree(lv.exps);
            if (deg > caps().max_total_degree)
                throw ResourceLimit("normal form exceeded degree cap " +
                                    std::to_string(caps().max_total_degree));
        }
        return out;
    }
};

std::vector<MVec> quotient_columns(const FreeMod& fm) {
    std::vector<MVec> cols;
    for (const auto& q : fm.ring->quotient_terms()) {
        Poly qp(fm.ring, q);
        for (std::size_t c = 0; c < fm.rank(); ++c) {
            MVec v = mvec_zero(fm);
            v[c] = qp;
            cols.push_back(std::move(v));
        }
    }
    return cols;
}

} // namespace

ModGB ModGB::compute(const FreeMod& fm, std::vector<MVec> gens, ModOrder ord,
                     bool include_quotient) {
    ModGB gb;
    gb.fm_ = fm;
    gb.ord_ = ord;
    const Ring& ring = *fm.ring;

    std::vector<MVec> basis;
    if (include_quotient)
        for (auto& q : quotient_columns(fm)) gens.push_back(std::move(q));
    for (auto& g : gens)
        if (!mvec_is_zero(g)) basis.push_back(std::move(g));

    std::vector<ModLead> leads;
    leads.reserve(basis.size());
    for (const auto& g : basis) leads.push_back(mod_lead(ring, g, ord));

    struct Pair { std::size_t i, j; long deg; };
    auto lcm_deg = [&](std::size_t i, std::size_t j) {
        return ring.total_degree(exps_lcm(leads[i].exps, leads[j].exps));
    };
    std::vector<Pair> pairs;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (leads[i].comp != leads[j].comp) continue;
            // coprime-lead criterion is only valid for rank-1 modules
            if (fm.rank() == 1 && exps_disjoint(leads[i].exps, leads[j].exps)) continue;
            pairs.push_back({i, j, lcm_deg(i, j)});
        }
    };
    for (std::size_t j = 0; j < basis.size(); ++j) push_pairs(j);

    while (!pairs.empty()) {
        // normal selection: smallest lcm degree, then oldest
        std::size_t pick = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            if (pairs[k].deg < pairs[pick].deg ||
                (pairs[k].deg == pairs[pick].deg &&
                 (pairs[k].j < pairs[pick].j ||
                  (pairs[k].j == pairs[pick].j && pairs[k].i < pairs[pick].i))))
                pick = k;
        }
        Pair pr = pairs[pick];
        pairs.erase(pairs.begin() + pick);

        if (pr.deg > caps().max_total_degree)
            throw ResourceLimit("S-pair degree " + std::to_string(pr.deg) +
                                " exceeds cap " + std::to_string(caps().max_total_degree));

        const ModLead &li = leads[pr.i], &lj = leads[pr.j];
        Exps l = exps_lcm(li.exps, lj.exps);
        MVec s = mvec_sub(
            mvec_times_monomial(basis[pr.i], exps_div(l, li.exps), li.coeff.inv()),
            mvec_times_monomial(basis[pr.j], exps_div(l, lj.exps), lj.coeff.inv()));
        Reducer red{ring, ord, basis, leads};
        MVec r = red.reduce(std::move(s));
        if (mvec_is_zero(r)) continue;
        basis.push_back(std::move(r));
        leads.push_back(mod_lead(ring, basis.back(), ord));
        if (basis.size() > caps().max_basis)
            throw ResourceLimit("basis size exceeds cap " +
                                std::to_string(caps().max_basis));
        push_pairs(basis.size() - 1);
    }

    // minimalize: drop elements whose lead is divisible by another lead
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!keep[i]) continue;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j || !keep[j]) continue;
            if (leads[j].comp == leads[i].comp &&
                exps_divides(leads[j].exps, leads[i].exps) &&
                !(leads[i].exps == leads[j].exps && j > i)) {
                keep[i] = false;
                break;
            }
        }
    }
    std::vector<MVec> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) minimal.push_back(std::move(basis[i]));

    // tail-reduce and normalize lead coefficients to 1
    std::vector<ModLead> mleads;
    for (const auto& g : minimal) mleads.push_back(mod_lead(ring, g, ord));
    std::vector<MVec> reduced(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MVec> others;
        std::vector<ModLead> olds;
        for (std::size_t j = 0; j < minimal.size(); ++j) {
            if (j == i) continue;
            others.push_back(minimal[j]);
            olds.push_back(mleads[j]);
        }
        Reducer red{ring, ord, others, olds};
        MVec r = red.reduce(minimal[i]);
        ModLead lr = mod_lead(ring, r, ord);
        reduced[i] = mvec_scaled(r, lr.coeff.inv());
    }

    std::sort(reduced.begin(), reduced.end(), [&](const MVec& a, const MVec& b) {
        ModLead la = mod_lead(ring, a, ord), lb = mod_lead(ring, b, ord);
        return term_cmp(ring, ord, la.comp, la.exps, lb.comp, lb.exps) > 0;
    });

    gb.basis_ = std::move(reduced);
    for (const auto& g : gb.basis_) gb.leads_.push_back(mod_lead(ring, g, ord));
    return gb;
}

MVec ModGB::normal_form(MVec v) const {
    Reducer red{*fm_.ring, ord_, basis_, leads_};
    return red.reduce(std::move(v));
}

bool ModGB::contains(const MVec& v) const { return mvec_is_zero(normal_form(v)); }

bool operator==(const ModGB& a, const ModGB& b) {
    if (a.basis_.size() != b.basis_.size()) return false;
    for (std::size_t i = 0; i < a.basis_.size(); ++i)
        if (!mvec_eq(a.basis_[i], b.basis_[i])) return false;
    return true;
}

namespace {

// Shared engine for syzygies: GB over F (+) R^{|A|} with F-part dominant,
// quotient relations injected only into the F block, B-columns untracked.
std::vector<MVec> syz_core(const FreeMod& target, const std::vector<MVec>& A,
                           const std::vector<MVec>& B) {
    const RingPtr& ring = target.ring;
    std::size_t rf = target.rank(), s = A.size();
    FreeMod big{ring, target.twists};
    for (const auto& col : A) {
        // twists are bookkeeping only here; charts work with inhomogeneous data
        Multideg d(ring->gdim(), 0);
        if (!mvec_is_zero(col)) mvec_homogeneous(target, col, &d);
        big.twists.push_back(d);
    }

    std::vector<MVec> gens;
    auto embed = [&](const MVec& v, int tag) {
        MVec w(rf + s, Poly::zero(ring));
        for (std::size_t c = 0; c < rf; ++c) w[c] = v[c];
        if (tag >= 0) w[rf + tag] = Poly::constant(ring, Scalar(1));
        return w;
    };
    for (std::size_t j = 0; j < s; ++j) gens.push_back(embed(A[j], (int)j));
    for (const auto& b : B) gens.push_back(embed(b, -1));
    for (const auto& q : target.ring->quotient_terms()) {
        Poly qp(ring, q);
        for (std::size_t c = 0; c < rf; ++c) {
            MVec w(rf + s, Poly::zero(ring));
            w[c] = qp;
            gens.push_back(std::move(w));
        }
    }

    ModOrder ord{(int)rf};
    ModGB gb = ModGB::compute(big, std::move(gens), ord, /*include_quotient=*/false);

    std::vector<MVec> out;
    for (const auto& g : gb.basis()) {
        bool ffree = true;
        for (std::size_t c = 0; c < rf; ++c)
            if (!g[c].is_zero()) { ffree = false; break; }
        if (!ffree) continue;
        MVec w(s, Poly::zero(ring));
        for (std::size_t j = 0; j < s; ++j) w[j] = g[rf + j];
        if (!mvec_is_zero(w)) out.push_back(std::move(w));
    }
    return out;
}

} // namespace

std::vector<MVec> syzygies(const FreeMod& target, const std::vector<MVec>& cols) {
    return syz_core(target, cols, {});
}

std::vector<MVec> syz_proj(const FreeMod& target, const std::vector<MVec>& A,
                           const std::vector<MVec>& B) {
    return syz_core(target, A, B);
}

std::optional<std::vector<Poly>> express_in(const FreeMod& target,
                                            const std::vector<MVec>& gens,
                                            const MVec& v) {
    const RingPtr& ring = target.ring;
    std::size_t rf = target.rank(), s = gens.size();
    FreeMod big{ring, target.twists};
    for (const auto& col : gens) {
        Multideg d(ring->gdim(), 0);
        if (!mvec_is_zero(col)) mvec_homogeneous(target, col, &d);
        big.twists.push_back(d);
    }
    std::vector<MVec> basis;
    auto embed = [&](const MVec& w, int tag) {
        MVec out(rf + s, Poly::zero(ring));
        for (std::size_t c = 0; c < rf; ++c) out[c] = w[c];
        if (tag >= 0) out[rf + tag] = Poly::constant(ring, Scalar(1));
        return out;
    };
    for (std::size_t j = 0; j < s; ++j) basis.push_back(embed(gens[j], (int)j));
    for (const auto& q : ring->quotient_terms()) {
        Poly qp(ring, q);
        for (std::size_t c = 0; c < rf; ++c) {
            MVec w(rf + s, Poly::zero(ring));
            w[c] = qp;
            basis.push_back(std::move(w));
        }
    }
    ModOrder ord{(int)rf};
    ModGB gb = ModGB::compute(big, std::move(basis), ord, /*include_quotient=*/false);
    MVec probe(rf + s, Poly::zero(ring));
    for (std::size_t c = 0; c < rf; ++c) probe[c] = v[c];
    MVec rem = gb.normal_form(std::move(probe));
    for (std::size_t c = 0; c < rf; ++c)
        if (!rem[c].is_zero()) return std::nullopt;
    std::vector<Poly> lift;
    for (std::size_t j = 0; j < s; ++j) lift.push_back(-rem[rf + j]);
    return lift;
}

std::vector<MVec> submodule_intersect(const FreeMod& fm, const std::vector<MVec>& U,
                                      const std::vector<MVec>& V) {
    // (a | b) with U a + V b = 0  =>  U a lies in the intersection
    std::vector<MVec> coeffs = syz_core(fm, U, V);
    std::vector<MVec> out;
    for (const auto& a : coeffs) {
        MVec w = mvec_zero(fm);
        for (std::size_t j = 0; j < U.size(); ++j)
            w = mvec_add(w, mvec_times_poly(U[j], a[j]));
        if (!mvec_is_zero(w)) out.push_back(std::move(w));
    }
    return out;
}

std::vector<MVec> submodule_colon_poly(const FreeMod& fm, const std::vector<MVec>& U,
                                       const Poly& g) {
    // v with g v in <U>: first-block parts of syzygies of [g*Id | U]
    std::vector<MVec> gid;
    for (std::size_t c = 0; c < fm.rank(); ++c) {
        MVec v = mvec_zero(fm);
        v[c] = g;
        gid.push_back(std::move(v));
    }
    return syz_core(fm, gid, U);
}

std::vector<MVec> submodule_colon(const FreeMod& fm, const std::vector<MVec>& U,
                                  const std::vector<Poly>& J) {
    if (J.empty()) throw std::invalid_argument("submodule_colon: empty ideal");
    std::vector<MVec> acc;
    bool first = true;
    for (const auto& g : J) {
        std::vector<MVec> c = submodule_colon_poly(fm, U, g);
        if (first) { acc = std::move(c); first = false; }
        else acc = submodule_intersect(fm, acc, c);
    }
    return acc;
}

std::pair<std::vector<MVec>, int> submodule_saturate(const FreeMod& fm,
                                                     const std::vector<MVec>& U,
                                                     const std::vector<Poly>& J) {
    std::vector<MVec> cur = U;
    ModGB cur_gb = ModGB::compute(fm, cur);
    for (int step = 1;; ++step) {
        std::vector<MVec> next = submodule_colon(fm, cur, J);
        ModGB next_gb = ModGB::compute(fm, next);
        if (next_gb == cur_gb) return {cur_gb.basis(), step - 1};
        cur = std::move(next);
        cur_gb = std::move(next_gb);
        if (step > 64)
            throw ResourceLimit("saturation did not stabilize within 64 steps");
    }
}

} // namespace sheafres
