#include "sheafres/hilbert.hpp"
#include "sheafres/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace sheafres {

Scalar HilbertPoly::eval(long n) const {
    Scalar acc(0), pw(1), x(n);
    for (const auto& c : coeffs) {
        acc += c * pw;
        pw *= x;
    }
    return acc;
}

int HilbertPoly::degree() const {
    int d = -1;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (!coeffs[i].is_zero()) d = (int)i;
    return d;
}

std::string HilbertPoly::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i].is_zero()) continue;
        Scalar c = coeffs[i];
        if (first) {
            if (c.sign() < 0) { os << "-"; c = -c; }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        if (i == 0 || !c.is_one()) os << c.str();
        if (i > 0) {
            if (!c.is_one()) os << "*";
            os << "n";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

HilbertPoly hp_from_coeffs(std::vector<long> coeffs) {
    HilbertPoly p;
    for (long c : coeffs) p.coeffs.push_back(Scalar(c));
    while (!p.coeffs.empty() && p.coeffs.back().is_zero()) p.coeffs.pop_back();
    return p;
}

HilbertPoly hp_add(const HilbertPoly& a, const HilbertPoly& b) {
    HilbertPoly r;
    r.n0 = std::max(a.n0, b.n0);
    r.coeffs.assign(std::max(a.coeffs.size(), b.coeffs.size()), Scalar(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
    while (!r.coeffs.empty() && r.coeffs.back().is_zero()) r.coeffs.pop_back();
    return r;
}

HilbertPoly hp_sub(const HilbertPoly& a, const HilbertPoly& b) {
    HilbertPoly nb = b;
    for (auto& c : nb.coeffs) c = -c;
    return hp_add(a, nb);
}

GradedModule saturate_module(const GradedModule& M, int* steps) {
    if (steps) *steps = 0;
    const auto& blocks = M.ring()->proj_blocks();
    if (blocks.empty()) return M;
    // product of the block ideals: one saturation handles the multiproj case
    std::vector<Poly> prod{Poly::constant(M.ring(), Scalar(1))};
    for (const auto& blk : blocks) {
        std::vector<Poly> next;
        for (const auto& p : prod)
            for (int v : blk) next.push_back(p * Poly::variable(M.ring(), v));
        prod = std::move(next);
    }
    auto [sat, st] = submodule_saturate(M.target(), M.rel(), prod);
    if (steps) *steps = st;
    return GradedModule(M.target(), sat);
}

namespace {

struct PieceCounter {
    const Ring& ring;
    const FreeMod& fm;
    const std::vector<ModLead>& leads; // lead terms of the relation GB
    std::vector<int> zero_deg_bound;   // per (comp * nvars + var) bound, -1 unknown

    bool divisible(int comp, const Exps& e) const {
        for (const auto& l : leads)
            if (l.comp == comp && exps_divides(l.exps, e)) return true;
        return false;
    }

    long count_component(int comp, const Multideg& target) {
        Exps cur(ring.nvars(), 0);
        return recurse(comp, 0, target, cur);
    }

    long recurse(int comp, std::size_t var, Multideg rem, Exps& cur) {
        if (var == ring.nvars()) {
            for (long r : rem)
                if (r != 0) return 0;
            return divisible(comp, cur) ? 0 : 1;
        }
        const Multideg& dv = ring.degree_of_var(var);
        long bound = -1;
        bool positive = false;
        for (int r = 0; r < ring.gdim(); ++r) {
            if (dv[r] > 0) {
                positive = true;
                long b = rem[r] / dv[r];
                bound = bound < 0 ? b : std::min(bound, b);
            } else if (dv[r] < 0) {
                throw std::invalid_argument(
                    "graded_piece_dim: negative variable degrees unsupported");
            }
        }
        if (!positive) {
            int b = zero_deg_bound[(std::size_t)comp * ring.nvars() + var];
            if (b < 0)
                throw HilbertFailure(
                    "graded piece not finite-dimensional: variable '" +
                        ring.vars()[var] + "' has degree zero and no pure-power lead",
                    {});
            bound = b - 1;
        }
        long total = 0;
        for (long e = 0; e <= bound; ++e) {
            cur[var] = (int)e;
            bool feasible = true;
            if (positive) {
                Multideg next = rem;
                for (int r = 0; r < ring.gdim(); ++r) {
                    next[r] -= e * dv[r];
                    if (next[r] < 0) { feasible = false; break; }
                }
                if (feasible) total += recurse(comp, var + 1, next, cur);
            } else {
                total += recurse(comp, var + 1, rem, cur);
            }
        }
        cur[var] = 0;
        return total;
    }
};

} // namespace

long graded_piece_dim(const GradedModule& M, const Multideg& d) {
    const ModGB& gb = M.rel_gb();
    std::vector<ModLead> leads;
    for (const auto& g : gb.basis())
        leads.push_back(mod_lead(*M.ring(), g, gb.order()));

    std::size_t n = M.ring()->nvars();
    std::vector<int> zbound(M.ngens() * n, -1);
    for (const auto& l : leads) {
        int var = -1;
        bool pure = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (l.exps[i] == 0) continue;
            if (var >= 0) { pure = false; break; }
            var = (int)i;
        }
        if (!pure || var < 0) continue;
        int& b = zbound[(std::size_t)l.comp * n + var];
        b = b < 0 ? l.exps[var] : std::min(b, (int)l.exps[var]);
    }

    PieceCounter pc{*M.ring(), M.target(), leads, zbound};
    long total = 0;
    for (std::size_t c = 0; c < M.ngens(); ++c) {
        Multideg rem(M.ring()->gdim());
        for (int r = 0; r < M.ring()->gdim(); ++r)
            rem[r] = d[r] - M.target().twists[c][r];
        bool nonneg = true;
        for (long x : rem)
            if (x < 0) { nonneg = false; break; }
        if (!nonneg) {
            // negative remaining degree can still be reachable only with
            // negative-degree variables, which are unsupported
            continue;
        }
        total += pc.count_component((int)c, rem);
    }
    return total;
}

namespace {

// Interpolating polynomial through (xs[i], ys[i]) for i < m (Lagrange, exact).
HilbertPoly interpolate(const std::vector<long>& xs, const std::vector<Scalar>& ys,
                        std::size_t m) {
    // Newton's divided differences, then expand
    std::vector<Scalar> coef(ys.begin(), ys.begin() + m);
    for (std::size_t j = 1; j < m; ++j)
        for (std::size_t i = m; i-- > j;)
            coef[i] = (coef[i] - coef[i - 1]) / Scalar(xs[i] - xs[i - j]);
    // horner expansion into monomial basis
    std::vector<Scalar> poly{coef[m - 1]};
    for (std::size_t j = m - 1; j-- > 0;) {
        // poly = poly * (n - xs[j]) + coef[j]
        std::vector<Scalar> next(poly.size() + 1, Scalar(0));
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= poly[i] * Scalar(xs[j]);
        }
        next[0] += coef[j];
        poly = std::move(next);
    }
    HilbertPoly hp;
    hp.coeffs = std::move(poly);
    while (!hp.coeffs.empty() && hp.coeffs.back().is_zero()) hp.coeffs.pop_back();
    return hp;
}

} // namespace

HilbertResult hilbert_polynomial(const GradedModule& M, const Multideg& direction,
                                 HilbertOptions opts) {
    HilbertResult out;
    GradedModule Ms = opts.saturate ? saturate_module(M, &out.saturation_steps) : M;

    long n0;
    if (opts.n0) {
        n0 = *opts.n0;
    } else {
        long s = (long)M.ring()->nvars();
        for (const auto& t : M.target().twists)
            for (long x : t) s += std::abs(x);
        n0 = s;
    }
    out.n0 = n0;

    std::vector<long> xs;
    std::vector<Scalar> ys;
    for (int i = 0; i < opts.npoints; ++i) {
        long n = n0 + i;
        Multideg d(M.ring()->gdim());
        for (int r = 0; r < M.ring()->gdim(); ++r) d[r] = n * direction[r];
        long dim = graded_piece_dim(Ms, d);
        xs.push_back(n);
        ys.push_back(Scalar(dim));
        out.dims.push_back(dim);
    }

    for (std::size_t m = 1; m + opts.guard <= (std::size_t)opts.npoints; ++m) {
        HilbertPoly cand = interpolate(xs, ys, m);
        bool ok = true;
        for (std::size_t i = m; i < xs.size(); ++i)
            if (cand.eval(xs[i]) != ys[i]) { ok = false; break; }
        if (ok) {
            cand.n0 = n0;
            out.poly = std::move(cand);
            return out;
        }
    }
    throw HilbertFailure(
        "hilbert: dimensions did not stabilize on the window; raise the window "
        "start or the re-twist exponent",
        out.dims);
}

} // namespace sheafres
