#include "sheafres/fitting.hpp"

#include <map>

namespace sheafres {

namespace {

Poly det_rec(const RingPtr& ring, const std::vector<std::vector<Poly>>& rows,
             std::size_t r, std::uint32_t colmask,
             std::map<std::pair<std::size_t, std::uint32_t>, Poly>& memo) {
    if (colmask == 0) return Poly::constant(ring, Scalar(1));
    auto key = std::make_pair(r, colmask);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Poly acc = Poly::zero(ring);
    int sign = 1;
    for (std::size_t c = 0, seen = 0; c < 32; ++c) {
        if (!(colmask & (1u << c))) continue;
        const Poly& entry = rows[r][c];
        if (!entry.is_zero()) {
            Poly sub = det_rec(ring, rows, r + 1, colmask & ~(1u << c), memo);
            Poly term = entry * sub;
            acc = sign > 0 ? acc + term : acc - term;
        }
        sign = -sign;
        ++seen;
    }
    memo.emplace(key, acc);
    return acc;
}

} // namespace

Poly poly_det(const RingPtr& ring, const std::vector<std::vector<Poly>>& rows) {
    std::size_t n = rows.size();
    if (n == 0) return Poly::constant(ring, Scalar(1));
    if (n > 16) throw std::invalid_argument("poly_det: matrix too large");
    for (const auto& r : rows)
        if (r.size() != n) throw std::invalid_argument("poly_det: not square");
    std::map<std::pair<std::size_t, std::uint32_t>, Poly> memo;
    return det_rec(ring, rows, 0, (1u << n) - 1, memo);
}

namespace {

std::vector<std::vector<Poly>> presentation_rows(const GradedModule& M) {
    std::size_t n = M.ngens(), m = M.rel().size();
    std::vector<std::vector<Poly>> rows(n, std::vector<Poly>(m, Poly::zero(M.ring())));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < n; ++i) rows[i][j] = M.rel()[j][i];
    return rows;
}

void minors_rec(const RingPtr& ring, const std::vector<std::vector<Poly>>& rows,
                std::size_t size, std::vector<int>& rowpick, std::vector<int>& colpick,
                std::size_t next_row, std::size_t next_col, bool picking_rows,
                std::vector<Poly>& out) {
    if (picking_rows) {
        if (rowpick.size() == size) {
            minors_rec(ring, rows, size, rowpick, colpick, 0, 0, false, out);
            return;
        }
        for (std::size_t r = next_row; r < rows.size(); ++r) {
            rowpick.push_back((int)r);
            minors_rec(ring, rows, size, rowpick, colpick, r + 1, 0, true, out);
            rowpick.pop_back();
        }
        return;
    }
    if (colpick.size() == size) {
        std::vector<std::vector<Poly>> sub(size, std::vector<Poly>(size, Poly::zero(ring)));
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = 0; j < size; ++j)
                sub[i][j] = rows[rowpick[i]][colpick[j]];
        Poly d = poly_det(ring, sub);
        if (!d.is_zero()) out.push_back(std::move(d));
        return;
    }
    std::size_t m = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = next_col; c < m; ++c) {
        colpick.push_back((int)c);
        minors_rec(ring, rows, size, rowpick, colpick, 0, c + 1, false, out);
        colpick.pop_back();
    }
}

std::vector<Poly> minors(const RingPtr& ring, const std::vector<std::vector<Poly>>& rows,
                         std::size_t size) {
    std::vector<Poly> out;
    if (size == 0) {
        out.push_back(Poly::constant(ring, Scalar(1)));
        return out;
    }
    if (rows.size() < size || rows.empty() || rows[0].size() < size) return out;
    std::vector<int> rp, cp;
    minors_rec(ring, rows, size, rp, cp, 0, 0, true, out);
    return out;
}

} // namespace

FittResult fitt0(const GradedModule& M) {
    std::size_t n = M.ngens();
    auto rows = presentation_rows(M);
    std::size_t m = rows.empty() ? 0 : rows[0].size();
    // Fitting convention: source rank at least target rank, pad with zeros
    if (m < n) {
        for (auto& r : rows) r.resize(n, Poly::zero(M.ring()));
        m = n;
    }
    FittResult out;
    out.minor_size = (int)n;
    out.nrows = n;
    out.ncols = m;
    out.ideal = Ideal(M.ring(), minors(M.ring(), rows, n));
    return out;
}

Ideal fitt(const GradedModule& M, int k) {
    std::size_t n = M.ngens();
    if (k < 0) throw std::invalid_argument("fitt: k >= 0 required");
    if ((std::size_t)k >= n)
        return Ideal(M.ring(), {Poly::constant(M.ring(), Scalar(1))});
    auto rows = presentation_rows(M);
    std::size_t size = n - (std::size_t)k;
    return Ideal(M.ring(), minors(M.ring(), rows, size));
}

namespace {

// common monomial factor across every term of every basis element
Exps common_monomial_factor(const std::vector<Poly>& basis) {
    Exps common;
    bool first = true;
    for (const auto& p : basis) {
        for (const auto& t : p.terms()) {
            if (first) { common = t.exps; first = false; }
            else
                for (std::size_t i = 0; i < common.size(); ++i)
                    common[i] = std::min(common[i], t.exps[i]);
        }
    }
    return common;
}

} // namespace

InvertibilityResult is_invertible_ideal(const Ideal& I) {
    InvertibilityResult out;
    if (I.is_zero()) {
        out.verdict = Invertibility::No;
        out.note = "zero ideal";
        return out;
    }
    if (I.is_unit()) {
        out.verdict = Invertibility::Yes;
        out.witness = Poly::constant(I.ring(), Scalar(1));
        return out;
    }

    std::vector<Poly> candidates = I.gens();
    for (const auto& b : I.basis())
        if (!b.is_zero()) candidates.push_back(b);

    std::vector<Poly> ibasis = I.basis();
    Ideal zero(I.ring(), {});
    for (const auto& a : candidates) {
        if (zero.contains(a)) continue; // zero modulo the quotient
        Ideal Pa(I.ring(), {a});
        bool divides_all = true;
        for (const auto& b : ibasis)
            if (!Pa.contains(b)) { divides_all = false; break; }
        if (!divides_all) continue;
        if (is_nonzerodivisor(a, I.ring())) {
            out.verdict = Invertibility::Yes;
            out.witness = a;
            return out;
        }
        out.note = "principal with zerodivisor generator " + a.str();
    }
    if (!out.note.empty()) {
        out.verdict = Invertibility::No;
        return out;
    }

    if (support_codim(I) >= 2) {
        out.verdict = Invertibility::No;
        out.note = "support has codimension >= 2";
        return out;
    }

    // codimension-one ideals of the shape m * I' with I' of codimension >= 2
    // (polynomial rings only: factoring cosets is not canonical otherwise)
    if (!I.ring()->has_quotient()) {
        Exps common = common_monomial_factor(ibasis);
        if (!exps_is_one(common)) {
            std::vector<Poly> reduced;
            for (const auto& b : ibasis) {
                TermList ts;
                for (const auto& t : b.terms())
                    ts.push_back({exps_div(t.exps, common), t.coeff});
                reduced.push_back(Poly(I.ring(), ts));
            }
            Ideal Ired(I.ring(), reduced);
            if (Ired.is_unit()) {
                // I = (monomial): principal after all
                Poly m = Poly::monomial(I.ring(), common, Scalar(1));
                out.verdict = Invertibility::Yes;
                out.witness = m;
                return out;
            }
            if (support_codim(Ired) >= 2) {
                out.verdict = Invertibility::No;
                out.note = "monomial factor times a codimension >= 2 ideal";
                return out;
            }
        }
    }

    out.verdict = Invertibility::Inconclusive;
    out.note = "division heuristic found no principal generator";
    return out;
}

bool ring_reduction_irreducible(const RingPtr& ring) {
    Ideal zero(ring, {});
    for (const auto& q : ring->quotient_terms()) {
        Poly p(ring, q);
        Poly pw = p;
        bool nil = false;
        for (int k = 1; k <= 8; ++k) {
            if (zero.contains(pw)) { nil = true; break; }
            pw = pw * p;
        }
        if (!nil) return false;
    }
    return true;
}

FittHdReport fitting_hd_check(const GradedModule& M, int hd_cap,
                              bool assume_irreducible_reduction) {
    FittHdReport rep;
    if (!assume_irreducible_reduction && !ring_reduction_irreducible(M.ring()))
        throw std::invalid_argument(
            "fitting_hd_check: reduction irreducibility not established");
    if (M.is_zero())
        throw std::invalid_argument("fitting_hd_check: zero module rejected");

    rep.fitt = fitt0(M);
    int codim = support_codim(rep.fitt.ideal);
    if (codim < 1)
        throw std::invalid_argument(
            "fitting_hd_check: support codimension < 1 (codim = " +
            std::to_string(codim) + ")");

    rep.hd = homological_dimension(M, hd_cap);
    rep.invertible = is_invertible_ideal(rep.fitt.ideal);
    if (rep.invertible.verdict == Invertibility::Inconclusive) {
        rep.biconditional_holds = false;
        rep.note = "invertibility inconclusive: " + rep.invertible.note;
        return rep;
    }
    bool inv = rep.invertible.verdict == Invertibility::Yes;
    rep.biconditional_holds = (rep.hd == 1) == inv;
    return rep;
}

bool cramer_identity_check(const RingPtr& ring,
                           const std::vector<std::vector<Poly>>& rows) {
    std::size_t n = rows.size();
    if (n == 0) return true;
    std::size_t m = rows[0].size();
    if (m < n) throw std::invalid_argument("cramer_identity_check: need n x (n+r)");
    auto submatrix_with_col = [&](std::size_t replaced, std::size_t by) {
        std::vector<std::vector<Poly>> sub(n, std::vector<Poly>(n, Poly::zero(ring)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                sub[i][j] = rows[i][j == replaced ? by : j];
        return sub;
    };
    Poly a = poly_det(ring, submatrix_with_col(n, n)); // leading n-minor
    Ideal zero(ring, {});
    for (std::size_t k = n; k < m; ++k) {
        std::vector<Poly> delta(n, Poly::zero(ring));
        for (std::size_t j = 0; j < n; ++j)
            delta[j] = poly_det(ring, submatrix_with_col(j, k));
        for (std::size_t i = 0; i < n; ++i) {
            Poly lhs = Poly::zero(ring);
            for (std::size_t j = 0; j < n; ++j) lhs = lhs + rows[i][j] * delta[j];
            Poly rhs = rows[i][k] * a;
            if (!zero.contains(lhs - rhs)) return false;
        }
    }
    return true;
}

} // namespace sheafres
