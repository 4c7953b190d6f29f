#include "sheafres/blowup.hpp"
#include "sheafres/linalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace sheafres {

ZeroDimSubscheme ZeroDimSubscheme::make(RingPtr ring, Ideal ideal) {
    auto basis = quotient_monomial_basis(ideal);
    if (!basis)
        throw std::invalid_argument("ZeroDimSubscheme: quotient not finite-dimensional");
    ZeroDimSubscheme z{std::move(ring), std::move(ideal), (int)basis->size()};
    // single supporting closed point (rational): each coordinate has a
    // degree <= 1 minimal polynomial on the reduced algebra
    Ideal rad = radical_zero_dimensional(z.ideal);
    for (std::size_t v = 0; v < z.ring->nvars(); ++v) {
        QVector mp = minimal_polynomial(rad, Poly::variable(z.ring, (int)v));
        if (mp.size() > 2)
            throw std::invalid_argument(
                "ZeroDimSubscheme: support is not a single rational point");
    }
    return z;
}

namespace {

struct Dehomog {
    RingPtr ring;
    std::vector<int> kept; // original indices

    Poly apply(const Poly& p) const {
        TermList out;
        for (const auto& t : p.terms()) {
            Exps e(kept.size(), 0);
            for (std::size_t k = 0; k < kept.size(); ++k) e[k] = t.exps[kept[k]];
            out.push_back({std::move(e), t.coeff}); // dropped variables become 1
        }
        return Poly(ring, std::move(out));
    }
};

// Affine chart: listed variables set to 1, trivial grading, extra relations
// joined into the quotient.
Dehomog dehomogenize(const RingPtr& R, const std::vector<int>& ones,
                     const std::vector<Poly>& extra_quotient) {
    std::vector<bool> drop(R->nvars(), false);
    for (int v : ones) drop[v] = true;
    std::vector<int> kept;
    std::vector<std::string> names;
    std::vector<Multideg> degs;
    for (std::size_t i = 0; i < R->nvars(); ++i) {
        if (drop[i]) continue;
        kept.push_back((int)i);
        names.push_back(R->vars()[i]);
        degs.push_back(Multideg{0});
    }
    auto restrict_terms = [&](const TermList& ts) {
        TermList out;
        for (const auto& t : ts) {
            Exps e(kept.size(), 0);
            for (std::size_t k = 0; k < kept.size(); ++k) e[k] = t.exps[kept[k]];
            out.push_back({std::move(e), t.coeff});
        }
        return out;
    };
    std::vector<TermList> quot;
    for (const auto& q : R->quotient_terms()) quot.push_back(restrict_terms(q));
    for (const auto& p : extra_quotient) quot.push_back(restrict_terms(p.terms()));
    RingPtr C = Ring::make(names, degs, {}, quot, {});
    return Dehomog{C, kept};
}

Poly embed(const Poly& p, const RingPtr& to) { return transplant_by_name(p, to); }

std::vector<Poly> irrelevant_product(const RingPtr& R) {
    std::vector<Poly> prod{Poly::constant(R, Scalar(1))};
    for (const auto& blk : R->proj_blocks()) {
        std::vector<Poly> next;
        for (const auto& p : prod)
            for (int v : blk) next.push_back(p * Poly::variable(R, v));
        prod = std::move(next);
    }
    return prod;
}

} // namespace

std::vector<Poly> irrelevant_ideal_gens(const RingPtr& R) { return irrelevant_product(R); }

Ideal saturate_irrelevant(const Ideal& I) {
    auto prod = irrelevant_product(I.ring());
    if (prod.size() == 1 && exps_is_one(prod[0].lead_exps())) return I;
    return ideal_saturate(I, Ideal(I.ring(), prod)).ideal;
}

// substitute the chart's dropped variables by 1 in an ambient polynomial
Poly chart_restrict(const ModelChart& ch, const Poly& p_ambient) {
    TermList out;
    for (const auto& t : p_ambient.terms()) {
        Exps e(ch.kept.size(), 0);
        for (std::size_t k = 0; k < ch.kept.size(); ++k) e[k] = t.exps[ch.kept[k]];
        out.push_back({std::move(e), t.coeff});
    }
    return Poly(ch.ring, std::move(out));
}

ModelChart fiber_chart(const AdmissibleScheme& X, int i, int x_chart) {
    std::vector<int> ones{X.model.y_offset + i};
    if (x_chart >= 0) ones.push_back(x_chart);
    std::vector<Poly> extra;
    for (const auto& g : X.defining.gens()) extra.push_back(g);
    Dehomog dh = dehomogenize(X.model.ambient, ones, extra);
    ModelChart ch;
    ch.ring = dh.ring;
    ch.y_index = i;
    ch.x_index = x_chart;
    ch.kept = dh.kept;
    ch.chart_generator = dh.apply(embed(X.model.generators[i], X.model.ambient));
    return ch;
}

RingMap BlowupModel::sigma() const { return sigma_to(total_ring); }

RingMap BlowupModel::sigma_to(const RingPtr& to) const {
    std::vector<std::vector<long>> dm(to->gdim(), std::vector<long>(base->gdim(), 0));
    for (int r = 0; r < base->gdim(); ++r) dm[r][r] = 1;
    return ring_map_by_name(base, to, std::move(dm));
}

std::vector<int> BlowupModel::base_proj_vars() const {
    std::vector<int> out;
    if (!base->proj_blocks().empty())
        for (int v : base->proj_blocks()[0])
            out.push_back(ambient->var_index(base->vars()[v]));
    return out;
}

ModelChart BlowupModel::chart(int i, int x_chart) const {
    std::vector<int> ones{y_offset + i};
    if (x_chart >= 0) ones.push_back(x_chart);
    std::vector<Poly> extra;
    for (const auto& g : relations.gens()) extra.push_back(g);
    Dehomog dh = dehomogenize(ambient, ones, extra);
    ModelChart ch;
    ch.ring = dh.ring;
    ch.y_index = i;
    ch.x_index = x_chart;
    ch.kept = dh.kept;
    ch.chart_generator = dh.apply(embed(generators[i], ambient));
    return ch;
}

std::vector<Poly> generators_in_degree(const Ideal& J, long d) {
    const RingPtr& R = J.ring();
    if (R->proj_blocks().empty())
        throw std::invalid_argument("generators_in_degree: no projective block");
    const auto& block = R->proj_blocks()[0];

    // monomials of given x-degree in the block variables
    std::vector<std::vector<Exps>> mono_cache;
    auto monos_of_degree = [&](long e) {
        std::vector<Exps> out;
        std::vector<int> cur(block.size(), 0);
        std::function<void(std::size_t, long)> rec = [&](std::size_t i, long rem) {
            if (i + 1 == block.size()) {
                cur[i] = (int)rem;
                Exps m(R->nvars(), 0);
                for (std::size_t k = 0; k < block.size(); ++k) m[block[k]] = cur[k];
                out.push_back(std::move(m));
                return;
            }
            for (long v = 0; v <= rem; ++v) { cur[i] = (int)v; rec(i + 1, rem - v); }
        };
        if (!block.empty()) rec(0, e);
        return out;
    };

    std::vector<Poly> kept;
    for (const auto& g : J.gens()) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous())
            throw std::invalid_argument("generators_in_degree: inhomogeneous generator");
        long e = g.multidegree()[0];
        if (e > d)
            throw std::invalid_argument(
                "generators_in_degree: generator degree exceeds requested degree");
        for (const auto& m : monos_of_degree(d - e)) {
            Poly cand = g.times_monomial(m, Scalar(1));
            Ideal have(R, kept);
            if (!kept.empty() && have.contains(cand)) continue;
            if (kept.empty() && Ideal(R, {}).contains(cand)) continue;
            kept.push_back(cand);
        }
    }
    return kept;
}

BlowupModel rees_embed(const Ideal& J, std::vector<Poly> generators, BlowupOptions opts) {
    const RingPtr& B = J.ring();
    if (generators.empty()) throw std::invalid_argument("rees_embed: no generators");
    Multideg d;
    bool have_d = false;
    for (const auto& f : generators) {
        if (f.is_zero()) throw std::invalid_argument("rees_embed: zero generator");
        if (!f.is_homogeneous())
            throw std::invalid_argument("rees_embed: generators must be homogeneous");
        if (!have_d) { d = f.multidegree(); have_d = true; }
        else if (f.multidegree() != d)
            throw std::invalid_argument("rees_embed: generators of mixed multidegree");
    }

    if (opts.check_chartwise_generation && !B->proj_blocks().empty()) {
        Ideal F(B, generators);
        for (int v : B->proj_blocks()[0]) {
            Ideal sat = ideal_saturate(F, Ideal(B, {Poly::variable(B, v)})).ideal;
            for (const auto& g : J.gens())
                if (!sat.contains(g)) {
                    throw std::invalid_argument(
                        "rees_embed: generators fail to generate the center on the "
                        "chart " + B->vars()[v] + " = 1");
                }
        }
    }

    // ambient: base variables plus y_0..y_m, one extra grading row for the fibre
    std::size_t m = generators.size();
    std::vector<std::string> names = B->vars();
    std::vector<Multideg> degs;
    for (std::size_t i = 0; i < B->nvars(); ++i) {
        Multideg v = B->degree_of_var(i);
        v.push_back(0);
        degs.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < m; ++i) {
        names.push_back("y" + std::to_string(i));
        if (B->var_index(names.back()) >= 0)
            throw std::invalid_argument("rees_embed: variable name y" +
                                        std::to_string(i) + " already in use");
        Multideg v(B->gdim(), 0);
        v.push_back(1);
        degs.push_back(std::move(v));
    }
    std::vector<TermList> quot;
    std::vector<std::vector<int>> blocks = B->proj_blocks();
    std::vector<int> yblock;
    for (std::size_t i = 0; i < m; ++i) yblock.push_back((int)(B->nvars() + i));
    blocks.push_back(yblock);
    RingPtr ambient0 = Ring::make(names, degs, {}, {}, blocks);
    for (const auto& q : B->quotient_terms())
        quot.push_back(embed(Poly(B, q), ambient0).terms());
    RingPtr ambient = Ring::make(names, degs, {}, quot, blocks);

    // relations: eliminate u from { y_i - u f_i }
    std::vector<std::string> aux_names = names;
    aux_names.push_back("u");
    std::vector<Multideg> aux_degs = degs;
    aux_degs.push_back(Multideg(B->gdim() + 1, 0));
    std::vector<TermList> aux_quot;
    RingPtr aux0 = Ring::make(aux_names, aux_degs, {}, {}, {});
    for (const auto& q : B->quotient_terms())
        aux_quot.push_back(transplant_by_name(Poly(B, q), aux0).terms());
    RingPtr aux = Ring::make(aux_names, aux_degs, {}, aux_quot, {});
    int u_idx = (int)aux->nvars() - 1;
    std::vector<Poly> aux_gens;
    for (std::size_t i = 0; i < m; ++i) {
        Poly yi = Poly::variable(aux, (int)(B->nvars() + i));
        Poly fi = transplant_by_name(generators[i], aux);
        aux_gens.push_back(yi - Poly::variable(aux, u_idx) * fi);
    }
    Ideal graph(aux, aux_gens);
    Ideal rel_aux = eliminate_in_ring(graph, {u_idx});
    std::vector<Poly> rel_gens;
    for (const auto& g : rel_aux.gens()) rel_gens.push_back(transplant_by_name(g, ambient));
    Ideal relations(ambient, rel_gens);

    BlowupModel X;
    X.base = B;
    X.center = J;
    X.generators = std::move(generators);
    X.gen_degree = d;
    X.ambient = ambient;
    X.relations = relations;
    X.taut_twist = Multideg(B->gdim() + 1, 0);
    X.taut_twist.back() = 1;
    X.y_offset = (int)B->nvars();

    std::vector<TermList> tq = ambient->quotient_terms();
    for (const auto& g : relations.basis())
        if (!g.is_zero()) tq.push_back(g.terms());
    X.total_ring = Ring::make(names, degs, {}, tq, blocks);

    if (opts.check_dominance && !B->has_quotient()) {
        std::vector<int> yvars;
        for (std::size_t i = 0; i < m; ++i) yvars.push_back((int)(B->nvars() + i));
        Ideal down = eliminate_in_ring(relations, yvars);
        if (!down.is_zero())
            throw std::invalid_argument(
                "rees_embed: relations meet the base ring; center may be degenerate");
        X.dominant_checked = true;
    }
    return X;
}

namespace {

AdmissibleScheme build_admissible(const Ideal& J, int t_index_in_base, long d, long k) {
    AdmissibleScheme X;
    X.retwist_k = k;
    X.gen_degree = d;

    std::vector<Poly> f = generators_in_degree(J, d);
    X.model = rees_embed(J, f, BlowupOptions{true, false});
    const RingPtr& A = X.model.ambient;
    X.t_index = A->var_index(J.ring()->vars()[t_index_in_base]);

    Poly t_amb = Poly::variable(A, X.t_index);
    std::vector<Poly> dgens = X.model.relations.gens();
    dgens.push_back(t_amb);
    X.defining = saturate_irrelevant(Ideal(A, dgens));

    std::vector<Poly> egens = X.defining.gens();
    std::vector<Poly> center_embedded;
    for (const auto& g : J.gens()) {
        center_embedded.push_back(embed(g, A));
        egens.push_back(center_embedded.back());
    }
    X.exceptional = Ideal(A, egens);

    X.main_component = ideal_saturate(X.defining, Ideal(A, center_embedded)).ideal;
    X.additional = ideal_saturate(X.defining, X.main_component).ideal;

    Ideal meet = ideal_intersect(X.main_component, X.additional);
    X.decomposition_consistent = saturate_irrelevant(meet) == X.defining;

    // support of the additional components on the base surface
    std::vector<int> drop;
    for (std::size_t i = 0; i < X.model.nfibers(); ++i)
        drop.push_back(X.model.y_offset + (int)i);
    drop.push_back(X.t_index);
    Elimination down = eliminate(X.additional, drop);
    X.component_count =
        projective_support_points(down.ideal, down.subring->proj_blocks().empty()
                                                  ? std::vector<int>{}
                                                  : down.subring->proj_blocks()[0]);

    X.polarization_twist = Multideg(A->gdim(), 0);
    X.polarization_twist[0] = k - d;
    X.polarization_twist[A->gdim() - 1] = 1;

    std::vector<TermList> fq;
    for (const auto& q : A->quotient_terms()) fq.push_back(q);
    for (const auto& g : X.defining.basis())
        if (!g.is_zero()) fq.push_back(g.terms());
    std::vector<Multideg> degs;
    for (std::size_t i = 0; i < A->nvars(); ++i) degs.push_back(A->degree_of_var(i));
    X.fiber_ring = Ring::make(A->vars(), degs, {}, fq, A->proj_blocks());
    return X;
}

} // namespace

AdmissibleScheme admissible_scheme_from_center(const Ideal& J, int t_index, long d,
                                               long k) {
    return build_admissible(J, t_index, d, k);
}

AdmissibleScheme admissible_scheme(const Ideal& I, long d, long k) {
    const RingPtr& B0 = I.ring();
    if (B0->var_index("t") >= 0)
        throw std::invalid_argument("admissible_scheme: base already has a variable t");
    // zero-dimensional support on the projective base: affine cone dimension 1
    if (lt_dimension(I) != 1)
        throw std::invalid_argument(
            "admissible_scheme: center must define a zero-dimensional subscheme");
    Ideal Isat = saturate_irrelevant(I);

    std::vector<std::string> names = B0->vars();
    names.push_back("t");
    std::vector<Multideg> degs;
    for (std::size_t i = 0; i < B0->nvars(); ++i) degs.push_back(B0->degree_of_var(i));
    degs.push_back(Multideg(B0->gdim(), 0));
    RingPtr B1 = Ring::make(names, degs, {}, {}, B0->proj_blocks());
    std::vector<TermList> quot;
    for (const auto& q : B0->quotient_terms())
        quot.push_back(transplant_by_name(Poly(B0, q), B1).terms());
    RingPtr B = Ring::make(names, degs, {}, quot, B0->proj_blocks());

    std::vector<Poly> jg;
    for (const auto& g : Isat.gens()) jg.push_back(transplant_by_name(g, B));
    jg.push_back(Poly::variable(B, (int)B->nvars() - 1));
    Ideal J(B, jg);
    return build_admissible(J, (int)B->nvars() - 1, d, k);
}

HilbertResult polarization_chi(const AdmissibleScheme& X, HilbertOptions opts) {
    GradedModule structure = GradedModule::free_module(
        FreeMod{X.fiber_ring, {Multideg(X.fiber_ring->gdim(), 0)}});
    return hilbert_polynomial(structure, X.polarization_twist, opts);
}

GradedModule pullback_to_total(const GradedModule& M, const BlowupModel& X) {
    std::vector<std::vector<long>> dm(X.total_ring->gdim(),
                                      std::vector<long>(M.ring()->gdim(), 0));
    for (int r = 0; r < M.ring()->gdim(); ++r) dm[r][r] = 1;
    RingMap f = ring_map_by_name(M.ring(), X.total_ring, dm);
    return pullback(M, f);
}

GradedModule pullback_to_fiber(const GradedModule& M, const AdmissibleScheme& X) {
    std::vector<std::vector<long>> dm(X.fiber_ring->gdim(),
                                      std::vector<long>(M.ring()->gdim(), 0));
    for (int r = 0; r < M.ring()->gdim(); ++r) dm[r][r] = 1;
    RingMap f = ring_map_by_name(M.ring(), X.fiber_ring, dm);
    return pullback(M, f);
}

std::vector<ChartCert> tautological_certificates(const BlowupModel& X) {
    std::vector<ChartCert> out;
    std::vector<int> xcharts = X.base_proj_vars();
    if (xcharts.empty()) xcharts.push_back(-1);
    for (std::size_t i = 0; i < X.nfibers(); ++i) {
        for (int xc : xcharts) {
            ModelChart ch = X.chart((int)i, xc);
            ChartCert cert{(int)i, xc, false, false};
            // J * O generated by the chart generator
            std::vector<Poly> jgens;
            for (const auto& g : X.center.gens())
                jgens.push_back(chart_restrict(ch, embed(g, X.ambient)));
            Ideal full(ch.ring, jgens);
            Ideal principal(ch.ring, {ch.chart_generator});
            cert.principal = principal.contains_ideal(full);
            Ideal zero(ch.ring, {});
            if (!zero.contains(ch.chart_generator))
                cert.nonzerodivisor = is_nonzerodivisor(ch.chart_generator, ch.ring);
            out.push_back(cert);
        }
    }
    return out;
}

int projective_support_points(const Ideal& I, const std::vector<int>& proj_vars) {
    if (proj_vars.empty()) {
        if (I.is_unit()) return 0;
        return geometric_point_count(I);
    }
    int total = 0;
    std::vector<Poly> extra;
    for (std::size_t c = proj_vars.size(); c-- > 0;) {
        std::vector<Poly> gens = I.gens();
        for (const auto& e : extra) gens.push_back(e);
        Ideal chart_ideal(I.ring(), gens);
        Dehomog dh = dehomogenize(I.ring(), {proj_vars[c]}, {});
        std::vector<Poly> dgens;
        for (const auto& g : chart_ideal.gens()) dgens.push_back(dh.apply(g));
        Ideal J(dh.ring, dgens);
        if (!J.is_unit()) {
            auto basis = quotient_monomial_basis(J);
            if (!basis)
                throw std::invalid_argument(
                    "projective_support_points: support not zero-dimensional");
            if (!basis->empty()) total += geometric_point_count(J);
        }
        extra.push_back(Poly::variable(I.ring(), proj_vars[c]));
    }
    return total;
}

std::optional<SectionCertificate> infinitesimal_section(const BlowupModel& X,
                                                        const ZeroDimSubscheme& Z,
                                                        int x_chart) {
    auto basis_opt = quotient_monomial_basis(Z.ideal);
    if (!basis_opt) throw std::invalid_argument("infinitesimal_section: Z not finite");
    const std::vector<Exps>& basis = *basis_opt;
    std::size_t dim = basis.size();

    auto to_Z = [&](const Poly& p) { return transplant_by_name(p, Z.ring); };
    auto coords = [&](const Poly& p) { return coords_in_basis(Z.ideal, basis, p); };

    // chart generators evaluated on O(Z)
    std::vector<Poly> fz;
    for (const auto& f : X.generators) {
        Poly g = f;
        if (x_chart >= 0) {
            Dehomog dh = dehomogenize(X.base, {x_chart}, {});
            g = dh.apply(f);
        }
        fz.push_back(to_Z(g));
    }

    for (std::size_t i = 0; i < X.nfibers(); ++i) {
        // multiplication by f_i on O(Z)
        QMatrix mul(dim, QVector(dim, Scalar(0)));
        for (std::size_t b = 0; b < dim; ++b) {
            Poly fb = fz[i] * Poly::monomial(Z.ring, basis[b], Scalar(1));
            QVector col = coords(fb);
            for (std::size_t r = 0; r < dim; ++r) mul[r][b] = col[r];
        }
        std::vector<Poly> subs(X.nfibers(), Poly::zero(Z.ring));
        bool solvable = true;
        for (std::size_t j = 0; j < X.nfibers() && solvable; ++j) {
            if (j == i) { subs[j] = Poly::constant(Z.ring, Scalar(1)); continue; }
            auto sol = solve(mul, coords(fz[j]));
            if (!sol) { solvable = false; break; }
            Poly g = Poly::zero(Z.ring);
            for (std::size_t b = 0; b < dim; ++b)
                if (!(*sol)[b].is_zero())
                    g = g + Poly::monomial(Z.ring, basis[b], (*sol)[b]);
            subs[j] = g;
        }
        if (!solvable) continue;

        ModelChart ch = X.chart((int)i, x_chart);
        // substitution chart -> O(Z): base variables by name, fibre u_j -> subs[j]
        std::vector<Poly> images;
        bool ok = true;
        for (std::size_t v = 0; v < ch.ring->nvars() && ok; ++v) {
            int orig = ch.kept[v];
            if (orig >= X.y_offset) {
                images.push_back(subs[orig - X.y_offset]);
            } else {
                int zi = Z.ring->var_index(ch.ring->vars()[v]);
                if (zi < 0) { ok = false; break; }
                images.push_back(Poly::variable(Z.ring, zi));
            }
        }
        if (!ok) continue;
        RingMap psi{ch.ring, Z.ring, images,
                    std::vector<std::vector<long>>(Z.ring->gdim(),
                                                   std::vector<long>(ch.ring->gdim(), 0))};
        // all chart relations must vanish on Z under the substitution
        bool relations_vanish = true;
        for (const auto& q : ch.ring->quotient_terms()) {
            if (!Z.ideal.contains(psi.apply(Poly(ch.ring, q)))) {
                relations_vanish = false;
                break;
            }
        }
        if (!relations_vanish) continue;

        // section ideal: I_Z lifted plus (u_j - subs_j)
        std::vector<Poly> zgens;
        for (const auto& g : Z.ideal.gens())
            zgens.push_back(transplant_by_name(g, ch.ring));
        for (std::size_t v = 0; v < ch.ring->nvars(); ++v) {
            int orig = ch.kept[v];
            if (orig >= X.y_offset) {
                Poly u = Poly::variable(ch.ring, (int)v);
                Poly g = transplant_by_name(subs[orig - X.y_offset], ch.ring);
                zgens.push_back(u - g);
            }
        }
        Ideal Zp(ch.ring, zgens);
        auto zb = quotient_monomial_basis(Zp);
        if (!zb || (int)zb->size() != Z.length) continue;

        SectionCertificate cert;
        cert.y_chart = (int)i;
        cert.x_chart = x_chart;
        cert.section = ZeroDimSubscheme{ch.ring, Zp, (int)zb->size()};
        cert.substitutions = subs;
        cert.verified = true;
        return cert;
    }
    return std::nullopt;
}

} // namespace sheafres
