#include "sheafres/gradedmodule.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sheafres {

namespace {

Multideg neg(const Multideg& d) {
    Multideg r = d;
    for (auto& x : r) x = -x;
    return r;
}

Multideg tolerant_degree(const FreeMod& fm, const MVec& v) {
    Multideg d(fm.ring->gdim(), 0);
    if (!mvec_is_zero(v)) mvec_homogeneous(fm, v, &d);
    return d;
}

} // namespace

GradedModule::GradedModule(FreeMod target, std::vector<Multideg> src_twists,
                           std::vector<MVec> rel_columns)
    : target_(std::move(target)), src_twists_(std::move(src_twists)),
      rel_(std::move(rel_columns)) {
    if (src_twists_.size() != rel_.size())
        throw std::invalid_argument("GradedModule: one twist per relation column");
    for (const auto& c : rel_)
        if (c.size() != target_.rank())
            throw std::invalid_argument("GradedModule: column length mismatch");
}

GradedModule::GradedModule(FreeMod target, std::vector<MVec> rel_columns)
    : target_(std::move(target)), rel_(std::move(rel_columns)) {
    for (const auto& c : rel_) {
        if (c.size() != target_.rank())
            throw std::invalid_argument("GradedModule: column length mismatch");
        src_twists_.push_back(tolerant_degree(target_, c));
    }
}

GradedModule GradedModule::from_rows(FreeMod target, std::vector<Multideg> src_twists,
                                     const std::vector<std::vector<Poly>>& rows) {
    if (rows.size() != target.rank())
        throw std::invalid_argument("from_rows: row count must equal target rank");
    std::vector<MVec> cols(src_twists.size(), MVec(target.rank(), Poly::zero(target.ring)));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != src_twists.size())
            throw std::invalid_argument("from_rows: ragged matrix");
        for (std::size_t j = 0; j < rows[i].size(); ++j) cols[j][i] = rows[i][j];
    }
    return GradedModule(std::move(target), std::move(src_twists), std::move(cols));
}

const ModGB& GradedModule::rel_gb() const {
    if (!gb_)
        gb_ = std::make_shared<ModGB>(ModGB::compute(target_, rel_));
    return *gb_;
}

bool GradedModule::is_zero() const {
    for (std::size_t i = 0; i < target_.rank(); ++i)
        if (!gen_in_relations(i)) return false;
    return true;
}

bool GradedModule::gen_in_relations(std::size_t i) const {
    MVec e = mvec_zero(target_);
    e[i] = Poly::constant(target_.ring, Scalar(1));
    return rel_gb().contains(e);
}

bool GradedModule::check_homogeneous(std::string* why) const {
    for (std::size_t j = 0; j < rel_.size(); ++j) {
        for (std::size_t i = 0; i < target_.rank(); ++i) {
            const Poly& p = rel_[j][i];
            if (p.is_zero()) continue;
            Multideg want(ring()->gdim());
            for (int r = 0; r < ring()->gdim(); ++r)
                want[r] = src_twists_[j][r] - target_.twists[i][r];
            if (!p.is_homogeneous() || p.multidegree() != want) {
                if (why) {
                    std::ostringstream os;
                    os << "entry (" << i << "," << j << ") = " << p.str()
                       << " is not homogeneous of the required multidegree";
                    *why = os.str();
                }
                return false;
            }
        }
    }
    return true;
}

bool operator==(const GradedModule& a, const GradedModule& b) {
    if (!a.ring()->same_as(*b.ring())) return false;
    if (a.target_.twists != b.target_.twists) return false;
    return a.rel_gb() == b.rel_gb();
}

GradedModule subquotient(const FreeMod& frame, const std::vector<MVec>& gens,
                         const std::vector<MVec>& rels) {
    std::vector<Multideg> twists;
    for (const auto& g : gens) twists.push_back(tolerant_degree(frame, g));
    std::vector<MVec> pres = syz_proj(frame, gens, rels);
    FreeMod tgt{frame.ring, std::move(twists)};
    return GradedModule(std::move(tgt), std::move(pres));
}

GradedModule direct_sum(const GradedModule& a, const GradedModule& b) {
    FreeMod tgt{a.ring(), a.target().twists};
    for (const auto& t : b.target().twists) tgt.twists.push_back(t);
    std::vector<MVec> cols;
    for (const auto& c : a.rel()) {
        MVec v = c;
        v.resize(tgt.rank(), Poly::zero(a.ring()));
        cols.push_back(std::move(v));
    }
    for (const auto& c : b.rel()) {
        MVec v(a.target().rank(), Poly::zero(a.ring()));
        for (const auto& p : c) v.push_back(p);
        cols.push_back(std::move(v));
    }
    return GradedModule(std::move(tgt), std::move(cols));
}

namespace {

// Inverse of a unit (nonzero constant + nilpotent) modulo the quotient ideal.
// Returns nullopt when the candidate is not a unit.
std::optional<Poly> unit_inverse(const Poly& p0, const Ideal& ring_zero) {
    Poly p = ring_zero.normal_form(p0);
    Scalar c = p.constant_coeff();
    if (c.is_zero()) return std::nullopt;
    Poly n = p - Poly::constant(p0.ring(), c); // nilpotent part candidate
    // inverse = (1/c) * sum_k (-n/c)^k, finite when n is nilpotent
    Poly term = Poly::constant(p0.ring(), Scalar(1));
    Poly acc = Poly::zero(p0.ring());
    for (int k = 0; k < 24; ++k) {
        acc = acc + term;
        Poly next = ring_zero.normal_form(term * n.scaled(-c.inv()));
        if (next.is_zero()) return acc.scaled(c.inv());
        term = next;
    }
    return std::nullopt; // not nilpotent within the cap: treat as non-unit
}

std::vector<MVec> nf_columns(const Ideal& ring_zero, std::vector<MVec> cols) {
    for (auto& c : cols)
        for (auto& p : c) p = ring_zero.normal_form(p);
    std::vector<MVec> out;
    for (auto& c : cols)
        if (!mvec_is_zero(c)) out.push_back(std::move(c));
    return out;
}

// Irredundant generating subset: drop any column lying in the span of the rest.
std::vector<MVec> irredundant(const FreeMod& frame, std::vector<MVec> cols) {
    Ideal ring_zero(frame.ring, {});
    cols = nf_columns(ring_zero, std::move(cols));
    std::stable_sort(cols.begin(), cols.end(), [](const MVec& a, const MVec& b) {
        return mvec_total_degree(a) < mvec_total_degree(b);
    });
    for (std::size_t i = cols.size(); i-- > 0;) {
        std::vector<MVec> others;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != i) others.push_back(cols[j]);
        ModGB gb = ModGB::compute(frame, others);
        if (gb.contains(cols[i])) cols.erase(cols.begin() + (long)i);
    }
    return cols;
}

} // namespace

GradedModule minimal_presentation(const GradedModule& M) {
    Ideal ring_zero(M.ring(), {});
    FreeMod tgt = M.target();
    std::vector<MVec> cols = nf_columns(ring_zero, M.rel());

    for (;;) {
        int pr = -1, pc = -1;
        Poly inv;
        for (std::size_t j = 0; j < cols.size() && pr < 0; ++j)
            for (std::size_t i = 0; i < tgt.rank() && pr < 0; ++i) {
                if (cols[j][i].is_zero()) continue;
                auto u = unit_inverse(cols[j][i], ring_zero);
                if (u) { pr = (int)i; pc = (int)j; inv = *u; }
            }
        if (pr < 0) break;
        MVec pivot = cols[pc];
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if ((int)j == pc || cols[j][pr].is_zero()) continue;
            Poly f = ring_zero.normal_form(cols[j][pr] * inv);
            MVec adj = mvec_times_poly(pivot, f);
            cols[j] = mvec_sub(cols[j], adj);
            for (auto& p : cols[j]) p = ring_zero.normal_form(p);
        }
        cols.erase(cols.begin() + pc);
        for (auto& c : cols) c.erase(c.begin() + pr);
        tgt.twists.erase(tgt.twists.begin() + pr);
    }

    cols = irredundant(tgt, std::move(cols));
    return GradedModule(std::move(tgt), std::move(cols));
}

Resolution free_resolution(const GradedModule& M, int max_len) {
    Resolution res;
    GradedModule M0 = minimal_presentation(M);
    res.frames.push_back(M0.target());
    std::vector<MVec> cur = M0.rel();
    for (int i = 0; i < max_len; ++i) {
        if (cur.empty()) { res.complete = true; return res; }
        FreeMod next_frame{M.ring(), {}};
        for (const auto& c : cur)
            next_frame.twists.push_back(tolerant_degree(res.frames.back(), c));
        std::vector<MVec> syz = syzygies(res.frames.back(), cur);
        syz = irredundant(next_frame, std::move(syz));
        res.diffs.push_back(std::move(cur));
        res.frames.push_back(next_frame);
        cur = std::move(syz);
    }
    res.complete = cur.empty();
    return res;
}

int homological_dimension(const GradedModule& M, int cap) {
    Resolution r = free_resolution(M, cap);
    if (!r.complete)
        throw ResourceLimit("homological dimension exceeds cap " + std::to_string(cap));
    return r.length();
}

namespace {

// Columns of the transpose of a differential (columns living in `frame`).
std::vector<MVec> transpose_cols(const FreeMod& frame, const std::vector<MVec>& cols) {
    std::size_t rows = frame.rank(), n = cols.size();
    std::vector<MVec> tcols(rows, MVec(n, Poly::zero(frame.ring)));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < rows; ++i) tcols[i][j] = cols[j][i];
    return tcols;
}

} // namespace

GradedModule dual_module(const GradedModule& M) {
    GradedModule Mm = minimal_presentation(M);
    FreeMod f0v{M.ring(), {}};
    for (const auto& t : Mm.target().twists) f0v.twists.push_back(neg(t));
    if (Mm.rel().empty()) return GradedModule::free_module(f0v);
    // Hom(M,R) = ker(F0^v -> F1^v) along the transposed presentation
    FreeMod f1v{M.ring(), {}};
    for (const auto& t : Mm.src_twists()) f1v.twists.push_back(neg(t));
    std::vector<MVec> tcols = transpose_cols(Mm.target(), Mm.rel());
    std::vector<MVec> ker = syz_proj(f1v, tcols, {});
    return subquotient(f0v, ker, {});
}

GradedModule ext_module(const GradedModule& M, int i) {
    if (i < 1) throw std::invalid_argument("ext_module: i >= 1 required");
    Resolution r = free_resolution(M, i + 1);
    if (r.length() > i || !r.complete)
        throw std::invalid_argument(
            "ext_module: homological dimension exceeds " + std::to_string(i));
    if (r.length() < i) {
        FreeMod empty{M.ring(), {}};
        return GradedModule::free_module(empty); // zero module
    }
    const FreeMod& fim1 = r.frames[i - 1];
    const FreeMod& fi = r.frames[i];
    FreeMod fiv{M.ring(), {}};
    for (const auto& t : fi.twists) fiv.twists.push_back(neg(t));
    std::vector<Multideg> srcv;
    for (const auto& t : fim1.twists) srcv.push_back(neg(t));
    std::vector<MVec> tcols = transpose_cols(fim1, r.diffs[i - 1]);
    return GradedModule(fiv, srcv, tcols);
}

bool ModuleMap::well_defined(std::string* why) const {
    for (std::size_t j = 0; j < src.rel().size(); ++j) {
        MVec img = mvec_zero(dst.target());
        for (std::size_t i = 0; i < src.ngens(); ++i)
            img = mvec_add(img, mvec_times_poly(cols[i], src.rel()[j][i]));
        if (!dst.rel_gb().contains(img)) {
            if (why) *why = "relation column " + std::to_string(j) +
                            " does not map into the target relations";
            return false;
        }
    }
    return true;
}

GradedModule map_kernel(const ModuleMap& f) {
    std::vector<MVec> U = syz_proj(f.dst.target(), f.cols, f.dst.rel());
    // U columns are coordinates in the source generator frame
    return subquotient(f.src.target(), U, f.src.rel());
}

GradedModule map_cokernel(const ModuleMap& f) {
    std::vector<MVec> rels = f.dst.rel();
    for (const auto& c : f.cols) rels.push_back(c);
    return GradedModule(f.dst.target(), std::move(rels));
}

GradedModule map_image(const ModuleMap& f) {
    return subquotient(f.dst.target(), f.cols, f.dst.rel());
}

Poly RingMap::apply(const Poly& p) const {
    Poly acc = Poly::zero(dst);
    for (const auto& t : p.terms()) {
        Poly m = Poly::constant(dst, t.coeff);
        for (std::size_t v = 0; v < t.exps.size(); ++v) {
            for (int k = 0; k < t.exps[v]; ++k) {
                m = m * images[v];
                if (m.is_zero()) break;
            }
            if (m.is_zero()) break;
        }
        acc = acc + m;
    }
    return acc;
}

Multideg RingMap::map_degree(const Multideg& d) const {
    Multideg r(dst->gdim(), 0);
    for (int i = 0; i < dst->gdim(); ++i)
        for (int j = 0; j < src->gdim(); ++j) r[i] += deg_map[i][j] * d[j];
    return r;
}

bool RingMap::respects_quotient() const {
    Ideal dst_zero(dst, {});
    for (const auto& q : src->quotient_terms())
        if (!dst_zero.contains(apply(Poly(src, q)))) return false;
    return true;
}

GradedModule pullback(const GradedModule& M, const RingMap& f) {
    if (!f.respects_quotient())
        throw std::invalid_argument("pullback: ring map does not respect quotients");
    FreeMod tgt{f.dst, {}};
    for (const auto& t : M.target().twists) tgt.twists.push_back(f.map_degree(t));
    std::vector<Multideg> src;
    for (const auto& t : M.src_twists()) src.push_back(f.map_degree(t));
    std::vector<MVec> cols;
    for (const auto& c : M.rel()) {
        MVec v;
        v.reserve(c.size());
        for (const auto& p : c) v.push_back(f.apply(p));
        cols.push_back(std::move(v));
    }
    return GradedModule(std::move(tgt), std::move(src), std::move(cols));
}

Poly transplant_by_name(const Poly& p, const RingPtr& to) {
    const RingPtr& from = p.ring();
    std::vector<int> where(from->nvars(), -1);
    for (std::size_t i = 0; i < from->nvars(); ++i)
        where[i] = to->var_index(from->vars()[i]);
    TermList out;
    for (const auto& t : p.terms()) {
        Exps e(to->nvars(), 0);
        for (std::size_t i = 0; i < t.exps.size(); ++i) {
            if (t.exps[i] == 0) continue;
            if (where[i] < 0)
                throw std::invalid_argument("transplant_by_name: variable '" +
                                            from->vars()[i] + "' missing in target");
            e[where[i]] = t.exps[i];
        }
        out.push_back({std::move(e), t.coeff});
    }
    return Poly(to, std::move(out));
}

RingMap ring_map_by_name(const RingPtr& src, const RingPtr& dst,
                         std::vector<std::vector<long>> deg_map) {
    RingMap f;
    f.src = src;
    f.dst = dst;
    f.deg_map = std::move(deg_map);
    for (std::size_t i = 0; i < src->nvars(); ++i) {
        int j = dst->var_index(src->vars()[i]);
        if (j < 0)
            throw std::invalid_argument("ring_map_by_name: variable '" +
                                        src->vars()[i] + "' missing in target");
        f.images.push_back(Poly::variable(dst, j));
    }
    return f;
}

TorsionResult torsion_submodule(const GradedModule& M, const Ideal& J) {
    if (J.gens().empty() || J.is_zero())
        throw std::invalid_argument("torsion_submodule: zero ideal");
    auto [sat, steps] = submodule_saturate(M.target(), M.rel(), J.gens());
    std::vector<MVec> extra;
    for (const auto& v : sat)
        if (!M.rel_gb().contains(v)) extra.push_back(v);
    TorsionResult out;
    out.steps = steps;
    out.tors_gens = extra;
    out.tors = subquotient(M.target(), extra, M.rel());
    std::vector<MVec> qrel = M.rel();
    for (const auto& v : extra) qrel.push_back(v);
    out.quotient = GradedModule(M.target(), std::move(qrel));
    return out;
}

} // namespace sheafres
