#pragma once

#include "sheafres/poly.hpp"

#include <optional>
#include <vector>

namespace sheafres {

// Free module with one twist (generator multidegree) per basis element.
struct FreeMod {
    RingPtr ring;
    std::vector<Multideg> twists;

    std::size_t rank() const { return twists.size(); }
};

// Element of a free module: one polynomial per component.
using MVec = std::vector<Poly>;

MVec mvec_zero(const FreeMod& fm);
bool mvec_is_zero(const MVec& v);
MVec mvec_add(const MVec& a, const MVec& b);
MVec mvec_sub(const MVec& a, const MVec& b);
MVec mvec_scaled(const MVec& a, const Scalar& c);
MVec mvec_times_monomial(const MVec& a, const Exps& e, const Scalar& c);
MVec mvec_times_poly(const MVec& a, const Poly& p);
bool mvec_eq(const MVec& a, const MVec& b);

// Homogeneity of v in fm; degree written to *deg when homogeneous and nonzero.
bool mvec_homogeneous(const FreeMod& fm, const MVec& v, Multideg* deg = nullptr);
// Multidegree of a homogeneous nonzero vector.
Multideg mvec_degree(const FreeMod& fm, const MVec& v);
long mvec_total_degree(const MVec& v);

struct ModLead {
    int comp = -1;
    Exps exps;
    Scalar coeff;
};

// Term-over-position order with an optional component-elimination split:
// terms in components < elim_split dominate all terms in components >= elim_split.
struct ModOrder {
    int elim_split = 0; // 0: no split
};

ModLead mod_lead(const Ring& ring, const MVec& v, const ModOrder& ord);

// Reduced Groebner basis of a submodule of a free module. Quotient-ideal
// relations q*e_c are appended automatically unless suppressed.
class ModGB {
public:
    ModGB() = default;
    static ModGB compute(const FreeMod& fm, std::vector<MVec> gens,
                         ModOrder ord = {}, bool include_quotient = true);

    const FreeMod& fm() const { return fm_; }
    const std::vector<MVec>& basis() const { return basis_; }
    const ModOrder& order() const { return ord_; }

    MVec normal_form(MVec v) const;
    bool contains(const MVec& v) const;

    // Reduced bases are canonical, so equality of submodules is basis equality.
    friend bool operator==(const ModGB& a, const ModGB& b);

private:
    FreeMod fm_;
    ModOrder ord_;
    std::vector<MVec> basis_;
    std::vector<ModLead> leads_;
};

// Columns generating the syzygy module of cols (as submodule of R^{cols.size()},
// over the quotient ring when present). Their twists are the column degrees.
std::vector<MVec> syzygies(const FreeMod& target, const std::vector<MVec>& cols);

// First-block parts of the syzygies of [A | B]: generators of
// { a in R^{|A|} : A a lies in <B> + Q*target }.
std::vector<MVec> syz_proj(const FreeMod& target, const std::vector<MVec>& A,
                           const std::vector<MVec>& B);

// Coefficients a with v = sum a_j gens_j modulo Q*target, when v lies in the
// span; nullopt otherwise.
std::optional<std::vector<Poly>> express_in(const FreeMod& target,
                                            const std::vector<MVec>& gens,
                                            const MVec& v);

// Submodule operations inside a fixed free module (all modulo the quotient ideal).
std::vector<MVec> submodule_intersect(const FreeMod& fm, const std::vector<MVec>& U,
                                      const std::vector<MVec>& V);
// (U : g) = { v : g v in <U> }.
std::vector<MVec> submodule_colon_poly(const FreeMod& fm, const std::vector<MVec>& U,
                                       const Poly& g);
std::vector<MVec> submodule_colon(const FreeMod& fm, const std::vector<MVec>& U,
                                  const std::vector<Poly>& J);
// (U : J^infty) with stabilization step count.
std::pair<std::vector<MVec>, int> submodule_saturate(const FreeMod& fm,
                                                     const std::vector<MVec>& U,
                                                     const std::vector<Poly>& J);

Multideg column_degree(const FreeMod& fm, const MVec& col);

} // namespace sheafres
