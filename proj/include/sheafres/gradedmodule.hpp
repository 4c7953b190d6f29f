#pragma once

#include "sheafres/ideal.hpp"

namespace sheafres {

// Finitely presented module: coker of a graded matrix between free modules.
// Entry (i,j) is homogeneous of multidegree src_twist[j] - tgt_twist[i] in the
// graded case; chart-level (inhomogeneous) data is carried with zero twists.
class GradedModule {
public:
    GradedModule() = default;
    GradedModule(FreeMod target, std::vector<Multideg> src_twists,
                 std::vector<MVec> rel_columns);
    // Source twists inferred from homogeneous columns (zero for inhomogeneous).
    GradedModule(FreeMod target, std::vector<MVec> rel_columns);

    static GradedModule free_module(FreeMod f) { return GradedModule(std::move(f), {}, {}); }
    // Row-major matrix of a presentation, dimensions rank(target) x |src_twists|.
    static GradedModule from_rows(FreeMod target, std::vector<Multideg> src_twists,
                                  const std::vector<std::vector<Poly>>& rows);

    const RingPtr& ring() const { return target_.ring; }
    const FreeMod& target() const { return target_; }
    const std::vector<Multideg>& src_twists() const { return src_twists_; }
    const std::vector<MVec>& rel() const { return rel_; }
    std::size_t ngens() const { return target_.rank(); }

    const ModGB& rel_gb() const; // cached reduced basis of <rel> + Q*F
    bool is_zero() const;
    bool gen_in_relations(std::size_t i) const;

    // True when every entry is homogeneous of the degree forced by the twists.
    bool check_homogeneous(std::string* why = nullptr) const;

    friend bool operator==(const GradedModule& a, const GradedModule& b);

private:
    FreeMod target_;
    std::vector<Multideg> src_twists_;
    std::vector<MVec> rel_;
    mutable std::shared_ptr<const ModGB> gb_;
};

// (gens + rels)/rels inside frame/rels, presented on the given generators.
GradedModule subquotient(const FreeMod& frame, const std::vector<MVec>& gens,
                         const std::vector<MVec>& rels);

GradedModule direct_sum(const GradedModule& a, const GradedModule& b);

// Unit-entry Gaussian pruning (units = constant + nilpotent, inverted by a
// finite geometric series modulo the quotient ideal) plus removal of
// redundant relation columns.
GradedModule minimal_presentation(const GradedModule& M);

struct Resolution {
    std::vector<FreeMod> frames;            // frames[0] = minimal generators
    std::vector<std::vector<MVec>> diffs;   // diffs[i]: frames[i+1] -> frames[i]
    bool complete = false;                  // syzygies vanished within the cap
    int length() const { return (int)diffs.size(); }
};

// Minimal free resolution up to max_len steps. Each differential is an
// irredundant generating set of the syzygies of the previous one.
Resolution free_resolution(const GradedModule& M, int max_len);

// Length of the minimal resolution; throws ResourceLimit when it exceeds cap.
int homological_dimension(const GradedModule& M, int cap = 8);

// Hom(M, R) presented as a module.
GradedModule dual_module(const GradedModule& M);
// Ext^i(M, R) for i >= 1 as coker of the dualized i-th differential;
// requires hd(M) <= i (verified), returns the zero module when hd < i.
GradedModule ext_module(const GradedModule& M, int i);

struct ModuleMap {
    GradedModule src;
    GradedModule dst;
    std::vector<MVec> cols; // image of src generator j in dst's target frame

    bool well_defined(std::string* why = nullptr) const;
};

GradedModule map_kernel(const ModuleMap& f);
GradedModule map_cokernel(const ModuleMap& f);
GradedModule map_image(const ModuleMap& f);

struct RingMap {
    RingPtr src;
    RingPtr dst;
    std::vector<Poly> images;               // one per src variable
    std::vector<std::vector<long>> deg_map; // g_dst x g_src

    Poly apply(const Poly& p) const;
    Multideg map_degree(const Multideg& d) const;
    // Each quotient generator of src must map into dst's quotient ideal.
    bool respects_quotient() const;
};

GradedModule pullback(const GradedModule& M, const RingMap& f);

// Rebuild p over `to`, matching variables by name (all used variables must exist).
Poly transplant_by_name(const Poly& p, const RingPtr& to);
// Variable-to-same-named-variable map with an explicit degree transformation.
RingMap ring_map_by_name(const RingPtr& src, const RingPtr& dst,
                         std::vector<std::vector<long>> deg_map);

struct TorsionResult {
    GradedModule tors;          // presented on its own generators
    std::vector<MVec> tors_gens; // the same generators as elements of M's frame
    GradedModule quotient;      // M / tors
    int steps = 0;
};

// J-power torsion (relations : J^infty)/relations with its inclusion data.
TorsionResult torsion_submodule(const GradedModule& M, const Ideal& J);

} // namespace sheafres
