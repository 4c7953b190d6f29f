#pragma once

#include "sheafres/hilbert.hpp"

namespace sheafres {

// Affine zero-dimensional subscheme: finite quotient algebra over its ring.
struct ZeroDimSubscheme {
    RingPtr ring;
    Ideal ideal;
    int length = 0; // k-dimension of the quotient algebra

    static ZeroDimSubscheme make(RingPtr ring, Ideal ideal);
};

// Affine chart y_i = 1 (and x_c = 1 on a projective base direction).
struct ModelChart {
    RingPtr ring;     // quotient carries the dehomogenized relations
    int y_index = -1;
    int x_index = -1; // -1 when the base block is untouched
    Poly chart_generator; // f_{y_index} dehomogenized: generates J*O on the chart
    std::vector<int> kept; // ambient variable indices surviving in the chart
};

// Elimination-computed multiproj embedding of Bl_J(base).
struct BlowupModel {
    RingPtr base;
    Ideal center;                  // J as given (original generators)
    std::vector<Poly> generators;  // f_0..f_m, uniform base multidegree
    Multideg gen_degree;
    RingPtr ambient;               // base vars + y's; quotient = base quotient
    RingPtr total_ring;            // ambient + relations in the quotient
    Ideal relations;               // over ambient
    Multideg taut_twist;           // y-row unit vector
    int y_offset = 0;              // index of y_0 in ambient
    bool dominant_checked = false; // relations cut nothing out of the base

    std::size_t nfibers() const { return generators.size(); }
    RingMap sigma() const;                    // base -> total_ring
    RingMap sigma_to(const RingPtr& to) const;
    ModelChart chart(int i, int x_chart = -1) const;
    std::vector<int> base_proj_vars() const;  // ambient indices of base x-block
};

struct BlowupOptions {
    bool check_chartwise_generation = true;
    bool check_dominance = true; // only meaningful for reduced irreducible bases
};

// Blowup of `base` in J, embedded by the given uniform-degree generator list.
BlowupModel rees_embed(const Ideal& J, std::vector<Poly> generators,
                       BlowupOptions opts = {});

// Degree-d sheaf generators of J over the projective base: each generator
// multiplied up to x-degree d, redundant products pruned.
std::vector<Poly> generators_in_degree(const Ideal& J, long d);

// Admissible degenerate scheme: the t = 0 fiber of the blowup of base x A^1
// in (I + (t)), with main/additional decomposition and the distinguished
// polarization twist.
struct AdmissibleScheme {
    BlowupModel model;       // blowup of base x A^1 (the degeneration total space)
    int t_index = -1;        // ambient index of t
    RingPtr fiber_ring;      // coordinate ring of the fiber (defining in quotient)
    Ideal defining;          // saturated fiber ideal over model.ambient
    Ideal main_component;
    Ideal additional;
    Ideal exceptional;       // (sigma^{-1}(I+(t))) * O + defining
    Multideg polarization_twist; // (k - d) on the x row, 1 on the y row
    long retwist_k = 2;
    long gen_degree = 1;
    int component_count = 0;      // geometric support points of `additional`
    bool decomposition_consistent = false;
};

// I defines a zero-dimensional subscheme of the projective base (saturated).
AdmissibleScheme admissible_scheme(const Ideal& I, long d, long k);

// Same construction when the degeneration parameter already lives in the
// base ring of J (families over a curve): no auxiliary A^1 is adjoined.
AdmissibleScheme admissible_scheme_from_center(const Ideal& J, int t_index, long d,
                                               long k);

// chi(L~^n) on the fiber via saturated graded dimensions.
HilbertResult polarization_chi(const AdmissibleScheme& X, HilbertOptions opts = {});

// sigma^* of a base module onto the total space or the fiber.
GradedModule pullback_to_total(const GradedModule& M, const BlowupModel& X);
GradedModule pullback_to_fiber(const GradedModule& M, const AdmissibleScheme& X);

// Tautological invariant: J*O is principal on every chart, generated by the
// chart generator, which must be a nonzerodivisor there.
struct ChartCert {
    int y_index;
    int x_index;
    bool principal;
    bool nonzerodivisor;
};
std::vector<ChartCert> tautological_certificates(const BlowupModel& X);

struct SectionCertificate {
    int y_chart = -1;
    int x_chart = -1;
    ZeroDimSubscheme section;          // in the chart ring
    std::vector<Poly> substitutions;   // image of each chart fiber variable
    bool verified = false;             // both composites are identities
};

// Searches the charts for a subscheme mapping isomorphically onto Z under
// the blowdown; Z lives in an affine chart of the base (x_chart identifies
// the dehomogenized base direction when the base is projective).
std::optional<SectionCertificate> infinitesimal_section(const BlowupModel& X,
                                                        const ZeroDimSubscheme& Z,
                                                        int x_chart = -1);

// Distinct geometric support points of a homogeneous ideal on the projective
// base (charts x_2 = 1, x_2 = 0 & x_1 = 1, x_0 only), nilpotent directions
// reduced away.
int projective_support_points(const Ideal& I, const std::vector<int>& proj_vars);

// Substitute the chart's dropped variables by 1 in an ambient polynomial.
Poly chart_restrict(const ModelChart& ch, const Poly& p_ambient);

// Saturation by the product of the ring's irrelevant block ideals.
Ideal saturate_irrelevant(const Ideal& I);

// Generators of the product of the irrelevant block ideals.
std::vector<Poly> irrelevant_ideal_gens(const RingPtr& R);

// Affine chart of the degenerate fiber (defining relations joined in).
ModelChart fiber_chart(const AdmissibleScheme& X, int i, int x_chart);

} // namespace sheafres
