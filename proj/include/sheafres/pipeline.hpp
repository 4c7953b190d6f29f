#pragma once

#include "sheafres/blowup.hpp"
#include "sheafres/fitting.hpp"

namespace sheafres {

// Artinian quotient datum q0 : O^r -> kappa.
struct QuotientDatum {
    GradedModule kappa;
    std::vector<MVec> q_cols; // one column per O^r basis element, in kappa's frame
    long length = 0;
};

struct InputSheaf {
    GradedModule E;
    long rank = 1;
    long retwist_k = 2;
    std::optional<QuotientDatum> q0;
};

// Base algebra of a family: an optional curve direction plus an Artinian part,
// both living inside the module's ring.
struct FamilyBase {
    std::vector<std::string> curve_vars;    // at most one
    std::vector<std::string> artinian_vars; // nilpotent directions (quotient-bound)
    bool reduction_irreducible = true;
};

struct GateResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct FlatnessReport {
    std::vector<long> window;
    std::vector<int> depths;
    std::vector<std::vector<Scalar>> varpi; // varpi[depth index][window index]
    std::vector<std::string> subscheme_names;
    std::vector<std::vector<Scalar>> subscheme_varpi;
    bool criterion_flat = false;
    bool oracle_flat = false;
    bool agree = false;
    long lambda_dim = 0;
};

// Prop.-2-style flatness table over the Artinian directions mvars, with the
// direct freeness oracle; verdicts must agree.
FlatnessReport flat_check(const GradedModule& M, const std::vector<std::string>& mvars,
                          const Multideg& direction, long n0, int npoints,
                          const std::vector<int>& depths,
                          const std::vector<Ideal>& subschemes = {});

// Content-ideal test: no fiber of the projection away from the fiber_vars
// block lies inside V(center).
bool check_birational_triviality(const Ideal& center,
                                 const std::vector<int>& fiber_vars);

struct StandardResolutionTrace {
    GradedModule family;              // working family over base (x) k[t]
    std::vector<std::size_t> aug_rows; // augmentation rows in the family frame
    RingPtr family_ring;
    int t_var = -1;
    GradedModule ext1;                // over family_ring
    GradedModule W;                   // coker(E^v -> E0^v)
    GradedModule Qfac;                // im(E0^v -> E1^v) downstairs
    Ideal fitt_raw;
    Ideal center;
    AdmissibleScheme scheme;
    GradedModule sigmaE;              // pulled family on the total space
    GradedModule N;                   // im(sigma* E0^v -> sigma* E1^v)
    GradedModule Ehat_dual;
    GradedModule Ehat_a;              // kernel-dual construction
    std::vector<MVec> tors_gens;      // exceptional-power torsion of sigmaE
    GradedModule Ehat_b;              // sigmaE / tors
    GradedModule Etilde_fiber;        // fiber restriction, unaugmented
};

struct PairReport {
    bool identity_pair = false;
    long rank = 0;
    long retwist_k = 2;
    HilbertPoly rp;                // chi(E (x) L^{kn})
    HilbertPoly chi_Etilde;        // chi(E~ (x) L~^n)
    HilbertPoly chi_polarization;  // chi(L~^n)
    HilbertPoly chi_plane;         // chi(O_S(kn)) reference
    GradedModule Etilde;           // minimal presentation (fiber ring / base ring)
    std::vector<GateResult> gates;
    std::vector<ChartCert> taut_certs;
    std::vector<std::pair<std::string, std::string>> chart_fitt; // chart -> verdict
    int component_count = 0;
    std::optional<FlatnessReport> base_flatness; // Artinian-mode output flatness
    std::shared_ptr<StandardResolutionTrace> trace;

    bool all_gates_pass() const {
        for (const auto& g : gates)
            if (!g.pass) return false;
        return true;
    }
    const GateResult* gate(const std::string& name) const {
        for (const auto& g : gates)
            if (g.name == name) return &g;
        return nullptr;
    }
};

struct ResolveOptions {
    HilbertOptions hopts;            // window control for all chi computations
    std::vector<int> depths{0, 1, 2};
    bool run_flatness = true;
};

// The standard resolution of a single sheaf on the base surface.
PairReport resolve_sheaf(const InputSheaf& in, ResolveOptions opts = {});

// The standard resolution of a flat family over the declared base.
PairReport resolve_family(const InputSheaf& fam, const FamilyBase& base,
                          ResolveOptions opts = {});

struct QuasiIdealityReport {
    bool pass = false;
    bool vacuous = false; // no additional components
    std::vector<long> lhs_dims;
    std::vector<long> rhs_dims;
    bool presentations_match = false;
    std::string note;
};

// Compare E~ restricted to the additional components against
// sigma^* ker(q0) / tors computed independently through the degeneration.
QuasiIdealityReport verify_quasi_ideality(const PairReport& pair,
                                          const QuotientDatum& q0,
                                          ResolveOptions opts = {});

struct Candidate {
    std::string name;
    GradedModule F;
    std::vector<MVec> inclusion; // columns into E's generator frame
};

struct SemistabilityRow {
    std::string name;
    long rank = 0;
    HilbertPoly chi;
    std::string verdict; // "strict", "equal", "destabilizes"
};

struct SemistabilityReport {
    std::vector<SemistabilityRow> rows;
    HilbertPoly chi_E;
    long rank_E = 0;
    std::string verdict; // "stable", "semistable", "destabilized", "vacuous"
};

SemistabilityReport check_semistability(const GradedModule& E,
                                        const std::vector<Candidate>& candidates,
                                        const Multideg& direction,
                                        HilbertOptions opts = {});

struct DescentReport {
    bool section_found = false;
    int y_chart = -1;
    bool equal = false;
    bool length_consistent = false; // chi over Z equals fiber chi times length
    std::vector<Scalar> lhs;        // chi over Z_t
    std::vector<Scalar> rhs;        // chi over Z'_t through the pulled-back family
    std::string note;
};

// chi of M over the preimage of Z_t computed downstairs, and upstairs through
// an infinitesimal section of the auxiliary base model; exact equality.
DescentReport flatness_descent_check(const PairReport& pair, const BlowupModel& base_model,
                                     const ZeroDimSubscheme& Z, ResolveOptions opts = {});

// chi(E (x) L^{k n}) via graded dimensions on the base.
HilbertResult base_chi(const GradedModule& E, long k, HilbertOptions opts = {});

// Degeneration family of a sheaf: presentation augmented by one t-column so
// the Fitting center acquires the (I + (t)) shape. Requires a rank-one first
// syzygy module.
struct DegenerationFamily {
    GradedModule family;
    std::vector<std::size_t> aug_rows;
    RingPtr family_ring;
    int t_var = -1;
};
DegenerationFamily degeneration_family(const GradedModule& E);

} // namespace sheafres
