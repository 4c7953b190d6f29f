#pragma once

#include "sheafres/gradedmodule.hpp"

namespace sheafres {

// Univariate polynomial in n with rational coefficients, valid for n >= n0.
struct HilbertPoly {
    std::vector<Scalar> coeffs; // coeffs[k] multiplies n^k
    long n0 = 0;

    Scalar eval(long n) const;
    int degree() const;
    std::string str() const;

    friend bool operator==(const HilbertPoly& a, const HilbertPoly& b) {
        return a.coeffs == b.coeffs;
    }
    friend bool operator!=(const HilbertPoly& a, const HilbertPoly& b) {
        return !(a == b);
    }
};

HilbertPoly hp_from_coeffs(std::vector<long> coeffs);
HilbertPoly hp_add(const HilbertPoly& a, const HilbertPoly& b);
HilbertPoly hp_sub(const HilbertPoly& a, const HilbertPoly& b);

struct HilbertOptions {
    std::optional<long> n0;  // default: sum of |twist| entries + variable count
    int npoints = 9;
    int guard = 3;           // interpolant must match this many extra points
    bool saturate = true;    // saturate by the product of irrelevant block ideals
};

struct HilbertFailure : std::runtime_error {
    HilbertFailure(std::string msg, std::vector<long> table)
        : std::runtime_error(std::move(msg)), dimension_table(std::move(table)) {}
    std::vector<long> dimension_table;
};

struct HilbertResult {
    HilbertPoly poly;
    long n0 = 0;
    std::vector<long> dims;  // dimension table over the window
    int saturation_steps = 0;
};

// Saturate the relation submodule by the product of the ring's irrelevant
// block ideals (no-op when the ring declares none).
GradedModule saturate_module(const GradedModule& M, int* steps = nullptr);

// k-dimension of the graded piece of M in multidegree d (no saturation).
// Throws HilbertFailure when the piece is not finite-dimensional.
long graded_piece_dim(const GradedModule& M, const Multideg& d);

// Dimensions along n * direction, with stabilization-guarded interpolation.
HilbertResult hilbert_polynomial(const GradedModule& M, const Multideg& direction,
                                 HilbertOptions opts = {});

} // namespace sheafres
