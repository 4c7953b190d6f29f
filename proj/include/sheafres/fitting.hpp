#pragma once

#include "sheafres/gradedmodule.hpp"

namespace sheafres {

// Determinant of a square polynomial matrix (row-major), exact expansion.
Poly poly_det(const RingPtr& ring, const std::vector<std::vector<Poly>>& rows);

struct FittResult {
    Ideal ideal;
    int minor_size = 0;       // rank of the target free module
    std::size_t nrows = 0;    // presentation dimensions after zero-padding
    std::size_t ncols = 0;
};

// Zeroth Fitting ideal: all (rank target)-minors of the presentation matrix,
// zero-padded so the source rank is at least the target rank.
FittResult fitt0(const GradedModule& M);

// k-th Fitting ideal: ideal of (n-k)-minors of the presentation (n = target
// rank); the unit ideal for k >= n, the zero ideal when minors cannot be formed.
Ideal fitt(const GradedModule& M, int k);

enum class Invertibility { Yes, No, Inconclusive };

struct InvertibilityResult {
    Invertibility verdict = Invertibility::Inconclusive;
    std::optional<Poly> witness; // principal nonzerodivisor generator
    std::string note;
};

// Invertibility of an ideal sheaf over a ring with irreducible reduction:
// principal with a nonzerodivisor generator. Division-based principality
// test with an honest inconclusive verdict.
InvertibilityResult is_invertible_ideal(const Ideal& I);

struct FittHdReport {
    int hd = -1;
    FittResult fitt;
    InvertibilityResult invertible;
    bool biconditional_holds = false;
    std::string note;
};

// The equivalence laboratory: hd(M) = 1 iff Fitt0(M) is invertible, for
// nonzero modules supported in codimension >= 1 over rings whose reduction
// is irreducible. Preconditions are machine-checked unless the caller
// asserts irreducibility structurally.
FittHdReport fitting_hd_check(const GradedModule& M, int hd_cap = 8,
                              bool assume_irreducible_reduction = false);

// Every quotient generator nilpotent: the reduction is the polynomial ring.
bool ring_reduction_irreducible(const RingPtr& ring);

// Adjugate-style identity for an n x (n+r) matrix: with a the leading n-minor
// and D_jk the minor with column j replaced by column k, checks
// sum_j A[i][j] * D_jk = A[i][k] * a for all i and all k >= n, modulo the
// quotient ideal. An arithmetic self-test of the minor engine.
bool cramer_identity_check(const RingPtr& ring,
                           const std::vector<std::vector<Poly>>& rows);

} // namespace sheafres
