#pragma once

#include "sheafres/linalg.hpp"
#include "sheafres/module.hpp"

#include <optional>

namespace sheafres {

// Ideal in a ring (modulo its quotient ideal when present). Immutable; the
// reduced Groebner basis is computed once on demand and cached.
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Poly> gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Poly>& gens() const { return gens_; }

    const ModGB& groebner() const;
    // Groebner basis elements as polynomials (includes reduced quotient generators).
    std::vector<Poly> basis() const;

    Poly normal_form(const Poly& f) const;
    bool contains(const Poly& f) const { return normal_form(f).is_zero(); }
    bool contains_ideal(const Ideal& other) const;
    bool is_unit() const;
    // Zero ideal in the quotient ring (i.e. equal to the quotient ideal).
    bool is_zero() const;

    friend bool operator==(const Ideal& a, const Ideal& b);

private:
    RingPtr ring_;
    std::vector<Poly> gens_;
    mutable std::shared_ptr<const ModGB> gb_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
Ideal ideal_colon(const Ideal& a, const Ideal& b);
struct SaturationResult {
    Ideal ideal;
    int steps = 0;
};
SaturationResult ideal_saturate(const Ideal& a, const Ideal& b);

// (Q : a) = Q test; rejects a = 0 (as element of the quotient ring).
bool is_nonzerodivisor(const Poly& a, const RingPtr& ring);

// Result ideal lives over the subring without the dropped variables; the
// ring's quotient generators must avoid them. Block-order elimination.
struct Elimination {
    Ideal ideal;            // over the subring
    RingPtr subring;
    std::vector<int> kept;  // original indices of subring variables
};
Elimination eliminate(const Ideal& I, const std::vector<int>& drop_vars);
// Same computation, viewed inside the original ring.
Ideal eliminate_in_ring(const Ideal& I, const std::vector<int>& drop_vars);

// Krull dimension of R/(LT(I + Q)) via independent variable sets.
int lt_dimension(const Ideal& I);
// dim V(Q) - dim V(I + Q), both through leading terms.
int support_codim(const Ideal& I);

// Monomial k-basis of ring/(I + Q); nullopt when infinite-dimensional.
std::optional<std::vector<Exps>> quotient_monomial_basis(const Ideal& I);

// Dense coordinates of f in the monomial basis.
QVector coords_in_basis(const Ideal& I, const std::vector<Exps>& basis, const Poly& f);

// Monic minimal polynomial of multiplication by f on ring/(I + Q); coefficient
// vector c with c[0] + c[1] x + ... + x^d.
QVector minimal_polynomial(const Ideal& I, const Poly& f);

QVector squarefree_part(const QVector& monic);

// Radical of a zero-dimensional ideal (univariate squarefree parts adjoined).
Ideal radical_zero_dimensional(const Ideal& I);

// Number of geometric points of V(I) in the affine ring: dim_k of the reduced
// quotient algebra (counts points over the algebraic closure).
int geometric_point_count(const Ideal& I);

} // namespace sheafres
