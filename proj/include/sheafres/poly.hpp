#pragma once

#include "sheafres/ring.hpp"

#include <optional>
#include <string>

namespace sheafres {

// Sparse polynomial. Terms kept sorted strictly descending in the ring's
// monomial order; no zero coefficients stored.
class Poly {
public:
    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
    Poly(RingPtr ring, TermList terms); // normalizes (sorts, merges, drops zeros)

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
    static Poly constant(RingPtr ring, const Scalar& c);
    static Poly variable(RingPtr ring, int var, int exp = 1);
    static Poly monomial(RingPtr ring, Exps e, Scalar c = Scalar(1));

    const RingPtr& ring() const { return ring_; }
    const TermList& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t nterms() const { return terms_.size(); }

    const Term& lead() const;
    const Exps& lead_exps() const { return lead().exps; }
    const Scalar& lead_coeff() const { return lead().coeff; }

    // Homogeneity with respect to the full multigrading.
    bool is_homogeneous() const;
    // Multidegree of a nonzero homogeneous polynomial.
    Multideg multidegree() const;
    long total_degree() const; // max total degree over terms; -1 for zero

    Scalar coeff_of(const Exps& e) const;
    Scalar constant_coeff() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const Scalar& c) const;
    Poly times_monomial(const Exps& e, const Scalar& c) const;

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Canonical text form (round-trips through the parser).
    std::string str() const;

    // Same terms transplanted into another ring (same variable count assumed),
    // re-sorted under the new order.
    Poly with_ring(RingPtr other) const;

private:
    void normalize();
    RingPtr ring_;
    TermList terms_;
};

std::string monomial_str(const Ring& ring, const Exps& e);

} // namespace sheafres
