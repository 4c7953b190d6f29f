#include "sheafres/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sheafres {

Poly::Poly(RingPtr ring, TermList terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    for (const auto& t : terms_)
        if (t.exps.size() != ring_->nvars())
            throw std::invalid_argument("Poly: exponent vector length mismatch");
    normalize();
}

Poly Poly::constant(RingPtr ring, const Scalar& c) {
    if (c.is_zero()) return zero(std::move(ring));
    Exps e(ring->nvars(), 0);
    TermList ts{{std::move(e), c}};
    return Poly(std::move(ring), std::move(ts));
}

Poly Poly::variable(RingPtr ring, int var, int exp) {
    if (var < 0 || var >= (int)ring->nvars())
        throw std::invalid_argument("Poly::variable: index out of range");
    Exps e(ring->nvars(), 0);
    e[var] = exp;
    TermList ts{{std::move(e), Scalar(1)}};
    return Poly(std::move(ring), std::move(ts));
}

Poly Poly::monomial(RingPtr ring, Exps e, Scalar c) {
    if (c.is_zero()) return zero(std::move(ring));
    TermList ts{{std::move(e), std::move(c)}};
    return Poly(std::move(ring), std::move(ts));
}

void Poly::normalize() {
    std::sort(terms_.begin(), terms_.end(), [this](const Term& a, const Term& b) {
        return ring_->mono_cmp(a.exps, b.exps) > 0;
    });
    TermList merged;
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().exps == t.exps)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(std::move(t));
        if (!merged.empty() && merged.back().coeff.is_zero()) merged.pop_back();
    }
    terms_ = std::move(merged);
}

const Term& Poly::lead() const {
    if (terms_.empty()) throw std::logic_error("Poly::lead on zero polynomial");
    return terms_.front();
}

bool Poly::is_homogeneous() const {
    if (terms_.size() <= 1) return true;
    Multideg d = ring_->exps_degree(terms_[0].exps);
    for (std::size_t i = 1; i < terms_.size(); ++i)
        if (ring_->exps_degree(terms_[i].exps) != d) return false;
    return true;
}

Multideg Poly::multidegree() const {
    if (is_zero()) throw std::logic_error("multidegree of zero polynomial");
    return ring_->exps_degree(terms_[0].exps);
}

long Poly::total_degree() const {
    long d = -1;
    for (const auto& t : terms_) d = std::max(d, ring_->total_degree(t.exps));
    return d;
}

Scalar Poly::coeff_of(const Exps& e) const {
    for (const auto& t : terms_)
        if (t.exps == e) return t.coeff;
    return Scalar(0);
}

Scalar Poly::constant_coeff() const {
    if (terms_.empty()) return Scalar(0);
    return coeff_of(Exps(ring_->nvars(), 0));
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    if (a.ring_ == nullptr) return b;
    if (b.ring_ == nullptr) return a;
    if (!a.ring_->same_as(*b.ring_)) throw std::invalid_argument("Poly +: ring mismatch");
    // merge two sorted term lists
    TermList out;
    out.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        int c = a.ring_->mono_cmp(a.terms_[i].exps, b.terms_[j].exps);
        if (c > 0) out.push_back(a.terms_[i++]);
        else if (c < 0) out.push_back(b.terms_[j++]);
        else {
            Scalar s = a.terms_[i].coeff + b.terms_[j].coeff;
            if (!s.is_zero()) out.push_back({a.terms_[i].exps, std::move(s)});
            ++i; ++j;
        }
    }
    for (; i < a.terms_.size(); ++i) out.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) out.push_back(b.terms_[j]);
    Poly r(a.ring_);
    r.terms_ = std::move(out);
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly Poly::times_monomial(const Exps& e, const Scalar& c) const {
    if (c.is_zero()) return zero(ring_);
    Poly r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        r.terms_.push_back({exps_mul(t.exps, e), t.coeff * c});
    return r; // multiplication by a monomial preserves term order
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.ring_ == nullptr || b.ring_ == nullptr)
        throw std::invalid_argument("Poly *: uninitialized operand");
    if (!a.ring_->same_as(*b.ring_)) throw std::invalid_argument("Poly *: ring mismatch");
    Poly acc(a.ring_);
    if (a.is_zero() || b.is_zero()) return acc;
    const Poly& small = a.terms_.size() <= b.terms_.size() ? a : b;
    const Poly& big = a.terms_.size() <= b.terms_.size() ? b : a;
    for (const auto& t : small.terms_)
        acc = acc + big.times_monomial(t.exps, t.coeff);
    return acc;
}

Poly Poly::scaled(const Scalar& c) const {
    if (c.is_zero()) return zero(ring_);
    Poly r(*this);
    for (auto& t : r.terms_) t.coeff = t.coeff * c;
    return r;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return true;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].exps != b.terms_[i].exps || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

std::string monomial_str(const Ring& ring, const Exps& e) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) os << "*";
        os << ring.vars()[i];
        if (e[i] != 1) os << "^" << e[i];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Scalar c = t.coeff;
        if (first) {
            if (c.sign() < 0) { os << "-"; c = -c; }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        bool mono_trivial = exps_is_one(t.exps);
        if (!c.is_one() || mono_trivial) {
            os << c.str();
            if (!mono_trivial) os << "*";
        }
        if (!mono_trivial) os << monomial_str(*ring_, t.exps);
        first = false;
    }
    return os.str();
}

Poly Poly::with_ring(RingPtr other) const {
    if (other->nvars() != ring_->nvars())
        throw std::invalid_argument("Poly::with_ring: variable count mismatch");
    return Poly(std::move(other), terms_);
}

} // namespace sheafres
