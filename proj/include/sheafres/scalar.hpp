#pragma once

#include <gmpxx.h>
#include <string>
#include <stdexcept>

namespace sheafres {

// Exact rational scalar. Always canonical: lowest terms, positive denominator.
class Scalar {
public:
    Scalar() : v_(0) {}
    Scalar(long n) : v_(n) {}
    Scalar(long num, long den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Scalar: zero denominator");
        v_.canonicalize();
    }
    explicit Scalar(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Accepts "a" or "a/b" with optional leading '-'.
    static Scalar parse(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw std::invalid_argument("Scalar: bad literal '" + s + "'");
        if (q.get_den() == 0) throw std::invalid_argument("Scalar: zero denominator in '" + s + "'");
        q.canonicalize();
        return Scalar(q);
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Scalar operator-() const { return Scalar(mpq_class(-v_)); }
    Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
    Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
    Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
    Scalar& operator/=(const Scalar& o) {
        if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { a += b; return a; }
    friend Scalar operator-(Scalar a, const Scalar& b) { a -= b; return a; }
    friend Scalar operator*(Scalar a, const Scalar& b) { a *= b; return a; }
    friend Scalar operator/(Scalar a, const Scalar& b) { a /= b; return a; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }

    Scalar inv() const {
        if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
        return Scalar(mpq_class(1) / v_);
    }

    std::string str() const { return v_.get_str(); }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

private:
    mpq_class v_;
};

} // namespace sheafres
