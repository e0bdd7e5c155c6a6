#pragma once

#include <gmpxx.h>
#include <iosfwd>
#include <string>

namespace shuffly {

// Exact rational number. Always canonical: lowest terms, denominator > 0,
// so operator== is value equality.
class scalar {
public:
    scalar() : v_(0) {}
    scalar(long n) : v_(n) {}
    scalar(long num, long den);
    explicit scalar(const std::string& s); // "p" or "p/q"

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    scalar operator-() const;
    scalar& operator+=(const scalar& o) { v_ += o.v_; return *this; }
    scalar& operator-=(const scalar& o) { v_ -= o.v_; return *this; }
    scalar& operator*=(const scalar& o) { v_ *= o.v_; return *this; }
    scalar& operator/=(const scalar& o); // throws on division by zero

    friend scalar operator+(scalar a, const scalar& b) { return a += b; }
    friend scalar operator-(scalar a, const scalar& b) { return a -= b; }
    friend scalar operator*(scalar a, const scalar& b) { return a *= b; }
    friend scalar operator/(scalar a, const scalar& b) { return a /= b; }

    friend bool operator==(const scalar& a, const scalar& b) { return a.v_ == b.v_; }
    friend bool operator!=(const scalar& a, const scalar& b) { return a.v_ != b.v_; }
    friend bool operator<(const scalar& a, const scalar& b) { return a.v_ < b.v_; }

    scalar inverse() const;
    scalar abs() const;

    // Canonical text form: "p" when the denominator is 1, otherwise "p/q".
    std::string str() const { return v_.get_str(); }
    std::string numerator_str() const { return v_.get_num().get_str(); }
    std::string denominator_str() const { return v_.get_den().get_str(); }

private:
    mpq_class v_;
};

scalar pow(const scalar& a, int e);
scalar factorial(unsigned n);
scalar binomial(unsigned n, unsigned k);

std::ostream& operator<<(std::ostream& os, const scalar& s);

} // namespace shuffly
