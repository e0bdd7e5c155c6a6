#include "shuffly/scalar.hpp"

#include "shuffly/errors.hpp"

#include <ostream>

namespace shuffly {

scalar::scalar(long num, long den) : v_(num, den) {
    if (den == 0) throw shuffly_error("scalar: zero denominator");
    v_.canonicalize();
}

scalar::scalar(const std::string& s) : v_(s) {
    if (sgn(v_.get_den()) == 0) throw shuffly_error("scalar: zero denominator in \"" + s + "\"");
    v_.canonicalize();
}

scalar scalar::operator-() const {
    scalar r;
    r.v_ = -v_;
    return r;
}

scalar& scalar::operator/=(const scalar& o) {
    if (o.is_zero()) throw shuffly_error("scalar: division by zero");
    v_ /= o.v_;
    return *this;
}

scalar scalar::inverse() const {
    if (is_zero()) throw shuffly_error("scalar: inverse of zero");
    scalar r(1);
    r /= *this;
    return r;
}

scalar scalar::abs() const {
    scalar r;
    r.v_ = ::abs(v_);
    return r;
}

scalar pow(const scalar& a, int e) {
    if (e < 0) return pow(a.inverse(), -e);
    scalar r(1), base = a;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

scalar factorial(unsigned n) {
    scalar r(1);
    for (unsigned i = 2; i <= n; ++i) r *= scalar(static_cast<long>(i));
    return r;
}

scalar binomial(unsigned n, unsigned k) {
    if (k > n) return scalar(0);
    scalar r(1);
    for (unsigned i = 0; i < k; ++i) {
        r *= scalar(static_cast<long>(n - i));
        r /= scalar(static_cast<long>(i + 1));
    }
    return r;
}

std::ostream& operator<<(std::ostream& os, const scalar& s) { return os << s.str(); }

} // namespace shuffly
