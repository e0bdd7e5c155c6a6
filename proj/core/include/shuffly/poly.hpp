#pragma once

#include "shuffly/errors.hpp"
#include "shuffly/scalar.hpp"
#include "shuffly/variable.hpp"

#include <map>
#include <string>
#include <vector>

namespace shuffly {

// A monomial: sorted (variable, exponent) pairs with nonzero exponents.
// Negative exponents are Laurent exponents; callers restrict them to
// x-variables and v in trigonometric contexts.
using monomial = std::vector<std::pair<variable, int>>;

int total_degree(const monomial& m);
monomial mono_mul(const monomial& a, const monomial& b);
bool mono_divides(const monomial& den, const monomial& num); // componentwise <=
monomial mono_div(const monomial& num, const monomial& den);

// Graded-lex over the fixed variable order, leading term first: higher total
// degree wins, ties broken at the first (smallest) variable where the
// exponents differ, larger exponent first.
struct term_order {
    bool operator()(const monomial& a, const monomial& b) const;
};

class poly;
poly operator*(const poly& a, const poly& b);

// Sparse multivariate Laurent polynomial over exact rationals, stored in
// canonical term order. All arithmetic is exact; values are immutable in
// spirit (operations return fresh polynomials).
class poly {
public:
    using term_map = std::map<monomial, scalar, term_order>;

    poly() = default;
    poly(const scalar& c);
    poly(long c) : poly(scalar(c)) {}
    static poly var(variable v, int exp = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    scalar constant_value() const; // requires is_constant()
    size_t term_count() const { return terms_.size(); }
    const term_map& terms() const { return terms_; }
    const monomial& leading_monomial() const;
    const scalar& leading_coefficient() const;

    poly operator-() const;
    poly& operator+=(const poly& o);
    poly& operator-=(const poly& o);
    poly& operator*=(const poly& o) { *this = *this * o; return *this; }
    poly& operator*=(const scalar& c);

    friend poly operator+(poly a, const poly& b) { return a += b; }
    friend poly operator-(poly a, const poly& b) { return a -= b; }
    friend poly operator*(poly a, const scalar& c) { return a *= c; }

    friend bool operator==(const poly& a, const poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const poly& a, const poly& b) { return !(a == b); }

    scalar coefficient(const monomial& m) const;
    int degree_in(variable v) const;       // max exponent of v, 0 for zero poly
    int min_exponent_in(variable v) const; // min exponent of v over all terms
    bool depends_on(variable v) const;
    std::vector<variable> variables() const;
    int total_degree_in(const std::vector<variable>& group) const;

    // Adds c * m; used by construction helpers.
    void add_term(const monomial& m, const scalar& c);

    // Canonical text form, terms in canonical order.
    std::string str() const;

private:
    term_map terms_;
};

poly pow(const poly& a, int e); // e < 0 requires a single-term (invertible) a

struct not_divisible : shuffly_error {
    not_divisible(std::string msg, poly rem)
        : shuffly_error(std::move(msg)), remainder(std::move(rem)) {}
    poly remainder;
};

// Exact division: returns q with q*den == num, throws not_divisible (with the
// offending remainder) otherwise. Laurent inputs are normalized by monomial
// shifts first.
poly divide_exact(const poly& num, const poly& den);

// Simultaneous substitution. Each binding target must be affine in the x/y
// variables (coefficients may involve h and v). A bound variable occurring
// with a negative exponent requires a single-term invertible target.
poly substitute(const poly& p, const std::map<variable, poly>& bindings);

// Fast path for variable-to-variable renaming.
poly rename_variables(const poly& p, const std::map<variable, variable>& renames);

// Groups the terms of p by their x/y-part; the mapped values are the
// h/v-coefficient polynomials.
std::map<monomial, poly, term_order> coefficients_by_xy(const poly& p);

std::ostream& operator<<(std::ostream& os, const poly& p);

} // namespace shuffly
