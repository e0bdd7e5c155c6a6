#pragma once

#include "shuffly/element.hpp"
#include "shuffly/psi.hpp"
#include "shuffly/roots.hpp"

#include <optional>

namespace shuffly {

// The map phi_d: substitute, in the numerator only, the x-variables of the
// s-th copy of [beta] by h-shifts of y_{beta,s}. The color-k shift is
// (c_{12} + ... + c_{k-1,k})/2 and depends only on the color.
struct specialization_result {
    degree_vector d;
    poly value; // polynomial in {y_{beta,s}} and h
};

scalar phi_shift(const dynkin_diagram& d, int color);

specialization_result phi(const shuffle_element& f, const degree_vector& dd);

// Variant with a per-color permutation of which slots feed which copies;
// slot_order[c] (1-based colors) is a permutation of 1..l_c. Used to verify
// splitting-independence.
specialization_result phi_permuted(const shuffle_element& f, const degree_vector& dd,
                                   const std::map<int, std::vector<int>>& slot_order);

// The pairwise factor G_{beta,beta'} (beta < beta' in the interval order),
// as a product over copies of shifted linear forms.
poly factor_pair(const dynkin_diagram& d, root_interval beta, root_interval beta2, int d_beta,
                 int d_beta2);

// The diagonal factor G_beta: the h-power h^{d_beta(i-j)} times difference
// products with floor-exponents in even(beta)/odd(beta).
poly factor_diag(const dynkin_diagram& d, root_interval beta, int d_beta);

// Per-(s,s') exponents of the linear forms (y-y'), (y-y'-h), (y-y'+h) in the
// factors above.
struct pair_powers {
    int diag = 0;
    int minus_h = 0;
    int plus_h = 0;
};
pair_powers factor_pair_powers(const dynkin_diagram& d, root_interval beta,
                               root_interval beta2);
// For an ordered pair (s, s'); the unordered diagonal power is 2*diag.
pair_powers factor_diag_powers(const dynkin_diagram& d, root_interval beta);

// The monic degree-r polynomial p_{beta,r}(y): the builder's root-vector
// image specialized onto y, normalized monic.
poly rank1_mode_poly(const dynkin_diagram& d, root_interval beta, int r, variable yvar,
                     const pbw_builder& builder = canonical_pbw_builder());

// sum_sigma G_beta^(sigma) for the given nondecreasing mode list (strictly
// increasing when |beta| is odd), a polynomial in y_{beta,1..d} and h.
poly rank1_product_basis(const dynkin_diagram& d, root_interval beta,
                         const std::vector<int>& modes,
                         const pbw_builder& builder = canonical_pbw_builder());

struct same_degrees_check {
    bool proportional = false;
    scalar ratio;      // lhs = ratio * rhs when proportional
    poly lhs, rhs;
};

// Compares phi_{deg h}(Psi(x_h)) against the factored product
//   prod G_{beta,beta'} * prod G_beta * prod_beta (sum_sigma G_beta^(sigma)).
// Under the implemented product normalization the two sides agree up to the
// constant +-1/l! with l the color degree; the measured ratio is returned.
same_degrees_check verify_same_degrees_formula(const dynkin_diagram& d, const pbw_monomial& h,
                                               const pbw_builder& builder =
                                                   canonical_pbw_builder());

// phi_d(Psi(x_h)) == 0; the statement of interest has deg(h) < d.
bool check_lower_degrees(const dynkin_diagram& d, const pbw_monomial& h,
                         const degree_vector& dd);

struct good_report {
    bool good = true;
    std::optional<degree_vector> witness; // first failing d
};

// F is good when phi_d(F) is divisible by h^{sum d_beta (i-j)} for every
// degree vector d compatible with F's degree.
good_report is_good(const shuffle_element& f);

// F is integral when its numerator is divisible by h^{k_1 + ... + k_{n-1}}.
bool is_integral(const shuffle_element& f);

struct vanishing_order_row {
    root_interval beta, beta2;
    int s = 0, s2 = 0;
    int form = 0;      // 0: y-y', -1: y-y'-h, +1: y-y'+h
    int measured = 0;  // -1 means phi_d(F) == 0 (infinite order)
    int predicted = 0; // exponent in G_{beta,beta'} / G_beta
    int skew_bonus = 0; // +1 on the diagonal form of an odd root
};

struct vanishing_order_report {
    poly value; // phi_d(F)
    std::vector<vanishing_order_row> rows;
};

vanishing_order_report vanishing_orders(const shuffle_element& f, const degree_vector& dd);

// Exact order of L-divisibility of p; -1 for p == 0.
int vanishing_order(const poly& p, const poly& linear_form);

} // namespace shuffly
