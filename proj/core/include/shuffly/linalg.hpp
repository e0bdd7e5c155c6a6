#pragma once

#include "shuffly/poly.hpp"

#include <vector>

namespace shuffly {

// An element of the fraction field of the polynomial ring; den != 0.
// Equality is by cross-multiplication, no gcd reduction is attempted beyond
// exact-division shortcuts.
struct poly_fraction {
    poly num;
    poly den;

    poly_fraction() : num(), den(scalar(1)) {}
    poly_fraction(poly n) : num(std::move(n)), den(scalar(1)) {}
    poly_fraction(poly n, poly d);

    bool is_zero() const { return num.is_zero(); }
    // Divides out den when the division is exact; cheap canonicalization.
    void reduce();
    bool is_polynomial() const { return den.is_constant(); }
    poly as_polynomial() const; // requires exact num/den
};

poly_fraction operator+(const poly_fraction& a, const poly_fraction& b);
poly_fraction operator-(const poly_fraction& a, const poly_fraction& b);
poly_fraction operator*(const poly_fraction& a, const poly_fraction& b);
poly_fraction operator/(const poly_fraction& a, const poly_fraction& b);
bool operator==(const poly_fraction& a, const poly_fraction& b);

using poly_matrix = std::vector<std::vector<poly>>;

struct linear_solve_report {
    int rank = 0;
    bool consistent = true;
    bool unique = false;                // consistent and rank == #columns
    std::vector<poly_fraction> solution; // size #columns; free columns get 0
};

// Exact solve of A x = b by fraction-free (Bareiss) elimination with row
// swaps and column skipping. Inconsistency is reported, not thrown.
linear_solve_report solve_linear(poly_matrix a, std::vector<poly> b);

// Rank over the fraction field.
int matrix_rank(poly_matrix a);

} // namespace shuffly
