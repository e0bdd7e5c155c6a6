#pragma once

#include "shuffly/dynkin.hpp"
#include "shuffly/poly.hpp"
#include "shuffly/zeta.hpp"

#include <vector>

namespace shuffly {

// An element of the shuffle superalgebra in degree k: the supersymmetric
// numerator of a rational function whose denominator is the implicit product
// of all adjacent-color differences. The denominator is never stored.
//
// Rational mode: numerator in {x_{i,r}} and h over Q.
// Trigonometric mode: Laurent numerator in {x_{i,r}} and v over Q; h is
// not allowed.
class shuffle_element {
public:
    shuffle_element(dynkin_diagram d, std::vector<int> degree, poly numerator,
                    algebra_mode mode = algebra_mode::rational);

    static shuffle_element unit(const dynkin_diagram& d,
                                algebra_mode mode = algebra_mode::rational);
    static shuffle_element zero(const dynkin_diagram& d, std::vector<int> degree,
                                algebra_mode mode = algebra_mode::rational);

    const dynkin_diagram& diagram() const { return diagram_; }
    const std::vector<int>& degree() const { return degree_; }
    const poly& numerator() const { return numerator_; }
    algebra_mode mode() const { return mode_; }

    bool is_zero() const { return numerator_.is_zero(); }
    int total_degree() const;
    // Z_2-parity: sum of k_i |alpha_i|.
    int parity() const;

    shuffle_element operator-() const;
    shuffle_element& operator+=(const shuffle_element& o);
    shuffle_element& operator-=(const shuffle_element& o);
    friend shuffle_element operator+(shuffle_element a, const shuffle_element& b) {
        return a += b;
    }
    friend shuffle_element operator-(shuffle_element a, const shuffle_element& b) {
        return a -= b;
    }
    shuffle_element scaled(const poly& c) const; // c in h (rational) / v (trig) only

    friend bool operator==(const shuffle_element& a, const shuffle_element& b);

private:
    dynkin_diagram diagram_;
    std::vector<int> degree_;
    poly numerator_;
    algebra_mode mode_;
};

// The shuffle product, summing over per-color shuffle coset representatives
// with the supersymmetrization sign; same-color even zeta denominators are
// cleared by one exact division at the end.
shuffle_element star(const shuffle_element& f, const shuffle_element& g);

// Oracle form: the literal full symmetrization over the whole product of
// symmetric groups. Test use only; must agree with star.
shuffle_element star_naive(const shuffle_element& f, const shuffle_element& g);

// Trigonometric counterparts (multiplicative zeta argument).
shuffle_element star_trig(const shuffle_element& f, const shuffle_element& g);
shuffle_element star_trig_naive(const shuffle_element& f, const shuffle_element& g);

} // namespace shuffly
