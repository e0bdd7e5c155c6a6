#pragma once

#include "shuffly/element.hpp"
#include "shuffly/roots.hpp"

#include <functional>

namespace shuffly {

// A word in the generators: letters (color, mode). Modes are nonnegative in
// rational mode and arbitrary integers in trigonometric mode.
struct generator_word {
    std::vector<std::pair<int, int>> letters;

    int parity(const dynkin_diagram& d) const;
    std::vector<int> color_degree(const dynkin_diagram& d) const;
    friend bool operator<(const generator_word& a, const generator_word& b) {
        return a.letters < b.letters;
    }
    friend bool operator==(const generator_word& a, const generator_word& b) {
        return a.letters == b.letters;
    }
};

// Image of a single generator: degree 1_i, numerator x_{i,1}^r.
shuffle_element unit_generator(const dynkin_diagram& d, int i, int r,
                               algebra_mode mode = algebra_mode::rational);

// Left-to-right star product of the letter images; the empty word is the unit.
shuffle_element psi_word(const dynkin_diagram& d, const generator_word& w,
                         algebra_mode mode = algebra_mode::rational);

// [F, G] = F*G - (-1)^{|F||G|} G*F; requires homogeneous parities (always
// true for fixed degrees).
shuffle_element superbracket(const shuffle_element& f, const shuffle_element& g);

// x-deformed bracket F*G - (-1)^{|F||G|} c * G*F with c a coefficient
// polynomial (h- or v-only).
shuffle_element superbracket_x(const shuffle_element& f, const shuffle_element& g, const poly& c);

// Builder of the root vector images; the choice of bracket decomposition is a
// free parameter of the theory, so it is injectable.
using pbw_builder =
    std::function<shuffle_element(const dynkin_diagram&, root_interval, int)>;

// Canonical choice: left-nested bracket along the interval ascending, mode r
// carried by the first letter:  [...[x_{j,r}, x_{j+1,0}], ..., x_{i,0}].
shuffle_element pbw_element(const dynkin_diagram& d, root_interval beta, int r);

// Alternative admissible choice used for span comparisons: mode r carried by
// the last letter:  [...[x_{j,0}, x_{j+1,0}], ..., x_{i,r}].
shuffle_element pbw_element_mode_last(const dynkin_diagram& d, root_interval beta, int r);

pbw_builder canonical_pbw_builder();
pbw_builder mode_last_pbw_builder();

// Star product of builder(beta, r)^{h(beta,r)} ascending in the double order.
shuffle_element psi_pbw_monomial(const dynkin_diagram& d, const pbw_monomial& h,
                                 const pbw_builder& builder = canonical_pbw_builder());

// Multiplies the numerator by a symmetric polynomial in the color-i variables
// x_{i,1..k_i}; preserves supersymmetry and wheel conditions.
shuffle_element mult_symfun(const shuffle_element& f, int color, const poly& q);

} // namespace shuffly
