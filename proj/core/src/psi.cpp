#include "shuffly/psi.hpp"

namespace shuffly {

int generator_word::parity(const dynkin_diagram& d) const {
    int p = 0;
    for (const auto& [i, r] : letters) p += d.alpha_parity(i);
    return p % 2;
}

std::vector<int> generator_word::color_degree(const dynkin_diagram& d) const {
    std::vector<int> k(d.colors(), 0);
    for (const auto& [i, r] : letters) {
        if (i < 1 || i > d.colors()) throw shuffly_error("generator_word: color out of range");
        ++k[i - 1];
    }
    return k;
}

shuffle_element unit_generator(const dynkin_diagram& d, int i, int r, algebra_mode mode) {
    if (i < 1 || i > d.colors()) throw shuffly_error("unit_generator: color out of range");
    if (mode == algebra_mode::rational && r < 0)
        throw shuffly_error("unit_generator: negative mode in rational mode");
    std::vector<int> degree(d.colors(), 0);
    degree[i - 1] = 1;
    return shuffle_element(d, std::move(degree), pow(poly::var(variable::x(i, 1)), r), mode);
}

shuffle_element psi_word(const dynkin_diagram& d, const generator_word& w, algebra_mode mode) {
    shuffle_element acc = shuffle_element::unit(d, mode);
    auto mul = mode == algebra_mode::rational ? star : star_trig;
    for (const auto& [i, r] : w.letters) acc = mul(acc, unit_generator(d, i, r, mode));
    return acc;
}

shuffle_element superbracket(const shuffle_element& f, const shuffle_element& g) {
    return superbracket_x(f, g, poly(scalar(1)));
}

shuffle_element superbracket_x(const shuffle_element& f, const shuffle_element& g,
                               const poly& c) {
    auto mul = f.mode() == algebra_mode::rational ? star : star_trig;
    shuffle_element fg = mul(f, g);
    shuffle_element gf = mul(g, f).scaled(c);
    if ((f.parity() * g.parity()) % 2 != 0) return fg + gf;
    return fg - gf;
}

shuffle_element pbw_element(const dynkin_diagram& d, root_interval beta, int r) {
    if (beta.i > d.colors()) throw shuffly_error("pbw_element: root outside diagram");
    shuffle_element acc = unit_generator(d, beta.j, r);
    for (int k = beta.j + 1; k <= beta.i; ++k) acc = superbracket(acc, unit_generator(d, k, 0));
    return acc;
}

shuffle_element pbw_element_mode_last(const dynkin_diagram& d, root_interval beta, int r) {
    if (beta.i > d.colors()) throw shuffly_error("pbw_element: root outside diagram");
    shuffle_element acc = unit_generator(d, beta.j, beta.is_simple() ? r : 0);
    for (int k = beta.j + 1; k <= beta.i; ++k)
        acc = superbracket(acc, unit_generator(d, k, k == beta.i ? r : 0));
    return acc;
}

pbw_builder canonical_pbw_builder() {
    return [](const dynkin_diagram& d, root_interval beta, int r) {
        return pbw_element(d, beta, r);
    };
}

pbw_builder mode_last_pbw_builder() {
    return [](const dynkin_diagram& d, root_interval beta, int r) {
        return pbw_element_mode_last(d, beta, r);
    };
}

shuffle_element psi_pbw_monomial(const dynkin_diagram& d, const pbw_monomial& h,
                                 const pbw_builder& builder) {
    if (!h.valid_for(d))
        throw shuffly_error("psi_pbw_monomial: odd root with multiplicity > 1");
    shuffle_element acc = shuffle_element::unit(d);
    for (const auto& [beta, r] : h.factors()) acc = star(acc, builder(d, beta, r));
    return acc;
}

shuffle_element mult_symfun(const shuffle_element& f, int color, const poly& q) {
    const dynkin_diagram& d = f.diagram();
    if (color < 1 || color > d.colors()) throw shuffly_error("mult_symfun: color out of range");
    int k = f.degree()[color - 1];
    for (variable var : q.variables()) {
        bool coeff = var.which() == variable::kind::hbar || var.which() == variable::kind::v;
        bool in_box = var.which() == variable::kind::x && var.color() == color &&
                      var.slot() >= 1 && var.slot() <= k;
        if (!coeff && !in_box)
            throw shuffly_error("mult_symfun: q must live in the color-" +
                                std::to_string(color) + " variables");
    }
    // q must be symmetric in all k variables; adjacent swaps generate.
    for (int r = 1; r + 1 <= k; ++r) {
        std::map<variable, variable> swap_map{
            {variable::x(color, r), variable::x(color, r + 1)},
            {variable::x(color, r + 1), variable::x(color, r)}};
        if (rename_variables(q, swap_map) != q)
            throw shuffly_error("mult_symfun: q is not symmetric");
    }
    return shuffle_element(d, f.degree(), f.numerator() * q, f.mode());
}

} // namespace shuffly
