#include "shuffly/zeta.hpp"

namespace shuffly {

namespace {

zeta_kernel make_kernel(const dynkin_diagram& d, int i, int j, algebra_mode mode) {
    zeta_kernel k;
    k.i = i;
    k.j = j;
    k.c = cartan(d, i, j);
    k.sign = (i > j && d.alpha_parity(i) == 1 && d.alpha_parity(j) == 1) ? -1 : 1;
    k.mode = mode;
    return k;
}

} // namespace

poly zeta_kernel::numerator_at(const poly& z) const {
    poly num;
    if (mode == algebra_mode::rational) {
        num = z + poly::var(variable::hbar()) * scalar(c, 2);
    } else {
        num = z - pow(poly::var(variable::v()), -c);
    }
    num *= scalar(sign);
    return num;
}

poly zeta_kernel::pair_numerator(variable xa, variable xb) const {
    if (mode == algebra_mode::rational)
        return poly::var(xa) - poly::var(xb) + poly::var(variable::hbar()) * scalar(c, 2);
    return poly::var(xa) - pow(poly::var(variable::v()), -c) * poly::var(xb);
}

zeta_kernel zeta_rational(const dynkin_diagram& d, int i, int j) {
    return make_kernel(d, i, j, algebra_mode::rational);
}

zeta_kernel zeta_trig(const dynkin_diagram& d, int i, int j) {
    return make_kernel(d, i, j, algebra_mode::trigonometric);
}

} // namespace shuffly
