#pragma once

#include "shuffly/dynkin.hpp"
#include "shuffly/poly.hpp"

namespace shuffly {

enum class algebra_mode { rational, trigonometric };

// The zeta kernel between two colors. In the rational case the value at z is
//   sign * (z + c/2 h) / z,
// in the trigonometric case (multiplicative argument)
//   sign * (z - v^{-c}) / (z - 1),
// with sign = -1 exactly when i > j and both simple roots are odd.
struct zeta_kernel {
    int i = 0;
    int j = 0;
    int sign = 1;
    int c = 0;
    algebra_mode mode = algebra_mode::rational;

    // True when the kernel degenerates to the constant `sign`.
    bool is_constant() const { return c == 0; }

    // Numerator evaluated at an arbitrary argument, including the sign.
    //   rational: sign * (z + c/2 h);   trig: sign * (z - v^{-c}).
    poly numerator_at(const poly& z) const;

    // The numerator with the pole cleared against the pair denominator
    // (xa - xb), without the sign:
    //   rational: xa - xb + c/2 h;   trig: xa - v^{-c} xb.
    poly pair_numerator(variable xa, variable xb) const;
};

zeta_kernel zeta_rational(const dynkin_diagram& d, int i, int j);
zeta_kernel zeta_trig(const dynkin_diagram& d, int i, int j);

} // namespace shuffly
