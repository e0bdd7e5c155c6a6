#include "shuffly/membership.hpp"

namespace shuffly {

std::string wheel_violation::describe() const {
    std::string s_;
    if (kind == 1)
        s_ = "wheel1 i=" + std::to_string(i) + " eps=" + std::to_string(eps) +
             " r1=" + std::to_string(r1) + " r2=" + std::to_string(r2) +
             " s=" + std::to_string(s);
    else
        s_ = "wheel2 i=" + std::to_string(i) + " r1=" + std::to_string(r1) +
             " r2=" + std::to_string(r2) + " s=" + std::to_string(s) +
             " s'=" + std::to_string(s2);
    return s_;
}

namespace {

membership_report check_impl(const shuffle_element& f) {
    const dynkin_diagram& d = f.diagram();
    const std::vector<int>& k = f.degree();
    const poly& num = f.numerator();
    const bool trig = f.mode() == algebra_mode::trigonometric;
    membership_report rep;

    // Supersymmetry: invariance (with sign) under adjacent slot swaps per color.
    for (int i = 1; i <= d.colors() && rep.supersymmetric; ++i) {
        for (int r = 1; r + 1 <= k[i - 1]; ++r) {
            std::map<variable, variable> swap_map{
                {variable::x(i, r), variable::x(i, r + 1)},
                {variable::x(i, r + 1), variable::x(i, r)}};
            poly swapped = rename_variables(num, swap_map);
            bool good = d.alpha_parity(i) == 0 ? swapped == num : swapped == -num;
            if (!good) {
                rep.supersymmetric = false;
                break;
            }
        }
    }

    poly hbar = poly::var(variable::hbar());
    poly half_h = hbar * scalar(1, 2);
    poly vv = poly::var(variable::v());

    // First kind, at even colors i: the element vanishes once
    //   x_{i,r1} = x_{i,r2} + h,  x_{i+eps,s} = x_{i,r2} + h/2    (rational)
    //   x_{i,r1} = v^2 x_{i,r2},  x_{i+eps,s} = v x_{i,r2}        (trig)
    // with x_{i,r2} kept as the free parameter.
    for (int i = 1; i <= d.colors(); ++i) {
        if (d.alpha_parity(i) != 0 || k[i - 1] < 2) continue;
        for (int eps : {+1, -1}) {
            int nb = i + eps;
            if (nb < 1 || nb > d.colors() || k[nb - 1] < 1) continue;
            for (int r1 = 1; r1 <= k[i - 1]; ++r1) {
                for (int r2 = 1; r2 <= k[i - 1]; ++r2) {
                    if (r1 == r2) continue;
                    for (int s = 1; s <= k[nb - 1]; ++s) {
                        poly t = poly::var(variable::x(i, r2));
                        std::map<variable, poly> bind;
                        if (!trig) {
                            bind[variable::x(i, r1)] = t + hbar;
                            bind[variable::x(nb, s)] = t + half_h;
                        } else {
                            bind[variable::x(i, r1)] = vv * vv * t;
                            bind[variable::x(nb, s)] = vv * t;
                        }
                        if (!substitute(num, bind).is_zero())
                            rep.wheel1.push_back({1, i, eps, r1, r2, s, 0});
                    }
                }
            }
        }
    }

    // Second kind, at odd colors i: vanishing once
    //   x_{i-1,s} = x_{i,r1} + h/2 = x_{i+1,s'},  x_{i,r2} = x_{i,r1} + h   (rational)
    //   x_{i-1,s} = v x_{i,r1} = x_{i+1,s'},      x_{i,r2} = v^2 x_{i,r1}   (trig)
    for (int i = 2; i < d.colors() + 0; ++i) {
        if (d.alpha_parity(i) != 1) continue;
        if (i - 1 < 1 || i + 1 > d.colors()) continue;
        if (k[i - 1] < 2 || k[i - 2] < 1 || k[i] < 1) continue;
        for (int r1 = 1; r1 <= k[i - 1]; ++r1) {
            for (int r2 = 1; r2 <= k[i - 1]; ++r2) {
                if (r1 == r2) continue;
                for (int s = 1; s <= k[i - 2]; ++s) {
                    for (int s2 = 1; s2 <= k[i]; ++s2) {
                        poly t = poly::var(variable::x(i, r1));
                        std::map<variable, poly> bind;
                        if (!trig) {
                            bind[variable::x(i - 1, s)] = t + half_h;
                            bind[variable::x(i + 1, s2)] = t + half_h;
                            bind[variable::x(i, r2)] = t + hbar;
                        } else {
                            bind[variable::x(i - 1, s)] = vv * t;
                            bind[variable::x(i + 1, s2)] = vv * t;
                            bind[variable::x(i, r2)] = vv * vv * t;
                        }
                        if (!substitute(num, bind).is_zero())
                            rep.wheel2.push_back({2, i, 0, r1, r2, s, s2});
                    }
                }
            }
        }
    }
    return rep;
}

} // namespace

membership_report check_membership(const shuffle_element& f) {
    if (f.mode() != algebra_mode::rational)
        throw shuffly_error("check_membership: rational mode required");
    return check_impl(f);
}

membership_report check_membership_trig(const shuffle_element& f) {
    if (f.mode() != algebra_mode::trigonometric)
        throw shuffly_error("check_membership_trig: trigonometric mode required");
    return check_impl(f);
}

} // namespace shuffly
