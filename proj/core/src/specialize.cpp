#include "shuffly/specialize.hpp"

#include <algorithm>
#include <functional>

namespace shuffly {

namespace {

int floor_div2(int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

std::vector<std::pair<root_interval, int>> copies_in_order(const degree_vector& dd) {
    std::vector<std::pair<root_interval, int>> out;
    for (const auto& [beta, mult] : dd.support())
        for (int s = 1; s <= mult; ++s) out.emplace_back(beta, s);
    return out; // support() is already ascending in the interval order
}

} // namespace

scalar phi_shift(const dynkin_diagram& d, int color) {
    if (color < 1 || color > d.colors()) throw shuffly_error("phi_shift: color out of range");
    scalar s(0);
    for (int m = 1; m < color; ++m) s += scalar(cartan(d, m, m + 1), 2);
    return s;
}

specialization_result phi_permuted(const shuffle_element& f, const degree_vector& dd,
                                   const std::map<int, std::vector<int>>& slot_order) {
    if (f.mode() != algebra_mode::rational)
        throw shuffly_error("phi: rational mode required");
    const dynkin_diagram& d = f.diagram();
    std::vector<int> l = dd.color_degree(d.colors());
    if (l != f.degree())
        throw degree_mismatch("phi: induced color degree of d differs from the element degree");

    std::vector<int> cursor(d.colors(), 0);
    auto next_slot = [&](int color) -> int {
        int idx = cursor[color - 1]++;
        auto it = slot_order.find(color);
        if (it == slot_order.end()) return idx + 1;
        return it->second.at(idx);
    };

    poly hbar = poly::var(variable::hbar());
    std::map<variable, poly> bind;
    for (const auto& [beta, s] : copies_in_order(dd)) {
        for (int k = beta.j; k <= beta.i; ++k) {
            int slot = next_slot(k);
            bind[variable::x(k, slot)] =
                poly::var(variable::y(beta.j, beta.i, s)) + hbar * phi_shift(d, k);
        }
    }
    return {dd, substitute(f.numerator(), bind)};
}

specialization_result phi(const shuffle_element& f, const degree_vector& dd) {
    return phi_permuted(f, dd, {});
}

pair_powers factor_pair_powers(const dynkin_diagram& d, root_interval beta,
                               root_interval beta2) {
    if (!(beta < beta2)) throw shuffly_error("factor_pair: needs beta < beta'");
    pair_powers p;
    for (int k = beta.j; k <= beta.i; ++k) {
        p.diag += (k == beta2.j - 1 ? 1 : 0) - (k == beta2.i ? 1 : 0);
        int pk = d.basis_parity(k);
        if (beta2.contains(k - 1)) (pk == 0 ? p.minus_h : p.plus_h) += 1;
        if (beta2.contains(k)) {
            if (d.alpha_parity(k) == 0)
                (pk == 0 ? p.plus_h : p.minus_h) += 1;
            else
                p.diag += 1;
        }
    }
    if (p.diag < 0) throw shuffly_error("factor_pair: negative diagonal power");
    return p;
}

pair_powers factor_diag_powers(const dynkin_diagram& d, root_interval beta) {
    pair_powers p;
    int ev = even_count(d, beta), od = odd_count(d, beta);
    p.diag = floor_div2(od);
    p.plus_h = ev + floor_div2(od - 1);
    p.minus_h = 0; // the displayed product only carries (y - y' + h) factors
    return p;
}

poly factor_pair(const dynkin_diagram& d, root_interval beta, root_interval beta2, int d_beta,
                 int d_beta2) {
    pair_powers pw = factor_pair_powers(d, beta, beta2);
    poly hbar = poly::var(variable::hbar());
    poly out(scalar(1));
    for (int s = 1; s <= d_beta; ++s)
        for (int s2 = 1; s2 <= d_beta2; ++s2) {
            poly diff = poly::var(variable::y(beta.j, beta.i, s)) -
                        poly::var(variable::y(beta2.j, beta2.i, s2));
            out *= pow(diff, pw.diag);
            out *= pow(diff - hbar, pw.minus_h);
            out *= pow(diff + hbar, pw.plus_h);
        }
    return out;
}

poly factor_diag(const dynkin_diagram& d, root_interval beta, int d_beta) {
    pair_powers pw = factor_diag_powers(d, beta);
    poly hbar = poly::var(variable::hbar());
    poly out = pow(hbar, d_beta * (beta.i - beta.j));
    for (int s = 1; s <= d_beta; ++s)
        for (int s2 = 1; s2 <= d_beta; ++s2) {
            if (s == s2) continue;
            poly diff = poly::var(variable::y(beta.j, beta.i, s)) -
                        poly::var(variable::y(beta.j, beta.i, s2));
            out *= pow(diff, pw.diag);
            out *= pow(diff + hbar, pw.plus_h);
        }
    return out;
}

poly rank1_mode_poly(const dynkin_diagram& d, root_interval beta, int r, variable yvar,
                     const pbw_builder& builder) {
    shuffle_element root_elt = builder(d, beta, r);
    poly hbar = poly::var(variable::hbar());
    std::map<variable, poly> bind;
    for (int k = beta.j; k <= beta.i; ++k)
        bind[variable::x(k, 1)] = poly::var(yvar) + hbar * phi_shift(d, k);
    poly s = substitute(root_elt.numerator(), bind);
    s = divide_exact(s, pow(hbar, beta.i - beta.j));
    // normalize monic in y
    monomial lead;
    if (r != 0) lead.emplace_back(yvar, r);
    scalar lc = s.coefficient(lead);
    if (lc.is_zero())
        throw shuffly_error("rank1_mode_poly: root vector image has unexpected shape");
    s *= lc.inverse();
    return s;
}

poly rank1_product_basis(const dynkin_diagram& d, root_interval beta,
                         const std::vector<int>& modes, const pbw_builder& builder) {
    const int n = static_cast<int>(modes.size());
    bool odd = root_parity(d, beta) == 1;
    std::vector<std::vector<poly>> p_at(n, std::vector<poly>(n + 1));
    for (int s = 0; s < n; ++s) {
        poly base = rank1_mode_poly(d, beta, modes[s], variable::y(beta.j, beta.i, 1), builder);
        for (int slot = 1; slot <= n; ++slot) {
            std::map<variable, variable> ren{
                {variable::y(beta.j, beta.i, 1), variable::y(beta.j, beta.i, slot)}};
            p_at[s][slot] = rename_variables(base, ren);
        }
    }

    // sigma assigns slot sigma[s] to position s.
    std::vector<int> sigma(n);
    for (int s = 0; s < n; ++s) sigma[s] = s + 1;
    poly hbar = poly::var(variable::hbar());
    scalar eps(d.basis_parity(beta.j) == 0 ? 1 : -1);

    poly acc;
    do {
        int inv = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (sigma[a] > sigma[b]) ++inv;
        poly term(scalar(inv % 2 ? -1 : 1));
        for (int s = 0; s < n; ++s) term *= p_at[s][sigma[s]];
        if (!odd) {
            for (int s = 0; s < n; ++s)
                for (int s2 = s + 1; s2 < n; ++s2) {
                    poly diff = poly::var(variable::y(beta.j, beta.i, sigma[s])) -
                                poly::var(variable::y(beta.j, beta.i, sigma[s2]));
                    term *= diff + hbar * eps;
                }
        }
        acc += term;
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    if (odd || n <= 1) return acc;
    poly vander(scalar(1));
    for (int s = 1; s <= n; ++s)
        for (int s2 = s + 1; s2 <= n; ++s2)
            vander *= poly::var(variable::y(beta.j, beta.i, s)) -
                      poly::var(variable::y(beta.j, beta.i, s2));
    return divide_exact(acc, vander);
}

namespace {

poly factored_product(const dynkin_diagram& d, const degree_vector& dd) {
    poly out(scalar(1));
    const auto& sup = dd.support();
    for (auto it = sup.begin(); it != sup.end(); ++it) {
        for (auto jt = std::next(it); jt != sup.end(); ++jt)
            out *= factor_pair(d, it->first, jt->first, it->second, jt->second);
        out *= factor_diag(d, it->first, it->second);
    }
    return out;
}

} // namespace

same_degrees_check verify_same_degrees_formula(const dynkin_diagram& d, const pbw_monomial& h,
                                               const pbw_builder& builder) {
    same_degrees_check out;
    degree_vector dd = h.degree();
    shuffle_element image = psi_pbw_monomial(d, h, builder);
    out.lhs = phi(image, dd).value;

    out.rhs = factored_product(d, dd);
    for (const auto& [beta, mult] : dd.support())
        out.rhs *= rank1_product_basis(d, beta, h.modes_of(beta), builder);

    if (out.rhs.is_zero() || out.lhs.is_zero()) {
        out.proportional = out.lhs.is_zero() && out.rhs.is_zero();
        return out;
    }
    scalar c = out.lhs.leading_coefficient() / out.rhs.leading_coefficient();
    poly scaled = out.rhs;
    scaled *= c;
    if (scaled == out.lhs) {
        out.proportional = true;
        out.ratio = c;
    }
    return out;
}

bool check_lower_degrees(const dynkin_diagram& d, const pbw_monomial& h,
                         const degree_vector& dd) {
    shuffle_element image = psi_pbw_monomial(d, h);
    return phi(image, dd).value.is_zero();
}

good_report is_good(const shuffle_element& f) {
    if (f.mode() != algebra_mode::rational)
        throw shuffly_error("is_good: rational mode required");
    good_report rep;
    for (const degree_vector& dd : enumerate_T(f.diagram(), f.degree())) {
        poly val = phi(f, dd).value;
        int need = dd.good_hbar_power();
        if (need == 0 || val.is_zero()) continue;
        if (val.min_exponent_in(variable::hbar()) < need) {
            rep.good = false;
            rep.witness = dd;
            return rep;
        }
    }
    return rep;
}

bool is_integral(const shuffle_element& f) {
    if (f.mode() != algebra_mode::rational)
        throw shuffly_error("is_integral: rational mode required");
    if (f.is_zero()) return true;
    return f.numerator().min_exponent_in(variable::hbar()) >= f.total_degree();
}

int vanishing_order(const poly& p, const poly& linear_form) {
    if (p.is_zero()) return -1;
    int order = 0;
    poly cur = p;
    while (true) {
        try {
            cur = divide_exact(cur, linear_form);
            ++order;
        } catch (const not_divisible&) {
            return order;
        }
    }
}

vanishing_order_report vanishing_orders(const shuffle_element& f, const degree_vector& dd) {
    vanishing_order_report rep;
    rep.value = phi(f, dd).value;
    poly hbar = poly::var(variable::hbar());
    const dynkin_diagram& d = f.diagram();

    auto copies = copies_in_order(dd);
    for (size_t a = 0; a < copies.size(); ++a)
        for (size_t b = a + 1; b < copies.size(); ++b) {
            auto [beta, s] = copies[a];
            auto [beta2, s2] = copies[b];
            poly diff = poly::var(variable::y(beta.j, beta.i, s)) -
                        poly::var(variable::y(beta2.j, beta2.i, s2));
            pair_powers pw;
            int skew = 0;
            int diag_power;
            if (beta == beta2) {
                pw = factor_diag_powers(d, beta);
                diag_power = 2 * pw.diag;
                pw.minus_h = pw.plus_h; // both shifted forms carry the same power
                if (root_parity(d, beta) == 1) skew = 1;
            } else {
                pw = factor_pair_powers(d, beta, beta2);
                diag_power = pw.diag;
            }
            rep.rows.push_back({beta, beta2, s, s2, 0, vanishing_order(rep.value, diff),
                                diag_power, skew});
            rep.rows.push_back({beta, beta2, s, s2, -1,
                                vanishing_order(rep.value, diff - hbar), pw.minus_h, 0});
            rep.rows.push_back({beta, beta2, s, s2, +1,
                                vanishing_order(rep.value, diff + hbar), pw.plus_h, 0});
        }
    return rep;
}

} // namespace shuffly
