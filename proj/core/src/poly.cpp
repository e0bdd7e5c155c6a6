#include "shuffly/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace shuffly {

int total_degree(const monomial& m) {
    int d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

monomial mono_mul(const monomial& a, const monomial& b) {
    monomial r;
    r.reserve(a.size() + b.size());
    size_t ia = 0, ib = 0;
    while (ia < a.size() && ib < b.size()) {
        if (a[ia].first == b[ib].first) {
            int e = a[ia].second + b[ib].second;
            if (e != 0) r.emplace_back(a[ia].first, e);
            ++ia, ++ib;
        } else if (a[ia].first < b[ib].first) {
            r.push_back(a[ia++]);
        } else {
            r.push_back(b[ib++]);
        }
    }
    for (; ia < a.size(); ++ia) r.push_back(a[ia]);
    for (; ib < b.size(); ++ib) r.push_back(b[ib]);
    return r;
}

bool mono_divides(const monomial& den, const monomial& num) {
    size_t in = 0;
    for (const auto& [v, e] : den) {
        while (in < num.size() && num[in].first < v) ++in;
        if (in == num.size() || !(num[in].first == v) || num[in].second < e) return false;
    }
    return true;
}

monomial mono_div(const monomial& num, const monomial& den) {
    monomial inv = den;
    for (auto& [v, e] : inv) e = -e;
    return mono_mul(num, inv);
}

bool term_order::operator()(const monomial& a, const monomial& b) const {
    // "less" in map terms means "comes first", i.e. is greater in graded-lex.
    // Significance sequence for lex ties: x-variables ascending, then
    // y-variables ascending, then h, then v; larger exponent first. The h/v
    // variables thus behave like coefficients.
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;

    auto is_coeff = [](variable v) {
        return v.which() == variable::kind::hbar || v.which() == variable::kind::v;
    };
    size_t ia = 0, ib = 0;
    while (ia < a.size() && is_coeff(a[ia].first)) ++ia;
    while (ib < b.size() && is_coeff(b[ib].first)) ++ib;
    while (ia < a.size() || ib < b.size()) {
        if (ia < a.size() && ib < b.size() && a[ia].first == b[ib].first) {
            if (a[ia].second != b[ib].second) return a[ia].second > b[ib].second;
            ++ia, ++ib;
            continue;
        }
        bool a_first = ib == b.size() || (ia < a.size() && a[ia].first < b[ib].first);
        if (a_first) return a[ia].second > 0;
        return 0 > b[ib].second;
    }
    for (variable coeff : {variable::hbar(), variable::v()}) {
        int ea = 0, eb = 0;
        for (const auto& [v, e] : a)
            if (v == coeff) ea = e;
        for (const auto& [v, e] : b)
            if (v == coeff) eb = e;
        if (ea != eb) return ea > eb;
    }
    return false; // equal
}

poly::poly(const scalar& c) {
    if (!c.is_zero()) terms_.emplace(monomial{}, c);
}

poly poly::var(variable v, int exp) {
    poly p;
    if (exp == 0) return poly(scalar(1));
    p.terms_.emplace(monomial{{v, exp}}, scalar(1));
    return p;
}

bool poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

scalar poly::constant_value() const {
    if (terms_.empty()) return scalar(0);
    if (!is_constant()) throw shuffly_error("poly: not a constant");
    return terms_.begin()->second;
}

const monomial& poly::leading_monomial() const {
    if (terms_.empty()) throw shuffly_error("poly: leading term of zero");
    return terms_.begin()->first;
}

const scalar& poly::leading_coefficient() const {
    if (terms_.empty()) throw shuffly_error("poly: leading term of zero");
    return terms_.begin()->second;
}

poly poly::operator-() const {
    poly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

poly& poly::operator+=(const poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

poly& poly::operator-=(const poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

poly& poly::operator*=(const scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, cc] : terms_) cc *= c;
    return *this;
}

poly operator*(const poly& a, const poly& b) {
    poly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

void poly::add_term(const monomial& m, const scalar& c) {
    if (c.is_zero()) return;
    auto sorted = [](const monomial& mm) {
        for (size_t i = 1; i < mm.size(); ++i)
            if (!(mm[i - 1].first < mm[i].first)) return false;
        return true;
    };
    if (!sorted(m)) {
        monomial norm = m;
        std::sort(norm.begin(), norm.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        monomial merged;
        for (const auto& [v, e] : norm) {
            if (!merged.empty() && merged.back().first == v)
                merged.back().second += e;
            else
                merged.emplace_back(v, e);
        }
        std::erase_if(merged, [](const auto& p) { return p.second == 0; });
        add_term(merged, c);
        return;
    }
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

scalar poly::coefficient(const monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? scalar(0) : it->second;
}

int poly::degree_in(variable v) const {
    int d = 0;
    for (const auto& [m, c] : terms_)
        for (const auto& [mv, e] : m)
            if (mv == v) d = std::max(d, e);
    return d;
}

int poly::min_exponent_in(variable v) const {
    bool first = true;
    int d = 0;
    for (const auto& [m, c] : terms_) {
        int e = 0;
        for (const auto& [mv, me] : m)
            if (mv == v) e = me;
        d = first ? e : std::min(d, e);
        first = false;
    }
    return d;
}

bool poly::depends_on(variable v) const {
    for (const auto& [m, c] : terms_)
        for (const auto& [mv, e] : m)
            if (mv == v) return true;
    return false;
}

std::vector<variable> poly::variables() const {
    std::vector<variable> vs;
    for (const auto& [m, c] : terms_)
        for (const auto& [mv, e] : m)
            if (std::find(vs.begin(), vs.end(), mv) == vs.end()) vs.push_back(mv);
    std::sort(vs.begin(), vs.end());
    return vs;
}

int poly::total_degree_in(const std::vector<variable>& group) const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
        int td = 0;
        for (const auto& [mv, e] : m)
            if (std::find(group.begin(), group.end(), mv) != group.end()) td += e;
        d = std::max(d, td);
    }
    return d;
}

poly pow(const poly& a, int e) {
    if (e < 0) {
        if (a.term_count() != 1)
            throw substitution_error("poly: negative power of a non-monomial");
        const auto& [m, c] = *a.terms().begin();
        monomial inv = m;
        for (auto& [v, ex] : inv) ex = -ex;
        poly base;
        base.add_term(inv, c.inverse());
        return pow(base, -e);
    }
    poly r(scalar(1)), base = a;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

poly divide_exact(const poly& num, const poly& den) {
    if (den.is_zero()) throw shuffly_error("divide_exact: zero divisor");
    if (num.is_zero()) return poly();

    // Laurent normalization: shift both operands into ordinary exponents.
    monomial shift_num, shift_den;
    auto min_shift = [](const poly& p) {
        monomial sh;
        for (variable v : p.variables()) {
            int m = p.min_exponent_in(v);
            if (m < 0) sh.emplace_back(v, m);
        }
        std::sort(sh.begin(), sh.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return sh;
    };
    shift_num = min_shift(num);
    shift_den = min_shift(den);

    auto apply_shift = [](const poly& p, const monomial& sh) {
        if (sh.empty()) return p;
        monomial inv = sh;
        for (auto& [v, e] : inv) e = -e;
        poly m;
        m.add_term(inv, scalar(1));
        return p * m;
    };
    poly f = apply_shift(num, shift_num);
    poly g = apply_shift(den, shift_den);

    poly q;
    poly r = f;
    const monomial& glm = g.leading_monomial();
    const scalar& glc = g.leading_coefficient();
    while (!r.is_zero()) {
        const monomial& rlm = r.leading_monomial();
        if (!mono_divides(glm, rlm))
            throw not_divisible("divide_exact: not divisible", r);
        monomial qm = mono_div(rlm, glm);
        scalar qc = r.leading_coefficient() / glc;
        poly t;
        t.add_term(qm, qc);
        q += t;
        r -= t * g;
    }
    // Undo the Laurent shifts: q * x^(shift_num - shift_den).
    monomial net = mono_div(shift_num, shift_den);
    if (!net.empty()) {
        poly m;
        m.add_term(net, scalar(1));
        q = q * m;
    }
    return q;
}

namespace {

void check_affine(const poly& target) {
    for (const auto& [m, c] : target.terms()) {
        int xy = 0;
        for (const auto& [v, e] : m) {
            if (v.which() == variable::kind::x || v.which() == variable::kind::y) {
                if (e != 1) throw substitution_error("substitute: non-affine binding target");
                ++xy;
            }
        }
        if (xy > 1) throw substitution_error("substitute: non-affine binding target");
    }
}

} // namespace

poly substitute(const poly& p, const std::map<variable, poly>& bindings) {
    for (const auto& [v, t] : bindings) check_affine(t);
    poly result;
    for (const auto& [m, c] : p.terms()) {
        poly term(c);
        monomial untouched;
        for (const auto& [v, e] : m) {
            auto it = bindings.find(v);
            if (it == bindings.end()) {
                untouched.emplace_back(v, e);
                continue;
            }
            if (e < 0 && it->second.term_count() != 1)
                throw substitution_error(
                    "substitute: negative exponent on a non-invertible target");
            term = term * pow(it->second, e);
        }
        if (!untouched.empty()) {
            poly mono;
            mono.add_term(untouched, scalar(1));
            term = term * mono;
        }
        result += term;
    }
    return result;
}

poly rename_variables(const poly& p, const std::map<variable, variable>& renames) {
    poly result;
    for (const auto& [m, c] : p.terms()) {
        monomial nm = m;
        bool changed = false;
        for (auto& [v, e] : nm) {
            auto it = renames.find(v);
            if (it != renames.end()) {
                v = it->second;
                changed = true;
            }
        }
        if (changed)
            std::sort(nm.begin(), nm.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
        result.add_term(nm, c);
    }
    return result;
}

std::map<monomial, poly, term_order> coefficients_by_xy(const poly& p) {
    std::map<monomial, poly, term_order> out;
    for (const auto& [m, c] : p.terms()) {
        monomial xy, hv;
        for (const auto& [v, e] : m) {
            if (v.which() == variable::kind::x || v.which() == variable::kind::y)
                xy.emplace_back(v, e);
            else
                hv.emplace_back(v, e);
        }
        out[xy].add_term(hv, c);
    }
    return out;
}

std::string poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        scalar a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        bool coeff_one = a.is_one();
        if (!coeff_one || m.empty()) os << a.str();
        bool need_star = !coeff_one && !m.empty();
        for (size_t i = 0; i < m.size(); ++i) {
            if (need_star || i > 0) os << "*";
            need_star = true;
            os << m[i].first.name();
            if (m[i].second != 1) os << "^" << m[i].second;
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const poly& p) { return os << p.str(); }

} // namespace shuffly
