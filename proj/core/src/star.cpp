#include "shuffly/element.hpp"

#include <algorithm>
#include <functional>

namespace shuffly {

namespace {

std::vector<std::vector<int>> all_subsets(int m, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        if (m - next + 1 < k - static_cast<int>(cur.size())) return;
        for (int s = next; s <= m; ++s) {
            cur.push_back(s);
            rec(s + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

std::vector<std::vector<int>> all_permutations(int m) {
    std::vector<int> p(m);
    for (int i = 0; i < m; ++i) p[i] = i + 1;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

int inversions(const std::vector<int>& seq) {
    int inv = 0;
    for (size_t a = 0; a < seq.size(); ++a)
        for (size_t b = a + 1; b < seq.size(); ++b)
            if (seq[a] > seq[b]) ++inv;
    return inv;
}

// #{(b, a) : b < a, b not in S, a in S}; the length of the minimal coset
// representative selecting S.
int subset_inversions(const std::vector<int>& s, int m) {
    std::vector<char> in(m + 1, 0);
    for (int a : s) in[a] = 1;
    int inv = 0;
    for (int a : s)
        for (int b = 1; b < a; ++b)
            if (!in[b]) ++inv;
    return inv;
}

struct star_plan {
    const dynkin_diagram* d;
    algebra_mode mode;
    int colors;
    std::vector<int> k, l, m;
    std::vector<zeta_kernel> adj_up;   // zeta(i, i+1), index i-1
    std::vector<zeta_kernel> adj_down; // zeta(i+1, i), index i-1
    std::vector<zeta_kernel> same;     // zeta(i, i), index i-1
    int global_sign = 1;
    poly p_even; // product of all (x_{i,r} - x_{i,r'}), r < r', over mixing even colors
    std::vector<char> mixes_even; // per color: even with k_i >= 1 and l_i >= 1
};

star_plan make_plan(const shuffle_element& f, const shuffle_element& g) {
    if (!(f.diagram() == g.diagram()))
        throw shuffly_error("star: different diagrams");
    if (f.mode() != g.mode()) throw shuffly_error("star: mixed algebra modes");
    star_plan p;
    p.d = &f.diagram();
    p.mode = f.mode();
    p.colors = p.d->colors();
    p.k = f.degree();
    p.l = g.degree();
    p.m.resize(p.colors);
    for (int i = 0; i < p.colors; ++i) p.m[i] = p.k[i] + p.l[i];

    auto zeta = [&](int i, int j) {
        return p.mode == algebra_mode::rational ? zeta_rational(*p.d, i, j)
                                                : zeta_trig(*p.d, i, j);
    };
    for (int i = 1; i < p.colors; ++i) {
        p.adj_up.push_back(zeta(i, i + 1));
        p.adj_down.push_back(zeta(i + 1, i));
    }
    for (int i = 1; i <= p.colors; ++i) p.same.push_back(zeta(i, i));

    // Constant signs: flipping the zeta_{i+1,i} pair denominators into the
    // canonical pole orientation, and the +/- prefactors of all zeta factors.
    for (int i = 1; i < p.colors; ++i)
        if ((p.k[i] * p.l[i - 1]) % 2 != 0) p.global_sign = -p.global_sign;
    for (int a = 1; a <= p.colors; ++a)
        for (int b = 1; b < a; ++b)
            if (p.d->alpha_parity(a) == 1 && p.d->alpha_parity(b) == 1 &&
                (p.k[a - 1] * p.l[b - 1]) % 2 != 0)
                p.global_sign = -p.global_sign;

    p.mixes_even.assign(p.colors, 0);
    p.p_even = poly(scalar(1));
    for (int i = 1; i <= p.colors; ++i) {
        if (p.d->alpha_parity(i) == 0 && p.k[i - 1] >= 1 && p.l[i - 1] >= 1) {
            p.mixes_even[i - 1] = 1;
            for (int r = 1; r <= p.m[i - 1]; ++r)
                for (int r2 = r + 1; r2 <= p.m[i - 1]; ++r2)
                    p.p_even *= poly::var(variable::x(i, r)) - poly::var(variable::x(i, r2));
        }
    }
    return p;
}

// One summand for a fixed per-color split: subset[i] (ascending) receives the
// f-variables, its complement the g-variables, after the per-color renames
// f_map/g_map have been applied.
poly split_term(const star_plan& p, const std::vector<std::vector<int>>& subset, const poly& fs,
                const poly& gs) {
    poly term = fs * gs;
    std::vector<std::vector<char>> in(p.colors);
    std::vector<std::vector<int>> comp(p.colors);
    for (int i = 0; i < p.colors; ++i) {
        in[i].assign(p.m[i] + 1, 0);
        for (int a : subset[i]) in[i][a] = 1;
        for (int r = 1; r <= p.m[i]; ++r)
            if (!in[i][r]) comp[i].push_back(r);
    }
    for (int i = 1; i <= p.colors; ++i) {
        // mixed adjacent numerators, both orientations
        if (i < p.colors) {
            const zeta_kernel& up = p.adj_up[i - 1];
            for (int a : subset[i - 1])
                for (int b : comp[i])
                    term *= up.pair_numerator(variable::x(i, a), variable::x(i + 1, b));
            const zeta_kernel& down = p.adj_down[i - 1];
            for (int a : subset[i])
                for (int b : comp[i - 1])
                    term *= down.pair_numerator(variable::x(i + 1, a), variable::x(i, b));
        }
        // same-color even numerators and the complementary difference products
        if (p.mixes_even[i - 1]) {
            const zeta_kernel& same = p.same[i - 1];
            for (int a : subset[i - 1])
                for (int b : comp[i - 1])
                    term *= same.pair_numerator(variable::x(i, a), variable::x(i, b));
            auto within = [&](const std::vector<int>& grp) {
                for (size_t u = 0; u < grp.size(); ++u)
                    for (size_t w = u + 1; w < grp.size(); ++w)
                        term *= poly::var(variable::x(i, grp[u])) -
                                poly::var(variable::x(i, grp[w]));
            };
            within(subset[i - 1]);
            within(comp[i - 1]);
        }
    }
    return term;
}

shuffle_element star_impl(const shuffle_element& f, const shuffle_element& g, bool naive) {
    star_plan p = make_plan(f, g);
    if (f.is_zero() || g.is_zero())
        return shuffle_element::zero(*p.d, p.m, p.mode);

    poly total;
    scalar norm(1);

    if (!naive) {
        std::vector<std::vector<std::vector<int>>> choices(p.colors);
        for (int i = 0; i < p.colors; ++i) {
            choices[i] = all_subsets(p.m[i], p.k[i]);
            norm /= binomial(p.m[i], p.k[i]);
        }
        std::vector<size_t> idx(p.colors, 0);
        std::vector<std::vector<int>> subset(p.colors), comp(p.colors);
        while (true) {
            int sign = 1;
            std::map<variable, variable> f_map, g_map;
            for (int i = 0; i < p.colors; ++i) {
                subset[i] = choices[i][idx[i]];
                comp[i].clear();
                std::vector<char> in(p.m[i] + 1, 0);
                for (int a : subset[i]) in[a] = 1;
                for (int r = 1; r <= p.m[i]; ++r)
                    if (!in[r]) comp[i].push_back(r);
                if (subset_inversions(subset[i], p.m[i]) % 2 != 0) sign = -sign;
                for (int r = 1; r <= p.k[i]; ++r)
                    f_map.emplace(variable::x(i + 1, r), variable::x(i + 1, subset[i][r - 1]));
                for (int r = 1; r <= p.l[i]; ++r)
                    g_map.emplace(variable::x(i + 1, r), variable::x(i + 1, comp[i][r - 1]));
            }
            poly term = split_term(p, subset, rename_variables(f.numerator(), f_map),
                                   rename_variables(g.numerator(), g_map));
            if (sign < 0) term = -term;
            total += term;

            int pos = p.colors - 1;
            while (pos >= 0 && ++idx[pos] == choices[pos].size()) idx[pos--] = 0;
            if (pos < 0) break;
        }
    } else {
        std::vector<std::vector<std::vector<int>>> perms(p.colors);
        for (int i = 0; i < p.colors; ++i) {
            perms[i] = all_permutations(p.m[i]);
            norm /= factorial(p.m[i]);
        }
        std::vector<size_t> idx(p.colors, 0);
        while (true) {
            int sign = 1;
            std::map<variable, variable> f_map, g_map;
            std::vector<std::vector<int>> subset(p.colors);
            for (int i = 0; i < p.colors; ++i) {
                const std::vector<int>& sigma = perms[i][idx[i]];
                subset[i].assign(sigma.begin(), sigma.begin() + p.k[i]);
                std::sort(subset[i].begin(), subset[i].end());
                if (p.d->alpha_parity(i + 1) == 1 && inversions(sigma) % 2 != 0) sign = -sign;
                if (p.d->alpha_parity(i + 1) == 0 &&
                    subset_inversions(subset[i], p.m[i]) % 2 != 0)
                    sign = -sign;
                for (int r = 1; r <= p.k[i]; ++r)
                    f_map.emplace(variable::x(i + 1, r), variable::x(i + 1, sigma[r - 1]));
                for (int r = 1; r <= p.l[i]; ++r)
                    g_map.emplace(variable::x(i + 1, r),
                                  variable::x(i + 1, sigma[p.k[i] + r - 1]));
            }
            poly term = split_term(p, subset, rename_variables(f.numerator(), f_map),
                                   rename_variables(g.numerator(), g_map));
            if (sign < 0) term = -term;
            total += term;

            int pos = p.colors - 1;
            while (pos >= 0 && ++idx[pos] == perms[pos].size()) idx[pos--] = 0;
            if (pos < 0) break;
        }
    }

    poly numerator =
        p.p_even.is_constant() ? std::move(total) : divide_exact(total, p.p_even);
    numerator *= norm * scalar(p.global_sign);
    return shuffle_element(*p.d, p.m, std::move(numerator), p.mode);
}

} // namespace

shuffle_element star(const shuffle_element& f, const shuffle_element& g) {
    if (f.mode() != algebra_mode::rational) throw shuffly_error("star: rational mode required");
    return star_impl(f, g, false);
}

shuffle_element star_naive(const shuffle_element& f, const shuffle_element& g) {
    if (f.mode() != algebra_mode::rational) throw shuffly_error("star: rational mode required");
    return star_impl(f, g, true);
}

shuffle_element star_trig(const shuffle_element& f, const shuffle_element& g) {
    if (f.mode() != algebra_mode::trigonometric)
        throw shuffly_error("star_trig: trigonometric mode required");
    return star_impl(f, g, false);
}

shuffle_element star_trig_naive(const shuffle_element& f, const shuffle_element& g) {
    if (f.mode() != algebra_mode::trigonometric)
        throw shuffly_error("star_trig: trigonometric mode required");
    return star_impl(f, g, true);
}

} // namespace shuffly
