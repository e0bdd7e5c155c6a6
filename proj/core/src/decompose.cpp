#include "shuffly/decompose.hpp"

#include "shuffly/linalg.hpp"
#include "shuffly/membership.hpp"

#include <functional>

namespace shuffly {

namespace {

// Nondecreasing mode lists of the given length (strictly increasing for odd
// roots) with total sum <= budget.
std::vector<std::vector<int>> mode_lists(int length, int budget, bool strict) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int lo, int left) {
        if (static_cast<int>(cur.size()) == length) {
            out.push_back(cur);
            return;
        }
        for (int r = lo; r <= left; ++r) {
            cur.push_back(r);
            rec(strict ? r + 1 : r, left - r);
            cur.pop_back();
        }
    };
    rec(0, budget);
    return out;
}

std::optional<scalar> scalar_ratio(const poly& a, const poly& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return scalar(0);
    scalar c = a.leading_coefficient() / b.leading_coefficient();
    poly scaled = b;
    scaled *= c;
    if (scaled == a) return c;
    return std::nullopt;
}

} // namespace

decomposition decompose_good(const shuffle_element& f, const pbw_builder& builder) {
    if (f.mode() != algebra_mode::rational)
        throw shuffly_error("decompose_good: rational mode required");
    if (!check_membership(f).ok())
        throw not_in_span("decompose_good: input fails the membership conditions");
    {
        good_report g = is_good(f);
        if (!g.good)
            throw not_in_span("decompose_good: input is not good (witness d at " +
                              g.witness->support().begin()->first.name() + ")");
    }

    const dynkin_diagram& d = f.diagram();
    decomposition out;
    shuffle_element residual = f;

    for (const degree_vector& dd : enumerate_T(d, f.degree())) {
        poly ph = phi(residual, dd).value;
        if (ph.is_zero()) continue;

        // Factor out the sigma-independent part.
        poly fixed(scalar(1));
        const auto& sup = dd.support();
        for (auto it = sup.begin(); it != sup.end(); ++it) {
            for (auto jt = std::next(it); jt != sup.end(); ++jt)
                fixed *= factor_pair(d, it->first, jt->first, it->second, jt->second);
            fixed *= factor_diag(d, it->first, it->second);
        }
        poly g;
        try {
            g = divide_exact(ph, fixed);
        } catch (const not_divisible&) {
            throw not_in_span("decompose_good: specialization does not factor through the "
                              "predicted vanishing locus");
        }

        // Candidate per-root mode lists, bounded by the y-degrees of G.
        std::vector<root_interval> roots;
        std::vector<std::vector<std::vector<int>>> cand;
        for (const auto& [beta, mult] : sup) {
            std::vector<variable> group;
            for (int s = 1; s <= mult; ++s) group.push_back(variable::y(beta.j, beta.i, s));
            int budget = g.total_degree_in(group);
            bool strict = root_parity(d, beta) == 1;
            auto lists = mode_lists(mult, budget, strict);
            if (lists.empty())
                throw not_in_span("decompose_good: empty mode window at " + beta.name());
            roots.push_back(beta);
            cand.push_back(std::move(lists));
        }

        // All tuples of per-root lists.
        std::vector<std::vector<std::vector<int>>> tuples;
        std::vector<std::vector<int>> cur(roots.size());
        std::function<void(size_t)> rec = [&](size_t idx) {
            if (idx == roots.size()) {
                tuples.push_back(cur);
                return;
            }
            for (const auto& lst : cand[idx]) {
                cur[idx] = lst;
                rec(idx + 1);
            }
        };
        rec(0);

        // Basis column for each tuple: the product of per-root rank-1 sums.
        std::vector<poly> columns(tuples.size());
        for (size_t t = 0; t < tuples.size(); ++t) {
            poly col(scalar(1));
            for (size_t b = 0; b < roots.size(); ++b)
                col *= rank1_product_basis(d, roots[b], tuples[t][b], builder);
            columns[t] = std::move(col);
        }

        // Linear system on y-monomial coefficients over Q(h).
        std::map<monomial, size_t, term_order> row_index;
        auto g_split = coefficients_by_xy(g);
        std::vector<decltype(g_split)> col_split(columns.size());
        for (const auto& [m, c] : g_split) row_index.emplace(m, 0);
        for (size_t t = 0; t < columns.size(); ++t) {
            col_split[t] = coefficients_by_xy(columns[t]);
            for (const auto& [m, c] : col_split[t]) row_index.emplace(m, 0);
        }
        size_t nr = 0;
        for (auto& [m, idx] : row_index) idx = nr++;
        poly_matrix a(nr, std::vector<poly>(columns.size(), poly()));
        std::vector<poly> rhs(nr, poly());
        for (size_t t = 0; t < columns.size(); ++t)
            for (const auto& [m, c] : col_split[t]) a[row_index[m]][t] = c;
        for (const auto& [m, c] : g_split) rhs[row_index[m]] = c;

        linear_solve_report sol = solve_linear(std::move(a), std::move(rhs));
        if (!sol.consistent || !sol.unique)
            throw not_in_span("decompose_good: rank-1 expansion failed at the mode window");

        for (size_t t = 0; t < tuples.size(); ++t) {
            if (sol.solution[t].is_zero()) continue;
            pbw_monomial h;
            for (size_t b = 0; b < roots.size(); ++b)
                for (int r : tuples[t][b]) h.set(roots[b], r, h.at(roots[b], r) + 1);

            shuffle_element image = psi_pbw_monomial(d, h, builder);
            poly image_phi = phi(image, dd).value;
            auto ratio = scalar_ratio(image_phi, fixed * columns[t]);
            if (!ratio || ratio->is_zero())
                throw not_in_span("decompose_good: PBW image does not match its factored form");

            poly coeff;
            try {
                poly_fraction cf = sol.solution[t];
                cf.reduce();
                coeff = cf.as_polynomial();
            } catch (const not_divisible&) {
                throw not_in_span("decompose_good: coefficient is not polynomial in h");
            }
            coeff *= ratio->inverse();
            if (coeff.is_zero()) continue;
            out.coefficients[h] += coeff;
            residual -= image.scaled(coeff);
        }
        if (!phi(residual, dd).value.is_zero())
            throw not_in_span("decompose_good: residual specialization did not clear");
    }

    if (!residual.is_zero())
        throw not_in_span("decompose_good: nonzero residual after the minimal degree vector");
    for (auto it = out.coefficients.begin(); it != out.coefficients.end();) {
        if (it->second.is_zero())
            it = out.coefficients.erase(it);
        else
            ++it;
    }
    return out;
}

} // namespace shuffly
