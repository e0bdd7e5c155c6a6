#include "shuffly/linalg.hpp"

namespace shuffly {

poly_fraction::poly_fraction(poly n, poly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw shuffly_error("poly_fraction: zero denominator");
    if (num.is_zero()) den = poly(scalar(1));
}

void poly_fraction::reduce() {
    if (num.is_zero()) {
        den = poly(scalar(1));
        return;
    }
    if (den.is_constant()) {
        num *= den.constant_value().inverse();
        den = poly(scalar(1));
        return;
    }
    try {
        poly q = divide_exact(num, den);
        num = q;
        den = poly(scalar(1));
    } catch (const not_divisible&) {
        // keep as a genuine fraction
    }
}

poly poly_fraction::as_polynomial() const {
    if (den.is_constant()) {
        poly r = num;
        r *= den.constant_value().inverse();
        return r;
    }
    return divide_exact(num, den);
}

poly_fraction operator+(const poly_fraction& a, const poly_fraction& b) {
    poly_fraction r(a.num * b.den + b.num * a.den, a.den * b.den);
    r.reduce();
    return r;
}

poly_fraction operator-(const poly_fraction& a, const poly_fraction& b) {
    poly_fraction r(a.num * b.den - b.num * a.den, a.den * b.den);
    r.reduce();
    return r;
}

poly_fraction operator*(const poly_fraction& a, const poly_fraction& b) {
    poly_fraction r(a.num * b.num, a.den * b.den);
    r.reduce();
    return r;
}

poly_fraction operator/(const poly_fraction& a, const poly_fraction& b) {
    if (b.num.is_zero()) throw shuffly_error("poly_fraction: division by zero");
    poly_fraction r(a.num * b.den, a.den * b.num);
    r.reduce();
    return r;
}

bool operator==(const poly_fraction& a, const poly_fraction& b) {
    return a.num * b.den == b.num * a.den;
}

namespace {

struct echelon {
    poly_matrix m;           // augmented, in echelon form
    std::vector<int> pivot_col; // per pivot row
    int rank = 0;
};

// Fraction-free Gaussian elimination (Bareiss). Divisions by the previous
// pivot are exact by the Sylvester identity.
echelon eliminate(poly_matrix m, size_t ncols_coeff) {
    echelon e;
    const size_t nrows = m.size();
    const size_t ncols = nrows ? m[0].size() : 0;
    poly prev(scalar(1));
    size_t row = 0;
    for (size_t col = 0; col < ncols_coeff && row < nrows; ++col) {
        size_t piv = row;
        while (piv < nrows && m[piv][col].is_zero()) ++piv;
        if (piv == nrows) continue;
        if (piv != row) std::swap(m[piv], m[row]);
        for (size_t i = row + 1; i < nrows; ++i) {
            for (size_t j = col + 1; j < ncols; ++j) {
                poly t = m[i][j] * m[row][col] - m[i][col] * m[row][j];
                m[i][j] = divide_exact(t, prev);
            }
            m[i][col] = poly();
        }
        prev = m[row][col];
        e.pivot_col.push_back(static_cast<int>(col));
        ++row;
    }
    e.rank = static_cast<int>(row);
    e.m = std::move(m);
    return e;
}

} // namespace

linear_solve_report solve_linear(poly_matrix a, std::vector<poly> b) {
    const size_t nrows = a.size();
    if (b.size() != nrows) throw shuffly_error("solve_linear: shape mismatch");
    const size_t ncols = nrows ? a[0].size() : 0;
    for (auto& row : a) {
        if (row.size() != ncols) throw shuffly_error("solve_linear: ragged matrix");
    }
    poly_matrix aug = std::move(a);
    for (size_t i = 0; i < nrows; ++i) aug[i].push_back(std::move(b[i]));

    echelon e = eliminate(std::move(aug), ncols);

    linear_solve_report rep;
    rep.rank = e.rank;
    for (size_t i = e.rank; i < nrows; ++i)
        if (!e.m[i][ncols].is_zero()) rep.consistent = false;
    rep.solution.assign(ncols, poly_fraction());
    if (!rep.consistent) return rep;
    rep.unique = (static_cast<size_t>(e.rank) == ncols);

    for (int r = e.rank - 1; r >= 0; --r) {
        int pc = e.pivot_col[r];
        poly_fraction acc(e.m[r][ncols]);
        for (size_t j = pc + 1; j < ncols; ++j) {
            if (e.m[r][j].is_zero() || rep.solution[j].is_zero()) continue;
            acc = acc - poly_fraction(e.m[r][j]) * rep.solution[j];
        }
        rep.solution[pc] = acc / poly_fraction(e.m[r][pc]);
    }
    return rep;
}

int matrix_rank(poly_matrix a) {
    if (a.empty()) return 0;
    size_t ncols = a[0].size();
    for (auto& row : a)
        if (row.size() != ncols) throw shuffly_error("matrix_rank: ragged matrix");
    return eliminate(std::move(a), ncols).rank;
}

} // namespace shuffly
