#include "shuffly/relations.hpp"

#include "shuffly/linalg.hpp"
#include "shuffly/parallel.hpp"

#include <sstream>

namespace shuffly {

word_sum word_sum::letter(int color, int mode) {
    word_sum w;
    w.add(generator_word{{{color, mode}}}, poly(scalar(1)));
    return w;
}

void word_sum::add(const generator_word& w, const poly& c) {
    if (!specimen_) specimen_ = w;
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

word_sum operator+(const word_sum& a, const word_sum& b) {
    word_sum r = a;
    for (const auto& [w, c] : b.terms()) r.add(w, c);
    if (!r.specimen_) r.specimen_ = b.specimen_;
    return r;
}

word_sum operator-(const word_sum& a, const word_sum& b) {
    word_sum r = a;
    for (const auto& [w, c] : b.terms()) r.add(w, -c);
    if (!r.specimen_) r.specimen_ = b.specimen_;
    return r;
}

word_sum operator*(const word_sum& a, const word_sum& b) {
    word_sum r;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            generator_word w = wa;
            w.letters.insert(w.letters.end(), wb.letters.begin(), wb.letters.end());
            r.add(w, ca * cb);
        }
    if (!r.specimen_ && a.specimen_ && b.specimen_) {
        generator_word w = *a.specimen_;
        w.letters.insert(w.letters.end(), b.specimen_->letters.begin(),
                         b.specimen_->letters.end());
        r.specimen_ = w;
    }
    return r;
}

word_sum word_sum::scaled(const poly& c) const {
    word_sum r;
    r.specimen_ = specimen_;
    for (const auto& [w, cc] : terms_) r.add(w, cc * c);
    return r;
}

int word_sum::parity(const dynkin_diagram& d) const {
    if (!specimen_) throw shuffly_error("word_sum: parity of the empty sum");
    return specimen_->parity(d);
}

std::vector<int> word_sum::color_degree(const dynkin_diagram& d) const {
    if (!specimen_) throw shuffly_error("word_sum: degree of the empty sum");
    std::vector<int> deg = specimen_->color_degree(d);
    for (const auto& [w, c] : terms_)
        if (w.color_degree(d) != deg)
            throw shuffly_error("word_sum: inhomogeneous color degree");
    return deg;
}

word_sum bracket_x(const word_sum& a, const word_sum& b, const poly& x,
                   const dynkin_diagram& d) {
    int sign = (a.parity(d) * b.parity(d)) % 2 ? -1 : 1;
    word_sum ba = (b * a).scaled(x * scalar(sign));
    return a * b - ba;
}

word_sum bracket(const word_sum& a, const word_sum& b, const dynkin_diagram& d) {
    return bracket_x(a, b, poly(scalar(1)), d);
}

word_sum anti_bracket(const word_sum& a, const word_sum& b, const dynkin_diagram& d) {
    return bracket_x(a, b, poly(scalar(-1)), d);
}

word_sum v_bracket(const word_sum& a, const word_sum& b, const dynkin_diagram& d) {
    std::vector<int> ka = a.color_degree(d), lb = b.color_degree(d);
    int pairing = 0;
    for (int i = 1; i <= d.colors(); ++i)
        for (int j = 1; j <= d.colors(); ++j)
            pairing += ka[i - 1] * lb[j - 1] * cartan(d, i, j);
    return bracket_x(a, b, pow(poly::var(variable::v()), pairing), d);
}

shuffle_element evaluate_word_sum(const dynkin_diagram& d, const word_sum& ws,
                                  algebra_mode mode, word_cache& cache) {
    std::vector<int> deg = ws.color_degree(d);
    shuffle_element acc = shuffle_element::zero(d, deg, mode);
    for (const auto& [w, c] : ws.terms()) {
        auto it = cache.images.find(w);
        if (it == cache.images.end())
            it = cache.images.emplace(w, psi_word(d, w, mode)).first;
        acc += it->second.scaled(c);
    }
    return acc;
}

namespace {

using instance_fn = std::function<check_record()>;

std::vector<check_record> run_instances(std::vector<std::pair<std::string, instance_fn>> work) {
    std::vector<check_record> records(work.size());
    parallel_for(work.size(), [&](size_t idx) { records[idx] = work[idx].second(); });
    return records;
}

check_record zero_check(const dynkin_diagram& d, const std::string& name,
                        const std::string& instance, const word_sum& ws, algebra_mode mode) {
    word_cache cache;
    shuffle_element val = evaluate_word_sum(d, ws, mode, cache);
    check_record rec{name, instance, val.is_zero(), ""};
    if (!rec.pass) rec.witness = "nonzero numerator: " + val.numerator().str();
    return rec;
}

std::string fmt_instance(std::initializer_list<std::pair<const char*, int>> kv) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : kv) {
        if (!first) os << " ";
        os << k << "=" << v;
        first = false;
    }
    return os.str();
}

} // namespace

std::vector<check_record> verify_positive_relations(const dynkin_diagram& d, int max_mode) {
    if (max_mode < 1) throw shuffly_error("verify_positive_relations: window must be >= 1");
    std::vector<std::pair<std::string, instance_fn>> work;
    const int colors = d.colors();
    poly hbar = poly::var(variable::hbar());

    auto X = [](int i, int r) { return word_sum::letter(i, r); };

    // (i) [x_{i,r}, x_{j,s}] = 0 whenever c_ij = 0.
    for (int i = 1; i <= colors; ++i)
        for (int j = 1; j <= colors; ++j) {
            if (cartan(d, i, j) != 0) continue;
            for (int r = 0; r <= max_mode; ++r)
                for (int s = 0; s <= max_mode; ++s) {
                    std::string inst = fmt_instance({{"i", i}, {"j", j}, {"r", r}, {"s", s}});
                    work.emplace_back(inst, [=, &d]() {
                        return zero_check(d, "commute.czero", inst,
                                          bracket(X(i, r), X(j, s), d),
                                          algebra_mode::rational);
                    });
                }
        }

    // (ii) [x_{i,r+1}, x_{j,s}] - [x_{i,r}, x_{j,s+1}] = (c_ij h / 2) {x_{i,r}, x_{j,s}}
    //      unless i = j with |alpha_i| odd.
    for (int i = 1; i <= colors; ++i)
        for (int j = 1; j <= colors; ++j) {
            if (i == j && d.alpha_parity(i) == 1) continue;
            poly coeff = hbar * scalar(cartan(d, i, j), 2);
            for (int r = 0; r <= max_mode; ++r)
                for (int s = 0; s <= max_mode; ++s) {
                    std::string inst = fmt_instance({{"i", i}, {"j", j}, {"r", r}, {"s", s}});
                    work.emplace_back(inst, [=, &d]() {
                        word_sum lhs = bracket(X(i, r + 1), X(j, s), d) -
                                       bracket(X(i, r), X(j, s + 1), d);
                        word_sum rhs = anti_bracket(X(i, r), X(j, s), d).scaled(coeff);
                        return zero_check(d, "deformed.quadratic", inst, lhs - rhs,
                                          algebra_mode::rational);
                    });
                }
        }

    // (iii) cubic Serre at even i, j = i +- 1.
    for (int i = 1; i <= colors; ++i) {
        if (d.alpha_parity(i) != 0) continue;
        for (int j : {i - 1, i + 1}) {
            if (j < 1 || j > colors) continue;
            for (int r = 0; r <= max_mode; ++r)
                for (int s = 0; s <= max_mode; ++s)
                    for (int t = 0; t <= max_mode; ++t) {
                        std::string inst =
                            fmt_instance({{"i", i}, {"j", j}, {"r", r}, {"s", s}, {"t", t}});
                        work.emplace_back(inst, [=, &d]() {
                            word_sum lhs =
                                bracket(X(i, r), bracket(X(i, s), X(j, t), d), d) +
                                bracket(X(i, s), bracket(X(i, r), X(j, t), d), d);
                            return zero_check(d, "serre.cubic", inst, lhs,
                                              algebra_mode::rational);
                        });
                    }
        }
    }

    // (iv) quartic Serre at odd j with even neighbors, plus the generalized
    //      four-mode family.
    for (int j = 2; j < colors; ++j) {
        if (d.alpha_parity(j) != 1 || d.alpha_parity(j - 1) != 0 || d.alpha_parity(j + 1) != 0)
            continue;
        for (int r = 0; r <= max_mode; ++r)
            for (int s = 0; s <= max_mode; ++s) {
                std::string inst = fmt_instance({{"j", j}, {"r", r}, {"s", s}});
                work.emplace_back(inst, [=, &d]() {
                    word_sum lhs = bracket(bracket(X(j - 1, r), X(j, 0), d),
                                           bracket(X(j, 0), X(j + 1, s), d), d);
                    return zero_check(d, "serre.quartic", inst, lhs, algebra_mode::rational);
                });
            }
        for (int r = 0; r <= max_mode; ++r)
            for (int k = 0; k <= max_mode; ++k)
                for (int l = 0; l <= max_mode; ++l)
                    for (int s = 0; s <= max_mode; ++s) {
                        std::string inst = fmt_instance(
                            {{"j", j}, {"r", r}, {"k", k}, {"l", l}, {"s", s}});
                        work.emplace_back(inst, [=, &d]() {
                            word_sum lhs =
                                bracket(bracket(X(j - 1, r), X(j, k), d),
                                        bracket(X(j, l), X(j + 1, s), d), d) +
                                bracket(bracket(X(j - 1, r), X(j, l), d),
                                        bracket(X(j, k), X(j + 1, s), d), d);
                            return zero_check(d, "serre.quartic.general", inst, lhs,
                                              algebra_mode::rational);
                        });
                    }
    }

    return run_instances(std::move(work));
}

std::vector<check_record> verify_quantum_relations(const dynkin_diagram& d, int max_mode) {
    if (max_mode < 1) throw shuffly_error("verify_quantum_relations: window must be >= 1");
    std::vector<std::pair<std::string, instance_fn>> work;
    const int colors = d.colors();
    const algebra_mode trig = algebra_mode::trigonometric;
    poly vv = poly::var(variable::v());

    auto E = [](int i, int r) { return word_sum::letter(i, r); };

    // (1) (z - v^{c} w) e_i(z) e_j(w) = (-1)^{|i||j|} (v^{c} z - w) e_j(w) e_i(z),
    //     extracted at each bimode (r, s).
    for (int i = 1; i <= colors; ++i)
        for (int j = 1; j <= colors; ++j) {
            int c = cartan(d, i, j);
            int sg = (d.alpha_parity(i) * d.alpha_parity(j)) % 2 ? -1 : 1;
            for (int r = -max_mode; r <= max_mode; ++r)
                for (int s = -max_mode; s <= max_mode; ++s) {
                    std::string inst = fmt_instance({{"i", i}, {"j", j}, {"r", r}, {"s", s}});
                    work.emplace_back(inst, [=, &d]() {
                        word_sum lhs =
                            E(i, r + 1) * E(j, s) - (E(i, r) * E(j, s + 1)).scaled(pow(vv, c));
                        word_sum rhs = (E(j, s) * E(i, r + 1)).scaled(pow(vv, c)) -
                                       E(j, s + 1) * E(i, r);
                        return zero_check(d, "quantum.quadratic", inst,
                                          lhs - rhs.scaled(poly(scalar(sg))), trig);
                    });
                }
        }

    // (2) [e_i(z), e_j(w)] = 0 when c_ij = 0.
    for (int i = 1; i <= colors; ++i)
        for (int j = 1; j <= colors; ++j) {
            if (cartan(d, i, j) != 0) continue;
            for (int r = -max_mode; r <= max_mode; ++r)
                for (int s = -max_mode; s <= max_mode; ++s) {
                    std::string inst = fmt_instance({{"i", i}, {"j", j}, {"r", r}, {"s", s}});
                    work.emplace_back(inst, [=, &d]() {
                        return zero_check(d, "quantum.czero", inst, bracket(E(i, r), E(j, s), d),
                                          trig);
                    });
                }
        }

    // (3) cubic v-Serre at even i, j = i +- 1, and the degree-paired general
    //     form at every adjacent pair.
    for (int i = 1; i <= colors; ++i)
        for (int j : {i - 1, i + 1}) {
            if (j < 1 || j > colors) continue;
            bool strict = d.alpha_parity(i) == 0;
            for (int r1 = -max_mode; r1 <= max_mode; ++r1)
                for (int r2 = -max_mode; r2 <= max_mode; ++r2)
                    for (int s = -max_mode; s <= max_mode; ++s) {
                        std::string inst = fmt_instance(
                            {{"i", i}, {"j", j}, {"r1", r1}, {"r2", r2}, {"s", s}});
                        if (strict)
                            work.emplace_back(inst, [=, &d]() {
                                word_sum lhs =
                                    bracket_x(E(i, r1),
                                              bracket_x(E(i, r2), E(j, s), pow(vv, -1), d), vv,
                                              d) +
                                    bracket_x(E(i, r2),
                                              bracket_x(E(i, r1), E(j, s), pow(vv, -1), d), vv,
                                              d);
                                return zero_check(d, "quantum.serre.cubic", inst, lhs, trig);
                            });
                        work.emplace_back(inst, [=, &d]() {
                            word_sum lhs =
                                v_bracket(E(i, r1), v_bracket(E(i, r2), E(j, s), d), d) +
                                v_bracket(E(i, r2), v_bracket(E(i, r1), E(j, s), d), d);
                            return zero_check(d, "quantum.serre.cubic.general", inst, lhs,
                                              trig);
                        });
                    }
        }

    // (4) quartic v-Serre families at interior i, in three equivalent forms;
    //     the strict form only where its parity pattern applies.
    for (int i = 2; i < colors; ++i) {
        bool strict = d.alpha_parity(i) == 1 && d.alpha_parity(i - 1) == 0 &&
                      d.alpha_parity(i + 1) == 0;
        for (int mw = -max_mode; mw <= max_mode; ++mw)
            for (int m1 = -max_mode; m1 <= max_mode; ++m1)
                for (int mu = -max_mode; mu <= max_mode; ++mu)
                    for (int m2 = -max_mode; m2 <= max_mode; ++m2) {
                        std::string inst = fmt_instance({{"i", i},
                                                         {"w", mw},
                                                         {"z1", m1},
                                                         {"u", mu},
                                                         {"z2", m2}});
                        if (strict)
                            work.emplace_back(inst, [=, &d]() {
                                auto half = [&](int a, int b) {
                                    return bracket(
                                        bracket_x(bracket_x(E(i - 1, mw), E(i, a), pow(vv, -1),
                                                            d),
                                                  E(i + 1, mu), vv, d),
                                        E(i, b), d);
                                };
                                return zero_check(d, "quantum.serre.quartic", inst,
                                                  half(m1, m2) + half(m2, m1), trig);
                            });
                        work.emplace_back(inst, [=, &d]() {
                            auto half = [&](int a, int b) {
                                return v_bracket(
                                    v_bracket(v_bracket(E(i - 1, mw), E(i, a), d), E(i + 1, mu),
                                              d),
                                    E(i, b), d);
                            };
                            return zero_check(d, "quantum.serre.quartic.general", inst,
                                              half(m1, m2) + half(m2, m1), trig);
                        });
                        work.emplace_back(inst, [=, &d]() {
                            auto half = [&](int a, int b) {
                                return v_bracket(v_bracket(E(i - 1, mw), E(i, a), d),
                                                 v_bracket(E(i + 1, mu), E(i, b), d), d);
                            };
                            word_sum flv = half(m1, m2) + half(m2, m1);
                            auto nested_half = [&](int a, int b) {
                                return v_bracket(
                                    v_bracket(v_bracket(E(i - 1, mw), E(i, a), d), E(i + 1, mu),
                                              d),
                                    E(i, b), d);
                            };
                            word_sum nested = nested_half(m1, m2) + nested_half(m2, m1);
                            word_cache cache;
                            shuffle_element fv = evaluate_word_sum(d, flv, trig, cache);
                            shuffle_element nv = evaluate_word_sum(d, nested, trig, cache);
                            check_record rec{"quantum.serre.quartic.flv", inst,
                                             fv.is_zero() && fv == nv, ""};
                            if (!rec.pass)
                                rec.witness = "flv=" + fv.numerator().str() +
                                              " nested=" + nv.numerator().str();
                            return rec;
                        });
                    }
    }

    return run_instances(std::move(work));
}

rank1_report rank1_independence(const dynkin_diagram& d, int k, int max_mode) {
    if (d.colors() != 1) throw shuffly_error("rank1_independence: dim(V) must be 2");
    bool odd = d.alpha_parity(1) == 1;
    rank1_report rep;
    rep.k = k;

    std::vector<std::vector<int>> lists;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int lo) {
        if (static_cast<int>(cur.size()) == k) {
            lists.push_back(cur);
            return;
        }
        for (int r = lo; r <= max_mode; ++r) {
            cur.push_back(r);
            rec(odd ? r + 1 : r);
            cur.pop_back();
        }
    };
    rec(0);
    rep.mode_lists = lists;
    rep.expected = static_cast<int>(lists.size());

    std::vector<poly> numerators(lists.size());
    parallel_for(lists.size(), [&](size_t idx) {
        shuffle_element acc = shuffle_element::unit(d);
        for (int r : lists[idx]) acc = star(acc, unit_generator(d, 1, r));
        numerators[idx] = acc.numerator();
    });

    // Row per product, column per x-monomial, entries in Q[h].
    std::map<monomial, size_t, term_order> columns;
    std::vector<std::map<monomial, poly, term_order>> split(numerators.size());
    for (size_t r = 0; r < numerators.size(); ++r) {
        split[r] = coefficients_by_xy(numerators[r]);
        for (const auto& [m, c] : split[r]) columns.emplace(m, 0);
    }
    size_t nc = 0;
    for (auto& [m, idx] : columns) idx = nc++;
    poly_matrix mat(numerators.size(), std::vector<poly>(nc, poly()));
    for (size_t r = 0; r < numerators.size(); ++r)
        for (const auto& [m, c] : split[r]) mat[r][columns[m]] = c;
    rep.rank = matrix_rank(std::move(mat));
    return rep;
}

scalar rank1_even_power_scalar(const dynkin_diagram& d, int k, int r) {
    if (d.colors() != 1 || d.alpha_parity(1) != 0)
        throw shuffly_error("rank1_even_power_scalar: single even color required");
    shuffle_element acc = shuffle_element::unit(d);
    for (int t = 0; t < k; ++t) acc = star(acc, unit_generator(d, 1, r));
    monomial target;
    for (int s = 1; s <= k; ++s)
        if (r != 0) target.emplace_back(variable::x(1, s), r);
    poly expect;
    expect.add_term(target, scalar(1));
    poly q = divide_exact(acc.numerator(), expect);
    if (!q.is_constant())
        throw shuffly_error("rank1_even_power_scalar: power is not a monomial multiple");
    return q.constant_value();
}

} // namespace shuffly
