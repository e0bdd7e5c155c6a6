#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shuffly/membership.hpp"
#include "shuffly/psi.hpp"

using namespace shuffly;

namespace {

struct rng {
    uint64_t state;
    explicit rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
};

// Random supersymmetric numerator in the degree box of (d, k); resamples on
// accidental zero after skew-symmetrization.
poly random_supersymmetric(rng& r, const dynkin_diagram& d, const std::vector<int>& k,
                           algebra_mode mode, int max_exp = 2) {
    for (int attempt = 0; attempt < 50; ++attempt) {
        poly p;
        int terms = 1 + r.below(3);
        for (int t = 0; t < terms; ++t) {
            monomial m;
            for (int i = 1; i <= d.colors(); ++i)
                for (int s = 1; s <= k[i - 1]; ++s) {
                    int e = r.below(max_exp + 1);
                    if (mode == algebra_mode::trigonometric) e -= r.below(2);
                    if (e != 0) m.emplace_back(variable::x(i, s), e);
                }
            if (mode == algebra_mode::rational) {
                int eh = r.below(2);
                if (eh) m.emplace_back(variable::hbar(), eh);
            } else {
                int ev = r.below(3) - 1;
                if (ev) m.emplace_back(variable::v(), ev);
            }
            long c = static_cast<long>(r.below(7)) - 3;
            if (c != 0) p.add_term(m, scalar(c));
        }
        // supersymmetrize color by color via adjacent transposition averaging
        for (int i = 1; i <= d.colors(); ++i) {
            if (k[i - 1] < 2) continue;
            int parity = d.alpha_parity(i);
            poly acc;
            // full symmetrization over the color group
            std::vector<int> perm(k[i - 1]);
            for (int s = 0; s < k[i - 1]; ++s) perm[s] = s + 1;
            do {
                int inv = 0;
                for (size_t a = 0; a < perm.size(); ++a)
                    for (size_t b = a + 1; b < perm.size(); ++b)
                        if (perm[a] > perm[b]) ++inv;
                std::map<variable, variable> ren;
                for (int s = 1; s <= k[i - 1]; ++s)
                    ren.emplace(variable::x(i, s), variable::x(i, perm[s - 1]));
                poly img = rename_variables(p, ren);
                if (parity == 1 && inv % 2) img = -img;
                acc += img;
            } while (std::next_permutation(perm.begin(), perm.end()));
            p = acc;
        }
        if (!p.is_zero()) return p;
    }
    return poly();
}

shuffle_element random_element(rng& r, const dynkin_diagram& d, const std::vector<int>& k,
                               algebra_mode mode) {
    return shuffle_element(d, k, random_supersymmetric(r, d, k, mode), mode);
}

std::vector<std::string> all_parity_strings(int n) {
    std::vector<std::string> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::string s;
        for (int b = 0; b < n; ++b) s += (mask >> b) & 1 ? '1' : '0';
        out.push_back(s);
    }
    return out;
}

const variable H = variable::hbar();

} // namespace

TEST_CASE("unit laws and degree addition") {
    for (const std::string& s : {"00", "01", "010", "0110"}) {
        dynkin_diagram d(s);
        rng r(3);
        std::vector<int> k(d.colors(), 1);
        shuffle_element f = random_element(r, d, k, algebra_mode::rational);
        shuffle_element unit = shuffle_element::unit(d);
        CHECK(star(f, unit) == f);
        CHECK(star(unit, f) == f);
        shuffle_element g = random_element(r, d, k, algebra_mode::rational);
        auto prod = star(f, g);
        for (int i = 0; i < d.colors(); ++i) CHECK(prod.degree()[i] == 2);
    }
}

TEST_CASE("pinned rank-1 products") {
    // Odd color: x^0 * x^1 = (x_2 - x_1)/2 under the implemented normalization.
    {
        dynkin_diagram d("01");
        shuffle_element p = star(unit_generator(d, 1, 0), unit_generator(d, 1, 1));
        poly expect = (poly::var(variable::x(1, 2)) - poly::var(variable::x(1, 1))) *
                      scalar(1, 2);
        CHECK(p.numerator() == expect);
        // odd skew-symmetry kills equal modes
        CHECK(star(unit_generator(d, 1, 2), unit_generator(d, 1, 2)).is_zero());
    }
    // Even color: x^r * x^r = (x_1 x_2)^r exactly (the measured scalar is 1).
    {
        dynkin_diagram d("00");
        for (int r = 0; r <= 2; ++r) {
            shuffle_element p = star(unit_generator(d, 1, r), unit_generator(d, 1, r));
            poly expect = pow(poly::var(variable::x(1, 1)) * poly::var(variable::x(1, 2)), r);
            CHECK(p.numerator() == expect);
        }
        // x^0 * x^1 = (x_1 + x_2 - h)/2 with c_11 = 2
        shuffle_element q = star(unit_generator(d, 1, 0), unit_generator(d, 1, 1));
        poly expect = (poly::var(variable::x(1, 1)) + poly::var(variable::x(1, 2)) -
                       poly::var(H)) *
                      scalar(1, 2);
        CHECK(q.numerator() == expect);
    }
}

TEST_CASE("adjacent-color product keeps the zeta numerator") {
    dynkin_diagram d("000");
    shuffle_element p = star(unit_generator(d, 1, 0), unit_generator(d, 2, 0));
    // c_12 = -1: numerator x_{1,1} - x_{2,1} - h/2
    poly expect = poly::var(variable::x(1, 1)) - poly::var(variable::x(2, 1)) -
                  poly::var(H) * scalar(1, 2);
    CHECK(p.numerator() == expect);
}

TEST_CASE("star equals the naive oracle on all 2-color diagrams") {
    rng r(17);
    for (const std::string& s : all_parity_strings(2)) {
        dynkin_diagram d(s);
        shuffle_element a = star(unit_generator(d, 1, 0), unit_generator(d, 1, 0));
        shuffle_element b = star_naive(unit_generator(d, 1, 0), unit_generator(d, 1, 0));
        CHECK(a == b);
        for (int trial = 0; trial < 6; ++trial) {
            shuffle_element f = random_element(r, d, {1 + r.below(2)}, algebra_mode::rational);
            shuffle_element g = random_element(r, d, {1 + r.below(2)}, algebra_mode::rational);
            CHECK(star(f, g) == star_naive(f, g));
        }
    }
}

TEST_CASE("star equals the naive oracle on random mixed-color elements") {
    rng r(99);
    for (const std::string& s : {"00", "01", "000", "010", "011"}) {
        dynkin_diagram d(s);
        for (int trial = 0; trial < 8; ++trial) {
            std::vector<int> k(d.colors()), l(d.colors());
            int total = 0;
            for (int i = 0; i < d.colors(); ++i) {
                k[i] = r.below(2);
                l[i] = r.below(2);
                total += k[i] + l[i];
            }
            if (total == 0 || total > 4) continue;
            shuffle_element f = random_element(r, d, k, algebra_mode::rational);
            shuffle_element g = random_element(r, d, l, algebra_mode::rational);
            CHECK(star(f, g) == star_naive(f, g));
        }
    }
}

TEST_CASE("associativity on random triples") {
    rng r(7);
    for (const std::string& s : {"00", "01", "010", "001"}) {
        dynkin_diagram d(s);
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<int> ka(d.colors(), 0), kb(d.colors(), 0), kc(d.colors(), 0);
            ka[r.below(d.colors())] += 1;
            kb[r.below(d.colors())] += 1;
            kc[r.below(d.colors())] += 1;
            if (d.colors() > 1 && trial % 2) kb[r.below(d.colors())] += 1;
            shuffle_element a = random_element(r, d, ka, algebra_mode::rational);
            shuffle_element b = random_element(r, d, kb, algebra_mode::rational);
            shuffle_element c = random_element(r, d, kc, algebra_mode::rational);
            CHECK(star(star(a, b), c) == star(a, star(b, c)));
        }
    }
}

TEST_CASE("star output is supersymmetric (re-verified)") {
    rng r(31);
    for (const std::string& s : {"00", "01", "010"}) {
        dynkin_diagram d(s);
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<int> k(d.colors(), 1), l(d.colors(), 0);
            l[r.below(d.colors())] = 1;
            shuffle_element f = random_element(r, d, k, algebra_mode::rational);
            shuffle_element g = random_element(r, d, l, algebra_mode::rational);
            CHECK(check_membership(star(f, g)).supersymmetric);
        }
    }
}

TEST_CASE("wheel conditions: degree 1_i passes vacuously") {
    dynkin_diagram d("010");
    shuffle_element f = unit_generator(d, 1, 3);
    auto rep = check_membership(f);
    CHECK(rep.ok());
}

TEST_CASE("wheel conditions: psi image of a length-3 word passes") {
    dynkin_diagram d("000");
    shuffle_element f = psi_word(d, generator_word{{{1, 0}, {2, 1}, {1, 2}}});
    CHECK(f.degree() == std::vector<int>{2, 1});
    CHECK(check_membership(f).ok());
}

TEST_CASE("wheel conditions: constant numerator in degree (2,1) violates wheel 1") {
    dynkin_diagram d("000");
    shuffle_element f(d, {2, 1}, poly(1));
    auto rep = check_membership(f);
    CHECK(rep.supersymmetric);
    CHECK(!rep.wheel1.empty());
    CHECK(!rep.ok());
}

TEST_CASE("wheel 2 flags a handcrafted violation at an odd middle node") {
    dynkin_diagram d("0010"); // alpha_2 odd, alpha_1/alpha_3 have mixed parity
    CHECK(d.alpha_parity(2) == 1);
    // numerator skew in the two x_{2,*} variables, nonzero on the wheel locus
    poly skew = poly::var(variable::x(2, 1)) - poly::var(variable::x(2, 2));
    shuffle_element f(d, {1, 2, 1}, skew);
    auto rep = check_membership(f);
    CHECK(rep.supersymmetric);
    CHECK(!rep.wheel2.empty());
}

TEST_CASE("star closure preserves membership") {
    rng r(53);
    for (const std::string& s : {"00", "010", "0010"}) {
        dynkin_diagram d(s);
        for (int trial = 0; trial < 6; ++trial) {
            generator_word w1, w2;
            int len1 = 1 + r.below(2), len2 = 1 + r.below(2);
            for (int t = 0; t < len1; ++t)
                w1.letters.emplace_back(1 + r.below(d.colors()), r.below(2));
            for (int t = 0; t < len2; ++t)
                w2.letters.emplace_back(1 + r.below(d.colors()), r.below(2));
            shuffle_element f = psi_word(d, w1);
            shuffle_element g = psi_word(d, w2);
            REQUIRE(check_membership(f).ok());
            REQUIRE(check_membership(g).ok());
            CHECK(check_membership(star(f, g)).ok());
        }
    }
}

TEST_CASE("superbracket basics") {
    dynkin_diagram d("00");
    shuffle_element f = unit_generator(d, 1, 1);
    // even parity: [F, F] = 0
    CHECK(superbracket(f, f).is_zero());
    dynkin_diagram dodd("01");
    shuffle_element g = unit_generator(dodd, 1, 1);
    // odd parity: [F, F] = 2 F*F
    shuffle_element lhs = superbracket(g, g);
    shuffle_element rhs = star(g, g) + star(g, g);
    CHECK(lhs == rhs);

    // bilinearity on random combinations
    rng r(4);
    shuffle_element a = random_element(r, d, {1}, algebra_mode::rational);
    shuffle_element b = random_element(r, d, {1}, algebra_mode::rational);
    shuffle_element c = random_element(r, d, {2}, algebra_mode::rational);
    CHECK(superbracket(a + b, c) == superbracket(a, c) + superbracket(b, c));
}

TEST_CASE("psi_word homomorphism and single letters") {
    dynkin_diagram d("010");
    shuffle_element one_letter = psi_word(d, generator_word{{{1, 4}}});
    CHECK(one_letter == unit_generator(d, 1, 4));
    generator_word w1{{{1, 0}, {2, 1}}}, w2{{{2, 0}}};
    generator_word cat{{{1, 0}, {2, 1}, {2, 0}}};
    CHECK(psi_word(d, cat) == star(psi_word(d, w1), psi_word(d, w2)));
    CHECK(psi_word(d, generator_word{}) == shuffle_element::unit(d));
    CHECK(psi_word(d, generator_word{{{1, 0}}}).parity() == 1);
}

TEST_CASE("mult_symfun: identity, e1, symmetry enforcement") {
    dynkin_diagram d("00");
    shuffle_element f = star(unit_generator(d, 1, 0), unit_generator(d, 1, 1));
    CHECK(mult_symfun(f, 1, poly(1)) == f);
    shuffle_element g = unit_generator(d, 1, 2);
    poly e1 = poly::var(variable::x(1, 1));
    CHECK(mult_symfun(g, 1, e1).numerator() == poly::var(variable::x(1, 1)) * g.numerator());
    poly bad = poly::var(variable::x(1, 1)); // not symmetric in two variables
    CHECK_THROWS_AS(mult_symfun(f, 1, bad), shuffly_error);
    poly sym = poly::var(variable::x(1, 1)) + poly::var(variable::x(1, 2));
    CHECK(check_membership(mult_symfun(f, 1, sym)).ok());
}
