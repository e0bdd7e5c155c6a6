#pragma once

#include "shuffly/psi.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace shuffly {

// A finite formal combination of generator words with coefficient
// polynomials in h (rational) or v (trigonometric). All words of one sum are
// required to share color degree, so parity and degree pairings are defined.
class word_sum {
public:
    word_sum() = default;
    static word_sum letter(int color, int mode);

    const std::map<generator_word, poly>& terms() const { return terms_; }
    bool is_empty() const { return terms_.empty(); }
    void add(const generator_word& w, const poly& c);

    friend word_sum operator+(const word_sum& a, const word_sum& b);
    friend word_sum operator-(const word_sum& a, const word_sum& b);
    friend word_sum operator*(const word_sum& a, const word_sum& b); // concatenation
    word_sum scaled(const poly& c) const;

    int parity(const dynkin_diagram& d) const;
    std::vector<int> color_degree(const dynkin_diagram& d) const;

private:
    std::map<generator_word, poly> terms_;
    // Degree/parity witness that survives formal cancellation of all terms.
    std::optional<generator_word> specimen_;
};

// [a, b]_x = ab - (-1)^{|a||b|} x ba.
word_sum bracket_x(const word_sum& a, const word_sum& b, const poly& x,
                   const dynkin_diagram& d);
// Plain superbracket: [a, b]_1.
word_sum bracket(const word_sum& a, const word_sum& b, const dynkin_diagram& d);
// Anticommutator {a, b} = ab + (-1)^{|a||b|} ba.
word_sum anti_bracket(const word_sum& a, const word_sum& b, const dynkin_diagram& d);
// The degree-paired bracket [[a, b]] = ab - (-1)^{|a||b|} v^{(a,b)} ba with
// (a, b) = sum_{i,j} k_i l_j c_ij.
word_sum v_bracket(const word_sum& a, const word_sum& b, const dynkin_diagram& d);

// Per-diagram evaluation cache for word images.
struct word_cache {
    std::map<generator_word, shuffle_element> images;
};

shuffle_element evaluate_word_sum(const dynkin_diagram& d, const word_sum& ws,
                                  algebra_mode mode, word_cache& cache);

struct check_record {
    std::string name;
    std::string instance;
    bool pass = false;
    std::string witness; // nonempty on failure
};

// All defining relations of the positive half, for all applicable colors and
// modes in [0, max_mode]; each record is one instance.
std::vector<check_record> verify_positive_relations(const dynkin_diagram& d, int max_mode);

// The quantum loop relations (including the general and flv Serre forms) for
// modes in [-max_mode, max_mode].
std::vector<check_record> verify_quantum_relations(const dynkin_diagram& d, int max_mode);

struct rank1_report {
    int k = 0;
    int rank = 0;
    int expected = 0;
    bool full() const { return rank == expected; }
    std::vector<std::vector<int>> mode_lists;
};

// Linear independence of the ordered products x^{r_1} * ... * x^{r_k} over
// the fraction field of Q[h], for a two-dimensional V. Mode lists are
// strictly increasing for the odd diagram and weakly increasing otherwise.
rank1_report rank1_independence(const dynkin_diagram& d, int k, int max_mode);

// Measures the scalar lambda with x^r * ... * x^r (k factors) equal to
// lambda * (x_1...x_k)^r on a single even color; throws if the power is not
// proportional to that monomial.
scalar rank1_even_power_scalar(const dynkin_diagram& d, int k, int r);

} // namespace shuffly
