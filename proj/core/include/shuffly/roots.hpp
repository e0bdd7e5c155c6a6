#pragma once

#include "shuffly/dynkin.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace shuffly {

// The positive root alpha_j + ... + alpha_i, as the color interval [j, i].
struct root_interval {
    int j = 1;
    int i = 1;

    int length() const { return i - j + 1; }
    bool contains(int k) const { return j <= k && k <= i; }
    bool is_simple() const { return j == i; }
    // Printed as "a{j}..{i}".
    std::string name() const;
    static std::optional<root_interval> parse(const std::string& s);

    // Interval order: (j, i) lexicographic.
    friend bool operator<(root_interval a, root_interval b) {
        return a.j != b.j ? a.j < b.j : a.i < b.i;
    }
    friend bool operator==(root_interval a, root_interval b) { return a.j == b.j && a.i == b.i; }
    friend bool operator!=(root_interval a, root_interval b) { return !(a == b); }
};

// All positive roots for the given number of colors, ascending in the
// interval order.
std::vector<root_interval> positive_roots(int colors);

int root_parity(const dynkin_diagram& d, root_interval beta);
// Counts of even / odd simple roots inside [beta].
int even_count(const dynkin_diagram& d, root_interval beta);
int odd_count(const dynkin_diagram& d, root_interval beta);

// A degree vector d : positive roots -> N with finite support.
class degree_vector {
public:
    degree_vector() = default;

    int at(root_interval beta) const;
    void set(root_interval beta, int value);
    const std::map<root_interval, int>& support() const { return d_; }
    int total() const; // sum of d_beta
    // Induced color degree sum_beta d_beta * [beta].
    std::vector<int> color_degree(int colors) const;
    // sum_beta d_beta * (i(beta) - j(beta)): the h-power demanded of good elements.
    int good_hbar_power() const;
    // sum_beta d_beta * (i(beta) - j(beta) + 1) = sum of the color degree.
    int shifted_hbar_power() const;

    friend bool operator==(const degree_vector& a, const degree_vector& b) { return a.d_ == b.d_; }
    friend bool operator!=(const degree_vector& a, const degree_vector& b) { return !(a == b); }

private:
    std::map<root_interval, int> d_; // only nonzero entries
};

enum class deg_cmp { less, equal, greater };

// The degree-vector comparison: at the first root (in the interval order)
// where the vectors differ, the one with the LARGER component is the SMALLER
// element. This is deliberately inverted relative to naive lex order.
deg_cmp compare_deg(const degree_vector& a, const degree_vector& b);

// All degree vectors with induced color degree k, sorted descending by
// compare_deg (d_max first, d_min with simple-root support last).
std::vector<degree_vector> enumerate_T(const dynkin_diagram& d, const std::vector<int>& k);

// Double order on (root, mode) pairs: root order first, then the mode.
struct double_order_less {
    bool operator()(const std::pair<root_interval, int>& a,
                    const std::pair<root_interval, int>& b) const {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    }
};

// An ordered PBW monomial: h : (root, mode) -> multiplicity with finite
// support, h <= 1 on odd roots; factors are multiplied ascending in the
// double order.
class pbw_monomial {
public:
    pbw_monomial() = default;

    int at(root_interval beta, int r) const;
    void set(root_interval beta, int r, int multiplicity);
    const std::map<std::pair<root_interval, int>, int, double_order_less>& support() const {
        return h_;
    }
    degree_vector degree() const;
    // h(beta, r) <= 1 whenever |beta| is odd.
    bool valid_for(const dynkin_diagram& d) const;
    // Factor list, ascending in the double order, with multiplicities expanded.
    std::vector<std::pair<root_interval, int>> factors() const;
    // Modes used on beta, nondecreasing, with multiplicity.
    std::vector<int> modes_of(root_interval beta) const;

    friend bool operator==(const pbw_monomial& a, const pbw_monomial& b) { return a.h_ == b.h_; }
    friend bool operator<(const pbw_monomial& a, const pbw_monomial& b) { return a.h_ < b.h_; }

private:
    std::map<std::pair<root_interval, int>, int, double_order_less> h_;
};

} // namespace shuffly
