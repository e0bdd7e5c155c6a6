#pragma once

#include "shuffly/errors.hpp"

#include <string>

namespace shuffly {

// A Dynkin diagram of gl(V) given as the parity sequence of the basis of V.
// Everything downstream (Cartan entries, signs, wheel conditions) is a
// function of this sequence.
class dynkin_diagram {
public:
    explicit dynkin_diagram(std::string parities);

    int n() const { return static_cast<int>(parities_.size()); }
    int colors() const { return n() - 1; }
    // Parity of the k-th basis vector, 1-based.
    int basis_parity(int k) const;
    // Parity |alpha_i| = p_i + p_{i+1} mod 2 of the i-th simple root.
    int alpha_parity(int i) const;
    int n_plus() const;
    int n_minus() const;
    const std::string& parities() const { return parities_; }

    friend bool operator==(const dynkin_diagram& a, const dynkin_diagram& b) {
        return a.parities_ == b.parities_;
    }

private:
    std::string parities_;
};

// Cartan pairing c_ij = (alpha_i, alpha_j); tridiagonal, symmetric.
int cartan(const dynkin_diagram& d, int i, int j);

} // namespace shuffly
