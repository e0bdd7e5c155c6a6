#include "shuffly/dynkin.hpp"

#include <algorithm>

namespace shuffly {

dynkin_diagram::dynkin_diagram(std::string parities) : parities_(std::move(parities)) {
    if (parities_.size() < 2)
        throw shuffly_error("dynkin_diagram: need at least two basis vectors");
    for (char c : parities_)
        if (c != '0' && c != '1')
            throw shuffly_error("dynkin_diagram: parity string must consist of '0'/'1'");
}

int dynkin_diagram::basis_parity(int k) const {
    if (k < 1 || k > n()) throw shuffly_error("dynkin_diagram: basis index out of range");
    return parities_[k - 1] - '0';
}

int dynkin_diagram::alpha_parity(int i) const {
    if (i < 1 || i > colors()) throw shuffly_error("dynkin_diagram: color out of range");
    return (basis_parity(i) + basis_parity(i + 1)) % 2;
}

int dynkin_diagram::n_plus() const {
    return static_cast<int>(std::count(parities_.begin(), parities_.end(), '0'));
}

int dynkin_diagram::n_minus() const { return n() - n_plus(); }

int cartan(const dynkin_diagram& d, int i, int j) {
    if (i < 1 || i > d.colors() || j < 1 || j > d.colors())
        throw shuffly_error("cartan: color out of range");
    auto eps = [&](int k) { return d.basis_parity(k) ? -1 : 1; };
    if (i == j) return eps(i) + eps(i + 1);
    if (j == i + 1 || i == j + 1) return -eps(std::max(i, j));
    return 0;
}

} // namespace shuffly
