#include "shuffly/roots.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

namespace shuffly {

std::string root_interval::name() const {
    return "a" + std::to_string(j) + ".." + std::to_string(i);
}

std::optional<root_interval> root_interval::parse(const std::string& s) {
    if (s.size() < 4 || s[0] != 'a') return std::nullopt;
    auto dots = s.find("..");
    if (dots == std::string::npos) return std::nullopt;
    int j = 0, i = 0;
    auto parse_int = [](std::string_view sv, int& out) {
        auto r = std::from_chars(sv.data(), sv.data() + sv.size(), out);
        return r.ec == std::errc() && r.ptr == sv.data() + sv.size();
    };
    if (!parse_int(std::string_view(s).substr(1, dots - 1), j)) return std::nullopt;
    if (!parse_int(std::string_view(s).substr(dots + 2), i)) return std::nullopt;
    if (j < 1 || i < j) return std::nullopt;
    return root_interval{j, i};
}

std::vector<root_interval> positive_roots(int colors) {
    std::vector<root_interval> r;
    for (int j = 1; j <= colors; ++j)
        for (int i = j; i <= colors; ++i) r.push_back({j, i});
    return r;
}

int root_parity(const dynkin_diagram& d, root_interval beta) {
    int p = 0;
    for (int k = beta.j; k <= beta.i; ++k) p += d.alpha_parity(k);
    return p % 2;
}

int even_count(const dynkin_diagram& d, root_interval beta) {
    int c = 0;
    for (int k = beta.j; k <= beta.i; ++k)
        if (d.alpha_parity(k) == 0) ++c;
    return c;
}

int odd_count(const dynkin_diagram& d, root_interval beta) {
    return beta.length() - even_count(d, beta);
}

int degree_vector::at(root_interval beta) const {
    auto it = d_.find(beta);
    return it == d_.end() ? 0 : it->second;
}

void degree_vector::set(root_interval beta, int value) {
    if (value < 0) throw shuffly_error("degree_vector: negative multiplicity");
    if (value == 0)
        d_.erase(beta);
    else
        d_[beta] = value;
}

int degree_vector::total() const {
    int t = 0;
    for (const auto& [b, m] : d_) t += m;
    return t;
}

std::vector<int> degree_vector::color_degree(int colors) const {
    std::vector<int> k(colors, 0);
    for (const auto& [b, m] : d_) {
        if (b.i > colors) throw shuffly_error("degree_vector: root outside diagram");
        for (int c = b.j; c <= b.i; ++c) k[c - 1] += m;
    }
    return k;
}

int degree_vector::good_hbar_power() const {
    int t = 0;
    for (const auto& [b, m] : d_) t += m * (b.i - b.j);
    return t;
}

int degree_vector::shifted_hbar_power() const {
    int t = 0;
    for (const auto& [b, m] : d_) t += m * (b.i - b.j + 1);
    return t;
}

deg_cmp compare_deg(const degree_vector& a, const degree_vector& b) {
    // Walk the union of supports in ascending interval order.
    auto ia = a.support().begin(), ea = a.support().end();
    auto ib = b.support().begin(), eb = b.support().end();
    while (ia != ea || ib != eb) {
        root_interval ra = ia != ea ? ia->first : root_interval{1 << 19, 1 << 19};
        root_interval rb = ib != eb ? ib->first : root_interval{1 << 19, 1 << 19};
        root_interval r = std::min(ra, rb);
        int va = (ia != ea && ia->first == r) ? ia->second : 0;
        int vb = (ib != eb && ib->first == r) ? ib->second : 0;
        if (va != vb) return va > vb ? deg_cmp::less : deg_cmp::greater;
        if (ia != ea && ia->first == r) ++ia;
        if (ib != eb && ib->first == r) ++ib;
    }
    return deg_cmp::equal;
}

namespace {

using tiling_key = std::pair<size_t, std::vector<int>>;

// Recursive tiling of the color vector by root intervals, over roots taken
// ascending in the interval order; memoized on (root index, remaining).
const std::vector<degree_vector>& tile(const std::vector<root_interval>& roots, size_t idx,
                                       const std::vector<int>& remaining,
                                       std::map<tiling_key, std::vector<degree_vector>>& memo) {
    tiling_key key{idx, remaining};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    std::vector<degree_vector> out;
    bool zero = std::all_of(remaining.begin(), remaining.end(), [](int c) { return c == 0; });
    if (idx == roots.size()) {
        if (zero) out.emplace_back();
    } else {
        root_interval beta = roots[idx];
        // Colors strictly left of beta can never be covered later.
        bool dead = false;
        for (int c = 1; c < beta.j; ++c)
            if (remaining[c - 1] != 0) dead = true;
        if (!dead) {
            int max_mult = remaining[beta.j - 1];
            for (int c = beta.j; c <= beta.i; ++c)
                max_mult = std::min(max_mult, remaining[c - 1]);
            for (int t = 0; t <= max_mult; ++t) {
                std::vector<int> rest = remaining;
                for (int c = beta.j; c <= beta.i; ++c) rest[c - 1] -= t;
                for (const degree_vector& tail : tile(roots, idx + 1, rest, memo)) {
                    degree_vector d = tail;
                    if (t > 0) d.set(beta, t);
                    out.push_back(std::move(d));
                }
            }
        }
    }
    return memo.emplace(std::move(key), std::move(out)).first->second;
}

} // namespace

std::vector<degree_vector> enumerate_T(const dynkin_diagram& d, const std::vector<int>& k) {
    if (static_cast<int>(k.size()) != d.colors())
        throw shuffly_error("enumerate_T: color degree has wrong length");
    for (int c : k)
        if (c < 0) throw shuffly_error("enumerate_T: negative color degree");
    auto roots = positive_roots(d.colors());
    std::map<tiling_key, std::vector<degree_vector>> memo;
    std::vector<degree_vector> out = tile(roots, 0, k, memo);
    std::sort(out.begin(), out.end(), [](const degree_vector& a, const degree_vector& b) {
        return compare_deg(a, b) == deg_cmp::greater;
    });
    return out;
}

int pbw_monomial::at(root_interval beta, int r) const {
    auto it = h_.find({beta, r});
    return it == h_.end() ? 0 : it->second;
}

void pbw_monomial::set(root_interval beta, int r, int multiplicity) {
    if (multiplicity < 0 || r < 0) throw shuffly_error("pbw_monomial: invalid entry");
    if (multiplicity == 0)
        h_.erase({beta, r});
    else
        h_[{beta, r}] = multiplicity;
}

degree_vector pbw_monomial::degree() const {
    degree_vector d;
    for (const auto& [br, m] : h_) d.set(br.first, d.at(br.first) + m);
    return d;
}

bool pbw_monomial::valid_for(const dynkin_diagram& d) const {
    for (const auto& [br, m] : h_) {
        if (br.first.i > d.colors()) return false;
        if (root_parity(d, br.first) == 1 && m > 1) return false;
    }
    return true;
}

std::vector<std::pair<root_interval, int>> pbw_monomial::factors() const {
    std::vector<std::pair<root_interval, int>> out;
    for (const auto& [br, m] : h_)
        for (int t = 0; t < m; ++t) out.push_back(br);
    return out;
}

std::vector<int> pbw_monomial::modes_of(root_interval beta) const {
    std::vector<int> out;
    for (const auto& [br, m] : h_)
        if (br.first == beta)
            for (int t = 0; t < m; ++t) out.push_back(br.second);
    return out;
}

} // namespace shuffly
