#include "shuffly/variable.hpp"

#include "shuffly/errors.hpp"

#include <charconv>

namespace shuffly {

namespace {

bool parse_int(std::string_view s, int& out) {
    if (s.empty()) return false;
    auto r = std::from_chars(s.data(), s.data() + s.size(), out);
    return r.ec == std::errc() && r.ptr == s.data() + s.size();
}

} // namespace

variable variable::x(int color, int slot) {
    if (color < 1 || slot < 1 || color >= (1 << 20) || slot >= (1 << 20))
        throw shuffly_error("variable::x: index out of range");
    return variable((uint64_t(2) << 60) | (uint64_t(color) << 20) | uint64_t(slot));
}

variable variable::y(int j, int i, int slot) {
    if (j < 1 || i < j || slot < 1 || i >= (1 << 20) || slot >= (1 << 20))
        throw shuffly_error("variable::y: index out of range");
    return variable((uint64_t(3) << 60) | (uint64_t(j) << 40) | (uint64_t(i) << 20) |
                    uint64_t(slot));
}

std::string variable::name() const {
    switch (which()) {
    case kind::hbar: return "h";
    case kind::v: return "v";
    case kind::x: return "x" + std::to_string(color()) + "_" + std::to_string(slot());
    case kind::y:
        return "y" + std::to_string(root_j()) + "." + std::to_string(root_i()) + "_" +
               std::to_string(slot());
    }
    return {};
}

std::optional<variable> variable::parse(const std::string& name) {
    if (name == "h") return hbar();
    if (name == "v") return v();
    if (name.size() < 2) return std::nullopt;
    std::string_view body(name);
    body.remove_prefix(1);
    auto us = body.rfind('_');
    if (us == std::string_view::npos) return std::nullopt;
    int slot = 0;
    if (!parse_int(body.substr(us + 1), slot) || slot < 1) return std::nullopt;
    std::string_view head = body.substr(0, us);
    if (name[0] == 'x') {
        int color = 0;
        if (!parse_int(head, color) || color < 1) return std::nullopt;
        return x(color, slot);
    }
    if (name[0] == 'y') {
        auto dot = head.find('.');
        if (dot == std::string_view::npos) return std::nullopt;
        int j = 0, i = 0;
        if (!parse_int(head.substr(0, dot), j) || !parse_int(head.substr(dot + 1), i))
            return std::nullopt;
        if (j < 1 || i < j) return std::nullopt;
        return y(j, i, slot);
    }
    return std::nullopt;
}

} // namespace shuffly
