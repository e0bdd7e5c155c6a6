#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace shuffly {

// A variable of the ambient polynomial ring. The fixed total order is
//   h < v < x-variables ordered by (color, slot) < y-variables ordered by
//   (root in the interval order (j, i), slot),
// and is realized as integer comparison of the packed code.
class variable {
public:
    enum class kind : uint8_t { hbar = 0, v = 1, x = 2, y = 3 };

    static variable hbar() { return variable(uint64_t(0)); }
    static variable v() { return variable(uint64_t(1) << 60); }
    static variable x(int color, int slot);  // color >= 1, slot >= 1
    static variable y(int j, int i, int slot);

    kind which() const { return static_cast<kind>(code_ >> 60); }
    int color() const { return int((code_ >> 20) & 0xfffff); } // x only
    int slot() const { return int(code_ & 0xfffff); }          // x and y
    int root_j() const { return int((code_ >> 40) & 0xfffff); } // y only
    int root_i() const { return int((code_ >> 20) & 0xfffff); } // y only

    // "h", "v", "x{color}_{slot}", "y{j}.{i}_{slot}"
    std::string name() const;
    static std::optional<variable> parse(const std::string& name);

    friend bool operator<(variable a, variable b) { return a.code_ < b.code_; }
    friend bool operator==(variable a, variable b) { return a.code_ == b.code_; }
    friend bool operator!=(variable a, variable b) { return a.code_ != b.code_; }

private:
    explicit variable(uint64_t code) : code_(code) {}
    uint64_t code_;
};

} // namespace shuffly
