#pragma once

#include "shuffly/element.hpp"

#include <string>
#include <vector>

namespace shuffly {

struct wheel_violation {
    int kind = 1; // 1 or 2
    int i = 0;    // center color
    int eps = 0;  // +1/-1 for kind 1, 0 for kind 2
    int r1 = 0, r2 = 0; // center slots
    int s = 0, s2 = 0;  // neighbor slots (s2 only for kind 2)
    std::string describe() const;
};

struct membership_report {
    bool supersymmetric = true;
    std::vector<wheel_violation> wheel1;
    std::vector<wheel_violation> wheel2;
    bool ok() const { return supersymmetric && wheel1.empty() && wheel2.empty(); }
};

// Pole conditions are structural (the denominator is implicit); these check
// supersymmetry of the numerator and both kinds of wheel conditions on the
// numerator, whose vanishing on the constraint locus is equivalent to the
// vanishing of the element there.
membership_report check_membership(const shuffle_element& f);      // rational mode
membership_report check_membership_trig(const shuffle_element& f); // trigonometric mode

} // namespace shuffly
