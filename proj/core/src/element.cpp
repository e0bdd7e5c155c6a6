#include "shuffly/element.hpp"

#include <numeric>

namespace shuffly {

shuffle_element::shuffle_element(dynkin_diagram d, std::vector<int> degree, poly numerator,
                                 algebra_mode mode)
    : diagram_(std::move(d)), degree_(std::move(degree)), numerator_(std::move(numerator)),
      mode_(mode) {
    if (static_cast<int>(degree_.size()) != diagram_.colors())
        throw shuffly_error("shuffle_element: degree length != number of colors");
    for (int k : degree_)
        if (k < 0) throw shuffly_error("shuffle_element: negative degree");
    for (variable var : numerator_.variables()) {
        switch (var.which()) {
        case variable::kind::hbar:
            if (mode_ == algebra_mode::trigonometric)
                throw shuffly_error("shuffle_element: h is not allowed in trigonometric mode");
            break;
        case variable::kind::v:
            if (mode_ == algebra_mode::rational)
                throw shuffly_error("shuffle_element: v is not allowed in rational mode");
            break;
        case variable::kind::x: {
            int c = var.color(), s = var.slot();
            if (c < 1 || c > diagram_.colors() || s < 1 || s > degree_[c - 1])
                throw shuffly_error("shuffle_element: numerator variable outside degree box");
            break;
        }
        case variable::kind::y:
            throw shuffly_error("shuffle_element: y-variables are not element variables");
        }
        if (mode_ == algebra_mode::rational && numerator_.min_exponent_in(var) < 0)
            throw shuffly_error("shuffle_element: negative exponent in rational mode");
    }
}

shuffle_element shuffle_element::unit(const dynkin_diagram& d, algebra_mode mode) {
    return shuffle_element(d, std::vector<int>(d.colors(), 0), poly(scalar(1)), mode);
}

shuffle_element shuffle_element::zero(const dynkin_diagram& d, std::vector<int> degree,
                                      algebra_mode mode) {
    return shuffle_element(d, std::move(degree), poly(), mode);
}

int shuffle_element::total_degree() const {
    return std::accumulate(degree_.begin(), degree_.end(), 0);
}

int shuffle_element::parity() const {
    int p = 0;
    for (int i = 1; i <= diagram_.colors(); ++i) p += degree_[i - 1] * diagram_.alpha_parity(i);
    return p % 2;
}

shuffle_element shuffle_element::operator-() const {
    return shuffle_element(diagram_, degree_, -numerator_, mode_);
}

shuffle_element& shuffle_element::operator+=(const shuffle_element& o) {
    if (!(diagram_ == o.diagram_) || degree_ != o.degree_ || mode_ != o.mode_)
        throw shuffly_error("shuffle_element: incompatible summands");
    numerator_ += o.numerator_;
    return *this;
}

shuffle_element& shuffle_element::operator-=(const shuffle_element& o) {
    if (!(diagram_ == o.diagram_) || degree_ != o.degree_ || mode_ != o.mode_)
        throw shuffly_error("shuffle_element: incompatible summands");
    numerator_ -= o.numerator_;
    return *this;
}

shuffle_element shuffle_element::scaled(const poly& c) const {
    for (variable var : c.variables()) {
        bool ok = (mode_ == algebra_mode::rational && var.which() == variable::kind::hbar) ||
                  (mode_ == algebra_mode::trigonometric && var.which() == variable::kind::v);
        if (!ok) throw shuffly_error("shuffle_element: scale factor must be a coefficient");
    }
    return shuffle_element(diagram_, degree_, numerator_ * c, mode_);
}

bool operator==(const shuffle_element& a, const shuffle_element& b) {
    return a.diagram_ == b.diagram_ && a.degree_ == b.degree_ && a.mode_ == b.mode_ &&
           a.numerator_ == b.numerator_;
}

} // namespace shuffly
