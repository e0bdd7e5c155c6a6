#pragma once

#include <stdexcept>
#include <string>

namespace shuffly {

struct shuffly_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct substitution_error : shuffly_error {
    using shuffly_error::shuffly_error;
};

struct degree_mismatch : shuffly_error {
    using shuffly_error::shuffly_error;
};

struct schema_error : shuffly_error {
    using shuffly_error::shuffly_error;
};

} // namespace shuffly
