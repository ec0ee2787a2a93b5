// theta.hpp — the Mallows dispersion parameter.
#pragma once
#include <cmath>

#include "secretary/errors.hpp"

namespace secretary {

struct Theta {
    double value = 1.0;

    Theta() = default;
    // Implicit on purpose: every solver entry point accepts a plain double.
    Theta(double v) : value(v) {  // NOLINT
        if (!(v > 0.0) || !std::isfinite(v)) throw domain_error("theta must be a finite positive real");
    }
    operator double() const { return value; }  // NOLINT
    bool uniform() const { return value == 1.0; }
};

}  // namespace secretary
