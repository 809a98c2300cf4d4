#pragma once

#include <cmath>

#include "absnorm/matlin.hpp"
#include "absnorm/random.hpp"

namespace absnorm::testing {

inline ComplexMatrix diag(std::initializer_list<double> values) {
    ComplexMatrix d = ComplexMatrix::Zero(static_cast<Eigen::Index>(values.size()),
                                          static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (double v : values) {
        d(i, i) = v;
        ++i;
    }
    return d;
}

inline ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
    ComplexMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

inline double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace absnorm::testing
