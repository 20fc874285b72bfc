#pragma once

#include <doctest.h>

#include <random>

#include "specnp/testgen.hpp"

namespace support {

using specnp::Complex;
using specnp::Config;
using specnp::Matrix;

inline bool cnear(Complex a, Complex b, double tol) {
    return std::abs(a - b) <= tol;
}

inline Matrix mat2(Complex a, Complex b, Complex c, Complex d) {
    Matrix m(2, 2);
    m << a, b, c, d;
    return m;
}

inline Matrix jordan_block(Complex lambda, int size) {
    return specnp::gen::jordan_matrix({specnp::gen::JordanSpec{lambda, {size}}});
}

inline Matrix random_dense(int n, std::mt19937_64& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    Matrix a(n, n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) a(r, c) = scale * Complex{unif(rng), unif(rng)};
    }
    return a;
}

inline std::vector<Complex> separated_disc_points(int n, std::mt19937_64& rng, double min_sep,
                                                  double radius = 0.95) {
    std::vector<Complex> out;
    while (static_cast<int>(out.size()) < n) {
        const Complex c = specnp::gen::random_in_disc(rng, radius);
        bool far = true;
        for (const Complex& e : out) {
            if (std::abs(c - e) < min_sep) far = false;
        }
        if (far) out.push_back(c);
    }
    return out;
}

}  // namespace support
