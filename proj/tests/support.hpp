#pragma once

// Oracles and generators shared by the unit tests. Nothing here calls the
// library routine it is used to check.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "weilk3/poly.hpp"

namespace testing_support {

using weilk3::Int;
using weilk3::Rat;
using weilk3::RatPoly;

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20240611);
    return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

/// Random polynomial of exact degree `deg` with small integer coefficients
/// and nonzero constant term.
inline RatPoly random_poly(int deg, long range = 5) {
    std::vector<Rat> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = uniform(-range, range);
    while (c.front() == 0) c.front() = uniform(-range, range);
    while (c.back() == 0) c.back() = uniform(-range, range);
    return RatPoly(std::move(c));
}

inline RatPoly from_roots(const std::vector<Rat>& roots) {
    RatPoly f = RatPoly::constant(1);
    for (const auto& r : roots) f *= RatPoly{Rat(-r), Rat(1)};
    return f;
}

/// Determinant by Gaussian elimination over Q.
inline Rat determinant(std::vector<std::vector<Rat>> m) {
    const std::size_t n = m.size();
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const Rat f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

/// Res(f, g) as the determinant of the Sylvester matrix.
inline Rat sylvester_resultant(const RatPoly& f, const RatPoly& g) {
    const int m = f.degree();
    const int n = g.degree();
    const auto size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<Rat>> s(size, std::vector<Rat>(size, Rat(0)));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) s[r][r + i] = f.coeff(static_cast<std::size_t>(m - i));
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) s[n + r][r + i] = g.coeff(static_cast<std::size_t>(n - i));
    return determinant(s);
}

/// Power sums p_1..p_count of the roots, by Newton's identities.
inline std::vector<Rat> power_sums(const RatPoly& f, int count) {
    const int n = f.degree();
    // Monic coefficients e_k with f / lc = t^n - e1 t^{n-1} + e2 t^{n-2} - ...
    std::vector<Rat> a(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) a[static_cast<std::size_t>(i)] = f.coeff(static_cast<std::size_t>(n - i)) / f.leading();
    std::vector<Rat> p(static_cast<std::size_t>(count) + 1, Rat(0));
    for (int k = 1; k <= count; ++k) {
        Rat s = 0;
        for (int i = 1; i < k && i <= n; ++i) s += a[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(k - i)];
        if (k <= n) s += Rat(k) * a[static_cast<std::size_t>(k)];
        p[static_cast<std::size_t>(k)] = -s;
    }
    return p;
}

/// Roots of a quadratic c0 + c1 t + c2 t^2 in C, in double precision.
inline std::pair<std::complex<double>, std::complex<double>> quadratic_roots(const RatPoly& f) {
    const double a = f.coeff(2).get_d();
    const double b = f.coeff(1).get_d();
    const double c = f.coeff(0).get_d();
    const std::complex<double> d = std::sqrt(std::complex<double>(b * b - 4 * a * c));
    return {(-b + d) / (2 * a), (-b - d) / (2 * a)};
}

} // namespace testing_support
