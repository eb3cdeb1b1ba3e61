#pragma once

#include <vector>

#include "weilk3/poly.hpp"

namespace weilk3 {

namespace detail {

/// Res(A, B) over Z by the subresultant remainder sequence.
inline Int int_resultant(IntPoly a, IntPoly b) {
    trim(a);
    trim(b);
    if (a.empty() || b.empty()) return 0;
    if (degree(a) == 0) return ipow(a[0], static_cast<unsigned long>(degree(b)));
    if (degree(b) == 0) return ipow(b[0], static_cast<unsigned long>(degree(a)));

    const Int ca = content(a);
    const Int cb = content(b);
    divide_exact(a, ca);
    divide_exact(b, cb);
    const Int scale = ipow(ca, static_cast<unsigned long>(degree(b))) * ipow(cb, static_cast<unsigned long>(degree(a)));

    int sign = 1;
    if (degree(a) < degree(b)) {
        std::swap(a, b);
        if (degree(a) % 2 == 1 && degree(b) % 2 == 1) sign = -1;
    }
    Int g = 1;
    Int h = 1;
    while (true) {
        const int delta = degree(a) - degree(b);
        if (degree(a) % 2 == 1 && degree(b) % 2 == 1) sign = -sign;
        IntPoly r = pseudo_remainder(a, b);
        a = std::move(b);
        if (r.empty()) return 0;
        const Int d = g * ipow(h, static_cast<unsigned long>(delta));
        divide_exact(r, d);
        b = std::move(r);
        g = a.back();
        if (delta > 0) {
            Int num = ipow(g, static_cast<unsigned long>(delta));
            Int den = ipow(h, static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        if (degree(b) == 0) break;
    }
    const auto da = static_cast<unsigned long>(degree(a));
    Int num = ipow(b[0], da);
    Int den = ipow(h, da - 1);
    mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return sign * scale * h;
}

/// Primitive gcd over Z with positive leading coefficient.
inline IntPoly int_gcd(IntPoly a, IntPoly b) {
    a = primitive_part(std::move(a));
    b = primitive_part(std::move(b));
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (degree(a) < degree(b)) std::swap(a, b);
    while (!b.empty()) {
        IntPoly r = primitive_part(pseudo_remainder(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return primitive_part(std::move(a));
}

/// Newton interpolation at the nodes 0, 1, ..., values.size()-1.
inline RatPoly interpolate_at_naturals(const std::vector<Int>& values) {
    const std::size_t n = values.size();
    std::vector<Rat> dd(values.begin(), values.end());
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rat(static_cast<long>(level));
            dd[i].canonicalize();
        }
    }
    // Horner over the Newton basis (t - 0)(t - 1)...
    RatPoly acc = RatPoly::constant(dd[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) {
        acc = acc * RatPoly::linear_root(Rat(static_cast<long>(i))) + RatPoly::constant(dd[i]);
    }
    return acc;
}

} // namespace detail

/// Monic gcd over Q via a primitive remainder sequence.
inline RatPoly gcd(const RatPoly& f, const RatPoly& g) {
    if (f.is_zero() && g.is_zero()) fail(ErrorKind::InvalidArgument, "gcd(0, 0) is undefined");
    IntPoly G = detail::int_gcd(to_primitive_int(f).first, to_primitive_int(g).first);
    return monic(to_rat(G));
}

inline RatPoly squarefree_part(const RatPoly& f) {
    if (f.degree() < 1) return f;
    return exact_div(f, gcd(f, derivative(f)));
}

inline bool is_squarefree(const RatPoly& f) { return f.degree() < 1 || gcd(f, derivative(f)).degree() == 0; }

/// Res_t(f, g) as the determinant of the Sylvester matrix, computed through
/// the subresultant sequence on primitive integer representatives.
inline Rat resultant(const RatPoly& f, const RatPoly& g) {
    if (f.is_zero() || g.is_zero()) fail(ErrorKind::InvalidArgument, "resultant of the zero polynomial");
    auto [F, sf] = to_primitive_int(f);
    auto [G, sg] = to_primitive_int(g);
    // f = F / sf, g = G / sg
    Rat r(detail::int_resultant(F, G));
    r /= rpow(sf, static_cast<unsigned long>(g.degree()));
    r /= rpow(sg, static_cast<unsigned long>(f.degree()));
    r.canonicalize();
    return r;
}

/// Polynomial whose roots are all products a*b with f(a) = 0, g(b) = 0,
/// i.e. Res_x(f(x), x^deg(g) g(t/x)); primitive with positive leading
/// coefficient.
inline RatPoly composed_product(const RatPoly& f, const RatPoly& g) {
    if (f.is_zero() || g.is_zero()) fail(ErrorKind::InvalidArgument, "composed_product of the zero polynomial");
    if (f.constant_term() == 0 || g.constant_term() == 0)
        fail(ErrorKind::ZeroConstantTerm, "composed_product needs f(0) g(0) != 0");
    const IntPoly F = to_primitive_int(f).first;
    const IntPoly G = to_primitive_int(g).first;
    const int m = degree(F), n = degree(G);
    if (m == 0 || n == 0) return RatPoly::constant(1);

    const std::size_t points = static_cast<std::size_t>(m) * static_cast<std::size_t>(n) + 1;
    std::vector<Int> values(points);
    IntPoly Gt(G.size());
    for (std::size_t t0 = 0; t0 < points; ++t0) {
        // x^n g(t0/x) = sum_i g_i t0^i x^(n-i)
        Int pw = 1;
        for (int i = 0; i <= n; ++i) {
            Gt[static_cast<std::size_t>(n - i)] = G[static_cast<std::size_t>(i)] * pw;
            pw *= static_cast<unsigned long>(t0);
        }
        values[t0] = detail::int_resultant(F, Gt);
    }
    return normalize_content(detail::interpolate_at_naturals(values));
}

/// Polynomial whose roots are the e-th powers of the roots of f,
/// i.e. Res_x(f(x), t - x^e); primitive with positive leading coefficient.
inline RatPoly power_roots(const RatPoly& f, unsigned e) {
    if (f.is_zero()) fail(ErrorKind::InvalidArgument, "power_roots of the zero polynomial");
    if (e == 0) fail(ErrorKind::InvalidArgument, "power_roots needs a positive exponent");
    const IntPoly F = to_primitive_int(f).first;
    const int m = degree(F);
    if (m == 0) return RatPoly::constant(1);
    if (e == 1) return to_rat(F);
    const std::size_t points = static_cast<std::size_t>(m) + 1;
    std::vector<Int> values(points);
    IntPoly shifted(e + 1, Int(0));
    shifted[e] = -1;
    for (std::size_t t0 = 0; t0 < points; ++t0) {
        shifted[0] = static_cast<unsigned long>(t0);
        values[t0] = detail::int_resultant(F, shifted);
    }
    return normalize_content(detail::interpolate_at_naturals(values));
}

} // namespace weilk3
