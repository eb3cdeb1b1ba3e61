#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include "weilk3/rational.hpp"

namespace weilk3 {

/// Dense univariate polynomial over Q; coeffs()[i] is the coefficient of t^i.
/// The zero polynomial has no coefficients, every other value has a nonzero
/// leading coefficient.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
        for (auto& x : c_) x.canonicalize();
        trim();
    }
    RatPoly(std::initializer_list<Rat> coeffs) : RatPoly(std::vector<Rat>(coeffs)) {}

    static RatPoly constant(const Rat& c) { return RatPoly(std::vector<Rat>{c}); }
    static RatPoly monomial(const Rat& c, std::size_t deg) {
        std::vector<Rat> v(deg + 1, Rat(0));
        v[deg] = c;
        return RatPoly(std::move(v));
    }
    /// t - c
    static RatPoly linear_root(const Rat& c) { return RatPoly({Rat(-c), Rat(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::size_t size() const { return c_.size(); }
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const Rat& leading() const { return c_.back(); }
    Rat constant_term() const { return coeff(0); }

    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

    RatPoly operator-() const {
        std::vector<Rat> v(c_);
        for (auto& x : v) x = -x;
        return RatPoly(std::move(v));
    }

    friend RatPoly operator+(const RatPoly& f, const RatPoly& g) {
        std::vector<Rat> v(std::max(f.size(), g.size()), Rat(0));
        for (std::size_t i = 0; i < f.size(); ++i) v[i] += f.c_[i];
        for (std::size_t i = 0; i < g.size(); ++i) v[i] += g.c_[i];
        return RatPoly(std::move(v));
    }
    friend RatPoly operator-(const RatPoly& f, const RatPoly& g) { return f + (-g); }

    friend RatPoly operator*(const RatPoly& f, const RatPoly& g) {
        if (f.is_zero() || g.is_zero()) return {};
        std::vector<Rat> v(f.size() + g.size() - 1, Rat(0));
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (f.c_[i] == 0) continue;
            for (std::size_t j = 0; j < g.size(); ++j) v[i + j] += f.c_[i] * g.c_[j];
        }
        return RatPoly(std::move(v));
    }
    friend RatPoly operator*(const Rat& s, const RatPoly& f) {
        if (s == 0) return {};
        std::vector<Rat> v(f.c_);
        for (auto& x : v) x *= s;
        return RatPoly(std::move(v));
    }

    RatPoly& operator+=(const RatPoly& g) { return *this = *this + g; }
    RatPoly& operator-=(const RatPoly& g) { return *this = *this - g; }
    RatPoly& operator*=(const RatPoly& g) { return *this = *this * g; }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

inline std::ostream& operator<<(std::ostream& os, const RatPoly& f) {
    if (f.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Rat& c = f.coeffs()[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rat a = abs(c);
        if (i == 0 || a != 1) os << a;
        if (i > 0) os << (a != 1 ? "*t" : "t");
        if (i > 1) os << "^" << i;
        first = false;
    }
    return os;
}

inline RatPoly pow(const RatPoly& f, unsigned e) {
    RatPoly out = RatPoly::constant(1);
    RatPoly base = f;
    while (e) {
        if (e & 1U) out *= base;
        e >>= 1U;
        if (e) base *= base;
    }
    return out;
}

inline Rat eval(const RatPoly& f, const Rat& x) {
    Rat acc(0);
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f.coeffs()[i];
    return acc;
}

inline RatPoly derivative(const RatPoly& f) {
    if (f.degree() < 1) return {};
    std::vector<Rat> v(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) v[i - 1] = f.coeffs()[i] * static_cast<unsigned long>(i);
    return RatPoly(std::move(v));
}

inline RatPoly monic(const RatPoly& f) {
    if (f.is_zero()) return f;
    return Rat(1 / f.leading()) * f;
}

/// Euclidean division f = q*g + r with deg r < deg g.
inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& f, const RatPoly& g) {
    if (g.is_zero()) fail(ErrorKind::DivisionByZero, "division by the zero polynomial");
    if (f.degree() < g.degree()) return {RatPoly{}, f};
    std::vector<Rat> r(f.coeffs());
    std::vector<Rat> q(f.size() - g.size() + 1, Rat(0));
    const Rat inv_lead = 1 / g.leading();
    const std::size_t dg = g.size() - 1;
    for (std::size_t k = q.size(); k-- > 0;) {
        Rat c = r[k + dg] * inv_lead;
        q[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dg; ++j) r[k + j] -= c * g.coeffs()[j];
    }
    r.resize(dg);
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

inline RatPoly exact_div(const RatPoly& f, const RatPoly& g) {
    auto [q, r] = divmod(f, g);
    if (!r.is_zero()) fail(ErrorKind::NonExactDivision, "remainder is nonzero");
    return q;
}

inline bool divides(const RatPoly& g, const RatPoly& f) { return divmod(f, g).second.is_zero(); }

/// t^deg(f) * f(1/t). Roots of the result are the inverses of the roots of f.
inline RatPoly reverse(const RatPoly& f) {
    if (f.constant_term() == 0) fail(ErrorKind::ZeroConstantTerm, "reverse needs f(0) != 0");
    std::vector<Rat> v(f.coeffs().rbegin(), f.coeffs().rend());
    return RatPoly(std::move(v));
}

/// f(s*t)
inline RatPoly scale_variable(const RatPoly& f, const Rat& s) {
    std::vector<Rat> v(f.coeffs());
    Rat pw(1);
    for (auto& x : v) {
        x *= pw;
        pw *= s;
    }
    return RatPoly(std::move(v));
}

struct RootSplit {
    int multiplicity = 0;
    RatPoly quotient;
};

/// Strips every factor (t - c) from f. For c = 1 the factors removed are
/// (1 - t), so a polynomial with constant term 1 keeps quotient(0) = 1.
inline RootSplit factor_out_root(const RatPoly& f, const Rat& c) {
    if (f.is_zero()) fail(ErrorKind::InvalidArgument, "factor_out_root of the zero polynomial");
    RootSplit out{0, f};
    const RatPoly lin = (c == 1) ? RatPoly({Rat(1), Rat(-1)}) : RatPoly::linear_root(c);
    while (out.quotient.degree() >= 1 && eval(out.quotient, c) == 0) {
        out.quotient = exact_div(out.quotient, lin);
        ++out.multiplicity;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Integer polynomials: the representation used by remainder sequences.

using IntPoly = std::vector<Int>;

inline void trim(IntPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int degree(const IntPoly& f) { return static_cast<int>(f.size()) - 1; }

inline Int content(const IntPoly& f) {
    Int g = 0;
    for (const auto& c : f) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

inline void divide_exact(IntPoly& f, const Int& d) {
    if (d == 1) return;
    for (auto& c : f) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

/// Primitive part with positive leading coefficient.
inline IntPoly primitive_part(IntPoly f) {
    trim(f);
    if (f.empty()) return f;
    Int c = content(f);
    if (f.back() < 0) c = -c;
    divide_exact(f, c);
    return f;
}

/// Scales f by a positive rational so that it becomes a primitive integer
/// polynomial with positive leading coefficient. Returns (F, s) with F = s*f.
inline std::pair<IntPoly, Rat> to_primitive_int(const RatPoly& f) {
    if (f.is_zero()) return {IntPoly{}, Rat(1)};
    Int den = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    IntPoly F(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) F[i] = f.coeffs()[i].get_num() * (den / f.coeffs()[i].get_den());
    Int c = content(F);
    if (F.back() < 0) c = -c;
    divide_exact(F, c);
    return {std::move(F), make_rat(den, c)};
}

inline RatPoly to_rat(const IntPoly& f) {
    std::vector<Rat> v(f.begin(), f.end());
    return RatPoly(std::move(v));
}

/// Primitive integer representative with positive leading coefficient.
inline RatPoly normalize_content(const RatPoly& f) { return to_rat(to_primitive_int(f).first); }

/// Scales f so that f(0) = 1.
inline RatPoly normalize_constant(const RatPoly& f) {
    if (f.constant_term() == 0) fail(ErrorKind::ZeroConstantTerm, "cannot normalize f(0) to 1");
    return Rat(1 / f.constant_term()) * f;
}

/// f and g have the same roots with multiplicity (equal up to a nonzero scalar).
inline bool proportional(const RatPoly& f, const RatPoly& g) {
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    return monic(f) == monic(g);
}

inline bool is_integral(const RatPoly& f) {
    return std::all_of(f.coeffs().begin(), f.coeffs().end(), [](const Rat& c) { return is_integer(c); });
}

inline Int eval(const IntPoly& f, const Int& x) {
    Int acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
    return acc;
}

/// lc(B)^(deg A - deg B + 1) * A mod B over Z.
inline IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
    const int db = degree(b);
    const int delta = degree(a) - db;
    if (delta < 0) return a;
    const Int& lb = b.back();
    int e = delta + 1;
    while (degree(a) >= db && !a.empty()) {
        const std::size_t shift = a.size() - b.size();
        Int la = a.back();
        for (auto& c : a) c *= lb;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * b[j];
        --e;
        trim(a);
    }
    if (e > 0) {
        Int m = ipow(lb, static_cast<unsigned long>(e));
        for (auto& c : a) c *= m;
    }
    return a;
}

} // namespace weilk3
