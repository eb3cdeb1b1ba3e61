#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "weilk3/poly.hpp"

namespace weilk3::modp {

// Polynomials over F_l for primes l < 2^62, coefficient i of t^i.
using Coeffs = std::vector<std::uint64_t>;

class Field {
public:
    explicit Field(std::uint64_t prime) : p_(prime) {}

    std::uint64_t prime() const { return p_; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1 % p_;
        while (e) {
            if (e & 1U) r = mul(r, a);
            a = mul(a, a);
            e >>= 1U;
        }
        return r;
    }
    std::uint64_t inv(std::uint64_t a) const { return pow(a, p_ - 2); }

    std::uint64_t reduce(const Int& x) const {
        return mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(p_));
    }

    static void trim(Coeffs& f) {
        while (!f.empty() && f.back() == 0) f.pop_back();
    }

    Coeffs reduce(const IntPoly& f) const {
        Coeffs out(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) out[i] = reduce(f[i]);
        trim(out);
        return out;
    }

    Coeffs mul(const Coeffs& f, const Coeffs& g) const {
        if (f.empty() || g.empty()) return {};
        Coeffs out(f.size() + g.size() - 1, 0);
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (!f[i]) continue;
            for (std::size_t j = 0; j < g.size(); ++j) out[i + j] = add(out[i + j], mul(f[i], g[j]));
        }
        trim(out);
        return out;
    }

    Coeffs sub(Coeffs f, const Coeffs& g) const {
        if (f.size() < g.size()) f.resize(g.size(), 0);
        for (std::size_t i = 0; i < g.size(); ++i) f[i] = sub(f[i], g[i]);
        trim(f);
        return f;
    }

    /// Returns (quotient, remainder); g must be nonzero.
    std::pair<Coeffs, Coeffs> divmod(Coeffs f, const Coeffs& g) const {
        trim(f);
        if (f.size() < g.size()) return {Coeffs{}, f};
        const std::uint64_t il = inv(g.back());
        Coeffs q(f.size() - g.size() + 1, 0);
        for (std::size_t k = q.size(); k-- > 0;) {
            const std::uint64_t c = mul(f[k + g.size() - 1], il);
            q[k] = c;
            if (!c) continue;
            for (std::size_t j = 0; j < g.size(); ++j) f[k + j] = sub(f[k + j], mul(c, g[j]));
        }
        f.resize(g.size() - 1);
        trim(f);
        trim(q);
        return {q, f};
    }

    Coeffs rem(const Coeffs& f, const Coeffs& g) const { return divmod(f, g).second; }

    Coeffs make_monic(Coeffs f) const {
        if (f.empty()) return f;
        const std::uint64_t il = inv(f.back());
        for (auto& c : f) c = mul(c, il);
        return f;
    }

    Coeffs gcd(Coeffs a, Coeffs b) const {
        trim(a);
        trim(b);
        while (!b.empty()) {
            Coeffs r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return make_monic(a);
    }

    Coeffs derivative(const Coeffs& f) const {
        if (f.size() < 2) return {};
        Coeffs d(f.size() - 1);
        for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = mul(f[i], i % p_);
        trim(d);
        return d;
    }

    /// base^e mod m
    Coeffs powmod(Coeffs base, std::uint64_t e, const Coeffs& m) const {
        Coeffs r{1};
        base = rem(base, m);
        while (e) {
            if (e & 1U) r = rem(mul(r, base), m);
            base = rem(mul(base, base), m);
            e >>= 1U;
        }
        return r;
    }

    /// f * (t^e - 1)
    Coeffs mul_xe_minus_one(const Coeffs& f, std::size_t e) const {
        Coeffs out(f.size() + e, 0);
        for (std::size_t i = 0; i < f.size(); ++i) {
            out[i + e] = add(out[i + e], f[i]);
            out[i] = sub(out[i], f[i]);
        }
        trim(out);
        return out;
    }

    /// f / (t^e - 1), assuming exact divisibility.
    Coeffs div_xe_minus_one(const Coeffs& f, std::size_t e) const {
        if (f.size() <= e) return {};
        Coeffs q(f.size() - e, 0);
        // f_i = q_{i-e} - q_i  =>  q_{i-e} = f_i + q_i, from the top down.
        for (std::size_t i = f.size(); i-- > e;) {
            const std::uint64_t qi = (i < q.size()) ? q[i] : 0;
            q[i - e] = add(f[i], qi);
        }
        trim(q);
        return q;
    }

private:
    std::uint64_t p_;
};

/// Degrees of the irreducible factors (with repetition) of a squarefree
/// polynomial, by distinct-degree factorization.
inline std::vector<int> factor_degrees(const Field& F, Coeffs f) {
    std::vector<int> out;
    f = F.make_monic(std::move(f));
    const Coeffs x{0, 1};
    Coeffs h = x;
    for (int i = 1; 2 * i <= static_cast<int>(f.size()) - 1; ++i) {
        h = F.powmod(h, F.prime(), f);
        Coeffs g = F.gcd(F.sub(h, x), f);
        const int dg = static_cast<int>(g.size()) - 1;
        if (dg > 0) {
            for (int c = 0; c < dg / i; ++c) out.push_back(i);
            f = F.divmod(f, g).first;
            h = F.rem(h, f);
        }
    }
    if (f.size() > 1) out.push_back(static_cast<int>(f.size()) - 1);
    return out;
}

} // namespace weilk3::modp
