#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "weilk3/modp.hpp"
#include "weilk3/poly.hpp"

namespace weilk3 {

inline constexpr std::uint64_t kMaxCyclotomicPhi = 64;

inline std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        if (d * d != n) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline int mobius(std::uint64_t n) {
    int sign = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

/// All d >= 1 with phi(d) <= bound, ascending. phi(d) >= sqrt(d/2) caps the
/// search range; phi is sieved over it.
inline std::vector<std::uint64_t> orders_with_phi_at_most(std::uint64_t bound) {
    const std::uint64_t limit = 2 * bound * bound + 2;
    std::vector<std::uint64_t> phi(limit + 1);
    std::iota(phi.begin(), phi.end(), std::uint64_t{0});
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (phi[p] != p) continue;
        for (std::uint64_t m = p; m <= limit; m += p) phi[m] -= phi[m] / p;
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d <= limit; ++d)
        if (phi[d] <= bound) out.push_back(d);
    return out;
}

namespace detail {

/// Phi_d over Z by dividing t^d - 1 by Phi_e for every proper divisor e.
/// No size guard; callers decide what is affordable.
inline IntPoly cyclotomic_int(std::uint64_t d) {
    std::map<std::uint64_t, RatPoly> memo;
    for (std::uint64_t e : divisors(d)) {
        std::vector<Rat> c(e + 1, Rat(0));
        c[0] = -1;
        c[e] = 1;
        RatPoly acc(std::move(c));
        for (const auto& [f, phi] : memo)
            if (e % f == 0) acc = exact_div(acc, phi);
        memo.emplace(e, std::move(acc));
    }
    return to_primitive_int(memo.at(d)).first;
}

/// Phi_d mod l from the Moebius product over divisors.
inline modp::Coeffs cyclotomic_mod(const modp::Field& F, std::uint64_t d) {
    modp::Coeffs acc{1};
    std::vector<std::uint64_t> dens;
    for (std::uint64_t e : divisors(d)) {
        const int mu = mobius(d / e);
        if (mu == 1) acc = F.mul_xe_minus_one(acc, e);
        else if (mu == -1) dens.push_back(e);
    }
    for (std::uint64_t e : dens) acc = F.div_xe_minus_one(acc, e);
    // (t^e - 1) factors carry a global sign of (-1)^(#num - #den); Phi_d is monic.
    return F.make_monic(acc);
}

} // namespace detail

/// The d-th cyclotomic polynomial. Orders with phi(d) > 64 are refused.
inline RatPoly cyclotomic(std::uint64_t d) {
    if (d == 0) fail(ErrorKind::InvalidArgument, "cyclotomic order must be positive");
    if (euler_phi(d) > kMaxCyclotomicPhi)
        fail(ErrorKind::OrderTooLarge, "phi(" + std::to_string(d) + ") exceeds 64");
    return to_rat(detail::cyclotomic_int(d));
}

} // namespace weilk3
