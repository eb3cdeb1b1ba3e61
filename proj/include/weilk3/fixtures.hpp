#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "weilk3/newton.hpp"
#include "weilk3/weil.hpp"

namespace weilk3 {

inline constexpr long kMaxCoefficientBound = 10000;
inline constexpr int kFourfoldMiddleDegree = 23;

struct FixtureSpec {
    Int p = 2;
    unsigned m = 2;
    /// Degrees of the slope-2 factors; they must add up to 23 - k3_factor_degree.
    std::vector<int> middle_factor_degrees;
    long coefficient_bound = 64;
    int count = 1;
    /// 2: 1 - b t + q^4 t^2; 4: 1 - c1 t + c2 t^2 - q^4 c1 t^3 + q^8 t^4.
    int k3_factor_degree = 2;
    bool allow_inconclusive = false;
};

struct Fixture {
    RatPoly p2m;
    WeilContext ctx;
    /// Integer factor carrying the slopes 1 and 3.
    RatPoly k3_factor;
};

namespace detail {

/// 1, -1, 2, -2, ... up to the bound.
inline std::vector<long> signed_by_size(long bound) {
    std::vector<long> out;
    for (long v = 1; v <= bound; ++v) {
        out.push_back(v);
        out.push_back(-v);
    }
    return out;
}

inline bool valuation_is(long c, const Int& p, long v) {
    const auto got = val_p(Rat(c), p);
    return got && *got == v;
}

inline void validate(const FixtureSpec& spec) {
    if (!is_prime(spec.p)) fail(ErrorKind::NotPrime, spec.p.get_str() + " is not prime");
    if (spec.m != 2) fail(ErrorKind::InvalidArgument, "fixtures exist only for the fourfold, m = 2");
    if (spec.k3_factor_degree != 2 && spec.k3_factor_degree != 4)
        fail(ErrorKind::InvalidArgument, "k3_factor_degree must be 2 or 4");
    if (spec.coefficient_bound < 0 || spec.coefficient_bound > kMaxCoefficientBound)
        fail(ErrorKind::InvalidArgument, "coefficient_bound must lie in 0..10000");
    if (spec.count < 1) fail(ErrorKind::InvalidArgument, "count must be positive");
    const int middle = kFourfoldMiddleDegree - spec.k3_factor_degree;
    if (!spec.middle_factor_degrees.empty()) {
        for (int d : spec.middle_factor_degrees)
            if (d < 1) fail(ErrorKind::InvalidArgument, "middle factor degrees must be positive");
        const int sum = std::accumulate(spec.middle_factor_degrees.begin(), spec.middle_factor_degrees.end(), 0);
        if (sum != middle)
            fail(ErrorKind::InvalidArgument, "middle factor degrees must add up to " + std::to_string(middle));
    }
}

/// Candidate factors of slopes {1, 3} in search order.
inline std::vector<RatPoly> k3_candidates(const FixtureSpec& spec, const Int& q) {
    std::vector<RatPoly> out;
    const Int q4 = ipow(q, 4);
    if (spec.k3_factor_degree == 2) {
        // Twisted roots on the unit circle need |b| < 2 q^2.
        const Int limit = 2 * q * q;
        for (long b : signed_by_size(spec.coefficient_bound)) {
            if (!valuation_is(b, spec.p, 1) || Int(b < 0 ? -b : b) >= limit) continue;
            out.push_back(RatPoly{Rat(1), Rat(-b), Rat(q4)});
        }
        return out;
    }
    for (long c1 : signed_by_size(spec.coefficient_bound)) {
        if (!valuation_is(c1, spec.p, 1)) continue;
        std::vector<long> c2s{0};
        for (long c2 : signed_by_size(spec.coefficient_bound))
            if (val_p(Rat(c2), spec.p).value_or(0) >= 3) c2s.push_back(c2);
        for (long c2 : c2s)
            out.push_back(RatPoly{Rat(1), Rat(-c1), Rat(c2), Rat(-q4 * c1), Rat(q4 * q4)});
    }
    return out;
}

} // namespace detail

/// Integer polynomials with the ordinary fourfold profile whose analysis is
/// q-admissible, semistable and of K3 type, in deterministic search order.
/// The slope-2 block is (1 - q^2 t)^(23 - deg): after the twist it is an
/// integer polynomial with unit-circle roots, hence a product of cyclotomic
/// polynomials, and semistability leaves only Phi_1.
inline std::vector<Fixture> gen_fixtures(const FixtureSpec& spec) {
    detail::validate(spec);
    const WeilContext ctx(spec.p, spec.p, spec.m);
    const Int& q = ctx.q();
    const RatPoly middle = pow(RatPoly{Rat(1), Rat(-q * q)},
                               static_cast<unsigned>(kFourfoldMiddleDegree - spec.k3_factor_degree));
    std::vector<Fixture> out;
    for (const RatPoly& k3 : detail::k3_candidates(spec, q)) {
        const RatPoly p2m = k3 * middle;
        if (!is_ordinary_fourfold_profile(p2m, ctx.p(), q)) continue;
        if (!is_q_admissible(twist(k3, ctx), ctx)) continue;
        const WeilReport rep = analyze(p2m, ctx, AnalyzeOptions{std::nullopt, false});
        if (!rep.q_admissible || !rep.semistable || !rep.k3_type) continue;
        if (rep.ptr_irreducible != Irreducibility::Proved && !spec.allow_inconclusive) continue;
        out.push_back({p2m, ctx, k3});
        if (static_cast<int>(out.size()) == spec.count) break;
    }
    if (out.empty()) fail(ErrorKind::NoFixtureFound, "search box exhausted without a fixture");
    return out;
}

} // namespace weilk3
