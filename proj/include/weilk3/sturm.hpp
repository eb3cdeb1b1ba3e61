#pragma once

#include <vector>

#include "weilk3/poly.hpp"

namespace weilk3 {

namespace detail {

inline int sign_at(const IntPoly& f, const Rat& x) {
    // Sign of den^deg * f(num/den), den > 0.
    const Int& n = x.get_num();
    const Int& d = x.get_den();
    Int acc = 0;
    Int npow = 1;
    const std::size_t k = f.size() - 1;
    std::vector<Int> dp(k + 1);
    dp[0] = 1;
    for (std::size_t i = 1; i <= k; ++i) dp[i] = dp[i - 1] * d;
    for (std::size_t i = 0; i <= k; ++i) {
        acc += f[i] * npow * dp[k - i];
        npow *= n;
    }
    return sgn(acc);
}

inline int sign_changes(const std::vector<IntPoly>& seq, const Rat& x) {
    int changes = 0;
    int prev = 0;
    for (const auto& s : seq) {
        const int v = sign_at(s, x);
        if (v == 0) continue;
        if (prev != 0 && v != prev) ++changes;
        prev = v;
    }
    return changes;
}

/// Sturm chain f, f', -rem(...), each term reduced by its positive content.
inline std::vector<IntPoly> sturm_chain(const RatPoly& f) {
    std::vector<IntPoly> seq;
    seq.push_back(to_primitive_int(f).first);
    IntPoly d = to_primitive_int(derivative(f)).first;
    if (d.empty()) return seq;
    seq.push_back(std::move(d));
    while (true) {
        const IntPoly& a = seq[seq.size() - 2];
        const IntPoly& b = seq.back();
        if (degree(b) == 0) break;
        // lc(b)^(delta+1) a = q b + prem ; rem(a, b) has the sign of prem / lc(b)^(delta+1).
        IntPoly r = pseudo_remainder(a, b);
        if (r.empty()) break;
        const int delta = degree(a) - degree(b);
        const bool flip = (b.back() < 0) && ((delta + 1) % 2 == 1);
        Int c = content(r);
        if (!flip) c = -c;
        divide_exact(r, c);
        seq.push_back(std::move(r));
    }
    return seq;
}

} // namespace detail

/// Number of distinct real roots of f in (lo, hi]. f is expected squarefree;
/// f(lo) and f(hi) must be nonzero.
inline int sturm_roots_in_interval(const RatPoly& f, const Rat& lo, const Rat& hi) {
    if (f.is_zero()) fail(ErrorKind::InvalidArgument, "Sturm count of the zero polynomial");
    if (eval(f, lo) == 0 || eval(f, hi) == 0) fail(ErrorKind::BoundaryRoot, "polynomial vanishes at an interval end");
    if (f.degree() == 0) return 0;
    const auto chain = detail::sturm_chain(f);
    return detail::sign_changes(chain, lo) - detail::sign_changes(chain, hi);
}

} // namespace weilk3
