#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "weilk3/cyclotomic.hpp"
#include "weilk3/modp.hpp"
#include "weilk3/newton.hpp"
#include "weilk3/poly.hpp"
#include "weilk3/resultant.hpp"
#include "weilk3/sturm.hpp"

namespace weilk3 {

/// Field size q = p^e (e >= 1) and half the cohomological degree m.
class WeilContext {
public:
    WeilContext(Int p, Int q, unsigned m) : p_(std::move(p)), q_(std::move(q)), m_(m) {
        if (!is_prime(p_)) fail(ErrorKind::NotPrime, p_.get_str() + " is not prime");
        if (q_ < p_) fail(ErrorKind::InvalidArgument, "q must be a positive power of p");
        Int rest;
        const auto e = mpz_remove(rest.get_mpz_t(), q_.get_mpz_t(), p_.get_mpz_t());
        if (rest != 1 || e == 0) fail(ErrorKind::InvalidArgument, "q = " + q_.get_str() + " is not a power of p");
        e_ = static_cast<unsigned>(e);
    }

    const Int& p() const { return p_; }
    const Int& q() const { return q_; }
    unsigned m() const { return m_; }
    /// q = p^exponent()
    unsigned exponent() const { return e_; }

    /// Context of the degree-r extension of the base field.
    WeilContext extended(unsigned r) const { return WeilContext(p_, ipow(q_, r), m_); }

    friend bool operator==(const WeilContext& a, const WeilContext& b) {
        return a.p_ == b.p_ && a.q_ == b.q_ && a.m_ == b.m_;
    }

private:
    Int p_;
    Int q_;
    unsigned m_;
    unsigned e_ = 1;
};

/// Coefficient i divided by q^(m i): the characteristic polynomial of the
/// Tate-twisted Frobenius.
inline RatPoly twist(const RatPoly& p2m, const WeilContext& ctx) {
    if (p2m.constant_term() != 1) fail(ErrorKind::BadConstantTerm, "P(0) must be 1");
    return scale_variable(p2m, Rat(1, 1) / Rat(ipow(ctx.q(), ctx.m())));
}

inline RatPoly untwist(const RatPoly& pm, const WeilContext& ctx) {
    return scale_variable(pm, Rat(ipow(ctx.q(), ctx.m())));
}

/// +1 or -1 when reverse(f) = +-f, nothing otherwise.
inline std::optional<int> self_inversive_sign(const RatPoly& f) {
    if (f.is_zero() || f.constant_term() == 0) return std::nullopt;
    const RatPoly r = reverse(f);
    if (r == f) return 1;
    if (r == -f) return -1;
    return std::nullopt;
}

/// For palindromic h of degree 2n: the H with h(t) = t^n H(t + 1/t).
inline RatPoly chebyshev_transform(const RatPoly& h) {
    const int deg = h.degree();
    if (deg < 0 || deg % 2 != 0) fail(ErrorKind::InvalidArgument, "transform needs even degree");
    const auto n = static_cast<std::size_t>(deg / 2);
    // D_0 = 2, D_1 = u, D_k = u D_{k-1} - D_{k-2}; t^k + t^-k = D_k(t + 1/t).
    const RatPoly u = RatPoly::monomial(1, 1);
    RatPoly prev = RatPoly::constant(2);
    RatPoly cur = u;
    RatPoly out = RatPoly::constant(h.coeff(n));
    for (std::size_t k = 1; k <= n; ++k) {
        out += h.coeff(n + k) * cur;
        RatPoly next = u * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return out;
}

/// Exact certificate that every complex root of pm lies on |t| = 1.
inline bool unit_circle_certificate(const RatPoly& pm) {
    if (pm.is_zero() || pm.constant_term() == 0)
        fail(ErrorKind::ZeroConstantTerm, "unit circle test needs f(0) != 0");
    if (!self_inversive_sign(pm)) fail(ErrorKind::NotSelfInversive, "reverse(f) != +-f");
    RatPoly h = factor_out_root(pm, 1).quotient;
    h = factor_out_root(h, -1).quotient;
    if (h.degree() == 0) return true;
    if (h.degree() % 2 != 0 || reverse(h) != h) return false;
    const RatPoly H = squarefree_part(chebyshev_transform(h));
    // Roots +-1 were stripped, so H(+-2) != 0 and every admissible root of H
    // lies strictly inside (-2, 2).
    return sturm_roots_in_interval(H, Rat(-2), Rat(2)) == H.degree();
}

/// Coefficients in Z[1/q], constant term 1, reverse(pm) = +-pm, roots on the
/// unit circle.
inline bool is_q_admissible(const RatPoly& pm, const WeilContext& ctx) {
    if (pm.is_zero() || pm.constant_term() != 1) return false;
    for (const auto& c : pm.coeffs()) {
        Int rest;
        mpz_remove(rest.get_mpz_t(), c.get_den_mpz_t(), ctx.p().get_mpz_t());
        if (rest != 1) return false;
    }
    if (!self_inversive_sign(pm)) return false;
    return unit_circle_certificate(pm);
}

struct CyclotomicFactor {
    std::uint64_t order = 0;
    int multiplicity = 0;

    friend bool operator==(const CyclotomicFactor&, const CyclotomicFactor&) = default;
};

namespace detail {

// Phi_d | F over Z implies Phi_d | F mod l (Phi_d is monic), so a nonzero
// remainder modulo any of these primes rules d out.
inline constexpr std::array<std::uint64_t, 2> kFilterPrimes{2305843009213693951ULL, 2147483647ULL};

inline bool may_divide_mod(const IntPoly& F, std::uint64_t d) {
    for (std::uint64_t l : kFilterPrimes) {
        const modp::Field field(l);
        const modp::Coeffs f = field.reduce(F);
        if (!field.rem(f, detail::cyclotomic_mod(field, d)).empty()) return false;
    }
    return true;
}

} // namespace detail

/// Exact multiplicity of every Phi_d dividing f, ascending in d.
inline std::vector<CyclotomicFactor> cyclotomic_scan(const RatPoly& f) {
    if (f.is_zero()) fail(ErrorKind::InvalidArgument, "cyclotomic scan of the zero polynomial");
    std::vector<CyclotomicFactor> out;
    if (f.degree() < 1) return out;
    const IntPoly sqf = to_primitive_int(squarefree_part(f)).first;
    const auto bound = static_cast<std::uint64_t>(degree(sqf));
    RatPoly rest = f;
    std::uint64_t budget = bound;
    for (std::uint64_t d : orders_with_phi_at_most(bound)) {
        const std::uint64_t phi = euler_phi(d);
        if (phi > budget) continue;
        if (!detail::may_divide_mod(sqf, d)) continue;
        const RatPoly cyc = to_rat(detail::cyclotomic_int(d));
        int mult = 0;
        while (rest.degree() >= cyc.degree()) {
            auto [qt, r] = divmod(rest, cyc);
            if (!r.is_zero()) break;
            rest = std::move(qt);
            ++mult;
        }
        if (mult > 0) {
            out.push_back({d, mult});
            budget -= phi;
        }
    }
    return out;
}

struct SemistableExponent {
    bool semistable = true;
    std::uint64_t r = 1;
};

/// Semistable iff the only roots of unity among the roots are 1; r is the lcm
/// of the orders of the roots of unity that occur.
inline SemistableExponent semistable_exponent(const RatPoly& f) {
    SemistableExponent out;
    for (const auto& c : cyclotomic_scan(f)) {
        if (c.order != 1) out.semistable = false;
        out.r = std::lcm(out.r, c.order);
    }
    return out;
}

/// Characteristic polynomial of Frobenius over the degree-r extension:
/// roots raised to the r-th power, normalized to constant term 1.
inline RatPoly base_change(const RatPoly& f, unsigned r) {
    return normalize_constant(power_roots(f, r));
}

struct UnitSplit {
    int a = 0;
    RatPoly ptr;
};

/// pm = (1 - t)^a * ptr with ptr(0) = 1 and ptr(1) != 0.
inline UnitSplit split_unit(const RatPoly& pm) {
    RootSplit s = factor_out_root(pm, 1);
    return {s.multiplicity, normalize_constant(s.quotient)};
}

enum class Irreducibility { Proved, Inconclusive, Vacuous };

inline std::string_view to_string(Irreducibility v) {
    switch (v) {
    case Irreducibility::Proved: return "Proved";
    case Irreducibility::Inconclusive: return "Inconclusive";
    case Irreducibility::Vacuous: return "Vacuous";
    }
    return "Inconclusive";
}

inline constexpr int kIrreducibilityPrimes = 25;

/// One-sided irreducibility certificate from factorization patterns modulo
/// the first 25 primes not dividing lead * disc. A rational factor of degree
/// k forces k to be a sub-sum of the factor degrees mod every such prime.
inline Irreducibility irreducibility_certificate(const RatPoly& ptr) {
    if (ptr.is_zero()) fail(ErrorKind::InvalidArgument, "irreducibility of the zero polynomial");
    if (ptr.degree() == 0) return Irreducibility::Vacuous;
    if (!is_squarefree(ptr)) fail(ErrorKind::NotSquarefree, "irreducibility certificate needs a squarefree input");
    if (ptr.degree() == 1) return Irreducibility::Proved;
    const IntPoly F = to_primitive_int(ptr).first;
    const auto n = static_cast<std::size_t>(degree(F));
    std::vector<bool> possible(n, true); // possible[k]: a factor of degree k not yet excluded
    possible[0] = false;
    int used = 0;
    for (std::uint64_t l = 2; used < kIrreducibilityPrimes; ++l) {
        if (!is_prime(Int(static_cast<unsigned long>(l)))) continue;
        const modp::Field field(l);
        modp::Coeffs f = field.reduce(F);
        if (f.size() != n + 1) continue;
        if (field.gcd(f, field.derivative(f)).size() != 1) continue;
        ++used;
        std::vector<bool> sums(n + 1, false);
        sums[0] = true;
        for (int dgr : modp::factor_degrees(field, f)) {
            for (std::size_t s = n; s >= static_cast<std::size_t>(dgr); --s)
                if (sums[s - static_cast<std::size_t>(dgr)]) sums[s] = true;
        }
        bool any = false;
        for (std::size_t k = 1; k < n; ++k) {
            possible[k] = possible[k] && sums[k];
            any = any || possible[k];
        }
        if (!any) return Irreducibility::Proved;
    }
    return Irreducibility::Inconclusive;
}

struct PairScan {
    bool ok = true;
    bool inversion_closed = true;
    int self_inversive_sign = 1;
    bool roots_of_unity_free = true;
    bool even_degree = true;
    /// Cyclotomic factors of the composed product beyond the forced
    /// Phi_1^deg; order 1 entries report only the excess multiplicity.
    std::vector<CyclotomicFactor> witnesses;

    friend bool operator==(const PairScan&, const PairScan&) = default;
};

/// Checks that the roots of ptr split as B and B^-1 with no root of unity
/// among them and no product of two roots equal to a root of unity except
/// the forced a * a^-1 = 1.
inline PairScan pair_relation_scan(const RatPoly& ptr) {
    if (ptr.is_zero()) fail(ErrorKind::InvalidArgument, "pair scan of the zero polynomial");
    PairScan out;
    if (ptr.degree() == 0) return out;
    if (eval(ptr, Rat(1)) == 0 || eval(ptr, Rat(-1)) == 0)
        fail(ErrorKind::RootAtUnity, "ptr vanishes at 1 or -1");
    const auto sign = self_inversive_sign(ptr);
    out.inversion_closed = sign.has_value();
    out.self_inversive_sign = sign.value_or(0);
    out.roots_of_unity_free = cyclotomic_scan(ptr).empty();
    out.even_degree = ptr.degree() % 2 == 0;
    const RatPoly c = composed_product(ptr, ptr);
    const int forced = ptr.degree();
    bool saw_one = false;
    for (const auto& cf : cyclotomic_scan(c)) {
        if (cf.order == 1) {
            saw_one = true;
            if (cf.multiplicity != forced) out.witnesses.push_back({1, cf.multiplicity - forced});
        } else {
            out.witnesses.push_back(cf);
        }
    }
    if (!saw_one) out.witnesses.push_back({1, -forced});
    out.ok = out.inversion_closed && out.roots_of_unity_free && out.even_degree && out.witnesses.empty();
    return out;
}

inline constexpr int kMaxIndependenceBound = 4;
inline constexpr int kMaxPairsTimesBound = 24;
inline constexpr std::uint64_t kMaxRelationPolyDegree = 256;

struct IndependenceResult {
    int bound = 0;
    bool relation_found = false;
    /// Exponent pattern |n_1| >= |n_2| >= ... of the first relation found.
    std::vector<int> witness;

    friend bool operator==(const IndependenceResult&, const IndependenceResult&) = default;
};

namespace detail {

/// Exponent patterns (non-increasing positive parts) with sum <= bound and
/// at most `max_parts` parts, ordered by sum then lexicographically.
inline std::vector<std::vector<int>> exponent_patterns(int bound, int max_parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (!cur.empty()) out.push_back(cur);
        if (static_cast<int>(cur.size()) == max_parts) return;
        for (int e = std::min(remaining, max_part); e >= 1; --e) {
            cur.push_back(e);
            rec(remaining - e, e);
            cur.pop_back();
        }
    };
    rec(bound, bound);
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        const int sa = std::accumulate(a.begin(), a.end(), 0);
        const int sb = std::accumulate(b.begin(), b.end(), 0);
        if (sa != sb) return sa < sb;
        return a < b;
    });
    return out;
}

/// Number of tuples (g_1..g_t) of roots, modelled as (pair index, sign),
/// whose exponent vector sum_j sign_j e_j unit(i_j) vanishes.
inline std::uint64_t forced_unit_products(const std::vector<int>& pattern, int pairs) {
    const std::size_t t = pattern.size();
    std::vector<long> acc(static_cast<std::size_t>(pairs), 0);
    std::uint64_t count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == t) {
            if (std::all_of(acc.begin(), acc.end(), [](long v) { return v == 0; })) ++count;
            return;
        }
        for (int i = 0; i < pairs; ++i) {
            for (int sgn : {1, -1}) {
                acc[static_cast<std::size_t>(i)] += sgn * pattern[j];
                rec(j + 1);
                acc[static_cast<std::size_t>(i)] -= sgn * pattern[j];
            }
        }
    };
    rec(0);
    return count;
}

inline std::uint64_t relation_poly_degree(int pairs, int parts) {
    std::uint64_t d = 1;
    for (int i = 0; i < parts; ++i) d *= static_cast<std::uint64_t>(2 * pairs);
    return d;
}

} // namespace detail

/// Largest N <= 4 accepted by bounded_independence_check for s = deg/2 pairs.
inline int default_independence_bound(int pairs) {
    if (pairs == 0) return kMaxIndependenceBound;
    for (int n = kMaxIndependenceBound; n >= 1; --n) {
        if (pairs * n > kMaxPairsTimesBound) continue;
        if (detail::relation_poly_degree(pairs, std::min(pairs, n)) > kMaxRelationPolyDegree) continue;
        return n;
    }
    return 0;
}

/// Bounded search for multiplicative relations prod a_i^{n_i} = root of unity
/// among representatives a_i of the s conjugate pairs, with sum |n_i| <= bound.
/// Finding nothing is not a proof of independence.
inline IndependenceResult bounded_independence_check(const RatPoly& ptr, int bound) {
    if (bound < 0) fail(ErrorKind::InvalidArgument, "negative exponent bound");
    if (bound > kMaxIndependenceBound) fail(ErrorKind::BoundTooLarge, "exponent bound above 4");
    IndependenceResult out;
    out.bound = bound;
    if (ptr.degree() <= 0 || bound == 0) return out;
    const int pairs = ptr.degree() / 2;
    if (pairs * bound > kMaxPairsTimesBound)
        fail(ErrorKind::BoundTooLarge, "pairs * bound exceeds 24");
    const int parts = std::min(pairs, bound);
    if (detail::relation_poly_degree(pairs, parts) > kMaxRelationPolyDegree)
        fail(ErrorKind::BoundTooLarge, "relation polynomial degree exceeds 256");

    for (const auto& pattern : detail::exponent_patterns(bound, parts)) {
        RatPoly poly = power_roots(ptr, static_cast<unsigned>(pattern[0]));
        for (std::size_t j = 1; j < pattern.size(); ++j)
            poly = composed_product(poly, power_roots(ptr, static_cast<unsigned>(pattern[j])));
        const std::uint64_t forced = detail::forced_unit_products(pattern, pairs);
        bool relation = false;
        std::uint64_t ones = 0;
        for (const auto& cf : cyclotomic_scan(poly)) {
            if (cf.order == 1) ones = static_cast<std::uint64_t>(cf.multiplicity);
            else relation = true;
        }
        if (ones != forced) relation = true;
        if (relation) {
            out.relation_found = true;
            out.witness = pattern;
            return out;
        }
    }
    return out;
}

struct AnalyzeOptions {
    /// Exponent bound for the relation search; default_independence_bound when unset.
    std::optional<int> independence_bound;
    /// Attach the report over the extension field when not semistable.
    bool base_change = true;
};

/// Every stage of the analysis of one characteristic polynomial.
struct WeilReport {
    WeilContext ctx{2, 2, 0};
    RatPoly p2m;
    RatPoly pm;
    NewtonPolygon polygon;
    NewtonPolygon twisted_polygon;
    bool q_admissible = false;
    std::optional<int> self_inversive_sign;
    bool unit_circle_certified = false;
    std::vector<CyclotomicFactor> cyclotomic_part;
    bool semistable = false;
    std::uint64_t semistable_exponent = 1;
    int a = 0;
    RatPoly ptr;
    bool k3_type = false;
    Irreducibility ptr_irreducible = Irreducibility::Inconclusive;
    PairScan pair_scan;
    bool pair_structure_ok = false;
    IndependenceResult independence;
    /// "theorem-derived", "search-verified", "relation-found", "vacuous" or "not-run".
    std::string independence_basis = "not-run";
    /// Frobenius acts semisimply: a hypothesis, never checked here.
    bool semisimplicity_assumed = true;
    std::vector<std::string> skipped_stages;
    /// Report over the degree-r extension when the input is not semistable.
    std::shared_ptr<const WeilReport> base_change;

    int independence_checked_to() const { return independence.bound; }

    friend bool operator==(const WeilReport& x, const WeilReport& y) {
        auto fields = [](const WeilReport& r) {
            return std::tie(r.ctx, r.p2m, r.pm, r.polygon, r.twisted_polygon, r.q_admissible, r.self_inversive_sign,
                            r.unit_circle_certified, r.cyclotomic_part, r.semistable, r.semistable_exponent, r.a,
                            r.ptr, r.k3_type, r.ptr_irreducible, r.pair_scan, r.pair_structure_ok, r.independence,
                            r.independence_basis, r.semisimplicity_assumed, r.skipped_stages);
        };
        if (fields(x) != fields(y)) return false;
        if (!x.base_change || !y.base_change) return !x.base_change && !y.base_change;
        return *x.base_change == *y.base_change;
    }
};

namespace detail {

template <class F>
auto run_stage(const char* stage, F&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const Error& e) {
        throw Error(e.kind(), std::string(stage) + ": " + e.what(), stage);
    }
}

} // namespace detail

/// twist -> admissibility -> unit circle -> cyclotomic scan -> semistable
/// exponent -> split -> K3 type -> irreducibility -> pair scan -> bounded
/// relation search, plus the same analysis over k_r when not semistable.
inline WeilReport analyze(const RatPoly& p2m, const WeilContext& ctx, const AnalyzeOptions& opts = {}) {
    WeilReport rep;
    rep.ctx = ctx;
    rep.p2m = p2m;
    detail::run_stage("input", [&] {
        if (!is_integral(p2m)) fail(ErrorKind::InvalidArgument, "P2m must have integer coefficients");
        if (p2m.constant_term() != 1) fail(ErrorKind::BadConstantTerm, "P2m(0) must be 1");
        return 0;
    });
    rep.pm = detail::run_stage("twist", [&] { return twist(p2m, ctx); });
    rep.polygon = detail::run_stage("newton", [&] { return newton_polygon(p2m, ctx.p()); });
    rep.twisted_polygon = detail::run_stage("newton", [&] { return newton_polygon(rep.pm, ctx.p()); });

    rep.self_inversive_sign = self_inversive_sign(rep.pm);
    if (rep.self_inversive_sign) {
        rep.unit_circle_certified = detail::run_stage("unit_circle", [&] { return unit_circle_certificate(rep.pm); });
    } else {
        rep.skipped_stages.push_back("unit_circle: not self-inversive");
    }
    rep.q_admissible = detail::run_stage("admissibility", [&] { return is_q_admissible(rep.pm, ctx); });

    rep.cyclotomic_part = detail::run_stage("cyclotomic_scan", [&] { return cyclotomic_scan(rep.pm); });
    {
        SemistableExponent se;
        for (const auto& c : rep.cyclotomic_part) {
            if (c.order != 1) se.semistable = false;
            se.r = std::lcm(se.r, c.order);
        }
        rep.semistable = se.semistable;
        rep.semistable_exponent = se.r;
    }

    const UnitSplit split = detail::run_stage("split_unit", [&] { return split_unit(rep.pm); });
    rep.a = split.a;
    rep.ptr = split.ptr;

    rep.k3_type = is_k3_type(rep.twisted_polygon.scaled_down(Rat(static_cast<long>(ctx.exponent()))));

    if (is_squarefree(rep.ptr)) {
        rep.ptr_irreducible = detail::run_stage("irreducibility", [&] { return irreducibility_certificate(rep.ptr); });
    } else {
        rep.ptr_irreducible = Irreducibility::Inconclusive;
        rep.skipped_stages.push_back("irreducibility: ptr not squarefree");
    }

    if (eval(rep.ptr, Rat(-1)) == 0) {
        rep.pair_structure_ok = false;
        rep.pair_scan.ok = false;
        rep.skipped_stages.push_back("pair_relation_scan: ptr(-1) = 0");
    } else {
        rep.pair_scan = detail::run_stage("pair_relation_scan", [&] { return pair_relation_scan(rep.ptr); });
        rep.pair_structure_ok = rep.pair_scan.ok;
    }

    const int pairs = rep.ptr.degree() / 2;
    if (rep.ptr.degree() == 0) {
        rep.independence.bound = opts.independence_bound.value_or(0);
        rep.independence_basis = "vacuous";
    } else if (rep.pair_structure_ok) {
        const int bound = opts.independence_bound.value_or(default_independence_bound(pairs));
        rep.independence = detail::run_stage("independence", [&] { return bounded_independence_check(rep.ptr, bound); });
        const bool theorem = rep.k3_type && rep.semistable && rep.ptr_irreducible == Irreducibility::Proved;
        if (rep.independence.relation_found) rep.independence_basis = "relation-found";
        else rep.independence_basis = theorem ? "theorem-derived" : "search-verified";
    } else {
        rep.skipped_stages.push_back("independence: pair structure not established");
    }

    if (!rep.semistable && opts.base_change) {
        const auto r = static_cast<unsigned>(rep.semistable_exponent);
        const RatPoly lifted = detail::run_stage("base_change", [&] { return base_change(p2m, r); });
        rep.base_change = std::make_shared<const WeilReport>(analyze(lifted, ctx.extended(r), opts));
    }
    return rep;
}

} // namespace weilk3
