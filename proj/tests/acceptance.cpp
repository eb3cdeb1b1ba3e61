// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "weilk3/fixtures.hpp"
#include "weilk3/invariants.hpp"
#include "weilk3/kunneth.hpp"
#include "weilk3/spanmodel.hpp"
#include "weilk3/weil.hpp"

using namespace weilk3;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

NewtonPolygon polygon(std::initializer_list<std::pair<Rat, int>> segs) {
    std::vector<Segment> out;
    for (const auto& [s, l] : segs) out.push_back({s, l});
    return NewtonPolygon(out);
}

Outcome c1_newton() {
    const Fixture f = gen_fixtures(FixtureSpec{})[0];
    const RatPoly expect = RatPoly{1, -2, 16} * pow(RatPoly{1, -4}, 21);
    if (f.p2m != expect) return {false, "generated fixture differs from (1-2t+16t^2)(1-4t)^21"};
    const WeilReport rep = analyze(f.p2m, f.ctx);
    if (rep.polygon != polygon({{1, 1}, {2, 21}, {3, 1}})) return {false, "untwisted polygon"};
    if (rep.twisted_polygon != polygon({{-1, 1}, {0, 21}, {1, 1}})) return {false, "twisted polygon"};
    if (!rep.k3_type) return {false, "not K3 type"};
    return {true, "slopes {1,2^21,3} -> {-1,0^21,1}, K3 type"};
}

Outcome c2_degree_sum() {
    std::size_t n = 0;
    for (int deg : {2, 4}) {
        FixtureSpec spec;
        spec.k3_factor_degree = deg;
        spec.count = 3;
        for (const auto& f : gen_fixtures(spec)) {
            const WeilReport rep = analyze(f.p2m, f.ctx);
            if (rep.a + rep.ptr.degree() != 23) return {false, "a + deg Ptr != 23"};
            ++n;
        }
    }
    FixtureSpec p3;
    p3.p = 3;
    for (const auto& f : gen_fixtures(p3)) {
        const WeilReport rep = analyze(f.p2m, f.ctx);
        if (rep.a + rep.ptr.degree() != 23) return {false, "a + deg Ptr != 23 at p = 3"};
        ++n;
    }
    return {true, std::to_string(n) + " fixtures"};
}

Outcome c3_inv_dim() {
    std::size_t n_cases = 0;
    for (unsigned a = 0; a <= 3; ++a)
        for (unsigned k = 0; k <= 3; ++k)
            for (unsigned n = 0; n <= 5; ++n) {
                if (inv_dim({a, k}, n) != inv_dim_bruteforce({a, k}, n))
                    return {false, "mismatch at a=" + std::to_string(a) + " k=" + std::to_string(k) +
                                       " n=" + std::to_string(n)};
                ++n_cases;
            }
    if (inv_dim({21, 1}, 2) != 443) return {false, "inv_dim((21,1),2) != 443"};
    if (square_tate_dim({21, 1}) != 447) return {false, "square_tate_dim != 447"};
    if (tate_dim_power({21, 1}, 2, 4).total != 447) return {false, "tate_dim_power != 447"};
    return {true, std::to_string(n_cases) + " cases, 443, 447"};
}

Outcome c4_pair_decomposition() {
    for (unsigned a = 0; a <= 2; ++a)
        for (unsigned k = 0; k <= 3; ++k)
            for (unsigned n = 0; n <= 5; ++n)
                if (!pair_decomposition_check({a, k}, n))
                    return {false, "fails at a=" + std::to_string(a) + " k=" + std::to_string(k) +
                                       " n=" + std::to_string(n)};
    return {true, "a<=2, k<=3, n<=5"};
}

Outcome c5_generation() {
    for (unsigned a = 0; a <= 3; ++a)
        for (unsigned k = 0; k <= 3; ++k)
            if (!verify_generation_vv(DiagonalModel({a, k}), static_cast<int>(2 * k)))
                return {false, "fails at a=" + std::to_string(a) + " k=" + std::to_string(k)};
    return {true, "a<=3, k<=3 with J=2k"};
}

Outcome c6_decomposable() {
    std::size_t chunks = 0;
    for (const EigenStructure st : {EigenStructure{1, 1}, EigenStructure{0, 2}, EigenStructure{2, 1}})
        for (int r : {2, 3, 4})
            for (int m = 0; m <= 4 * r; ++m) {
                const DecompositionResult d = decomposable_check(st, r, m);
                for (const auto& c : d.chunks) {
                    if (c.twos > 4) continue;
                    ++chunks;
                    if (!c.ok)
                        return {false, "rank deficit at a=" + std::to_string(st.a) + " k=" + std::to_string(st.k) +
                                           " r=" + std::to_string(r) + " m=" + std::to_string(m)};
                }
            }
    return {true, std::to_string(chunks) + " chunks"};
}

Outcome c7_base_change() {
    const RatPoly f = RatPoly{1, -2, 16} * pow(RatPoly{1, -4}, 19) * RatPoly{1, -4, 16};
    const WeilContext ctx(2, 2, 2);
    const SemistableExponent se = semistable_exponent(twist(f, ctx));
    if (se.semistable || se.r != 6) return {false, "semistable_exponent r = " + std::to_string(se.r)};
    const WeilReport direct = analyze(base_change(f, 6), ctx.extended(6));
    if (!direct.semistable || direct.a != 21) return {false, "analyze(base_change(f, 6)) not semistable with a = 21"};
    const WeilReport rep = analyze(f, ctx);
    if (rep.semistable) return {false, "reported semistable"};
    if (rep.semistable_exponent != 6) return {false, "r = " + std::to_string(rep.semistable_exponent)};
    if (!rep.base_change) return {false, "no base change report"};
    if (!rep.base_change->semistable) return {false, "not semistable after base change"};
    if (rep.base_change->a != 21) return {false, "a = " + std::to_string(rep.base_change->a)};
    return {true, "r = 6, a = 21 after base change"};
}

Outcome c8_product() {
    const Fixture quad = gen_fixtures(FixtureSpec{})[0];
    FixtureSpec qs;
    qs.k3_factor_degree = 4;
    const Fixture quart = gen_fixtures(qs)[0];
    const EigenStructure sy = from_report(analyze(quad.p2m, quad.ctx));
    const EigenStructure sz = from_report(analyze(quart.p2m, quart.ctx));
    const auto mixed = product_tate_check(sy, sz, 2 * static_cast<int>(sy.k), 2 * static_cast<int>(sz.k));
    if (!mixed.ok || !mixed.mixed_dim || *mixed.mixed_dim != Int(sy.a) * Int(sz.a))
        return {false, "degrees 2 vs 4 not Tate-decomposed"};
    const auto same = product_tate_check(sy, sy, 2, 2);
    if (same.ok) return {false, "equal degrees reported decomposed"};
    return {true, "2 vs 4: " + mixed.mixed_dim->get_str() + " mixed classes; 2 vs 2 rejected"};
}

Outcome c9_negative() {
    if (irreducibility_certificate(RatPoly{4, 0, 0, 0, 1}) == Irreducibility::Proved)
        return {false, "t^4+4 proved irreducible"};
    if (unit_circle_certificate(RatPoly{Rat(1), Rat(-5, 2), Rat(1)})) return {false, "1-5/2t+t^2 certified"};
    if (is_k3_type(polygon({{0, 23}}))) return {false, "flat polygon is K3 type"};
    return {true, "all three controls rejected"};
}

struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "newton polygon of generated fixture", 1.0, c1_newton},
        {2, "a + deg Ptr = 23 for emitted fixtures", 5.0, c2_degree_sum},
        {3, "inv_dim closed form vs brute force", 10.0, c3_inv_dim},
        {4, "pair decomposition", 30.0, c4_pair_decomposition},
        {5, "generation of (V x V)^G", 30.0, c5_generation},
        {6, "decomposability on small models", 120.0, c6_decomposable},
        {7, "base change to semistable", 1.0, c7_base_change},
        {8, "product Tate check", 1.0, c8_product},
        {9, "negative controls", 1.0, c9_negative},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (o.ok && secs > c.limit_s) {
            o.ok = false;
            o.detail += " (over time limit)";
        }
        if (!o.ok) ++failures;
        std::printf("%s criterion %d: %s [%.3fs / %.0fs] %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs, c.limit_s,
                    o.detail.c_str());
    }
    std::fflush(stdout);
    return failures == 0 ? 0 : 1;
}
