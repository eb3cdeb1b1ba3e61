#include <gtest/gtest.h>

#include <map>

#include "weilk3/invariants.hpp"
#include "weilk3/weil.hpp"

using namespace weilk3;

namespace {

const WeilContext kCtx(2, 2, 2);

/// Oracle: constant term of (a + sum_i (x_i + 1/x_i))^n by expanding the
/// power as a sparse Laurent polynomial one factor at a time.
Int constant_term_by_expansion(const EigenStructure& st, unsigned n) {
    using Mono = std::vector<int>;
    std::map<Mono, Int> acc{{Mono(st.k, 0), Int(1)}};
    for (unsigned step = 0; step < n; ++step) {
        std::map<Mono, Int> next;
        for (const auto& [m, c] : acc) {
            if (st.a != 0) next[m] += c * st.a;
            for (unsigned i = 0; i < st.k; ++i)
                for (int s : {1, -1}) {
                    Mono mm(m);
                    mm[i] += s;
                    next[mm] += c;
                }
        }
        acc = std::move(next);
    }
    auto it = acc.find(Mono(st.k, 0));
    return it == acc.end() ? Int(0) : it->second;
}

} // namespace

TEST(FromReport, Examples) {
    const WeilReport std_rep = analyze(RatPoly{1, -2, 16} * pow(RatPoly{1, -4}, 21), kCtx);
    EXPECT_EQ(from_report(std_rep), (EigenStructure{21, 1}));
    const WeilReport unit_rep = analyze(pow(RatPoly{1, -4}, 23), kCtx);
    EXPECT_EQ(from_report(unit_rep), (EigenStructure{23, 0}));
    const WeilReport bad = analyze(RatPoly{1, -2, 16} * pow(RatPoly{1, -4}, 19) * RatPoly{1, -4, 16}, kCtx);
    try {
        from_report(bad);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::HypothesesNotMet);
        EXPECT_NE(std::string(e.what()).find("semistable"), std::string::npos);
    }
    EXPECT_EQ(from_report(*bad.base_change), (EigenStructure{21, 1}));
}

TEST(FromReport, OverrideForInconclusive) {
    WeilReport rep = analyze(RatPoly{1, -2, 16} * pow(RatPoly{1, -4}, 21), kCtx);
    rep.ptr_irreducible = Irreducibility::Inconclusive;
    EXPECT_THROW(from_report(rep), Error);
    EXPECT_EQ(from_report(rep, true), (EigenStructure{21, 1}));
}

TEST(InvDim, Examples) {
    EXPECT_EQ(inv_dim({21, 1}, 2), 443);
    EXPECT_EQ(inv_dim({5, 2}, 0), 1);
    EXPECT_EQ(inv_dim({1, 0}, 7), 1);
    EXPECT_EQ(inv_dim({0, 1}, 2), 2);
    EXPECT_EQ(inv_dim({2, 2}, 3), 32);
}

TEST(InvDim, BruteforceExamples) {
    EXPECT_EQ(inv_dim_bruteforce({21, 1}, 2), 443);
    EXPECT_EQ(inv_dim_bruteforce({2, 2}, 3), 32);
    EXPECT_EQ(inv_dim_bruteforce({0, 1}, 3), 0);
    EXPECT_THROW(inv_dim_bruteforce({1, 1}, 7), Error);
    EXPECT_THROW(inv_dim_bruteforce({30, 0}, 6), Error);
}

TEST(InvDim, ClosedFormMatchesBothOracles) {
    for (unsigned a = 0; a <= 3; ++a)
        for (unsigned k = 0; k <= 3; ++k)
            for (unsigned n = 0; n <= 5; ++n) {
                const EigenStructure st{a, k};
                EXPECT_EQ(inv_dim(st, n), inv_dim_bruteforce(st, n)) << a << k << n;
                EXPECT_EQ(inv_dim(st, n), constant_term_by_expansion(st, n)) << a << k << n;
            }
}

TEST(InvDim, LowDegreeFormulas) {
    for (unsigned a = 0; a <= 30; ++a)
        for (unsigned k = 0; k <= 12; ++k) {
            EXPECT_EQ(inv_dim({a, k}, 1), a);
            EXPECT_EQ(inv_dim({a, k}, 2), a * a + 2 * k);
        }
}

TEST(InvDim, MonotoneAndParity) {
    for (unsigned n = 1; n <= 8; ++n)
        for (unsigned a = 0; a <= 5; ++a)
            for (unsigned k = 0; k <= 5; ++k) {
                EXPECT_LE(inv_dim({a, k}, n), inv_dim({a + 1, k}, n));
                EXPECT_LE(inv_dim({a, k}, n), inv_dim({a, k + 1}, n));
                if (a == 0 && n % 2 == 1) EXPECT_EQ(inv_dim({a, k}, n), 0);
            }
}

TEST(PairDecomposition, Examples) {
    EXPECT_TRUE(pair_decomposition_check({1, 1}, 2));
    EXPECT_TRUE(pair_decomposition_check({0, 2}, 4));
    EXPECT_TRUE(pair_decomposition_check({1, 1}, 3));
}

TEST(PairDecomposition, AllFeasibleSmallStructures) {
    for (unsigned a = 0; a <= 3; ++a)
        for (unsigned k = 0; k <= 3; ++k)
            for (unsigned n = 0; n <= 5; ++n) EXPECT_TRUE(pair_decomposition_check({a, k}, n)) << a << k << n;
}

TEST(PairDecomposition, SplitterRejectsNonPairable) {
    EXPECT_FALSE(detail::pair_up({1, 1}).has_value());
    EXPECT_FALSE(detail::pair_up({0, 0, 0, 1}).has_value());
    EXPECT_TRUE(detail::pair_up({0, 1, 0, -1}).has_value());
    EXPECT_TRUE(detail::pair_up({0, 2, -2}).has_value());
}
