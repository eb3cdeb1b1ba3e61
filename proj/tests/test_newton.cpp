#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"
#include "weilk3/newton.hpp"
#include "weilk3/weil.hpp"

using namespace weilk3;
using namespace testing_support;

namespace {

RatPoly standard_fixture() { return RatPoly{1, -2, 16} * pow(RatPoly{1, -4}, 21); }

NewtonPolygon polygon(std::initializer_list<std::pair<Rat, int>> segs) {
    std::vector<Segment> out;
    for (const auto& [s, l] : segs) out.push_back({s, l});
    return NewtonPolygon(out);
}

/// Oracle: the lower hull by brute force over all point pairs. A point pair
/// (i, j) is a hull edge when every other point lies on or above the line.
NewtonPolygon brute_force_polygon(const RatPoly& f, const Int& p) {
    std::vector<std::pair<long, Rat>> pts;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f.coeff(i) != 0) pts.emplace_back(static_cast<long>(i), Rat(*val_p(f.coeff(i), p)));
    std::vector<Segment> segs;
    std::size_t cur = 0;
    while (cur + 1 < pts.size()) {
        // Next vertex: the point giving the smallest slope; farthest on ties.
        std::size_t best = cur + 1;
        Rat best_slope = (pts[best].second - pts[cur].second) / Rat(pts[best].first - pts[cur].first);
        for (std::size_t j = cur + 2; j < pts.size(); ++j) {
            const Rat s = (pts[j].second - pts[cur].second) / Rat(pts[j].first - pts[cur].first);
            if (s <= best_slope) {
                best_slope = s;
                best = j;
            }
        }
        segs.push_back({best_slope, static_cast<int>(pts[best].first - pts[cur].first)});
        cur = best;
    }
    return NewtonPolygon(segs);
}

/// Merge of the slope multisets of two polygons.
NewtonPolygon merged(const NewtonPolygon& a, const NewtonPolygon& b) {
    std::vector<Segment> all(a.segments());
    all.insert(all.end(), b.segments().begin(), b.segments().end());
    std::sort(all.begin(), all.end(), [](const Segment& x, const Segment& y) { return x.slope < y.slope; });
    std::vector<Segment> out;
    for (const auto& s : all) {
        if (!out.empty() && out.back().slope == s.slope) out.back().length += s.length;
        else out.push_back(s);
    }
    return NewtonPolygon(out);
}

} // namespace

TEST(NewtonPolygon, Examples) {
    EXPECT_EQ(newton_polygon(standard_fixture(), 2), profiles::fourfold_ordinary());
    EXPECT_EQ(newton_polygon(RatPoly{1, -1}, 7), polygon({{0, 1}}));
    EXPECT_EQ(newton_polygon(RatPoly{Rat(1), Rat(-1, 2), Rat(1)}, 2), polygon({{-1, 1}, {1, 1}}));
}

TEST(NewtonPolygon, Errors) {
    EXPECT_THROW(newton_polygon(RatPoly{0, 1}, 2), Error);
    EXPECT_THROW(newton_polygon(RatPoly{1, 1}, 6), Error);
}

TEST(NewtonPolygon, MatchesBruteForceHull) {
    for (int trial = 0; trial < 300; ++trial) {
        const Int p = std::vector<long>{2, 3, 5}[static_cast<std::size_t>(uniform(0, 2))];
        RatPoly f = random_poly(static_cast<int>(uniform(1, 9)), 60);
        EXPECT_EQ(newton_polygon(f, p), brute_force_polygon(f, p)) << f;
    }
}

TEST(NewtonPolygon, ProductMergesSlopes) {
    for (int trial = 0; trial < 100; ++trial) {
        const Int p = std::vector<long>{2, 3}[static_cast<std::size_t>(uniform(0, 1))];
        const RatPoly f = random_poly(static_cast<int>(uniform(1, 5)), 50);
        const RatPoly g = random_poly(static_cast<int>(uniform(1, 5)), 50);
        EXPECT_EQ(newton_polygon(f * g, p), merged(newton_polygon(f, p), newton_polygon(g, p)));
    }
}

TEST(NewtonPolygon, TotalRiseAndLength) {
    for (int trial = 0; trial < 100; ++trial) {
        const RatPoly f = random_poly(static_cast<int>(uniform(1, 8)), 100);
        const auto np = newton_polygon(f, 2);
        EXPECT_EQ(np.total_length(), f.degree());
        EXPECT_EQ(np.total_rise(), Rat(*val_p(f.leading(), 2) - *val_p(f.constant_term(), 2)));
        for (std::size_t i = 1; i < np.segments().size(); ++i)
            EXPECT_LT(np.segments()[i - 1].slope, np.segments()[i].slope);
    }
}

TEST(NewtonPolygon, TwistShiftsSlopes) {
    for (long p : {2L, 3L}) {
        for (int e : {1, 2}) {
            const Int q = ipow(Int(p), static_cast<unsigned long>(e));
            for (unsigned m : {1U, 2U}) {
                const WeilContext ctx(p, q, m);
                for (int trial = 0; trial < 20; ++trial) {
                    RatPoly f = random_poly(static_cast<int>(uniform(1, 6)), 40);
                    f = normalize_constant(f);
                    const Rat shift = -Rat(static_cast<long>(m) * e);
                    EXPECT_EQ(newton_polygon(twist(f, ctx), p), newton_polygon(f, p).shifted(shift));
                }
            }
        }
    }
}

TEST(K3Type, Examples) {
    EXPECT_TRUE(is_k3_type(profiles::fourfold_twisted()));
    EXPECT_FALSE(is_k3_type(polygon({{0, 23}})));
    EXPECT_FALSE(is_k3_type(polygon({{-1, 2}, {0, 19}, {1, 2}})));
    EXPECT_TRUE(is_k3_type(polygon({{-1, 1}, {1, 1}})));
    EXPECT_TRUE(is_k3_type(polygon({{Rat(-1, 2), 1}, {0, 5}, {Rat(1, 2), 1}})));
    EXPECT_FALSE(is_k3_type(polygon({{-1, 1}, {Rat(1, 2), 1}})));
    EXPECT_FALSE(is_k3_type(polygon({{-1, 1}, {Rat(1, 2), 3}, {1, 1}})));
}

TEST(FourfoldProfile, Examples) {
    EXPECT_TRUE(is_ordinary_fourfold_profile(standard_fixture(), 2));
    EXPECT_FALSE(is_ordinary_fourfold_profile(pow(RatPoly{1, -4}, 23), 2));
    EXPECT_FALSE(is_ordinary_fourfold_profile(pow(RatPoly{1, -1}, 23), 2));
    EXPECT_THROW(is_ordinary_fourfold_profile(pow(RatPoly{1, -1}, 22), 2), Error);
    // q = p^2: slopes are measured in units of v_p(q).
    const RatPoly over_p2 = RatPoly{1, -4, 256} * pow(RatPoly{1, -16}, 21);
    EXPECT_TRUE(is_ordinary_fourfold_profile(over_p2, 2, 4));
}
