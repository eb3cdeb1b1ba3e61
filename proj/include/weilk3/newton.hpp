#pragma once

#include <set>
#include <vector>

#include "weilk3/poly.hpp"

namespace weilk3 {

struct Segment {
    Rat slope;
    int length = 0;

    friend bool operator==(const Segment&, const Segment&) = default;
};

/// Lower convex hull of (i, v_p(a_i)) anchored at the constant term, as
/// (slope, horizontal length) pieces with strictly increasing slopes. With
/// q = p a piece of slope s and length L accounts for L reciprocal roots of
/// p-adic valuation s.
class NewtonPolygon {
public:
    NewtonPolygon() = default;
    explicit NewtonPolygon(std::vector<Segment> segments) : segments_(std::move(segments)) {}

    const std::vector<Segment>& segments() const { return segments_; }
    int total_length() const {
        int n = 0;
        for (const auto& s : segments_) n += s.length;
        return n;
    }
    Rat total_rise() const {
        Rat r(0);
        for (const auto& s : segments_) r += s.slope * s.length;
        return r;
    }
    /// Same polygon with every slope shifted by `delta`.
    NewtonPolygon shifted(const Rat& delta) const {
        std::vector<Segment> out(segments_);
        for (auto& s : out) s.slope += delta;
        return NewtonPolygon(std::move(out));
    }
    /// Same polygon with every slope divided by `d` (nonzero).
    NewtonPolygon scaled_down(const Rat& d) const {
        std::vector<Segment> out(segments_);
        for (auto& s : out) s.slope /= d;
        return NewtonPolygon(std::move(out));
    }

    friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;

private:
    std::vector<Segment> segments_;
};

namespace profiles {
/// Ordinary cubic fourfold on H^4: Hodge numbers h^{3,1} = h^{1,3} = 1, h^{2,2} = 21.
inline NewtonPolygon fourfold_ordinary() {
    return NewtonPolygon({{Rat(1), 1}, {Rat(2), 21}, {Rat(3), 1}});
}
/// The same after the Tate twist by 2.
inline NewtonPolygon fourfold_twisted() {
    return NewtonPolygon({{Rat(-1), 1}, {Rat(0), 21}, {Rat(1), 1}});
}
} // namespace profiles

inline NewtonPolygon newton_polygon(const RatPoly& f, const Int& p) {
    if (!is_prime(p)) fail(ErrorKind::NotPrime, p.get_str() + " is not prime");
    if (f.is_zero() || f.constant_term() == 0)
        fail(ErrorKind::ZeroConstantTerm, "Newton polygon needs f(0) != 0");

    struct Pt {
        long x;
        long y;
    };
    std::vector<Pt> hull;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Rat& c = f.coeffs()[i];
        if (c == 0) continue;
        const Pt pt{static_cast<long>(i), *val_p(c, p)};
        // Pop while the last two hull points and pt make a non-left turn.
        while (hull.size() >= 2) {
            const Pt& a = hull[hull.size() - 2];
            const Pt& b = hull.back();
            const __int128 cross = static_cast<__int128>(b.x - a.x) * (pt.y - a.y) -
                                   static_cast<__int128>(b.y - a.y) * (pt.x - a.x);
            if (cross > 0) break;
            hull.pop_back();
        }
        hull.push_back(pt);
    }
    std::vector<Segment> segs;
    for (std::size_t i = 1; i < hull.size(); ++i) {
        const long dx = hull[i].x - hull[i - 1].x;
        const long dy = hull[i].y - hull[i - 1].y;
        segs.push_back({make_rat(dy, dx), static_cast<int>(dx)});
    }
    return NewtonPolygon(std::move(segs));
}

/// Slope set {c, -c} or {c, -c, 0} for some rational c != 0, with the
/// slopes c and -c each of length exactly 1.
inline bool is_k3_type(const NewtonPolygon& np) {
    const auto& segs = np.segments();
    if (segs.size() != 2 && segs.size() != 3) return false;
    const Segment& lo = segs.front();
    const Segment& hi = segs.back();
    if (hi.slope <= 0 || lo.slope != -hi.slope) return false;
    if (lo.length != 1 || hi.length != 1) return false;
    if (segs.size() == 3 && segs[1].slope != 0) return false;
    return true;
}

/// Degree-23 polynomial whose p-adic polygon, with slopes measured in units
/// of v_p(q), is the ordinary fourfold profile {1 x 1, 2 x 21, 3 x 1}.
inline bool is_ordinary_fourfold_profile(const RatPoly& f, const Int& p, const Int& q) {
    if (f.degree() != 23) fail(ErrorKind::WrongDegree, "expected degree 23, got " + std::to_string(f.degree()));
    const auto e = val_p(Rat(q), p);
    if (!e || *e <= 0) fail(ErrorKind::InvalidArgument, "q must be a positive power of p");
    return newton_polygon(f, p).scaled_down(Rat(*e)) == profiles::fourfold_ordinary();
}

inline bool is_ordinary_fourfold_profile(const RatPoly& f, const Int& p) { return is_ordinary_fourfold_profile(f, p, p); }

} // namespace weilk3
