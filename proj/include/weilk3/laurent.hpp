#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <ostream>
#include <vector>

#include "weilk3/rational.hpp"

namespace weilk3 {

/// Exponent vector in Z^k; trailing zeros are never stored, so the same
/// monomial has one representation whatever k is.
using Monomial = std::vector<int>;

namespace detail {

inline int exponent(const Monomial& m, std::size_t i) { return i < m.size() ? m[i] : 0; }

inline void trim_monomial(Monomial& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}

inline Monomial combine(const Monomial& a, const Monomial& b, int sign) {
    Monomial out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = exponent(a, i) + sign * exponent(b, i);
    trim_monomial(out);
    return out;
}

} // namespace detail

/// Lexicographic order on Z^k with implicit zero padding; compatible with
/// multiplication, so leading terms multiply.
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const std::size_t n = std::max(a.size(), b.size());
        for (std::size_t i = 0; i < n; ++i) {
            const int x = detail::exponent(a, i);
            const int y = detail::exponent(b, i);
            if (x != y) return x < y;
        }
        return false;
    }
};

/// Laurent polynomial in x_1..x_k over Q.
class LaurentScalar {
public:
    using Terms = std::map<Monomial, Rat, MonomialLess>;

    LaurentScalar() = default;
    LaurentScalar(const Rat& c) { // NOLINT: constants convert implicitly
        if (c != 0) terms_.emplace(Monomial{}, c);
    }
    LaurentScalar(long c) : LaurentScalar(Rat(c)) {} // NOLINT

    /// c * x_var^e (var counts from 0)
    static LaurentScalar monomial(std::size_t var, int e, const Rat& c = Rat(1)) {
        Monomial m(var + 1, 0);
        m[var] = e;
        detail::trim_monomial(m);
        LaurentScalar out;
        if (c != 0) out.terms_.emplace(std::move(m), c);
        return out;
    }
    static LaurentScalar term(Monomial m, const Rat& c) {
        detail::trim_monomial(m);
        LaurentScalar out;
        if (c != 0) out.terms_.emplace(std::move(m), c);
        return out;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const std::pair<const Monomial, Rat>& leading() const { return *terms_.rbegin(); }

    friend bool operator==(const LaurentScalar& a, const LaurentScalar& b) { return a.terms_ == b.terms_; }

    LaurentScalar& operator+=(const LaurentScalar& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    LaurentScalar& operator-=(const LaurentScalar& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) { return a += b; }
    friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) { return a -= b; }
    LaurentScalar operator-() const {
        LaurentScalar out(*this);
        for (auto& [m, c] : out.terms_) c = -c;
        return out;
    }
    friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
        LaurentScalar out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(detail::combine(ma, mb, 1), ca * cb);
        return out;
    }
    LaurentScalar& operator*=(const LaurentScalar& o) { return *this = *this * o; }

    /// Substitutes x_i -> x_i^e in every variable.
    LaurentScalar power_of_variables(int e) const {
        LaurentScalar out;
        for (const auto& [m, c] : terms_) {
            Monomial mm(m);
            for (auto& x : mm) x *= e;
            out.add_term(mm, c);
        }
        return out;
    }

private:
    void add_term(const Monomial& m, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (inserted) return;
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    Terms terms_;
};

/// a / b when b divides a in the Laurent ring, NonExactDivision otherwise.
/// Quotient terms come out in decreasing lex order and must stay inside the
/// box of per-variable exponent ranges allowed by a and b, so the loop ends.
inline LaurentScalar exact_div(const LaurentScalar& a, const LaurentScalar& b) {
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, "Laurent division by zero");
    if (a.is_zero()) return {};
    if (b.num_terms() == 1) {
        const auto& [mb, cb] = b.leading();
        LaurentScalar out;
        for (const auto& [m, c] : a.terms()) out += LaurentScalar::term(detail::combine(m, mb, -1), c / cb);
        return out;
    }
    std::size_t nv = 0;
    for (const auto& [m, c] : a.terms()) nv = std::max(nv, m.size());
    for (const auto& [m, c] : b.terms()) nv = std::max(nv, m.size());
    auto range = [nv](const LaurentScalar& s) {
        std::vector<int> lo(nv, 0), hi(nv, 0);
        bool first = true;
        for (const auto& [m, c] : s.terms()) {
            for (std::size_t i = 0; i < nv; ++i) {
                const int e = detail::exponent(m, i);
                lo[i] = first ? e : std::min(lo[i], e);
                hi[i] = first ? e : std::max(hi[i], e);
            }
            first = false;
        }
        return std::pair{lo, hi};
    };
    const auto [alo, ahi] = range(a);
    const auto [blo, bhi] = range(b);

    LaurentScalar q;
    LaurentScalar r = a;
    const auto& [lb, cb] = b.leading();
    while (!r.is_zero()) {
        const auto& [lr, cr] = r.leading();
        Monomial m = detail::combine(lr, lb, -1);
        for (std::size_t i = 0; i < nv; ++i) {
            const int e = detail::exponent(m, i);
            if (e < alo[i] - blo[i] || e > ahi[i] - bhi[i])
                fail(ErrorKind::NonExactDivision, "Laurent division is not exact");
        }
        const LaurentScalar t = LaurentScalar::term(std::move(m), cr / cb);
        q += t;
        r -= t * b;
    }
    return q;
}

inline std::ostream& operator<<(std::ostream& os, const LaurentScalar& s) {
    if (s.is_zero()) return os << "0";
    bool first = true;
    for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << it->second.get_str();
        for (std::size_t i = 0; i < it->first.size(); ++i)
            if (it->first[i] != 0) os << "*x" << (i + 1) << "^" << it->first[i];
    }
    return os;
}

using LaurentVec = std::vector<LaurentScalar>;

/// Value at x_i = point[i]; every point coordinate must be nonzero.
inline Rat evaluate(const LaurentScalar& s, const std::vector<Rat>& point) {
    Rat out(0);
    for (const auto& [m, c] : s.terms()) {
        Rat v = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (i >= point.size()) fail(ErrorKind::InvalidArgument, "evaluation point has too few coordinates");
            const Rat base = m[i] > 0 ? point[i] : Rat(1) / point[i];
            v *= rpow(base, static_cast<unsigned long>(m[i] > 0 ? m[i] : -m[i]));
        }
        out += v;
    }
    return out;
}

/// Rank over Q by Gaussian elimination.
inline std::size_t rational_rank(std::vector<std::vector<Rat>> rows) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            const Rat f = rows[i][col] / rows[rank][col];
            for (std::size_t j = col; j < ncols; ++j) rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

/// Rank of the vectors with x_i replaced by point[i]. Never above span_rank.
inline std::size_t specialized_rank(const std::vector<LaurentVec>& vecs, const std::vector<Rat>& point) {
    std::vector<std::vector<Rat>> rows;
    rows.reserve(vecs.size());
    for (const auto& v : vecs) {
        std::vector<Rat> r;
        r.reserve(v.size());
        for (const auto& s : v) r.push_back(evaluate(s, point));
        rows.push_back(std::move(r));
    }
    return rational_rank(std::move(rows));
}

/// Rank over the fraction field of the Laurent ring by fraction-free
/// (Bareiss) elimination. Pivot column: lowest index with a nonzero entry;
/// pivot row: fewest terms, then lowest index.
inline std::size_t span_rank(std::vector<LaurentVec> rows) {
    std::erase_if(rows, [](const LaurentVec& v) {
        return std::all_of(v.begin(), v.end(), [](const LaurentScalar& s) { return s.is_zero(); });
    });
    if (rows.empty()) return 0;
    const std::size_t ncols = rows.front().size();
    for (const auto& r : rows)
        if (r.size() != ncols) fail(ErrorKind::InvalidArgument, "vectors of different lengths");
    LaurentScalar prev(1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t best = rows.size();
        for (std::size_t i = rank; i < rows.size(); ++i) {
            if (rows[i][col].is_zero()) continue;
            if (best == rows.size() || rows[i][col].num_terms() < rows[best][col].num_terms()) best = i;
        }
        if (best == rows.size()) continue;
        std::swap(rows[rank], rows[best]);
        const LaurentVec& piv = rows[rank];
        // With pivot == previous pivot the Bareiss step is plain row reduction.
        const bool plain = piv[col] == prev;
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            LaurentVec& row = rows[i];
            const LaurentScalar f = row[col];
            if (plain && f.is_zero()) continue;
            for (std::size_t j = col + 1; j < ncols; ++j) {
                if (plain) {
                    if (!piv[j].is_zero()) row[j] -= f * piv[j];
                    continue;
                }
                LaurentScalar v = piv[col] * row[j];
                if (!f.is_zero() && !piv[j].is_zero()) v -= f * piv[j];
                row[j] = exact_div(v, prev);
            }
            row[col] = LaurentScalar();
        }
        prev = piv[col];
        ++rank;
    }
    return rank;
}

} // namespace weilk3
