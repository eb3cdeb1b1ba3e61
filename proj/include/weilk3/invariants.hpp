#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weilk3/rational.hpp"
#include "weilk3/weil.hpp"

namespace weilk3 {

/// Eigenvalue 1 with multiplicity a plus k pairs beta_i, beta_i^-1 of
/// multiplicatively independent eigenvalues.
struct EigenStructure {
    unsigned a = 0;
    unsigned k = 0;

    unsigned dimension() const { return a + 2 * k; }

    friend bool operator==(const EigenStructure&, const EigenStructure&) = default;
};

/// Reads (a, k) off a report whose hypotheses hold. `assume_irreducible`
/// lets the caller vouch for an Inconclusive irreducibility certificate.
inline EigenStructure from_report(const WeilReport& rep, bool assume_irreducible = false) {
    std::vector<std::string> failed;
    if (!rep.pair_structure_ok) failed.push_back("pair_structure_ok");
    if (rep.ptr_irreducible == Irreducibility::Inconclusive && !assume_irreducible)
        failed.push_back("ptr_irreducible");
    if (!rep.semistable) failed.push_back("semistable");
    if (!failed.empty()) {
        std::string msg = "report flags failed:";
        for (const auto& f : failed) msg += " " + f;
        fail(ErrorKind::HypothesesNotMet, msg);
    }
    return {static_cast<unsigned>(rep.a), static_cast<unsigned>(rep.ptr.degree() / 2)};
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

/// Number of ordered n-tuples of eigenvalues (with multiplicity) whose
/// product is 1: the constant term of (a + sum_i (x_i + 1/x_i))^n.
inline Int inv_dim(const EigenStructure& st, unsigned n) {
    // u[h] = sum over p_1 + ... + p_k = h of (h! / prod p_i!)^2, built one pair at a time.
    const unsigned hmax = n / 2;
    std::vector<Int> u(hmax + 1, 0);
    u[0] = 1;
    for (unsigned i = 0; i < st.k; ++i) {
        std::vector<Int> next(hmax + 1, 0);
        for (unsigned h = 0; h <= hmax; ++h)
            for (unsigned p = 0; p <= h; ++p) {
                const Int c = binomial(h, p);
                next[h] += c * c * u[h - p];
            }
        u = std::move(next);
    }
    Int total = 0;
    for (unsigned h = 0; h <= hmax; ++h) {
        const unsigned n0 = n - 2 * h;
        // n! / (n0! prod p_i!^2) = C(n, n0) C(2h, h) (h! / prod p_i!)^2
        total += binomial(n, n0) * ipow(Int(st.a), n0) * binomial(2 * h, h) * u[h];
    }
    return total;
}

inline constexpr unsigned kMaxBruteforceLength = 6;
inline constexpr double kMaxBruteforceTuples = 1e7;

namespace detail {

inline void require_enumerable(const EigenStructure& st, unsigned n) {
    if (n > kMaxBruteforceLength) fail(ErrorKind::TooLarge, "tuple length above 6");
    double tuples = 1;
    for (unsigned i = 0; i < n; ++i) tuples *= static_cast<double>(st.dimension());
    if (tuples > kMaxBruteforceTuples) fail(ErrorKind::TooLarge, "(a + 2k)^n exceeds 1e7");
}

/// Calls fn(symbols) for every n-tuple over the slot alphabet: 0 for the
/// eigenvalue-1 block, +i and -i (i = 1..k) for beta_i and beta_i^-1.
template <class Fn>
void for_each_slot_tuple(const EigenStructure& st, unsigned n, Fn&& fn) {
    std::vector<int> alphabet{0};
    for (int i = 1; i <= static_cast<int>(st.k); ++i) {
        alphabet.push_back(i);
        alphabet.push_back(-i);
    }
    std::vector<std::size_t> idx(n, 0);
    std::vector<int> sym(n, 0);
    while (true) {
        for (unsigned j = 0; j < n; ++j) sym[j] = alphabet[idx[j]];
        fn(static_cast<const std::vector<int>&>(sym));
        unsigned j = 0;
        while (j < n && ++idx[j] == alphabet.size()) idx[j++] = 0;
        if (j == n) break;
    }
}

inline bool zero_sum(const std::vector<int>& sym, unsigned k) {
    std::vector<int> acc(k + 1, 0);
    for (int s : sym) {
        if (s > 0) ++acc[static_cast<unsigned>(s)];
        else if (s < 0) --acc[static_cast<unsigned>(-s)];
    }
    for (unsigned i = 1; i <= k; ++i)
        if (acc[i] != 0) return false;
    return true;
}

inline Int tuple_weight(const std::vector<int>& sym, unsigned a) {
    unsigned zeros = 0;
    for (int s : sym) zeros += s == 0 ? 1U : 0U;
    return ipow(Int(a), zeros);
}

} // namespace detail

/// inv_dim by direct enumeration of slot tuples; independent oracle.
inline Int inv_dim_bruteforce(const EigenStructure& st, unsigned n) {
    detail::require_enumerable(st, n);
    Int count = 0;
    detail::for_each_slot_tuple(st, n, [&](const std::vector<int>& sym) {
        if (detail::zero_sum(sym, st.k)) count += detail::tuple_weight(sym, st.a);
    });
    return count;
}

namespace detail {

/// Splits a tuple into index pairs {v, -v} or {0, 0}, plus one leftover 0
/// slot when the length is odd. Empty when no such split exists.
inline std::optional<std::vector<std::pair<int, int>>> pair_up(const std::vector<int>& sym) {
    std::vector<bool> used(sym.size(), false);
    std::vector<std::pair<int, int>> out;
    int singleton = -1;
    for (std::size_t i = 0; i < sym.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        std::size_t j = i + 1;
        while (j < sym.size() && (used[j] || sym[j] != -sym[i])) ++j;
        if (j == sym.size()) {
            if (sym[i] != 0 || singleton >= 0) return std::nullopt;
            singleton = static_cast<int>(i);
            continue;
        }
        used[j] = true;
        out.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
    if ((sym.size() % 2 == 1) != (singleton >= 0)) return std::nullopt;
    return out;
}

} // namespace detail

/// Every zero-sum slot tuple of length n splits into zero-sum pairs (and a
/// single 0 slot when n is odd), and the split tuples account for exactly
/// inv_dim(st, n) invariants.
inline bool pair_decomposition_check(const EigenStructure& st, unsigned n) {
    detail::require_enumerable(st, n);
    bool ok = true;
    Int decomposed = 0;
    detail::for_each_slot_tuple(st, n, [&](const std::vector<int>& sym) {
        if (!detail::zero_sum(sym, st.k)) return;
        const Int w = detail::tuple_weight(sym, st.a);
        if (w == 0) return;
        const auto pairs = detail::pair_up(sym);
        if (!pairs) {
            ok = false;
            return;
        }
        for (const auto& [i, j] : *pairs)
            if (sym[static_cast<std::size_t>(i)] + sym[static_cast<std::size_t>(j)] != 0) ok = false;
        decomposed += w;
    });
    return ok && decomposed == inv_dim(st, n);
}

} // namespace weilk3
