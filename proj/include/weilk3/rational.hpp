#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "weilk3/error.hpp"

namespace weilk3 {

using Int = mpz_class;
/// mpq_class keeps itself canonical (lowest terms, positive denominator)
/// as long as every constructor path calls canonicalize().
using Rat = mpq_class;

/// p-adic valuation; std::nullopt stands for +infinity (the value of 0).
using Valuation = std::optional<long>;

inline Rat make_rat(const Int& num, const Int& den = 1) {
    if (den == 0) fail(ErrorKind::DivisionByZero, "zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "n" or "n/d"; throws InvalidArgument on malformed text.
inline Rat parse_rat(const std::string& text) {
    Rat r;
    if (text.empty() || r.set_str(text, 10) != 0)
        fail(ErrorKind::InvalidArgument, "malformed rational '" + text + "'");
    if (r.get_den() == 0)
        fail(ErrorKind::DivisionByZero, "zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int ipow(const Int& base, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline Rat rpow(const Rat& base, unsigned long e) {
    Rat out(ipow(base.get_num(), e), ipow(base.get_den(), e));
    return out;
}

inline bool is_prime(const Int& p) {
    return p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 40) > 0;
}

/// Multiplicity of p in the nonzero integer n.
inline long int_valuation(const Int& n, const Int& p) {
    if (n == 0) return 0;
    Int rest = n;
    return static_cast<long>(
        mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

inline Valuation val_p(const Rat& x, const Int& p) {
    if (!is_prime(p)) fail(ErrorKind::NotPrime, p.get_str() + " is not prime");
    if (x == 0) return std::nullopt;
    return int_valuation(x.get_num(), p) - int_valuation(x.get_den(), p);
}

} // namespace weilk3
