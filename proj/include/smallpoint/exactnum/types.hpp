#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace smallpoint {

using Int = mpz_class;
using Rat = mpq_class;

/* Raised for malformed input or violated preconditions. */
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/* Raised when an internal consistency check fails; always a bug. */
struct invariant_error : std::logic_error {
    using std::logic_error::logic_error;
};

/* Raised when a search or refinement exceeds its configured budget. */
struct budget_exhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void check_invariant(bool ok, const char* what) {
    if (!ok) throw invariant_error(what);
}

inline int sgn(const Int& a) { return mpz_sgn(a.get_mpz_t()); }
inline int sgn(const Rat& a) { return mpq_sgn(a.get_mpq_t()); }

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }
inline Rat abs_rat(const Rat& a) { return a < 0 ? Rat(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm_int(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int pow_int(const Int& a, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

inline Rat pow_rat(const Rat& a, unsigned long e) {
    Rat r(pow_int(a.get_num(), e), pow_int(a.get_den(), e));
    r.canonicalize();
    return r;
}

inline Int floor_rat(const Rat& a) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    return r;
}

inline Int ceil_rat(const Rat& a) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    return r;
}

/* Nearest integer, ties rounded up. */
inline Int round_rat(const Rat& a) { return floor_rat(a + Rat(1, 2)); }

/* Exact quotient; throws if b does not divide a. */
inline Int exact_div(const Int& a, const Int& b) {
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw invariant_error("exact_div: inexact division");
    Int r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/* floor(sqrt(a)) for a >= 0. */
inline Int isqrt(const Int& a) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline bool is_square(const Int& a) {
    return a >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

inline std::size_t bit_length(const Int& a) {
    return a == 0 ? 0 : mpz_sizeinbase(a.get_mpz_t(), 2);
}

inline std::string to_string(const Int& a) { return a.get_str(); }

inline std::string to_string(const Rat& a) {
    if (a.get_den() == 1) return a.get_num().get_str();
    return a.get_num().get_str() + "/" + a.get_den().get_str();
}

/* Parse "p" or "p/q"; throws input_error. */
inline Rat parse_rational(const std::string& s) {
    Rat r;
    if (s.empty() || r.set_str(s, 10) != 0 || r.get_den() == 0)
        throw input_error("not a rational literal: '" + s + "'");
    r.canonicalize();
    return r;
}

/* Decimal rendering with `digits` significant fractional digits (truncated toward zero). */
std::string to_decimal(const Rat& a, int digits);

} // namespace smallpoint
