#pragma once

// Floating-point intervals with directed rounding on MPFR. Every operation
// rounds the lower end toward -inf and the upper end toward +inf.

#include "smallpoint/exactnum/types.hpp"

#include <mpfr.h>

namespace smallpoint {

class Interval {
public:
    explicit Interval(mpfr_prec_t prec = 128);
    Interval(const Rat& q, mpfr_prec_t prec);
    Interval(const Rat& lo, const Rat& hi, mpfr_prec_t prec);
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(const Interval& o);
    Interval& operator=(Interval&& o) noexcept;
    ~Interval();

    mpfr_prec_t prec() const { return prec_; }
    Rat lo_rat() const;
    Rat hi_rat() const;
    double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
    bool positive() const { return mpfr_sgn(lo_) > 0; }
    bool negative() const { return mpfr_sgn(hi_) < 0; }
    /* hi - lo rounded up, as a double */
    double width_d() const;
    /* (hi - lo) / |lo| rounded up; infinity when lo straddles zero */
    double rel_width_d() const;

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a);
    friend Interval operator*(const Interval& a, const Interval& b);
    friend Interval operator/(const Interval& a, const Interval& b);

    Interval sqr() const;
    Interval abs() const;
    Interval sqrt() const;  // requires lo >= 0 (clamped)
    Interval log() const;   // requires lo > 0
    Interval exp() const;
    /* x^(1/k) for x >= 0 */
    Interval root(unsigned long k) const;
    Interval mul_2exp(long e) const;
    /* point interval at the (rounded) centre */
    Interval midpoint() const;
    static Interval max(const Interval& a, const Interval& b);
    static Interval hull(const Interval& a, const Interval& b);
    /* intersection; caller guarantees overlap */
    static Interval intersect(const Interval& a, const Interval& b);
    /* exponent e with |x| < 2^e for the magnitude of the interval (0 if zero) */
    long mag_exponent() const;

    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }
    mpfr_ptr lo_mut() { return lo_; }
    mpfr_ptr hi_mut() { return hi_; }

private:
    mpfr_prec_t prec_;
    mpfr_t lo_, hi_;
};

/* Rectangular complex interval. */
struct CInterval {
    Interval re, im;
    explicit CInterval(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
    CInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}
    friend CInterval operator+(const CInterval& a, const CInterval& b) { return {a.re + b.re, a.im + b.im}; }
    friend CInterval operator-(const CInterval& a, const CInterval& b) { return {a.re - b.re, a.im - b.im}; }
    friend CInterval operator*(const CInterval& a, const CInterval& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend CInterval operator/(const CInterval& a, const CInterval& b) {
        Interval den = b.re.sqr() + b.im.sqr();
        return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
    }
    Interval abs2() const { return re.sqr() + im.sqr(); }
    Interval abs() const { return abs2().sqrt(); }
};

} // namespace smallpoint
