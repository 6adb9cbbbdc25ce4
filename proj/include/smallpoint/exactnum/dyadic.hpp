#pragma once

#include "smallpoint/exactnum/types.hpp"

#include <algorithm>

namespace smallpoint {

/* true iff the denominator of q is a power of two */
inline bool is_dyadic(const Rat& q) {
    const Int& d = q.get_den();
    return mpz_popcount(d.get_mpz_t()) == 1;
}

/* Largest multiple of 2^-bits that is <= q (down) or >= q (up). */
inline Rat round_dyadic(const Rat& q, long bits, bool up) {
    if (is_dyadic(q) && mpz_sizeinbase(q.get_den_mpz_t(), 2) <= std::size_t(bits + 1)) return q;
    Int scale = 1;
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), bits);
    Rat s = q * Rat(scale);
    Int k = up ? ceil_rat(s) : floor_rat(s);
    Rat r(k, scale);
    r.canonicalize();
    return r;
}

/*
 * Closed interval with dyadic endpoints. Every operation rounds lo down and hi
 * up to `prec` fractional bits, so results always enclose the exact value.
 */
class DyadicInterval {
public:
    static constexpr long default_prec = 256;

    DyadicInterval() : lo_(0), hi_(0) {}
    DyadicInterval(int v) : lo_(v), hi_(v) {}
    DyadicInterval(long v) : lo_(v), hi_(v) {}
    DyadicInterval(const Int& v) : lo_(v), hi_(v) {}
    explicit DyadicInterval(const Rat& v, long prec = default_prec)
        : lo_(round_dyadic(v, prec, false)), hi_(round_dyadic(v, prec, true)) {}
    DyadicInterval(const Rat& lo, const Rat& hi, long prec = default_prec)
        : lo_(round_dyadic(lo, prec, false)), hi_(round_dyadic(hi, prec, true)) {
        if (lo_ > hi_) throw invariant_error("DyadicInterval: lo > hi");
    }

    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    Rat width() const { return hi_ - lo_; }
    Rat mid() const { return (lo_ + hi_) / 2; }
    bool contains(const Rat& x) const { return lo_ <= x && x <= hi_; }
    bool contains_zero() const { return lo_ <= 0 && 0 <= hi_; }
    bool is_point() const { return lo_ == hi_; }
    bool subset_of(const DyadicInterval& o) const { return o.lo_ <= lo_ && hi_ <= o.hi_; }
    bool overlaps(const DyadicInterval& o) const { return !(hi_ < o.lo_ || o.hi_ < lo_); }
    /* -1, +1 if the interval is strictly one-signed, 0 otherwise */
    int sign() const { return lo_ > 0 ? 1 : (hi_ < 0 ? -1 : 0); }
    Rat mag() const { return std::max(abs_rat(lo_), abs_rat(hi_)); }

    static DyadicInterval exact(const Rat& lo, const Rat& hi) {
        DyadicInterval r;
        r.lo_ = lo;
        r.hi_ = hi;
        return r;
    }

    friend DyadicInterval operator+(const DyadicInterval& a, const DyadicInterval& b) {
        return exact(a.lo_ + b.lo_, a.hi_ + b.hi_);
    }
    friend DyadicInterval operator-(const DyadicInterval& a, const DyadicInterval& b) {
        return exact(a.lo_ - b.hi_, a.hi_ - b.lo_);
    }
    friend DyadicInterval operator-(const DyadicInterval& a) { return exact(-a.hi_, -a.lo_); }
    friend DyadicInterval operator*(const DyadicInterval& a, const DyadicInterval& b) {
        Rat p[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
        Rat lo = *std::min_element(p, p + 4), hi = *std::max_element(p, p + 4);
        return DyadicInterval(lo, hi, std::max<long>(default_prec, precision_of(lo, hi)));
    }
    friend DyadicInterval operator/(const DyadicInterval& a, const DyadicInterval& b) {
        if (b.contains_zero()) throw invariant_error("DyadicInterval: division by interval containing zero");
        Rat p[4] = {a.lo_ / b.lo_, a.lo_ / b.hi_, a.hi_ / b.lo_, a.hi_ / b.hi_};
        Rat lo = *std::min_element(p, p + 4), hi = *std::max_element(p, p + 4);
        long prec = std::max<long>(default_prec, 2 * precision_of(a.lo_, b.lo_));
        return DyadicInterval(lo, hi, prec);
    }
    /* hull of two intervals */
    static DyadicInterval hull(const DyadicInterval& a, const DyadicInterval& b) {
        return exact(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
    }

private:
    /* fractional bits needed so that rounding stays below the operands' resolution */
    static long precision_of(const Rat& a, const Rat& b) {
        long bits = long(std::max(mpz_sizeinbase(a.get_den_mpz_t(), 2), mpz_sizeinbase(b.get_den_mpz_t(), 2)));
        return bits + 64;
    }

    Rat lo_, hi_;
};

} // namespace smallpoint
