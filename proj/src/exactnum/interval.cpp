#include "smallpoint/exactnum/interval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace smallpoint {

namespace {

// Graeffe iterates need exponents far beyond the default range; the range is per thread
void widen_exponent_range() {
    thread_local bool done = false;
    if (done) return;
    mpfr_set_emin(mpfr_get_emin_min());
    mpfr_set_emax(mpfr_get_emax_max());
    done = true;
}

} // namespace

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
    widen_exponent_range();
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Rat& q, mpfr_prec_t prec) : prec_(prec) {
    widen_exponent_range();
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Rat& lo, const Rat& hi, mpfr_prec_t prec) : prec_(prec) {
    widen_exponent_range();
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_q(lo_, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, hi.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
    if (this != &o) {
        prec_ = o.prec_;
        mpfr_set_prec(lo_, prec_);
        mpfr_set_prec(hi_, prec_);
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
    std::swap(prec_, o.prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Rat Interval::lo_rat() const {
    Rat r;
    mpfr_get_q(r.get_mpq_t(), lo_);
    return r;
}

Rat Interval::hi_rat() const {
    Rat r;
    mpfr_get_q(r.get_mpq_t(), hi_);
    return r;
}

double Interval::width_d() const {
    mpfr_t w;
    mpfr_init2(w, 64);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

double Interval::rel_width_d() const {
    if (contains_zero()) return std::numeric_limits<double>::infinity();
    mpfr_t w, m;
    mpfr_init2(w, 64);
    mpfr_init2(m, 64);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    if (mpfr_sgn(lo_) > 0) mpfr_set(m, lo_, MPFR_RNDD);
    else mpfr_neg(m, hi_, MPFR_RNDD);
    mpfr_div(w, w, m, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    mpfr_clear(m);
    return d;
}

static mpfr_prec_t pmax(const Interval& a, const Interval& b) { return std::max(a.prec(), b.prec()); }

Interval operator+(const Interval& a, const Interval& b) {
    Interval r(pmax(a, b));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& a, const Interval& b) {
    Interval r(pmax(a, b));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& a) {
    Interval r(a.prec_);
    mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
    return r;
}

Interval operator*(const Interval& a, const Interval& b) {
    mpfr_prec_t p = pmax(a, b);
    Interval r(p);
    mpfr_t t;
    mpfr_init2(t, p);
    mpfr_srcptr al[2] = {a.lo_, a.hi_}, bl[2] = {b.lo_, b.hi_};
    bool first = true;
    for (auto x : al)
        for (auto y : bl) {
            mpfr_mul(t, x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_mul(t, x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return r;
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw invariant_error("Interval: division by an interval containing zero");
    mpfr_prec_t p = pmax(a, b);
    Interval r(p);
    mpfr_t t;
    mpfr_init2(t, p);
    mpfr_srcptr al[2] = {a.lo_, a.hi_}, bl[2] = {b.lo_, b.hi_};
    bool first = true;
    for (auto x : al)
        for (auto y : bl) {
            mpfr_div(t, x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_div(t, x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return r;
}

Interval Interval::abs() const {
    if (mpfr_sgn(lo_) >= 0) return *this;
    if (mpfr_sgn(hi_) <= 0) return -*this;
    Interval r(prec_);
    mpfr_set_zero(r.lo_, 1);
    if (mpfr_cmpabs(lo_, hi_) > 0) mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    else mpfr_set(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::sqr() const {
    Interval a = abs();
    Interval r(prec_);
    mpfr_sqr(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_sqr(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::sqrt() const {
    Interval r(prec_);
    if (mpfr_sgn(lo_) <= 0) mpfr_set_zero(r.lo_, 1);
    else mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    if (mpfr_sgn(hi_) < 0) throw invariant_error("Interval: sqrt of a negative interval");
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::log() const {
    if (mpfr_sgn(lo_) <= 0) throw invariant_error("Interval: log of a non-positive interval");
    Interval r(prec_);
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::exp() const {
    Interval r(prec_);
    mpfr_exp(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::root(unsigned long k) const {
    Interval r(prec_);
    if (mpfr_sgn(lo_) <= 0) mpfr_set_zero(r.lo_, 1);
    else mpfr_rootn_ui(r.lo_, lo_, k, MPFR_RNDD);
    if (mpfr_sgn(hi_) < 0) throw invariant_error("Interval: root of a negative interval");
    mpfr_rootn_ui(r.hi_, hi_, k, MPFR_RNDU);
    return r;
}

Interval Interval::mul_2exp(long e) const {
    Interval r(prec_);
    mpfr_mul_2si(r.lo_, lo_, e, MPFR_RNDD);
    mpfr_mul_2si(r.hi_, hi_, e, MPFR_RNDU);
    return r;
}

Interval Interval::max(const Interval& a, const Interval& b) {
    Interval r(pmax(a, b));
    mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
    Interval r(pmax(a, b));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::intersect(const Interval& a, const Interval& b) {
    Interval r(pmax(a, b));
    mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    if (mpfr_greater_p(r.lo_, r.hi_)) throw invariant_error("Interval: empty intersection of enclosures");
    return r;
}

long Interval::mag_exponent() const {
    Interval a = abs();
    if (mpfr_zero_p(a.hi_)) return 0;
    return mpfr_get_exp(a.hi_);
}

Interval Interval::midpoint() const {
    Interval r(prec_);
    mpfr_add(r.lo_, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(r.lo_, r.lo_, 1, MPFR_RNDN);
    mpfr_set(r.hi_, r.lo_, MPFR_RNDN);
    return r;
}

} // namespace smallpoint
