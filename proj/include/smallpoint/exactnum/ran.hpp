#pragma once

#include "smallpoint/exactnum/dyadic.hpp"
#include "smallpoint/exactnum/upoly.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace smallpoint {

/*
 * Exact real algebraic number: an irreducible primitive integer minimal
 * polynomial and a dyadic interval holding exactly one of its real roots.
 * Rationals are kept in closed form. The isolating interval lives in a shared
 * cache that only ever shrinks, so copies can be refined from any thread.
 */
class RealAlgebraicNumber {
public:
    RealAlgebraicNumber() : q_(Rat(0)) {}
    RealAlgebraicNumber(long v) : q_(Rat(v)) {}
    RealAlgebraicNumber(const Int& v) : q_(Rat(v)) {}
    RealAlgebraicNumber(const Rat& v) : q_(v) {}

    /* minpoly must be irreducible of degree >= 2 with exactly one root in iso; both are checked */
    static RealAlgebraicNumber from_isolator(const ZPoly& minpoly, const DyadicInterval& iso);

    bool is_rational() const { return q_.has_value(); }
    const Rat& rational() const;
    /* primitive, positive leading coefficient; den*x - num for rationals */
    ZPoly minpoly() const;
    int degree() const { return is_rational() ? 1 : ::smallpoint::degree(minpoly_); }
    bool is_zero() const { return is_rational() && sgn(*q_) == 0; }

    /* current cached isolating interval */
    DyadicInterval isolator() const;
    /* interval of width <= eps containing the number (shrinks the cache) */
    DyadicInterval refine(const Rat& eps) const;
    int sign() const;
    /* exact three-way comparison */
    int compare(const RealAlgebraicNumber& o) const;
    bool equals(const RealAlgebraicNumber& o) const;

    std::string to_string() const;
    /* decimal approximation truncated to `digits` fractional digits */
    std::string to_decimal(int digits) const;

    friend RealAlgebraicNumber operator+(const RealAlgebraicNumber& a, const RealAlgebraicNumber& b);
    friend RealAlgebraicNumber operator-(const RealAlgebraicNumber& a, const RealAlgebraicNumber& b);
    friend RealAlgebraicNumber operator*(const RealAlgebraicNumber& a, const RealAlgebraicNumber& b);
    friend RealAlgebraicNumber operator/(const RealAlgebraicNumber& a, const RealAlgebraicNumber& b);
    friend RealAlgebraicNumber operator-(const RealAlgebraicNumber& a);
    friend bool operator==(const RealAlgebraicNumber& a, const RealAlgebraicNumber& b) { return a.equals(b); }
    friend bool operator!=(const RealAlgebraicNumber& a, const RealAlgebraicNumber& b) { return !a.equals(b); }
    friend bool operator<(const RealAlgebraicNumber& a, const RealAlgebraicNumber& b) { return a.compare(b) < 0; }
    friend bool operator>(const RealAlgebraicNumber& a, const RealAlgebraicNumber& b) { return a.compare(b) > 0; }
    friend bool operator<=(const RealAlgebraicNumber& a, const RealAlgebraicNumber& b) { return a.compare(b) <= 0; }
    friend bool operator>=(const RealAlgebraicNumber& a, const RealAlgebraicNumber& b) { return a.compare(b) >= 0; }

private:
    struct Cache {
        std::mutex mu;
        DyadicInterval iso;
        int sign_lo = 0; // sign of the minimal polynomial at iso.lo()
    };

    std::optional<Rat> q_;
    ZPoly minpoly_;
    std::shared_ptr<Cache> cache_;
};

using RAN = RealAlgebraicNumber;

inline bool is_zero_coef(const RAN& a) { return a.is_zero(); }

enum class ArithOp { add, sub, mul, div };

/* all distinct real roots in increasing order, with pairwise disjoint isolators */
std::vector<RAN> isolate_real_roots(const ZPoly& p);
std::vector<RAN> isolate_real_roots(const QPoly& p);
RAN ran_arith(const RAN& a, const RAN& b, ArithOp op);
int ran_sign(const RAN& a);
DyadicInterval refine(const RAN& a, const Rat& eps);

/*
 * The unique root, among the real roots of the irreducible `factors`, lying in
 * enclose(eps) once eps is small enough. enclose must return certified
 * enclosures of one fixed real number that shrink as eps shrinks.
 */
RAN select_root(const std::vector<ZPoly>& factors, const std::function<DyadicInterval(const Rat&)>& enclose);

} // namespace smallpoint
