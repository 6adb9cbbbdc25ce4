#include "smallpoint/exactnum/upoly.hpp"

#include <sstream>

namespace smallpoint {

std::string to_decimal(const Rat& a, int digits) {
    Int scale = pow_int(Int(10), digits);
    Rat x = abs_rat(a);
    Int whole = floor_rat(x);
    Int frac = floor_rat((x - Rat(whole)) * Rat(scale));
    std::string fs = frac.get_str();
    if (int(fs.size()) < digits) fs.insert(0, std::size_t(digits - fs.size()), '0');
    std::string s = (a < 0 && (whole != 0 || frac != 0)) ? "-" : "";
    s += whole.get_str();
    if (digits > 0) s += "." + fs;
    return s;
}

QPoly to_qpoly(const ZPoly& p) {
    QPoly r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = Rat(p[i]);
    return r;
}

Int content(const ZPoly& p) {
    Int g = 0;
    for (const auto& c : p) g = gcd_int(g, c);
    return g;
}

ZPoly primitive_part(const ZPoly& p) {
    if (p.empty()) return p;
    Int g = content(p);
    if (lead(p) < 0) g = -g;
    ZPoly r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = exact_div(p[i], g);
    return r;
}

ZPoly to_zpoly_primitive(const QPoly& p) {
    if (p.empty()) return {};
    Int l = 1;
    for (const auto& c : p) l = lcm_int(l, c.get_den());
    ZPoly r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = Rat(p[i] * Rat(l)).get_num();
    trim(r);
    return primitive_part(r);
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) { return pmul(a, b); }

bool zdivides(const ZPoly& b, const ZPoly& a, ZPoly* quotient) {
    if (b.empty()) throw input_error("polynomial division by zero");
    if (a.empty()) { if (quotient) quotient->clear(); return true; }
    if (a.size() < b.size()) return false;
    // cheap constant-term filter
    if (b[0] != 0 && a[0] != 0 && !mpz_divisible_p(a[0].get_mpz_t(), b[0].get_mpz_t())) return false;
    ZPoly r = a, q(a.size() - b.size() + 1);
    const Int& lb = lead(b);
    for (int k = int(r.size()) - int(b.size()); k >= 0; --k) {
        Int& top = r[k + b.size() - 1];
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return false;
        Int c;
        mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        q[k] = c;
        if (c != 0)
            for (std::size_t j = 0; j < b.size(); ++j) r[k + j] -= c * b[j];
    }
    for (std::size_t i = 0; i + 1 < b.size(); ++i)
        if (r[i] != 0) return false;
    trim(q);
    if (quotient) *quotient = std::move(q);
    return true;
}

ZPoly zdiv_exact(const ZPoly& a, const ZPoly& b) {
    ZPoly q;
    if (!zdivides(b, a, &q)) throw invariant_error("zdiv_exact: inexact polynomial division");
    return q;
}

ZPoly zgcd(const ZPoly& a, const ZPoly& b) {
    if (a.empty()) return primitive_part(b);
    if (b.empty()) return primitive_part(a);
    return to_zpoly_primitive(pgcd(to_qpoly(a), to_qpoly(b)));
}

ZPoly zderiv(const ZPoly& p) { return pderiv(p); }

ZPoly zsquarefree(const ZPoly& p) {
    if (p.size() <= 2) return primitive_part(p);
    ZPoly g = zgcd(p, zderiv(p));
    return primitive_part(zdiv_exact(primitive_part(p), g));
}

Rat eval_at(const ZPoly& p, const Rat& x) {
    // Horner on the numerator to avoid repeated canonicalisation
    const Int& n = x.get_num();
    const Int& d = x.get_den();
    Int acc = 0, dp = 1;
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = acc * n + p[i] * dp;
        dp *= d;
    }
    // acc = d^deg * p(x) * ... ; recompute the exact denominator
    if (p.empty()) return Rat(0);
    Rat r(acc, pow_int(d, p.size() - 1));
    r.canonicalize();
    return r;
}

int sign_at(const ZPoly& p, const Rat& x) {
    if (p.empty()) return 0;
    const Int& n = x.get_num();
    const Int& d = x.get_den();
    // sum p_i n^i d^{deg-i}; denominator positive so the sign is that of the sum
    Int acc = 0, dp = 1;
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = acc * n + p[i] * dp;
        dp *= d;
    }
    return sgn(acc);
}

std::vector<ZPoly> sturm_sequence(const ZPoly& p) {
    std::vector<ZPoly> seq;
    if (p.empty()) return seq;
    seq.push_back(p);
    if (p.size() == 1) return seq;
    seq.push_back(zderiv(p));
    while (true) {
        const ZPoly& a = seq[seq.size() - 2];
        const ZPoly& b = seq.back();
        if (b.size() <= 1) break;
        // pseudo-remainder with positive multiplier keeps the signs of -rem(a, b)
        ZPoly r = a;
        Int lb = lead(b);
        Int mult = lb < 0 ? Int(-lb) : lb;
        while (r.size() >= b.size()) {
            Int c = lead(r);
            std::size_t shift = r.size() - b.size();
            for (auto& x : r) x *= mult;
            Int f = c * (lb < 0 ? Int(-1) : Int(1));
            for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= f * b[j];
            trim(r);
        }
        if (r.empty()) break;
        Int g = content(r);
        for (auto& x : r) x = -exact_div(x, g);
        seq.push_back(r);
    }
    return seq;
}

static int variations_at(const std::vector<ZPoly>& seq, const Rat& x) {
    int v = 0, last = 0;
    for (const auto& q : seq) {
        int s = sign_at(q, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int sturm_count(const std::vector<ZPoly>& seq, const Rat& a, const Rat& b) {
    if (seq.empty()) return 0;
    return variations_at(seq, a) - variations_at(seq, b);
}

Rat root_bound(const ZPoly& p) {
    // Cauchy: 1 + max |p_i / p_d|, rounded up to a power of two
    if (p.size() <= 1) return Rat(1);
    Rat m = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        Rat q = abs_rat(Rat(p[i], abs_int(lead(p))));
        if (q > m) m = q;
    }
    m += 1;
    Rat b = 1;
    while (b <= m) b *= 2;
    return b;
}

template <class F> static std::string render(const UPoly<F>& p, const std::string& var) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = p.size(); i-- > 0;) {
        if (p[i] == 0) continue;
        F c = p[i];
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) { if (neg) os << "-"; }
        else os << (neg ? " - " : " + ");
        first = false;
        bool one = (c == 1);
        if (!one || i == 0) os << to_string(c);
        if (i > 0) {
            if (!one) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::string poly_to_string(const ZPoly& p, const std::string& var) { return render(p, var); }
std::string poly_to_string(const QPoly& p, const std::string& var) { return render(p, var); }

} // namespace smallpoint
