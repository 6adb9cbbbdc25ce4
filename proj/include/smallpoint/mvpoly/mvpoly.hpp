#pragma once

// Sparse multivariate polynomials keyed by exponent vectors. Terms are kept
// in graded lexicographic order with x1 > x2 > ... > xn; printing lists the
// largest monomial first.

#include "smallpoint/exactnum/linalg.hpp"
#include "smallpoint/exactnum/ran.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace smallpoint {

using Monomial = std::vector<unsigned>;

inline unsigned total_degree(const Monomial& m) {
    unsigned s = 0;
    for (auto e : m) s += e;
    return s;
}

struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        unsigned da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        // among equal degrees, a larger exponent of an earlier variable is larger
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

template <class C> class SparsePoly {
public:
    using Terms = std::map<Monomial, C, GrlexLess>;

    explicit SparsePoly(std::size_t nvars = 1) : n_(nvars) {
        if (nvars == 0) throw input_error("polynomial needs at least one variable");
    }

    static SparsePoly constant(std::size_t nvars, const C& c) {
        SparsePoly p(nvars);
        p.add_term(Monomial(nvars, 0), c);
        return p;
    }
    /* x_i, 0-based */
    static SparsePoly variable(std::size_t nvars, std::size_t i) {
        SparsePoly p(nvars);
        Monomial m(nvars, 0);
        m.at(i) = 1;
        p.add_term(m, C(1));
        return p;
    }

    std::size_t nvars() const { return n_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && total_degree(t_.begin()->first) == 0); }
    /* total degree; -1 for the zero polynomial */
    int degree() const { return t_.empty() ? -1 : int(total_degree(t_.rbegin()->first)); }
    /* degree in x_i (0-based); -1 for zero */
    int degree_in(std::size_t i) const {
        int d = -1;
        for (const auto& [m, c] : t_) d = std::max(d, int(m[i]));
        return d;
    }
    bool involves(std::size_t i) const { return degree_in(i) > 0; }
    C coefficient(const Monomial& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? C(0) : it->second;
    }
    C constant_term() const { return coefficient(Monomial(n_, 0)); }

    void add_term(const Monomial& m, const C& c) {
        if (m.size() != n_) throw input_error("monomial has the wrong number of variables");
        if (is_zero_coef(c)) return;
        auto it = t_.find(m);
        if (it == t_.end()) {
            t_.emplace(m, c);
            return;
        }
        it->second = it->second + c;
        if (is_zero_coef(it->second)) t_.erase(it);
    }

    friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
        check_same(a, b);
        SparsePoly r = a;
        for (const auto& [m, c] : b.t_) r.add_term(m, c);
        return r;
    }
    friend SparsePoly operator-(const SparsePoly& a) {
        SparsePoly r(a.n_);
        for (const auto& [m, c] : a.t_) r.t_.emplace(m, C(0) - c);
        return r;
    }
    friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return a + (-b); }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        check_same(a, b);
        SparsePoly r(a.n_);
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_) {
                Monomial m(a.n_);
                for (std::size_t i = 0; i < a.n_; ++i) m[i] = ma[i] + mb[i];
                r.add_term(m, ca * cb);
            }
        return r;
    }
    friend SparsePoly operator*(const C& s, const SparsePoly& a) {
        SparsePoly r(a.n_);
        if (is_zero_coef(s)) return r;
        for (const auto& [m, c] : a.t_) r.add_term(m, s * c);
        return r;
    }
    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        if (a.n_ != b.n_ || a.t_.size() != b.t_.size()) return false;
        auto i = a.t_.begin();
        auto j = b.t_.begin();
        for (; i != a.t_.end(); ++i, ++j)
            if (i->first != j->first || !(i->second == j->second)) return false;
        return true;
    }
    friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

    SparsePoly pow(unsigned e) const {
        SparsePoly r = constant(n_, C(1)), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            e >>= 1;
            if (e) b = b * b;
        }
        return r;
    }

private:
    static void check_same(const SparsePoly& a, const SparsePoly& b) {
        if (a.n_ != b.n_) throw input_error("polynomials in different numbers of variables");
    }
    std::size_t n_;
    Terms t_;
};

using MultivariatePolynomial = SparsePoly<RAN>;
using QPolyN = SparsePoly<Rat>;
using IntegerMatrix = ZMat;

std::string coef_to_string(const Rat& c);
std::string coef_to_string(const RAN& c);
inline bool coef_negative(const Rat& c) { return c < 0; }
inline bool coef_negative(const RAN& c) { return c.is_rational() && c.rational() < 0; }
inline bool coef_is_one(const Rat& c) { return c == 1; }
inline bool coef_is_one(const RAN& c) { return c.is_rational() && c.rational() == 1; }

/* e.g. "x1*x2 + x2^2 - 1"; variables x1..xn */
template <class C> std::string to_string(const SparsePoly<C>& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const Monomial& m = it->first;
        C c = it->second;
        bool neg = coef_negative(c);
        if (neg) c = C(0) - c;
        if (first) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        first = false;
        bool is_const = total_degree(m) == 0;
        bool one = coef_is_one(c);
        if (!one || is_const) os << coef_to_string(c);
        bool need_star = !one || is_const;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (need_star) os << "*";
            os << "x" << (i + 1);
            if (m[i] > 1) os << "^" << m[i];
            need_star = true;
        }
    }
    return os.str();
}

template <class To, class From> To convert_coef(const From& c) { return To(c); }

/* value at a point, any exact type X constructible from the coefficients */
template <class X, class C> X evaluate_at(const SparsePoly<C>& f, const std::vector<X>& p) {
    if (p.size() != f.nvars()) throw input_error("evaluate: point dimension does not match the variable count");
    std::vector<std::vector<X>> pw(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        int d = f.degree_in(i);
        pw[i].push_back(X(1));
        for (int k = 1; k <= d; ++k) pw[i].push_back(pw[i].back() * p[i]);
    }
    X acc(0);
    for (const auto& [m, c] : f.terms()) {
        X t = convert_coef<X>(c);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) t = t * pw[i][m[i]];
        acc = acc + t;
    }
    return acc;
}

/* f with x_i replaced by the constant v (variable count unchanged) */
template <class C> SparsePoly<C> substitute_value(const SparsePoly<C>& f, std::size_t i, const C& v) {
    SparsePoly<C> r(f.nvars());
    std::vector<C> pw{C(1)};
    for (const auto& [m, c] : f.terms()) {
        while (pw.size() <= m[i]) pw.push_back(pw.back() * v);
        Monomial mm = m;
        mm[i] = 0;
        r.add_term(mm, c * pw[m[i]]);
    }
    return r;
}

/* coefficients of f as a polynomial in x_i, each free of x_i */
template <class C> std::vector<SparsePoly<C>> coefficients_in(const SparsePoly<C>& f, std::size_t i) {
    std::vector<SparsePoly<C>> r(std::size_t(std::max(f.degree_in(i), 0) + 1), SparsePoly<C>(f.nvars()));
    if (f.is_zero()) return {};
    for (const auto& [m, c] : f.terms()) {
        Monomial mm = m;
        mm[i] = 0;
        r[m[i]].add_term(mm, c);
    }
    return r;
}

/* univariate polynomial in the last variable after fixing the first n-1 */
template <class X, class C> UPoly<X> specialize_last(const SparsePoly<C>& f, const std::vector<X>& base) {
    std::size_t n = f.nvars();
    if (base.size() + 1 != n) throw input_error("specialize: base point dimension mismatch");
    UPoly<X> r(std::size_t(std::max(f.degree_in(n - 1), 0) + 1), X(0));
    for (const auto& [m, c] : f.terms()) {
        X t = convert_coef<X>(c);
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (unsigned k = 0; k < m[i]; ++k) t = t * base[i];
        r[m[n - 1]] = r[m[n - 1]] + t;
    }
    trim(r);
    return r;
}

/* keep only variables 0..k-1 (the rest must not occur) */
template <class C> SparsePoly<C> drop_trailing_vars(const SparsePoly<C>& f, std::size_t k) {
    SparsePoly<C> r(k);
    for (const auto& [m, c] : f.terms()) {
        for (std::size_t i = k; i < m.size(); ++i)
            if (m[i]) throw invariant_error("drop_trailing_vars: variable still present");
        r.add_term(Monomial(m.begin(), m.begin() + long(k)), c);
    }
    return r;
}

template <class C> SparsePoly<C> partial_derivative_0(const SparsePoly<C>& f, std::size_t i) {
    SparsePoly<C> r(f.nvars());
    for (const auto& [m, c] : f.terms()) {
        if (m[i] == 0) continue;
        Monomial mm = m;
        --mm[i];
        r.add_term(mm, c * C(long(m[i])));
    }
    return r;
}

/* d f / d x_i with i counted from 1 */
template <class C> SparsePoly<C> partial_derivative(const SparsePoly<C>& f, std::size_t i) {
    if (i < 1 || i > f.nvars()) throw input_error("partial_derivative: variable index out of range");
    return partial_derivative_0(f, i - 1);
}

template <class C> SparsePoly<C> top_form(const SparsePoly<C>& f) {
    if (f.is_zero()) throw input_error("top_form: zero polynomial");
    SparsePoly<C> r(f.nvars());
    unsigned d = unsigned(f.degree());
    for (const auto& [m, c] : f.terms())
        if (total_degree(m) == d) r.add_term(m, c);
    return r;
}

enum class SubstMode { forward, inverse };

/* f(A x) for a rational matrix A */
template <class C> SparsePoly<C> substitute_matrix(const SparsePoly<C>& f, const QMat& a) {
    std::size_t n = f.nvars();
    if (a.size() != n) throw input_error("substitute: matrix dimension does not match the variable count");
    std::vector<SparsePoly<C>> lin;
    for (std::size_t i = 0; i < n; ++i) {
        SparsePoly<C> l(n);
        for (std::size_t j = 0; j < n; ++j) {
            if (a[i][j] == 0) continue;
            Monomial m(n, 0);
            m[j] = 1;
            l.add_term(m, convert_coef<C>(a[i][j]));
        }
        lin.push_back(l);
    }
    std::vector<std::vector<SparsePoly<C>>> pw(n);
    for (std::size_t i = 0; i < n; ++i) {
        pw[i].push_back(SparsePoly<C>::constant(n, C(1)));
        for (int k = 1; k <= f.degree_in(i); ++k) pw[i].push_back(pw[i].back() * lin[i]);
    }
    SparsePoly<C> r(n);
    for (const auto& [m, c] : f.terms()) {
        SparsePoly<C> t = SparsePoly<C>::constant(n, c);
        for (std::size_t i = 0; i < n; ++i)
            if (m[i]) t = t * pw[i][m[i]];
        r = r + t;
    }
    return r;
}

/* f o M (forward) or f o M^{-1} (inverse); M must be invertible */
template <class C> SparsePoly<C> substitute_linear(const SparsePoly<C>& f, const IntegerMatrix& M, SubstMode mode) {
    QMat a = to_qmat(M);
    for (const auto& row : M)
        if (row.size() != M.size()) throw input_error("substitute: matrix is not square");
    if (qdet(a) == 0) throw input_error("substitute: singular matrix");
    if (mode == SubstMode::inverse) a = qinverse(a);
    return substitute_matrix(f, a);
}

bool is_rational(const MultivariatePolynomial& f);
QPolyN to_rational(const MultivariatePolynomial& f); // throws on algebraic coefficients
MultivariatePolynomial from_rational(const QPolyN& f);
RAN evaluate(const MultivariatePolynomial& f, const std::vector<RAN>& p);

/* same polynomial with every coefficient scaled so the coefficients are coprime integers */
QPolyN primitive_integer_form(const QPolyN& f);

} // namespace smallpoint
