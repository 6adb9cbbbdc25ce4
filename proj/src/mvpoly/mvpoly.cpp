#include "smallpoint/mvpoly/mvpoly.hpp"

namespace smallpoint {

std::string coef_to_string(const Rat& c) { return to_string(c); }

std::string coef_to_string(const RAN& c) {
    if (c.is_rational()) return to_string(c.rational());
    return "(" + c.to_string() + ")";
}

bool is_rational(const MultivariatePolynomial& f) {
    for (const auto& [m, c] : f.terms())
        if (!c.is_rational()) return false;
    return true;
}

QPolyN to_rational(const MultivariatePolynomial& f) {
    QPolyN r(f.nvars());
    for (const auto& [m, c] : f.terms()) {
        if (!c.is_rational()) throw input_error("polynomial has an irrational coefficient");
        r.add_term(m, c.rational());
    }
    return r;
}

MultivariatePolynomial from_rational(const QPolyN& f) {
    MultivariatePolynomial r(f.nvars());
    for (const auto& [m, c] : f.terms()) r.add_term(m, RAN(c));
    return r;
}

RAN evaluate(const MultivariatePolynomial& f, const std::vector<RAN>& p) {
    if (p.size() != f.nvars()) throw input_error("evaluate: point dimension does not match the variable count");
    if (is_rational(f)) {
        bool all_rat = true;
        for (const auto& x : p) all_rat = all_rat && x.is_rational();
        if (all_rat) {
            std::vector<Rat> q;
            for (const auto& x : p) q.push_back(x.rational());
            return RAN(evaluate_at(to_rational(f), q));
        }
    }
    return evaluate_at(f, p);
}

QPolyN primitive_integer_form(const QPolyN& f) {
    if (f.is_zero()) return f;
    Int l = 1, g = 0;
    for (const auto& [m, c] : f.terms()) l = lcm_int(l, c.get_den());
    for (const auto& [m, c] : f.terms()) g = gcd_int(g, Rat(c * Rat(l)).get_num());
    Rat s(l, g);
    s.canonicalize();
    return s * f;
}

} // namespace smallpoint
