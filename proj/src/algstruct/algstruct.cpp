#include "smallpoint/algstruct/algstruct.hpp"

#include "smallpoint/exactnum/factor.hpp"

#include <algorithm>
#include <functional>

namespace smallpoint {

namespace {

QVec pad(QVec a, std::size_t d) {
    a.resize(d, Rat(0));
    return a;
}

// echelon basis of a subspace of Q^n; insert returns true when v was new
class Span {
public:
    explicit Span(std::size_t n) : n_(n) {}
    bool insert(QVec v) {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rat& f = v[piv_[r]];
            if (f == 0) continue;
            Rat c = f;
            for (std::size_t k = 0; k < n_; ++k) v[k] -= c * rows_[r][k];
        }
        std::size_t p = n_;
        for (std::size_t k = 0; k < n_ && p == n_; ++k)
            if (v[k] != 0) p = k;
        if (p == n_) return false;
        Rat inv = 1 / v[p];
        for (auto& x : v) x *= inv;
        for (auto& row : rows_) {
            Rat c = row[p];
            if (c == 0) continue;
            for (std::size_t k = 0; k < n_; ++k) row[k] -= c * v[k];
        }
        rows_.push_back(std::move(v));
        piv_.push_back(p);
        return true;
    }
    std::size_t dim() const { return rows_.size(); }

private:
    std::size_t n_;
    QMat rows_;
    std::vector<std::size_t> piv_;
};

// dimension of the unital Q-algebra generated by gens inside an algebra of dimension n
std::size_t algebra_dimension(std::size_t n, const QVec& one, const std::vector<QVec>& gens,
                              const std::function<QVec(const QVec&, const QVec&)>& mul) {
    Span s(n);
    s.insert(one);
    std::vector<QVec> frontier{one};
    for (std::size_t deg = 1; deg <= n && !frontier.empty(); ++deg) {
        std::vector<QVec> next;
        for (const auto& f : frontier)
            for (const auto& g : gens) {
                QVec p = mul(f, g);
                if (s.insert(p)) next.push_back(p);
            }
        frontier = std::move(next);
    }
    return s.dim();
}

UPoly<NFElem> shifted(const ZPoly& p, const NFElem& shift) {
    // p(y + shift)
    UPoly<NFElem> lin{shift, NFElem(Rat(1))}, acc;
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = pmul(acc, lin);
        acc = padd(acc, UPoly<NFElem>{NFElem(Rat(p[i]))});
        trim(acc);
    }
    return acc;
}

QVec image_under(const NumberField& from, const NumberField& to, const QVec& beta, const QVec& a0) {
    QVec a = pad(a0, std::size_t(from.degree));
    QVec acc(std::size_t(to.degree), Rat(0));
    for (std::size_t i = a.size(); i-- > 0;) {
        acc = nf_times(to, acc, beta);
        acc[0] += a[i];
    }
    return acc;
}

} // namespace

std::vector<QVec> field_isomorphisms(const NumberField& from, const NumberField& to) {
    if (from.degree != to.degree || from.disc != to.disc) return {};
    if (from.degree == 1) return {QVec{Rat(0)}};
    FieldPtr k = make_field(to.defining_poly, std::nullopt);
    NFElem th = generator(k);
    UPoly<NFElem> target;
    for (const auto& c : from.defining_poly) target.emplace_back(Rat(c));
    // Trager: factor the norm of p(y - s theta) over Q and pull the factors back
    for (long s = 1; s <= 32; ++s) {
        UPoly<NFElem> ps = shifted(from.defining_poly, NFElem(Rat(-s)) * th);
        ZPoly nrm = to_zpoly_primitive(nf_norm(ps));
        if (degree(zgcd(nrm, zderiv(nrm))) > 0) continue;
        std::vector<QVec> roots;
        for (const auto& [g, e] : factor_over_q(nrm)) {
            if (degree(g) < 1) continue;
            UPoly<NFElem> back = shifted(g, NFElem(Rat(s)) * th);
            UPoly<NFElem> h = pgcd(target, back);
            if (degree(h) == 1) roots.push_back(pad((-(h[0] / h[1])).rep(), std::size_t(to.degree)));
        }
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    throw invariant_error("field_isomorphisms: no squarefree norm found");
}

std::size_t generated_dimension(const std::vector<NumberField>& fields, const std::vector<ProductAlgebraElement>& theta) {
    std::vector<std::size_t> off;
    std::size_t n = 0;
    for (const auto& F : fields) {
        off.push_back(n);
        n += std::size_t(F.degree);
    }
    auto flatten = [&](const ProductAlgebraElement& e) {
        QVec v(n, Rat(0));
        for (std::size_t i = 0; i < fields.size(); ++i) {
            QVec c = pad(e.components[i], std::size_t(fields[i].degree));
            for (std::size_t k = 0; k < c.size(); ++k) v[off[i] + k] = c[k];
        }
        return v;
    };
    auto mul = [&](const QVec& a, const QVec& b) {
        QVec r(n, Rat(0));
        for (std::size_t i = 0; i < fields.size(); ++i) {
            std::size_t d = std::size_t(fields[i].degree);
            QVec x(a.begin() + long(off[i]), a.begin() + long(off[i] + d));
            QVec y(b.begin() + long(off[i]), b.begin() + long(off[i] + d));
            QVec p = nf_times(fields[i], x, y);
            for (std::size_t k = 0; k < d; ++k) r[off[i] + k] = p[k];
        }
        return r;
    };
    QVec one(n, Rat(0));
    for (auto o : off) one[o] = 1;
    std::vector<QVec> gens;
    for (const auto& t : theta) gens.push_back(flatten(t));
    return algebra_dimension(n, one, gens, mul);
}

GenerationResult generates_product_algebra(const std::vector<NumberField>& fields,
                                           const std::vector<ProductAlgebraElement>& theta) {
    if (fields.empty()) throw input_error("generates_product_algebra: need at least one field");
    for (const auto& t : theta) {
        if (t.components.size() != fields.size())
            throw input_error("generates_product_algebra: element has the wrong number of components");
        for (std::size_t i = 0; i < fields.size(); ++i)
            if (t.components[i].size() > std::size_t(fields[i].degree))
                throw input_error("generates_product_algebra: component longer than the field degree");
    }
    std::size_t dimA = 0;
    for (const auto& F : fields) dimA += std::size_t(F.degree);

    GenerationResult res;
    res.by_span = generated_dimension(fields, theta) == dimA;

    // criterion: every projection generates its field, and no two projections are tied by an isomorphism
    res.by_criterion = true;
    for (std::size_t i = 0; i < fields.size() && res.by_criterion; ++i) {
        const NumberField& F = fields[i];
        std::vector<QVec> gens;
        for (const auto& t : theta) gens.push_back(pad(t.components[i], std::size_t(F.degree)));
        std::size_t d = algebra_dimension(std::size_t(F.degree), nf_one(F), gens,
                                          [&](const QVec& a, const QVec& b) { return nf_times(F, a, b); });
        if (d != std::size_t(F.degree)) {
            res.by_criterion = false;
            res.witness = "projection to factor " + std::to_string(i) + " lies in a proper subfield";
        }
    }
    for (std::size_t i = 0; i < fields.size() && res.by_criterion; ++i)
        for (std::size_t j = i + 1; j < fields.size() && res.by_criterion; ++j)
            for (const auto& beta : field_isomorphisms(fields[i], fields[j])) {
                bool on_graph = true;
                for (const auto& t : theta)
                    on_graph = on_graph && image_under(fields[i], fields[j], beta, t.components[i]) ==
                                               pad(t.components[j], std::size_t(fields[j].degree));
                if (on_graph) {
                    res.by_criterion = false;
                    res.witness = "factors " + std::to_string(i) + " and " + std::to_string(j) +
                                  " are tied by the graph of an isomorphism";
                    break;
                }
            }
    check_invariant(res.by_span == res.by_criterion, "generates_product_algebra: span and criterion disagree");
    res.generates = res.by_span;
    return res;
}

std::vector<std::vector<ZVec>> multiplication_table(const ZPoly& m, const QMat& basis) {
    std::size_t n = basis.size();
    std::vector<std::vector<ZVec>> t(n, std::vector<ZVec>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            QVec x;
            if (!qsolve(qtranspose(basis), nf_mul(m, basis[i], basis[j]), x))
                throw input_error("multiplication_table: product leaves the span");
            for (const auto& c : x) {
                if (c.get_den() != 1) throw input_error("order is not closed under multiplication");
                t[i][j].push_back(c.get_num());
            }
        }
    return t;
}

DiscIndex disc_index_check(const OrderPair& pair) {
    const ZPoly& m = pair.defining_poly;
    std::size_t n = std::size_t(degree(m));
    if (n < 1 || lead(m) != 1) throw input_error("disc_index_check: defining polynomial must be monic");
    if (pair.order_basis.size() != n || pair.suborder.size() != n)
        throw input_error("disc_index_check: bases must have full rank");
    if (qrank(pair.order_basis) != n || zdet(pair.suborder) == 0)
        throw input_error("disc_index_check: bases must have full rank");
    QMat rbasis = qmatmul(to_qmat(pair.suborder), pair.order_basis);
    multiplication_table(m, pair.order_basis);
    multiplication_table(m, rbasis);
    QVec one(n, Rat(0));
    one[0] = 1;
    if (!lattice_contains(lattice_hnf(pair.order_basis), one) || !lattice_contains(lattice_hnf(rbasis), one))
        throw input_error("disc_index_check: order does not contain 1");

    DiscIndex r;
    Rat dO = lattice_discriminant(m, pair.order_basis), dR = lattice_discriminant(m, rbasis);
    check_invariant(dO.get_den() == 1 && dR.get_den() == 1, "disc_index_check: non-integral discriminant");
    r.discO = dO.get_num();
    r.discR = dR.get_num();
    r.index = 1;
    for (const auto& d : smith_diagonal(pair.suborder)) r.index *= d;
    r.identity_holds = r.discR == r.index * r.index * r.discO;
    return r;
}

ZMat conductor_suborder(const ZVec& one, const Int& c) {
    if (c < 1) throw input_error("conductor_suborder: conductor must be positive");
    std::size_t rank = one.size();
    ZMat gens{one};
    for (std::size_t k = 0; k < rank; ++k) {
        ZVec v(rank, Int(0));
        v[k] = c;
        gens.push_back(v);
    }
    return hnf_rows(gens);
}

} // namespace smallpoint
